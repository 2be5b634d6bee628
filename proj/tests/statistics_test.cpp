#include "wilf4/statistics.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "support/brute_force.hpp"

namespace wilf4 {
namespace {

using testing::all_permutations;

const Permutation kWorked{10, 12, 13, 8, 6, 11, 5, 3, 1, 9, 7, 4, 2};

TEST(DescentTest, Examples) {
  EXPECT_EQ(descent_set(Permutation{2, 4, 1, 3}), (IndexSet{2}));
  EXPECT_EQ(descent_set(Permutation::identity(6)), IndexSet{});
  EXPECT_EQ(descent_set(kWorked), (IndexSet{3, 4, 6, 7, 8, 10, 11, 12}));
  EXPECT_EQ(descent_set(Permutation{}), IndexSet{});
}

TEST(MajorIndexTest, Examples) {
  EXPECT_EQ(major_index(Permutation{2, 4, 1, 3}), 2);
  for (int n = 0; n <= 9; ++n) {
    EXPECT_EQ(major_index(Permutation::decreasing(n)), n * (n - 1) / 2);
  }
  EXPECT_EQ(major_index(kWorked), 61);
  EXPECT_EQ(major_index(Permutation{1}), 0);
}

TEST(RlMaximaTest, Examples) {
  EXPECT_EQ(rl_maxima(kWorked), (IndexSet{3, 6, 10, 11, 12, 13}));
  EXPECT_EQ(rl_maxima(Permutation::decreasing(4)), (IndexSet{1, 2, 3, 4}));
  EXPECT_EQ(rl_maxima(Permutation{2, 4, 1, 3}), (IndexSet{2, 4}));
}

TEST(LrMinimaTest, Examples) {
  EXPECT_EQ(lr_minima(Permutation{2, 4, 1, 3}), (IndexSet{1, 3}));
  EXPECT_EQ(lr_minima(Permutation::identity(5)), (IndexSet{1}));
}

TEST(StepsTest, Examples) {
  EXPECT_EQ(steps(Permutation{5, 2, 4, 3, 1}), (IndexSet{3}));
  EXPECT_EQ(steps(Permutation::decreasing(5)), (IndexSet{1, 2, 3, 4}));
  EXPECT_EQ(steps(Permutation{2, 4, 1, 3}), IndexSet{});
}

TEST(PositionsTopTwoTest, Examples) {
  EXPECT_EQ(positions_top_two(Permutation{2, 4, 1, 3}), std::make_pair(2, 4));
  EXPECT_EQ(positions_top_two(Permutation::decreasing(7)),
            std::make_pair(1, 2));
  EXPECT_EQ(positions_top_two(kWorked), std::make_pair(3, 2));
  EXPECT_THROW(positions_top_two(Permutation{1}), PermutationError);
}

TEST(ProfileTest, Examples) {
  const auto s = profile(Permutation{2, 4, 1, 3});
  EXPECT_EQ(s.des, (IndexSet{2}));
  EXPECT_EQ(s.maj, 2);
  EXPECT_EQ(s.rl_max, (IndexSet{2, 4}));
  EXPECT_EQ(s.lr_min, (IndexSet{1, 3}));
  EXPECT_EQ(s.steps, IndexSet{});
  EXPECT_EQ(s.pos_n, 2);
  EXPECT_EQ(s.pos_n_minus_1, 4);

  const auto one = profile(Permutation{1});
  EXPECT_EQ(one.maj, 0);
  EXPECT_EQ(one.rl_max, (IndexSet{1}));
  EXPECT_EQ(one.lr_min, (IndexSet{1}));
  EXPECT_EQ(one.pos_n, 1);
  EXPECT_FALSE(one.pos_n_minus_1.has_value());
}

TEST(ProfileTest, RecordFormat) {
  const Permutation p{2, 4, 1, 3};
  EXPECT_EQ(format_profile(p, profile(p)),
            "perm=\"2 4 1 3\" des={2} maj=2 rlmax={2,4} lrmin={1,3} steps={} "
            "posn=2 posn1=4");
  EXPECT_EQ(format_profile(Permutation{1}, profile(Permutation{1})),
            "perm=\"1\" des={} maj=0 rlmax={1} lrmin={1} steps={} posn=1 "
            "posn1=-");
}

TEST(ProfileTest, InvariantsOnS6) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& v : all_permutations(n)) {
      const Permutation p(v);
      const auto s = profile(p);
      long sum = 0;
      for (int i : s.des) sum += i;
      EXPECT_EQ(s.maj, sum);
      EXPECT_TRUE(std::includes(s.des.begin(), s.des.end(), s.steps.begin(),
                                s.steps.end()));
      EXPECT_EQ(s.rl_max.back(), n);
      EXPECT_EQ(p.at(s.rl_max.front()), n);
      for (std::size_t k = 1; k < s.rl_max.size(); ++k) {
        EXPECT_GT(p.at(s.rl_max[k - 1]), p.at(s.rl_max[k]));
      }
      EXPECT_EQ(s.lr_min.front(), 1);
    }
  }
}

// Under cr, descents and steps map i -> n-i and RL maxima become LR minima
// via i -> n+1-i.
TEST(ConjugationTest, IdentitiesOnS5) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& v : all_permutations(n)) {
      const Permutation p(v);
      const Permutation cr = complement(reverse(p));
      auto shift = [](IndexSet s, int base) {
        for (int& i : s) i = base - i;
        std::sort(s.begin(), s.end());
        return s;
      };
      EXPECT_EQ(descent_set(cr), shift(descent_set(p), n));
      EXPECT_EQ(steps(cr), shift(steps(p), n));
      EXPECT_EQ(lr_minima(cr), shift(rl_maxima(p), n + 1));
    }
  }
}

}  // namespace
}  // namespace wilf4
