#include "wilf4/permutation.hpp"

#include <gtest/gtest.h>

#include "support/brute_force.hpp"

namespace wilf4 {
namespace {

using testing::all_permutations;

const Permutation kWorked{10, 12, 13, 8, 6, 11, 5, 3, 1, 9, 7, 4, 2};

TEST(ParseTest, AcceptsDigitStringAndDelimitedForms) {
  EXPECT_EQ(parse("2413"), (Permutation{2, 4, 1, 3}));
  EXPECT_EQ(parse("2 4 1 3"), (Permutation{2, 4, 1, 3}));
  EXPECT_EQ(parse("2,4,1,3"), (Permutation{2, 4, 1, 3}));
  EXPECT_EQ(parse(" 2, 4 ,1  3 \n"), (Permutation{2, 4, 1, 3}));
  EXPECT_EQ(parse("1"), (Permutation{1}));
}

TEST(ParseTest, ReadsMultiDigitValues) {
  EXPECT_EQ(parse("10 12 13 8 6 11 5 3 1 9 7 4 2"), kWorked);
}

TEST(ParseTest, ErrorsNameTheOffendingToken) {
  auto message = [](const char* text) -> std::string {
    try {
      parse(text);
    } catch (const PermutationError& e) {
      return e.what();
    }
    return "no error";
  };
  EXPECT_EQ(message("2 2 1"), "duplicate value 2");
  EXPECT_EQ(message("1 3"), "value 3 out of range 1..2");
  EXPECT_EQ(message("0 1"), "value 0 must be positive");
  EXPECT_EQ(message("-1 1"), "value -1 must be positive");
  EXPECT_EQ(message("1 x 2"), "invalid token 'x'");
  EXPECT_EQ(message("1 2.5"), "invalid token '2.5'");
  EXPECT_EQ(message("   "), "empty permutation");
  // Undelimited text is always one digit per value.
  EXPECT_EQ(message("10"), "value 0 must be positive");
}

TEST(ParseTest, RoundTripsCanonicalForm) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& v : all_permutations(n)) {
      const Permutation p(v);
      EXPECT_EQ(parse(to_string(p)), p);
    }
  }
  EXPECT_EQ(parse(to_string(kWorked)), kWorked);
}

TEST(StandardizeTest, Examples) {
  EXPECT_EQ(standardize({2, 6, 9, 3}), (Permutation{1, 3, 4, 2}));
  EXPECT_EQ(standardize({1, 2, 3, 4, 5}), Permutation::identity(5));
  EXPECT_EQ(standardize({10, 12, 13, 8, 6, 11, 9, 7}),
            (Permutation{5, 7, 8, 3, 1, 6, 4, 2}));
  EXPECT_EQ(standardize({-4, 100, 0}), (Permutation{1, 3, 2}));
  EXPECT_EQ(standardize(std::vector<int>{}), Permutation{});
  EXPECT_THROW(standardize({3, 1, 3}), PermutationError);
}

TEST(StandardizeTest, Idempotent) {
  for (const auto& v : all_permutations(5)) {
    std::vector<int> spread;
    for (int x : v) spread.push_back(7 * x - 20);
    const Permutation once = standardize(spread);
    EXPECT_EQ(standardize(once.values()), once);
    EXPECT_EQ(once, Permutation(v));
  }
}

TEST(SymmetryTest, ReverseAndComplementExamples) {
  EXPECT_EQ(reverse(Permutation{1, 4, 2, 3}), (Permutation{3, 2, 4, 1}));
  EXPECT_EQ(reverse(Permutation{1}), (Permutation{1}));
  EXPECT_EQ(complement(Permutation{1, 4, 2, 3}), (Permutation{4, 1, 3, 2}));
  EXPECT_EQ(reverse(complement(Permutation{1, 4, 2, 3})),
            (Permutation{2, 3, 1, 4}));
  EXPECT_EQ(reverse(complement(Permutation{2, 4, 1, 3})),
            (Permutation{2, 4, 1, 3}));
  EXPECT_EQ(reverse(Permutation{}), Permutation{});
}

TEST(SymmetryTest, InvolutionsThatCommute) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& v : all_permutations(n)) {
      const Permutation p(v);
      if (n <= 5) {
        EXPECT_EQ(reverse(reverse(p)), p);
        EXPECT_EQ(complement(complement(p)), p);
      }
      EXPECT_EQ(reverse(complement(p)), complement(reverse(p)));
    }
  }
}

TEST(InflateTest, WorkedExamples) {
  EXPECT_EQ(inflate(Permutation{3, 1, 6, 5, 4, 2}, Permutation{5, 3, 1, 6, 4, 2},
                    4),
            (Permutation{3, 1, 11, 9, 7, 5, 10, 8, 6, 4, 2}));
  EXPECT_EQ(inflate(Permutation{2, 7, 8, 5, 3, 6, 4, 1},
                    Permutation{5, 3, 1, 6, 4, 2}, 7),
            (Permutation{2, 12, 13, 10, 3, 11, 8, 6, 4, 9, 7, 5, 1}));
}

TEST(InflateTest, SingletonIsIdentity) {
  for (const auto& v : all_permutations(4)) {
    const Permutation p(v);
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(inflate(p, Permutation{1}, k), p);
  }
}

TEST(InflateTest, RejectsBadPosition) {
  EXPECT_THROW(inflate(Permutation{1, 2}, Permutation{1}, 0), PermutationError);
  EXPECT_THROW(inflate(Permutation{1, 2}, Permutation{1}, 3), PermutationError);
  EXPECT_THROW(inflate(Permutation{1, 2}, Permutation{}, 1), PermutationError);
}

// Block values form [sigma_{a+1}, sigma_{a+1}+l-1], the length is m+l-1 and
// deflation recovers both factors, for every sigma in S_4, alpha in S_3.
TEST(InflateTest, IntervalLawLengthLawAndDeflationRoundTrip) {
  for (const auto& s : all_permutations(4)) {
    for (int l = 1; l <= 3; ++l) {
      for (const auto& al : all_permutations(l)) {
        const Permutation sigma(s), alpha(al);
        for (int pos = 1; pos <= 4; ++pos) {
          const Permutation sp = inflate(sigma, alpha, pos);
          ASSERT_EQ(sp.size(), 4 + l - 1);
          std::vector<int> block(sp.begin() + pos - 1,
                                 sp.begin() + pos - 1 + l);
          std::sort(block.begin(), block.end());
          for (int i = 0; i < l; ++i) {
            EXPECT_EQ(block[static_cast<std::size_t>(i)], sigma.at(pos) + i);
          }
          const auto [back_sigma, back_alpha] = deflate(sp, pos - 1, l);
          EXPECT_EQ(back_sigma, sigma);
          EXPECT_EQ(back_alpha, alpha);
        }
      }
    }
  }
}

TEST(DeflateTest, WorkedExampleAndSingletons) {
  const auto [sigma, alpha] =
      deflate(Permutation{2, 12, 13, 10, 3, 11, 8, 6, 4, 9, 7, 5, 1}, 6, 6);
  EXPECT_EQ(sigma, (Permutation{2, 7, 8, 5, 3, 6, 4, 1}));
  EXPECT_EQ(alpha, (Permutation{5, 3, 1, 6, 4, 2}));
  for (int k = 1; k <= kWorked.size(); ++k) {
    const auto d = deflate(kWorked, k - 1, 1);
    EXPECT_EQ(d.sigma, kWorked);
    EXPECT_EQ(d.alpha, (Permutation{1}));
  }
}

TEST(DeflateTest, RejectsNonInterval) {
  EXPECT_THROW(deflate(Permutation{1, 4, 2, 3}, 1, 2), PermutationError);
  EXPECT_THROW(deflate(Permutation{1, 2}, 1, 2), PermutationError);
  EXPECT_THROW(deflate(Permutation{1, 2}, 0, 0), PermutationError);
}

TEST(MaxBlockExtentTest, Examples) {
  EXPECT_EQ(
      max_block_extent(Permutation{2, 12, 13, 10, 3, 11, 8, 6, 4, 9, 7, 5, 1},
                       6),
      6);
  EXPECT_EQ(max_block_extent(kWorked, kWorked.size() - 1), 1);
  // {4,2} is not an interval but {4,2,3} is.
  EXPECT_EQ(max_block_extent(Permutation{1, 4, 2, 3}, 1), 3);
  EXPECT_EQ(max_block_extent(Permutation{3, 1, 5, 2, 4}, 1), 1);
  EXPECT_EQ(max_block_extent(Permutation{1, 4, 2, 3}, 0), 4);
  EXPECT_THROW(max_block_extent(Permutation{1, 2}, 2), PermutationError);
}

TEST(MaxBlockExtentTest, MatchesScanOfAllPrefixes) {
  for (const auto& v : all_permutations(6)) {
    const Permutation p(v);
    for (int a = 0; a < 6; ++a) {
      int expected = 1;
      for (int l = 1; a + l <= 6; ++l) {
        std::vector<int> block(v.begin() + a, v.begin() + a + l);
        auto [lo, hi] = std::minmax_element(block.begin(), block.end());
        if (*hi - *lo == l - 1) expected = l;
      }
      EXPECT_EQ(max_block_extent(p, a), expected);
    }
  }
}

TEST(MaxInsertionTest, Examples) {
  EXPECT_EQ(delete_max(Permutation{2, 3, 1}),
            std::make_pair(Permutation{2, 1}, 2));
  EXPECT_EQ(delete_max(Permutation{1}), std::make_pair(Permutation{}, 1));
  EXPECT_THROW(delete_max(Permutation{}), PermutationError);
  EXPECT_EQ(insert_max(Permutation{2, 1}, 2), (Permutation{2, 3, 1}));
  EXPECT_EQ(insert_max(Permutation{}, 1), (Permutation{1}));
  EXPECT_EQ(insert_max(Permutation{1, 2}, 1), (Permutation{3, 1, 2}));
  EXPECT_THROW(insert_max(Permutation{1, 2}, 4), PermutationError);
  EXPECT_THROW(insert_max(Permutation{1, 2}, 0), PermutationError);
}

TEST(MaxInsertionTest, RoundTripOnS5) {
  for (const auto& v : all_permutations(5)) {
    const Permutation p(v);
    const auto [rest, pos] = delete_max(p);
    EXPECT_EQ(insert_max(rest, pos), p);
  }
}

}  // namespace
}  // namespace wilf4
