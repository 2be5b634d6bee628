#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wilf4/permutation.hpp"

namespace wilf4 {

/// Strictly ascending 1-based indices.
using IndexSet = std::vector<int>;

inline std::string to_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

/// i such that p_i > p_{i+1}.
inline IndexSet descent_set(const Permutation& p) {
  IndexSet out;
  for (int i = 1; i < p.size(); ++i) {
    if (p.at(i) > p.at(i + 1)) out.push_back(i);
  }
  return out;
}

inline long major_index(const Permutation& p) {
  long sum = 0;
  for (int i : descent_set(p)) sum += i;
  return sum;
}

/// i such that p_i exceeds every later entry.
inline IndexSet rl_maxima(const Permutation& p) {
  IndexSet out;
  int best = 0;
  for (int i = p.size(); i >= 1; --i) {
    if (p.at(i) > best) {
      best = p.at(i);
      out.push_back(i);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// i such that p_i is below every earlier entry.
inline IndexSet lr_minima(const Permutation& p) {
  IndexSet out;
  int best = p.size() + 1;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.at(i) < best) {
      best = p.at(i);
      out.push_back(i);
    }
  }
  return out;
}

/// i such that p_i - 1 = p_{i+1}.
inline IndexSet steps(const Permutation& p) {
  IndexSet out;
  for (int i = 1; i < p.size(); ++i) {
    if (p.at(i) - 1 == p.at(i + 1)) out.push_back(i);
  }
  return out;
}

/// Positions of the values n and n-1.
inline std::pair<int, int> positions_top_two(const Permutation& p) {
  if (p.size() < 2) {
    throw PermutationError("positions_top_two needs length >= 2, got " +
                           std::to_string(p.size()));
  }
  return {p.position_of(p.size()), p.position_of(p.size() - 1)};
}

struct StatisticProfile {
  IndexSet des;
  long maj = 0;
  IndexSet rl_max;
  IndexSet lr_min;
  IndexSet steps;
  std::optional<int> pos_n;
  std::optional<int> pos_n_minus_1;

  friend bool operator==(const StatisticProfile&,
                         const StatisticProfile&) = default;
};

inline StatisticProfile profile(const Permutation& p) {
  StatisticProfile s;
  s.des = descent_set(p);
  for (int i : s.des) s.maj += i;
  s.rl_max = rl_maxima(p);
  s.lr_min = lr_minima(p);
  s.steps = steps(p);
  if (p.size() >= 1) s.pos_n = p.position_of(p.size());
  if (p.size() >= 2) s.pos_n_minus_1 = p.position_of(p.size() - 1);
  return s;
}

/// Single-line key=value record, e.g.
///   perm="2 4 1 3" des={2} maj=2 rlmax={2,4} lrmin={1,3} steps={} posn=2 posn1=4
/// Absent positions render as "-".
inline std::string format_profile(const Permutation& p,
                                  const StatisticProfile& s) {
  auto opt = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  return "perm=\"" + to_string(p) + "\" des=" + to_string(s.des) +
         " maj=" + std::to_string(s.maj) + " rlmax=" + to_string(s.rl_max) +
         " lrmin=" + to_string(s.lr_min) + " steps=" + to_string(s.steps) +
         " posn=" + opt(s.pos_n) + " posn1=" + opt(s.pos_n_minus_1);
}

}  // namespace wilf4
