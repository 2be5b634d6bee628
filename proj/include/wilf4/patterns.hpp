#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wilf4/permutation.hpp"

namespace wilf4 {

namespace detail {

// Depth-first subsequence search. Slot j of the pattern may only take values
// strictly between the values already placed for its nearest-below and
// nearest-above pattern slots, which prunes most branches early.
class OccurrenceSearch {
 public:
  explicit OccurrenceSearch(const Permutation& pattern)
      : k_(pattern.size()),
        below_(static_cast<std::size_t>(k_), -1),
        above_(static_cast<std::size_t>(k_), -1) {
    for (int j = 0; j < k_; ++j) {
      int lo_val = 0, hi_val = k_ + 1;
      for (int t = 0; t < j; ++t) {
        if (pattern[t] < pattern[j] && pattern[t] > lo_val) {
          lo_val = pattern[t];
          below_[static_cast<std::size_t>(j)] = t;
        }
        if (pattern[t] > pattern[j] && pattern[t] < hi_val) {
          hi_val = pattern[t];
          above_[static_cast<std::size_t>(j)] = t;
        }
      }
    }
  }

  int length() const { return k_; }

  /// First occurrence in lexicographic order of positions (0-based). When
  /// `anchor_last` is set, the final pattern slot must sit on the last entry
  /// of `seq`.
  bool find(std::span<const int> seq, bool anchor_last,
            std::vector<int>* positions = nullptr) const {
    const int n = static_cast<int>(seq.size());
    if (k_ > n) return false;
    std::vector<int> pos(static_cast<std::size_t>(k_));
    if (!dfs(seq, anchor_last, 0, 0, pos)) return false;
    if (positions) *positions = std::move(pos);
    return true;
  }

 private:
  bool dfs(std::span<const int> seq, bool anchor_last, int slot, int start,
           std::vector<int>& pos) const {
    const int n = static_cast<int>(seq.size());
    if (slot == k_) return true;
    const auto s = static_cast<std::size_t>(slot);
    const int lo = below_[s] < 0 ? 0 : seq[static_cast<std::size_t>(
                                           pos[static_cast<std::size_t>(below_[s])])];
    const int hi = above_[s] < 0 ? INT32_MAX
                                 : seq[static_cast<std::size_t>(
                                       pos[static_cast<std::size_t>(above_[s])])];
    int first = start;
    int last = n - (k_ - slot);
    if (anchor_last) {
      if (slot == k_ - 1) {
        first = n - 1;
      } else {
        last = std::min(last, n - 1 - (k_ - 1 - slot));
      }
    }
    for (int i = first; i <= last; ++i) {
      const int v = seq[static_cast<std::size_t>(i)];
      if (v <= lo || v >= hi) continue;
      pos[s] = i;
      if (dfs(seq, anchor_last, slot + 1, i + 1, pos)) return true;
    }
    return false;
  }

  int k_;
  std::vector<int> below_;
  std::vector<int> above_;
};

}  // namespace detail

/// 1-based positions of the first occurrence of pat in p, if any.
inline std::optional<std::vector<int>> find_occurrence(
    const Permutation& p, const Permutation& pat) {
  if (pat.empty()) throw PermutationError("pattern must be non-empty");
  std::vector<int> pos;
  if (!detail::OccurrenceSearch(pat).find(p.values(), false, &pos)) {
    return std::nullopt;
  }
  for (int& i : pos) ++i;
  return pos;
}

inline bool contains(const Permutation& p, const Permutation& pat) {
  if (pat.empty()) throw PermutationError("pattern must be non-empty");
  return detail::OccurrenceSearch(pat).find(p.values(), false);
}

inline bool avoids(const Permutation& p, const Permutation& pat) {
  return !contains(p, pat);
}

/// Non-empty, duplicate-free list of non-empty patterns.
class PatternSet {
 public:
  PatternSet(std::vector<Permutation> patterns)
      : patterns_(std::move(patterns)) {
    if (patterns_.empty()) throw PermutationError("pattern set is empty");
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (patterns_[i].empty()) {
        throw PermutationError("pattern must be non-empty");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (patterns_[i] == patterns_[j]) {
          throw PermutationError("duplicate pattern " + to_string(patterns_[i]));
        }
      }
    }
  }
  PatternSet(std::initializer_list<Permutation> patterns)
      : PatternSet(std::vector<Permutation>(patterns)) {}
  PatternSet(const Permutation& single)
      : PatternSet(std::vector<Permutation>{single}) {}

  const std::vector<Permutation>& patterns() const { return patterns_; }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

  bool avoided_by(const Permutation& p) const {
    for (const auto& pat : patterns_) {
      if (contains(p, pat)) return false;
    }
    return true;
  }

 private:
  std::vector<Permutation> patterns_;
};

inline std::string to_string(const PatternSet& ps) {
  std::string out;
  for (const auto& pat : ps) {
    if (!out.empty()) out += ',';
    for (int v : pat) out += std::to_string(v);
  }
  return out;
}

/// Parses "1423,2413" (each pattern in any single-pattern form without
/// commas).
inline PatternSet parse_pattern_set(std::string_view text) {
  std::vector<Permutation> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    auto j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    out.push_back(parse(text.substr(i, j - i)));
    i = j + 1;
  }
  return PatternSet(std::move(out));
}

/// Calls visit(p) for each p in S_n avoiding every pattern of ps, in
/// lexicographic order. Prefixes are abandoned as soon as they contain an
/// occurrence ending at their newest entry.
template <class Visit>
void for_each_avoider(int n, const PatternSet& ps, Visit&& visit) {
  if (n < 0) throw PermutationError("negative length");
  std::vector<detail::OccurrenceSearch> searches;
  for (const auto& pat : ps) searches.emplace_back(pat);
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  auto extend = [&](auto& self) -> void {
    if (static_cast<int>(prefix.size()) == n) {
      visit(Permutation(prefix));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      prefix.push_back(v);
      bool ok = true;
      for (const auto& s : searches) {
        if (s.find(prefix, true)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[static_cast<std::size_t>(v)] = true;
        self(self);
        used[static_cast<std::size_t>(v)] = false;
      }
      prefix.pop_back();
    }
  };
  extend(extend);
}

inline std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& ps) {
  std::vector<Permutation> out;
  for_each_avoider(n, ps, [&](Permutation p) { out.push_back(std::move(p)); });
  return out;
}

inline std::uint64_t count_avoiders(int n, const PatternSet& ps) {
  std::uint64_t count = 0;
  for_each_avoider(n, ps, [&](const Permutation&) { ++count; });
  return count;
}

}  // namespace wilf4
