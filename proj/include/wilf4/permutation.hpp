#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wilf4 {

/// Raised for malformed permutations and violated operation preconditions.
class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of {1,...,n} in one-line notation.
///
/// Storage is 0-based; every position that leaves this library (index sets,
/// inflation points, reported occurrences) is 1-based. The empty permutation
/// is a valid value and acts as the identity of every map below.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    validate();
  }

  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), Trusted{});
  }

  static Permutation decreasing(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v), Trusted{});
  }

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// 0-based access.
  int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  /// 1-based access, matching the notation pi_1 ... pi_n.
  int at(int pos) const {
    if (pos < 1 || pos > size()) {
      throw PermutationError("position " + std::to_string(pos) +
                             " out of range 1.." + std::to_string(size()));
    }
    return values_[static_cast<std::size_t>(pos - 1)];
  }

  std::span<const int> values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  /// 1-based position of value v.
  int position_of(int v) const {
    auto it = std::find(values_.begin(), values_.end(), v);
    if (it == values_.end()) {
      throw PermutationError("value " + std::to_string(v) + " not present");
    }
    return static_cast<int>(it - values_.begin()) + 1;
  }

  bool is_decreasing() const {
    return std::is_sorted(values_.rbegin(), values_.rend());
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<int> values, Trusted) : values_(std::move(values)) {}

  void validate() const {
    const std::size_t n = values_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values_) {
      if (v < 1) {
        throw PermutationError("value " + std::to_string(v) +
                               " must be positive");
      }
      if (static_cast<std::size_t>(v) > n) {
        throw PermutationError("value " + std::to_string(v) +
                               " out of range 1.." + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw PermutationError("duplicate value " + std::to_string(v));
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<int> values_;
};

/// Canonical text form: values joined by single spaces.
inline std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_string(p);
}

/// Parses "2 4 1 3", "2,4,1,3" or the undelimited digit form "2413".
///
/// The digit form is only recognised when the text has no delimiter at all,
/// so each character is one value and every value is at most 9.
inline Permutation parse(std::string_view text) {
  auto is_delim = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw PermutationError("empty permutation");
  }
  text = text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);

  std::vector<std::string_view> tokens;
  const bool delimited = std::any_of(text.begin(), text.end(), is_delim);
  if (delimited) {
    std::size_t i = 0;
    while (i < text.size()) {
      if (is_delim(text[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !is_delim(text[j])) ++j;
      tokens.push_back(text.substr(i, j - i));
      i = j;
    }
  } else {
    const bool all_digits = std::all_of(text.begin(), text.end(), [](char c) {
      return c >= '0' && c <= '9';
    });
    if (all_digits) {
      for (std::size_t i = 0; i < text.size(); ++i) {
        tokens.push_back(text.substr(i, 1));
      }
    } else {
      tokens.push_back(text);
    }
  }

  std::vector<int> values;
  values.reserve(tokens.size());
  for (auto tok : tokens) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw PermutationError("invalid token '" + std::string(tok) + "'");
    }
    values.push_back(v);
  }
  return Permutation(std::move(values));
}

/// std(seq): the permutation order-isomorphic to a sequence of distinct ints.
inline Permutation standardize(std::span<const int> seq) {
  std::vector<int> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return seq[static_cast<std::size_t>(x)] <
                                       seq[static_cast<std::size_t>(y)]; });
  std::vector<int> ranks(seq.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && seq[static_cast<std::size_t>(order[r])] ==
                     seq[static_cast<std::size_t>(order[r - 1])]) {
      throw PermutationError(
          "duplicate entry " +
          std::to_string(seq[static_cast<std::size_t>(order[r])]) +
          " cannot be standardized");
    }
    ranks[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks));
}

inline Permutation standardize(std::initializer_list<int> seq) {
  return standardize(std::span<const int>(seq.begin(), seq.size()));
}

inline Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.begin(), p.end());
  std::reverse(v.begin(), v.end());
  return Permutation(std::move(v));
}

inline Permutation complement(const Permutation& p) {
  std::vector<int> v(p.begin(), p.end());
  for (int& x : v) x = p.size() + 1 - x;
  return Permutation(std::move(v));
}

/// sigma(alpha, pos): replaces the entry at 1-based position `pos` of sigma
/// with a block order-isomorphic to alpha whose values form the interval
/// [sigma_pos, sigma_pos + |alpha| - 1].
inline Permutation inflate(const Permutation& sigma, const Permutation& alpha,
                           int pos) {
  const int m = sigma.size();
  const int l = alpha.size();
  if (pos < 1 || pos > m) {
    throw PermutationError("inflation position " + std::to_string(pos) +
                           " out of range 1.." + std::to_string(m));
  }
  if (l < 1) throw PermutationError("cannot inflate by the empty permutation");
  const int pivot = sigma.at(pos);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m + l - 1));
  for (int i = 1; i <= m; ++i) {
    if (i == pos) {
      for (int x : alpha) out.push_back(x + pivot - 1);
    } else {
      const int v = sigma.at(i);
      out.push_back(v < pivot ? v : v + l - 1);
    }
  }
  return Permutation(std::move(out));
}

/// Whether the values at 1-based positions from..to (inclusive) form an
/// integer interval.
inline bool is_value_interval(const Permutation& p, int from, int to) {
  int lo = p.at(from), hi = lo;
  for (int i = from + 1; i <= to; ++i) {
    lo = std::min(lo, p.at(i));
    hi = std::max(hi, p.at(i));
  }
  return hi - lo == to - from;
}

/// Largest l such that positions a+1..a+l of sp carry an interval of values.
inline int max_block_extent(const Permutation& sp, int a) {
  const int n = sp.size();
  if (a < 0 || a + 1 > n) {
    throw PermutationError("block start " + std::to_string(a + 1) +
                           " out of range 1.." + std::to_string(n));
  }
  int best = 1;
  int lo = sp.at(a + 1), hi = lo;
  for (int k = 2; a + k <= n; ++k) {
    lo = std::min(lo, sp.at(a + k));
    hi = std::max(hi, sp.at(a + k));
    if (hi - lo == k - 1) best = k;
  }
  return best;
}

struct Deflation {
  Permutation sigma;
  Permutation alpha;
};

/// Inverse of inflate: collapses positions a+1..a+l of sp (which must hold an
/// interval of values) to a single entry.
inline Deflation deflate(const Permutation& sp, int a, int l) {
  const int n = sp.size();
  if (l < 1 || a < 0 || a + l > n) {
    throw PermutationError("block " + std::to_string(a + 1) + ".." +
                           std::to_string(a + l) + " out of range 1.." +
                           std::to_string(n));
  }
  if (!is_value_interval(sp, a + 1, a + l)) {
    throw PermutationError("values at positions " + std::to_string(a + 1) +
                           ".." + std::to_string(a + l) +
                           " do not form an interval");
  }
  std::vector<int> block(sp.begin() + a, sp.begin() + a + l);
  const int block_min = *std::min_element(block.begin(), block.end());
  std::vector<int> collapsed;
  collapsed.reserve(static_cast<std::size_t>(n - l + 1));
  for (int i = 1; i <= n; ++i) {
    if (i <= a || i > a + l) {
      collapsed.push_back(sp.at(i));
    } else if (i == a + 1) {
      collapsed.push_back(block_min);
    }
  }
  return {standardize(collapsed), standardize(block)};
}

/// Removes the value n; returns the rest and n's 1-based position.
inline std::pair<Permutation, int> delete_max(const Permutation& p) {
  if (p.empty()) throw PermutationError("cannot delete from empty permutation");
  const int pos = p.position_of(p.size());
  std::vector<int> v(p.begin(), p.end());
  v.erase(v.begin() + (pos - 1));
  return {Permutation(std::move(v)), pos};
}

/// Inserts the new maximum n = |p|+1 at 1-based position pos.
inline Permutation insert_max(const Permutation& p, int pos) {
  const int n = p.size() + 1;
  if (pos < 1 || pos > n) {
    throw PermutationError("insertion position " + std::to_string(pos) +
                           " out of range 1.." + std::to_string(n));
  }
  std::vector<int> v(p.begin(), p.end());
  v.insert(v.begin() + (pos - 1), n);
  return Permutation(std::move(v));
}

/// Removes the entry at 1-based position pos and standardizes the rest.
inline Permutation delete_position(const Permutation& p, int pos) {
  std::vector<int> v(p.begin(), p.end());
  if (pos < 1 || pos > p.size()) {
    throw PermutationError("position " + std::to_string(pos) +
                           " out of range 1.." + std::to_string(p.size()));
  }
  v.erase(v.begin() + (pos - 1));
  return standardize(v);
}

}  // namespace wilf4
