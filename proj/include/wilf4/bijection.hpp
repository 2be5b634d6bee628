#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wilf4/patterns.hpp"
#include "wilf4/permutation.hpp"
#include "wilf4/statistics.hpp"

namespace wilf4 {

inline const Permutation& pattern_1423() {
  static const Permutation p{1, 4, 2, 3};
  return p;
}
inline const Permutation& pattern_2413() {
  static const Permutation p{2, 4, 1, 3};
  return p;
}
inline const Permutation& pattern_2314() {
  static const Permutation p{2, 3, 1, 4};
  return p;
}

/// Raised when an input contains a pattern it is required to avoid.
class PatternContainmentError : public PermutationError {
 public:
  PatternContainmentError(const std::string& what, Permutation input,
                          Permutation pattern, std::vector<int> occurrence)
      : PermutationError(what),
        input_(std::move(input)),
        pattern_(std::move(pattern)),
        occurrence_(std::move(occurrence)) {}

  const Permutation& input() const { return input_; }
  const Permutation& pattern() const { return pattern_; }
  /// 1-based positions of one witnessing occurrence.
  const std::vector<int>& occurrence() const { return occurrence_; }

 private:
  Permutation input_;
  Permutation pattern_;
  std::vector<int> occurrence_;
};

inline void require_avoids(const Permutation& p, const Permutation& pattern,
                           const char* op) {
  if (auto occ = find_occurrence(p, pattern)) {
    std::string msg = std::string(op) + " requires a permutation avoiding ";
    for (int v : pattern) msg += std::to_string(v);
    msg += "; input " + to_string(p) + " contains it at positions " +
           to_string(IndexSet(*occ));
    throw PatternContainmentError(msg, p, pattern, *occ);
  }
}

/// phi(p) = (a, b). b is the least index with [b, n] inside the right-to-left
/// maxima, so b - 1 is the last ascent; a is the largest right-to-left maximum
/// before b, or 0 when there is none.
struct DecompositionPoint {
  int a = 0;
  int b = 0;
  friend bool operator==(const DecompositionPoint&,
                         const DecompositionPoint&) = default;
};

struct Decomposition {
  DecompositionPoint point;
  int chi = 0;
  int rho = 0;
  Permutation pi1;
  Permutation pi2;
};

inline DecompositionPoint phi(const Permutation& p) {
  if (p.is_decreasing()) {
    throw PermutationError("phi is undefined on the decreasing permutation " +
                           to_string(p));
  }
  const IndexSet rl = rl_maxima(p);
  // rl always ends with n; walk back over its maximal suffix of consecutive
  // indices.
  int j = static_cast<int>(rl.size()) - 1;
  while (j > 0 && rl[static_cast<std::size_t>(j - 1)] ==
                      rl[static_cast<std::size_t>(j)] - 1) {
    --j;
  }
  DecompositionPoint pt;
  pt.b = rl[static_cast<std::size_t>(j)];
  pt.a = j > 0 ? rl[static_cast<std::size_t>(j - 1)] : 0;
  return pt;
}

inline Decomposition decompose(const Permutation& p) {
  Decomposition d;
  d.point = phi(p);
  const auto [a, b] = d.point;
  const int n = p.size();
  for (int i = a + 1; i < b; ++i) d.chi = std::max(d.chi, p.at(i));
  for (int i : rl_maxima(p)) {
    if (i > b && p.at(i) > d.chi) ++d.rho;
  }
  std::vector<int> first, second;
  for (int i = 1; i <= a; ++i) first.push_back(p.at(i));
  for (int i = b; i <= b + d.rho; ++i) first.push_back(p.at(i));
  for (int i = a + 1; i <= b; ++i) second.push_back(p.at(i));
  for (int i = b + d.rho + 1; i <= n; ++i) second.push_back(p.at(i));
  d.pi1 = standardize(first);
  d.pi2 = standardize(second);
  return d;
}

/// One failed lemma assertion observed while mapping in checked mode.
struct LemmaViolation {
  std::string lemma;
  Permutation input;
  std::string detail;
};

/// Caller-owned sink for checked-mode lemma assertions.
struct LemmaLog {
  std::size_t checks = 0;
  std::vector<LemmaViolation> violations;

  void expect(bool ok, const char* lemma, const Permutation& input,
              const std::string& detail) {
    ++checks;
    if (!ok) violations.push_back({lemma, input, detail});
  }
};

struct ThetaOptions {
  /// Disabling the step case yields a deliberately broken, non-injective
  /// variant; it exists only as a negative control for the verifier.
  bool step_case = true;
  /// When set, every decomposition and recombination is checked against the
  /// structural lemmas and the outcomes are recorded here.
  LemmaLog* log = nullptr;
};

namespace detail {

inline IndexSet interval(int lo, int hi) {
  IndexSet out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

inline IndexSet set_union(IndexSet x, const IndexSet& y) {
  x.insert(x.end(), y.begin(), y.end());
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

inline void check_decomposition(LemmaLog& log, const Permutation& p,
                                const Decomposition& d) {
  const auto [a, b] = d.point;
  const int n = p.size();
  const int m = d.pi1.size();
  const int l = d.pi2.size();
  const IndexSet rl = rl_maxima(p);
  const IndexSet des = descent_set(p);

  log.expect(b - a >= 2, "decomposition gap b-a>=2", p,
             "a=" + std::to_string(a) + " b=" + std::to_string(b));
  log.expect(m == a + d.rho + 1 && l == n - a - d.rho && m < n && l < n,
             "decomposition sizes", p,
             "m=" + std::to_string(m) + " l=" + std::to_string(l));

  // Values left in the gap and the tail form [1, chi] = [1, l-1].
  IndexSet low;
  for (int i = a + 1; i < b; ++i) low.push_back(p.at(i));
  for (int i = b + d.rho + 1; i <= n; ++i) low.push_back(p.at(i));
  std::sort(low.begin(), low.end());
  log.expect(low == interval(1, d.chi) && d.chi == l - 1,
             "decomposition value interval", p, "values=" + to_string(low));

  IndexSet rl_before;
  for (int i : rl) {
    if (i <= a) rl_before.push_back(i);
  }
  log.expect(rl_maxima(d.pi1) == set_union(rl_before, interval(a + 1, m)),
             "RL of pi1", p, to_string(rl_maxima(d.pi1)));
  log.expect(rl_maxima(d.pi2) == interval(b - a, l), "RL of pi2", p,
             to_string(rl_maxima(d.pi2)));

  IndexSet des1, des2;
  for (int i : des) {
    if (i <= a) des1.push_back(i);
    if (i > a && i < b) des2.push_back(i - a);
  }
  log.expect(descent_set(d.pi1) == set_union(des1, interval(a + 1, m - 1)),
             "descents of pi1", p, to_string(descent_set(d.pi1)));
  log.expect(descent_set(d.pi2) == set_union(des2, interval(b - a, l - 1)),
             "descents of pi2", p, to_string(descent_set(d.pi2)));

  const IndexSet s1 = steps(d.pi1);
  log.expect(s1.empty() || s1 == IndexSet{a}, "steps of pi1", p,
             to_string(s1));
  log.expect(steps(d.pi2).empty(), "steps of pi2", p,
             to_string(steps(d.pi2)));
}

inline void check_recombination(LemmaLog& log, const Permutation& p,
                                const Decomposition& d,
                                const Permutation& sigma,
                                const Permutation& alpha,
                                const Permutation& result) {
  const int a = d.point.a;
  const int l = alpha.size();
  log.expect(is_value_interval(result, a + 1, a + l) &&
                 *std::min_element(result.begin() + a,
                                   result.begin() + a + l) == sigma.at(a + 1),
             "inflation block interval", p, to_string(result));
  log.expect(!contains(result, pattern_2413()), "inflation avoids 2413", p,
             to_string(result));
  log.expect(rl_maxima(result) == rl_maxima(p), "RL of inflation", p,
             to_string(rl_maxima(result)));
  log.expect(descent_set(result) == descent_set(p), "descents of inflation",
             p, to_string(descent_set(result)));
  const IndexSet ss = steps(sigma);
  const bool premise = alpha.at(1) < l && steps(alpha).empty() &&
                       (ss.empty() || ss == IndexSet{a});
  log.expect(premise, "inflation step premises", p,
             "alpha=" + to_string(alpha) + " sigma=" + to_string(sigma));
  log.expect(steps(result).empty(), "steps of inflation", p,
             to_string(steps(result)));
  log.expect(max_block_extent(result, a) == l,
             "block recoverable from inflation", p,
             "extent=" + std::to_string(max_block_extent(result, a)));
}

inline Permutation theta_rec(const Permutation& p, const ThetaOptions& opt) {
  const int n = p.size();
  if (n <= 1) return p;

  if (opt.step_case) {
    const IndexSet st = steps(p);
    if (!st.empty()) {
      const int k = st.front();
      const Permutation reduced = delete_position(p, k + 1);
      if (opt.log) {
        opt.log->expect(inflate(reduced, Permutation{2, 1}, k) == p,
                        "step deflation", p, to_string(reduced));
      }
      return inflate(theta_rec(reduced, opt), Permutation{2, 1}, k);
    }
  } else if (p.is_decreasing()) {
    return p;
  }

  const DecompositionPoint pt = phi(p);
  if (pt.a == 0) {
    return insert_max(theta_rec(delete_max(p).first, opt), pt.b);
  }

  const Decomposition d = decompose(p);
  if (opt.log) check_decomposition(*opt.log, p, d);
  const Permutation sigma = theta_rec(d.pi1, opt);
  const Permutation alpha = theta_rec(d.pi2, opt);
  Permutation result = inflate(sigma, alpha, pt.a + 1);
  if (opt.log) check_recombination(*opt.log, p, d, sigma, alpha, result);
  return result;
}

inline Permutation theta_inverse_rec(const Permutation& q) {
  const int n = q.size();
  if (n <= 1) return q;

  const IndexSet st = steps(q);
  if (!st.empty()) {
    const int k = st.front();
    const Permutation reduced = deflate(q, k - 1, 2).sigma;
    return inflate(theta_inverse_rec(reduced), Permutation{2, 1}, k);
  }

  const auto [a, b] = phi(q);
  if (a == 0) {
    return insert_max(theta_inverse_rec(delete_max(q).first), b);
  }

  const int l = max_block_extent(q, a);
  const auto [sigma, alpha] = deflate(q, a, l);
  const Permutation pi1 = theta_inverse_rec(sigma);
  const Permutation pi2 = theta_inverse_rec(alpha);
  const int m = pi1.size();
  const int rho = m - a - 1;

  std::vector<int> low;
  for (int v : pi2) {
    if (v != l) low.push_back(v);
  }
  std::vector<int> out(static_cast<std::size_t>(n));
  auto put = [&](int pos, int v) { out[static_cast<std::size_t>(pos - 1)] = v; };
  for (int i = 1; i <= a; ++i) put(i, pi1.at(i) + l - 1);
  for (int j = 0; j <= rho; ++j) put(b + j, pi1.at(a + 1 + j) + l - 1);
  std::size_t next = 0;
  for (int i = a + 1; i < b; ++i) put(i, low[next++]);
  for (int i = b + rho + 1; i <= n; ++i) put(i, low[next++]);
  return Permutation(std::move(out));
}

}  // namespace detail

/// Theta: S_n(1423) -> S_n(2413). Preserves descents, right-to-left maxima,
/// steps and the positions of n and n-1; fixes S_n(1423) ∩ S_n(2413).
///
/// Throws PatternContainmentError if p contains 1423.
inline Permutation theta(const Permutation& p, const ThetaOptions& opt = {}) {
  require_avoids(p, pattern_1423(), "theta");
  return detail::theta_rec(p, opt);
}

/// Inverse of theta. Throws PatternContainmentError if q contains 2413.
inline Permutation theta_inverse(const Permutation& q) {
  require_avoids(q, pattern_2413(), "theta inverse");
  return detail::theta_inverse_rec(q);
}

inline Permutation reverse_complement(const Permutation& p) {
  return reverse(complement(p));
}

/// Omega = cr ∘ Theta ∘ rc: S_n(2314) -> S_n(2413). Preserves descents,
/// left-to-right minima, steps and the positions of 1 and 2.
inline Permutation omega(const Permutation& p, const ThetaOptions& opt = {}) {
  require_avoids(p, pattern_2314(), "omega");
  return reverse_complement(detail::theta_rec(reverse_complement(p), opt));
}

inline Permutation omega_inverse(const Permutation& q) {
  require_avoids(q, pattern_2413(), "omega inverse");
  return reverse_complement(detail::theta_inverse_rec(reverse_complement(q)));
}

}  // namespace wilf4
