#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wilf4/bijection.hpp"
#include "wilf4/patterns.hpp"
#include "wilf4/permutation.hpp"
#include "wilf4/statistics.hpp"

namespace wilf4 {

enum class Statistic { maj, des, rlmax, lrmin, steps, posn, posn1 };

inline std::string_view statistic_name(Statistic s) {
  switch (s) {
    case Statistic::maj: return "maj";
    case Statistic::des: return "des";
    case Statistic::rlmax: return "rlmax";
    case Statistic::lrmin: return "lrmin";
    case Statistic::steps: return "steps";
    case Statistic::posn: return "posn";
    case Statistic::posn1: return "posn1";
  }
  return "?";
}

inline Statistic parse_statistic(std::string_view name) {
  for (auto s : {Statistic::maj, Statistic::des, Statistic::rlmax,
                 Statistic::lrmin, Statistic::steps, Statistic::posn,
                 Statistic::posn1}) {
    if (statistic_name(s) == name) return s;
  }
  throw PermutationError("unknown statistic '" + std::string(name) + "'");
}

/// A statistic value: absent (monostate), a number, or an index set.
/// Ordering is variant ordering, so set-valued statistics compare by their
/// canonical ascending sequences.
using StatValue = std::variant<std::monostate, long, IndexSet>;

inline std::string to_string(const StatValue& v) {
  if (std::holds_alternative<std::monostate>(v)) return "-";
  if (auto* x = std::get_if<long>(&v)) return std::to_string(*x);
  return to_string(std::get<IndexSet>(v));
}

inline StatValue statistic_value(const Permutation& p, Statistic s) {
  switch (s) {
    case Statistic::maj: return major_index(p);
    case Statistic::des: return descent_set(p);
    case Statistic::rlmax: return rl_maxima(p);
    case Statistic::lrmin: return lr_minima(p);
    case Statistic::steps: return steps(p);
    case Statistic::posn:
      if (p.size() < 1) return std::monostate{};
      return static_cast<long>(p.position_of(p.size()));
    case Statistic::posn1:
      if (p.size() < 2) return std::monostate{};
      return static_cast<long>(p.position_of(p.size() - 1));
  }
  return std::monostate{};
}

struct DistributionTable {
  Statistic stat = Statistic::maj;
  std::map<StatValue, std::uint64_t> entries;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [v, c] : entries) t += c;
    return t;
  }
  friend bool operator==(const DistributionTable&,
                         const DistributionTable&) = default;
};

inline DistributionTable distribution(int n, const PatternSet& ps,
                                      Statistic stat) {
  if (n < 1) throw PermutationError("distribution needs n >= 1");
  DistributionTable t;
  t.stat = stat;
  for_each_avoider(n, ps, [&](const Permutation& p) {
    ++t.entries[statistic_value(p, stat)];
  });
  return t;
}

struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string property;
  int min_n = 1;
  int max_n = 1;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  double seconds = 0.0;
};

namespace detail {

// Accumulates one property over a sweep; keeps the first failure only.
// Sweeps run n upward and inputs lexicographically within each n, so the
// first failure recorded is the least failing input.
class PropertyTracker {
 public:
  PropertyTracker(std::string name, int min_n, int max_n) {
    report_.property = std::move(name);
    report_.min_n = min_n;
    report_.max_n = max_n;
  }

  void fail(std::string input, std::string expected, std::string actual) {
    if (!report_.pass) return;
    report_.pass = false;
    report_.counterexample =
        Counterexample{std::move(input), std::move(expected), std::move(actual)};
  }

  void check(bool ok, const Permutation& input, const std::string& expected,
             const std::string& actual) {
    if (!ok) fail(to_string(input), expected, actual);
  }

  bool failed() const { return !report_.pass; }

  VerificationReport finish(double seconds) {
    report_.seconds = seconds;
    return report_;
  }

 private:
  VerificationReport report_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

/// Checks a claimed bijection forward: S_n(source) -> S_n(target).
struct BijectionUnderTest {
  std::string name;
  Permutation source;
  Permutation target;
  std::function<Permutation(const Permutation&)> forward;
  std::function<Permutation(const Permutation&)> inverse;
  std::vector<Statistic> preserved;
  /// Extra named pointwise checks (e.g. phi preservation).
  std::vector<std::pair<std::string,
                        std::function<std::optional<std::string>(
                            const Permutation&, const Permutation&)>>>
      extra;
};

inline std::string describe_exception(const std::exception& e) {
  return std::string("exception: ") + e.what();
}

inline std::vector<VerificationReport> verify_bijection(
    const BijectionUnderTest& bij, int max_n) {
  Stopwatch clock;
  const std::string& nm = bij.name;
  PropertyTracker range(nm + ".range", 1, max_n);
  PropertyTracker injective(nm + ".injective", 1, max_n);
  PropertyTracker surjective(nm + ".cardinality", 1, max_n);
  PropertyTracker roundtrip(nm + ".inverse_after_forward", 1, max_n);
  PropertyTracker roundtrip_back(nm + ".forward_after_inverse", 1, max_n);
  PropertyTracker fixed(nm + ".fixed_points", 1, max_n);
  std::vector<PropertyTracker> preserved;
  for (Statistic s : bij.preserved) {
    preserved.emplace_back(nm + ".preserves." + std::string(statistic_name(s)),
                           1, max_n);
  }
  std::vector<PropertyTracker> extra;
  for (const auto& [name, fn] : bij.extra) {
    extra.emplace_back(nm + "." + name, 1, max_n);
  }

  for (int n = 1; n <= max_n; ++n) {
    std::map<Permutation, Permutation> preimage;  // image -> least preimage
    struct Collision {
      Permutation least, other, image;
    };
    std::optional<Collision> collision;
    for_each_avoider(n, PatternSet(bij.source), [&](const Permutation& p) {
      Permutation img;
      try {
        img = bij.forward(p);
      } catch (const std::exception& e) {
        range.fail(to_string(p), "a permutation", describe_exception(e));
        return;
      }
      range.check(img.size() == n && avoids(img, bij.target), p,
                  "image avoiding " + to_string(PatternSet(bij.target)),
                  to_string(img));
      for (std::size_t k = 0; k < bij.preserved.size(); ++k) {
        const auto before = statistic_value(p, bij.preserved[k]);
        const auto after = statistic_value(img, bij.preserved[k]);
        preserved[k].check(before == after, p, to_string(before),
                           to_string(after));
      }
      for (std::size_t k = 0; k < bij.extra.size(); ++k) {
        try {
          if (auto why = bij.extra[k].second(p, img)) {
            extra[k].fail(to_string(p), "property holds", *why);
          }
        } catch (const std::exception& e) {
          extra[k].fail(to_string(p), "property holds", describe_exception(e));
        }
      }
      if (avoids(p, bij.target)) {
        fixed.check(img == p, p, to_string(p), to_string(img));
      }
      try {
        const Permutation back = bij.inverse(img);
        roundtrip.check(back == p, p, to_string(p), to_string(back));
      } catch (const std::exception& e) {
        roundtrip.fail(to_string(p), to_string(p), describe_exception(e));
      }
      auto [it, inserted] = preimage.emplace(img, p);
      // Inputs arrive in increasing order, so it->second < p.
      if (!inserted && (!collision || it->second < collision->least)) {
        collision = Collision{it->second, p, img};
      }
    });
    if (collision && !injective.failed()) {
      // Among this n's collisions, report the one with the least preimage.
      injective.fail(to_string(collision->least),
                     "image not shared with " + to_string(collision->other),
                     to_string(collision->image));
    }

    std::uint64_t target_count = 0;
    for_each_avoider(n, PatternSet(bij.target), [&](const Permutation& q) {
      ++target_count;
      try {
        const Permutation back = bij.inverse(q);
        const Permutation again = bij.forward(back);
        roundtrip_back.check(again == q, q, to_string(q), to_string(again));
      } catch (const std::exception& e) {
        roundtrip_back.fail(to_string(q), to_string(q), describe_exception(e));
      }
    });
    if (preimage.size() != target_count) {
      surjective.fail("n=" + std::to_string(n),
                      std::to_string(target_count) + " distinct images",
                      std::to_string(preimage.size()));
    }
  }

  std::vector<VerificationReport> out;
  const double t = clock.seconds();
  for (auto* tr : {&range, &injective, &surjective, &roundtrip,
                   &roundtrip_back, &fixed}) {
    out.push_back(tr->finish(t));
  }
  for (auto& tr : preserved) out.push_back(tr.finish(t));
  for (auto& tr : extra) out.push_back(tr.finish(t));
  return out;
}

}  // namespace detail

/// Compares the distributions of `stat` over each class for a single n.
/// A failing report names the least statistic value whose counts differ.
inline VerificationReport check_equidistribution(
    int n, const std::vector<PatternSet>& classes, Statistic stat) {
  detail::Stopwatch clock;
  if (classes.size() < 2) {
    throw PermutationError("equidistribution needs at least two classes");
  }
  std::string name = std::string(statistic_name(stat)) + ".equidistributed";
  for (const auto& c : classes) name += ":" + to_string(c);
  detail::PropertyTracker tr(name, n, n);
  const DistributionTable base = distribution(n, classes.front(), stat);
  for (std::size_t k = 1; k < classes.size() && !tr.failed(); ++k) {
    const DistributionTable other = distribution(n, classes[k], stat);
    std::set<StatValue> keys;
    for (const auto& [v, c] : base.entries) keys.insert(v);
    for (const auto& [v, c] : other.entries) keys.insert(v);
    for (const auto& v : keys) {
      auto count = [&](const DistributionTable& t) {
        auto it = t.entries.find(v);
        return it == t.entries.end() ? std::uint64_t{0} : it->second;
      };
      if (count(base) != count(other)) {
        tr.fail("n=" + std::to_string(n) + " " +
                    std::string(statistic_name(stat)) + "=" + to_string(v),
                to_string(classes.front()) + ":" +
                    std::to_string(count(base)),
                to_string(classes[k]) + ":" + std::to_string(count(other)));
        break;
      }
    }
  }
  return tr.finish(clock.seconds());
}

/// check_equidistribution for every n in [min_n, max_n], merged into one
/// report that carries the first failing n.
inline VerificationReport check_equidistribution_range(
    int min_n, int max_n, const std::vector<PatternSet>& classes,
    Statistic stat) {
  detail::Stopwatch clock;
  VerificationReport merged;
  for (int n = min_n; n <= max_n; ++n) {
    VerificationReport r = check_equidistribution(n, classes, stat);
    if (n == min_n) merged = r;
    if (!r.pass) {
      merged.pass = false;
      merged.counterexample = r.counterexample;
      break;
    }
  }
  merged.min_n = min_n;
  merged.max_n = max_n;
  merged.seconds = clock.seconds();
  return merged;
}

struct VerifyOptions {
  /// Record per-case lemma assertions and report them as one property.
  bool checked = false;
  /// False selects the mutated map without the step case (negative control).
  bool step_case = true;
};

inline std::vector<VerificationReport> verify_theta(
    int max_n, const VerifyOptions& options = {}) {
  LemmaLog log;
  ThetaOptions topt;
  topt.step_case = options.step_case;
  if (options.checked) topt.log = &log;

  detail::BijectionUnderTest bij;
  bij.name = "theta";
  bij.source = pattern_1423();
  bij.target = pattern_2413();
  bij.forward = [topt](const Permutation& p) { return theta(p, topt); };
  bij.inverse = [](const Permutation& q) { return theta_inverse(q); };
  bij.preserved = {Statistic::des, Statistic::rlmax, Statistic::steps,
                   Statistic::posn, Statistic::posn1, Statistic::maj};
  bij.extra.emplace_back(
      "preserves.phi",
      [](const Permutation& p,
         const Permutation& img) -> std::optional<std::string> {
        if (p.is_decreasing()) return std::nullopt;
        const auto x = phi(p);
        if (img.is_decreasing()) return "image is decreasing";
        const auto y = phi(img);
        if (x == y) return std::nullopt;
        return "phi(p)=(" + std::to_string(x.a) + "," + std::to_string(x.b) +
               ") phi(theta p)=(" + std::to_string(y.a) + "," +
               std::to_string(y.b) + ")";
      });

  detail::Stopwatch clock;
  auto reports = detail::verify_bijection(bij, max_n);
  if (options.checked) {
    detail::PropertyTracker tr("theta.lemmas", 1, max_n);
    const LemmaViolation* least = nullptr;
    for (const auto& v : log.violations) {
      if (!least || std::pair(v.input.size(), v.input) <
                        std::pair(least->input.size(), least->input)) {
        least = &v;
      }
    }
    if (least) {
      tr.fail(to_string(least->input), least->lemma, least->detail);
    }
    reports.push_back(tr.finish(clock.seconds()));
  }
  return reports;
}

/// Checks Omega. Only `step_case` of the options applies here.
inline std::vector<VerificationReport> verify_omega(
    int max_n, const VerifyOptions& options = {}) {
  ThetaOptions topt;
  topt.step_case = options.step_case;
  detail::BijectionUnderTest bij;
  bij.name = "omega";
  bij.source = pattern_2314();
  bij.target = pattern_2413();
  bij.forward = [topt](const Permutation& p) { return omega(p, topt); };
  bij.inverse = [](const Permutation& q) { return omega_inverse(q); };
  bij.preserved = {Statistic::des, Statistic::lrmin, Statistic::steps,
                   Statistic::maj};
  auto position_of_value = [](int v) {
    return [v](const Permutation& p,
               const Permutation& img) -> std::optional<std::string> {
      if (p.size() < v) return std::nullopt;
      if (p.position_of(v) == img.position_of(v)) return std::nullopt;
      return "value " + std::to_string(v) + " moved from " +
             std::to_string(p.position_of(v)) + " to " +
             std::to_string(img.position_of(v));
    };
  };
  bij.extra.emplace_back("preserves.pos1", position_of_value(1));
  bij.extra.emplace_back("preserves.pos2", position_of_value(2));
  return detail::verify_bijection(bij, max_n);
}

/// maj over S_n(1423), S_n(2413), S_n(2314); descent sets over S_n(1423) and
/// S_n(2413); class sizes of all three.
inline std::vector<VerificationReport> verify_conjecture(int max_n) {
  const PatternSet c1423(pattern_1423()), c2413(pattern_2413()),
      c2314(pattern_2314());
  std::vector<VerificationReport> out;
  out.push_back(check_equidistribution_range(1, max_n, {c1423, c2413, c2314},
                                              Statistic::maj));
  out.push_back(check_equidistribution_range(1, max_n, {c1423, c2413},
                                             Statistic::des));

  detail::Stopwatch clock;
  detail::PropertyTracker counts("class_sizes_equal:1423,2413,2314", 1, max_n);
  for (int n = 1; n <= max_n && !counts.failed(); ++n) {
    const auto x = count_avoiders(n, c1423);
    const auto y = count_avoiders(n, c2413);
    const auto z = count_avoiders(n, c2314);
    if (x != y || x != z) {
      counts.fail("n=" + std::to_string(n), std::to_string(x),
                  std::to_string(y) + "," + std::to_string(z));
    }
  }
  out.push_back(counts.finish(clock.seconds()));
  return out;
}

/// Number of p in S_n(1423) ∩ S_n(2413) with theta(p) = p.
inline std::uint64_t fixed_points(int n) {
  if (n < 1) throw PermutationError("fixed_points needs n >= 1");
  std::uint64_t count = 0;
  for_each_avoider(n, PatternSet{pattern_1423(), pattern_2413()},
                   [&](const Permutation& p) {
                     if (theta(p) == p) ++count;
                   });
  return count;
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace wilf4
