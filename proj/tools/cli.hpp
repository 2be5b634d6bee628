#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wilf4/bijection.hpp"
#include "wilf4/oracle.hpp"
#include "wilf4/patterns.hpp"
#include "wilf4/report_io.hpp"
#include "wilf4/statistics.hpp"

namespace wilf4::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

namespace detail {

inline std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

}  // namespace detail

/// Runs one invocation. Exit status: 0 success / all checks passed,
/// 1 a verification failed, 2 usage or input error.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Statistic-preserving bijections between 1423-, 2314- and "
               "2413-avoiding permutations"};
  app.name("wilf4");
  app.require_subcommand(1, 1);

  std::vector<std::string> perm_words;
  bool inverse = false;
  int n = 0;
  std::string patterns;
  bool count_only = false;
  std::string stat = "maj";
  int max_n = 0;
  std::string suite = "all";
  bool checked = false;
  bool records = false;
  std::string mutation = "none";

  auto* stats_cmd = app.add_subcommand("stats", "Print the statistic profile");
  stats_cmd->add_option("perm", perm_words, "Permutation, e.g. \"2 4 1 3\"")
      ->required();

  auto* theta_cmd = app.add_subcommand("theta", "Map S_n(1423) -> S_n(2413)");
  theta_cmd->add_flag("--inverse", inverse, "Apply the inverse map");
  theta_cmd->add_option("perm", perm_words)->required();

  auto* omega_cmd = app.add_subcommand("omega", "Map S_n(2314) -> S_n(2413)");
  omega_cmd->add_flag("--inverse", inverse, "Apply the inverse map");
  omega_cmd->add_option("perm", perm_words)->required();

  auto* avoiders_cmd =
      app.add_subcommand("avoiders", "List permutations avoiding patterns");
  avoiders_cmd->add_option("--n", n, "Length")->required();
  avoiders_cmd->add_option("--patterns", patterns, "e.g. 1423,2413")
      ->required();
  avoiders_cmd->add_flag("--count-only", count_only, "Print only the count");

  auto* dist_cmd = app.add_subcommand(
      "distribution", "Distribution of a statistic over an avoidance class");
  dist_cmd->add_option("--n", n, "Length")->required();
  dist_cmd->add_option("--patterns", patterns)->required();
  dist_cmd->add_option("--stat", stat)
      ->check(CLI::IsMember({"maj", "des", "rlmax", "lrmin", "steps", "posn",
                             "posn1"}));

  auto* verify_cmd =
      app.add_subcommand("verify", "Exhaustively verify the bijections");
  verify_cmd->add_option("--max-n", max_n, "Largest length checked")
      ->required();
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"theta", "omega", "conjecture", "all"}));
  verify_cmd->add_flag("--checked", checked, "Assert per-case lemmas");
  verify_cmd->add_flag("--records", records, "JSON lines output");
  verify_cmd
      ->add_option("--mutation", mutation,
                   "Verify a seeded mutant instead (negative control)")
      ->check(CLI::IsMember({"none", "skip-step-case"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    auto read_perm = [&]() {
      Permutation p = parse(detail::join(perm_words));
      return p;
    };

    if (stats_cmd->parsed()) {
      const Permutation p = read_perm();
      out << format_profile(p, profile(p)) << '\n';
      return kOk;
    }
    if (theta_cmd->parsed()) {
      const Permutation p = read_perm();
      out << to_string(inverse ? theta_inverse(p) : theta(p)) << '\n';
      return kOk;
    }
    if (omega_cmd->parsed()) {
      const Permutation p = read_perm();
      out << to_string(inverse ? omega_inverse(p) : omega(p)) << '\n';
      return kOk;
    }
    if (avoiders_cmd->parsed() || dist_cmd->parsed()) {
      if (n < 1) throw PermutationError("--n must be at least 1");
      const PatternSet ps = parse_pattern_set(patterns);
      if (dist_cmd->parsed()) {
        const auto table = distribution(n, ps, parse_statistic(stat));
        for (const auto& [value, count] : table.entries) {
          out << to_string(value) << ' ' << count << '\n';
        }
      } else if (count_only) {
        out << count_avoiders(n, ps) << '\n';
      } else {
        for_each_avoider(n, ps,
                         [&](const Permutation& p) { out << p << '\n'; });
      }
      return kOk;
    }
    if (verify_cmd->parsed()) {
      if (max_n < 1) throw PermutationError("--max-n must be at least 1");
      VerifyOptions opts;
      opts.checked = checked;
      opts.step_case = mutation != "skip-step-case";
      std::vector<VerificationReport> reports;
      auto append = [&](std::vector<VerificationReport> more) {
        reports.insert(reports.end(), more.begin(), more.end());
      };
      if (suite == "theta" || suite == "all") append(verify_theta(max_n, opts));
      if (suite == "omega" || suite == "all") append(verify_omega(max_n, opts));
      if (suite == "conjecture" || suite == "all") {
        append(verify_conjecture(max_n));
      }
      if (records) {
        write_records(out, reports);
      } else {
        write_table(out, reports);
      }
      return all_pass(reports) ? kOk : kVerificationFailed;
    }
  } catch (const PermutationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace wilf4::cli
