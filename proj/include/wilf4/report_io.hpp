#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wilf4/oracle.hpp"

namespace wilf4 {

inline std::string range_label(const VerificationReport& r) {
  return r.min_n == r.max_n ? std::to_string(r.min_n)
                            : std::to_string(r.min_n) + ".." +
                                  std::to_string(r.max_n);
}

/// One JSON object per report, with fields property, range, pass,
/// counterexample (null or {input, expected, actual}) and seconds.
inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["property"] = r.property;
  j["range"] = range_label(r);
  j["pass"] = r.pass;
  if (r.counterexample) {
    j["counterexample"] = {{"input", r.counterexample->input},
                           {"expected", r.counterexample->expected},
                           {"actual", r.counterexample->actual}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["seconds"] = r.seconds;
  return j;
}

inline void write_records(std::ostream& os,
                          const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) os << to_json(r).dump() << '\n';
}

inline void write_table(std::ostream& os,
                        const std::vector<VerificationReport>& reports) {
  std::size_t width = 8;
  for (const auto& r : reports) width = std::max(width, r.property.size());
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  os << pad("property", width) << "  " << pad("n", 6) << "  result  seconds\n";
  for (const auto& r : reports) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    os << pad(r.property, width) << "  " << pad(range_label(r), 6) << "  "
       << (r.pass ? "PASS  " : "FAIL  ") << "  " << secs << '\n';
    if (r.counterexample) {
      os << "    input:    " << r.counterexample->input << '\n'
         << "    expected: " << r.counterexample->expected << '\n'
         << "    actual:   " << r.counterexample->actual << '\n';
    }
  }
}

}  // namespace wilf4
