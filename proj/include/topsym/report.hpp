#pragma once

// Machine (JSON) and human-readable renderings of analysis and verification results.

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "topsym/homology.hpp"
#include "topsym/symmetry.hpp"
#include "topsym/verify.hpp"

namespace topsym {

using ordered_json = nlohmann::ordered_json;

inline ordered_json table_json(const BettiTable& t) {
  auto arr = ordered_json::array();
  for (const auto& [k, d] : t.hull_entries()) arr.push_back({k, d});
  return arr;
}

inline ordered_json verdict_json(const SymmetryVerdict& v) {
  ordered_json j;
  j["symmetric"] = v.symmetric;
  j["shifts"] = v.shifts;
  if (v.witness) {
    j["witness"] = {{"shift", v.witness->shift},
                    {"degree", v.witness->degree},
                    {"dim", v.witness->dim},
                    {"reflected_dim", v.witness->reflected_dim}};
  }
  return j;
}

inline ordered_json report_json(const ActionReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["betti_positive"] = table_json(r.betti_positive);
  j["betti_negative"] = table_json(r.betti_negative);
  j["verdict_positive"] = verdict_json(r.verdict_positive);
  j["verdict_negative"] = verdict_json(r.verdict_negative);
  j["duality"] = to_string(r.duality);
  j["factor2"] = r.factor2.pass ? "pass" : "fail";
  if (r.rolled) {
    j["rolled"] = {{"modulus", r.rolled->table.modulus},
                   {"entries", r.rolled->table.entries},
                   {"verdict", verdict_json(r.rolled->verdict)}};
  }
  return j;
}

inline ordered_json suite_json(const std::string& name, const std::vector<SuiteResult>& results) {
  ordered_json j;
  j["name"] = name;
  auto arr = ordered_json::array();
  for (const auto& s : results) arr.push_back({{"suite", s.suite}, {"status", to_string(s.status)}, {"detail", s.detail}});
  j["suites"] = arr;
  return j;
}

namespace detail {

inline std::string table_text(const BettiTable& t) {
  if (t.vanishes()) return "0 in every degree";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, d] : t.hull_entries()) {
    os << (first ? "" : "  ") << "H" << k << "=" << d;
    first = false;
  }
  return os.str();
}

inline std::string verdict_text(const SymmetryVerdict& v) {
  std::ostringstream os;
  if (v.symmetric) {
    os << "symmetric, shift" << (v.shifts.size() > 1 ? "s" : "");
    for (int m : v.shifts) os << " " << m;
  } else {
    os << "asymmetric";
    if (v.witness) {
      os << " (shift " << v.witness->shift << ": dim H" << v.witness->degree << " = " << v.witness->dim << ", dim H"
         << v.witness->shift - v.witness->degree << " = " << v.witness->reflected_dim << ")";
    }
  }
  return os.str();
}

}  // namespace detail

inline std::string report_text(const ActionReport& r) {
  std::ostringstream os;
  os << "space: " << r.name << "\n";
  os << "H(W, P):  " << detail::table_text(r.betti_positive) << "\n";
  os << "H(W, N):  " << detail::table_text(r.betti_negative) << "\n";
  os << "verdict (P): " << detail::verdict_text(r.verdict_positive) << "\n";
  os << "verdict (N): " << detail::verdict_text(r.verdict_negative) << "\n";
  os << "duality:  " << to_string(r.duality);
  if (!r.duality_note.empty()) os << " (" << r.duality_note << ")";
  os << "\n";
  os << "factor 2: " << (r.factor2.pass ? "pass" : "fail") << "  H(M_T, minus): " << detail::table_text(r.factor2.doubled)
     << "\n";
  if (r.rolled) {
    os << "rolled mod " << r.rolled->table.modulus << ":";
    for (auto e : r.rolled->table.entries) os << " " << e;
    os << "  -> " << detail::verdict_text(r.rolled->verdict) << "\n";
  }
  return os.str();
}

inline std::string suite_text(const std::string& name, const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  os << "space: " << name << "\n";
  for (const auto& s : results) os << "  " << s.suite << ": " << to_string(s.status) << "  " << s.detail << "\n";
  return os.str();
}

}  // namespace topsym
