#pragma once

// Palindromicity verdicts on Z-graded and Z/2N-graded dimension tables, and the full
// analysis of a split domain.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topsym/errors.hpp"
#include "topsym/exactness.hpp"
#include "topsym/homology.hpp"
#include "topsym/spaces.hpp"
#include "topsym/split.hpp"

namespace topsym {

/// A degree where the palindrome condition fails for a candidate shift.
struct AsymmetryWitness {
  int shift = 0;
  int degree = 0;
  std::size_t dim = 0;            ///< dims[degree]
  std::size_t reflected_dim = 0;  ///< dims[shift - degree]

  friend bool operator==(const AsymmetryWitness&, const AsymmetryWitness&) = default;
};

struct SymmetryVerdict {
  bool symmetric = false;
  std::vector<int> shifts;  ///< every valid m (residues in [0, 2N) for rolled tables)
  std::optional<AsymmetryWitness> witness;
};

/// dims_{m-k} = dims_k for all k holds for exactly one candidate m = min + max of the
/// support, or for every m when the support is empty (reported as m = 0).
inline SymmetryVerdict check_symmetry(const BettiTable& table) {
  SymmetryVerdict v;
  if (table.vanishes()) {
    v.symmetric = true;
    v.shifts = {0};
    return v;
  }
  const int m = table.min_degree() + table.max_degree();
  for (const auto& [k, d] : table.dims()) {
    const std::size_t mirrored = table.at(m - k);
    if (mirrored != d) {
      v.witness = AsymmetryWitness{m, k, d, mirrored};
      return v;
    }
  }
  v.symmetric = true;
  v.shifts = {m};
  return v;
}

/// Verdict on the reduced homology of P (the empty complex has one class in degree -1).
inline SymmetryVerdict check_sphere_action(const SimplicialComplex& p) { return check_symmetry(betti(p, Flavor::reduced)); }

/// Dimensions summed over residue classes modulo 2N.
struct RolledTable {
  std::size_t modulus = 2;
  std::vector<std::size_t> entries;

  std::size_t total() const {
    std::size_t t = 0;
    for (auto e : entries) t += e;
    return t;
  }
  friend bool operator==(const RolledTable&, const RolledTable&) = default;
};

inline RolledTable roll_up(const BettiTable& table, std::size_t chern_number) {
  if (chern_number == 0) throw InputError("roll_up: N must be at least 1");
  RolledTable r;
  r.modulus = 2 * chern_number;
  r.entries.assign(r.modulus, 0);
  const long long mod = static_cast<long long>(r.modulus);
  for (const auto& [k, d] : table.dims()) r.entries[static_cast<std::size_t>(((k % mod) + mod) % mod)] += d;
  return r;
}

/// Every residue m with a_{m-k} = a_k for all k is reported. For asymmetric tables the
/// witness refers to m = 0.
inline SymmetryVerdict check_symmetry_rolled(const RolledTable& rolled) {
  const long long mod = static_cast<long long>(rolled.modulus);
  if (mod <= 0 || rolled.entries.size() != rolled.modulus) throw InputError("rolled table: entries do not match modulus");
  auto at = [&](long long j) { return rolled.entries[static_cast<std::size_t>(((j % mod) + mod) % mod)]; };
  SymmetryVerdict v;
  for (long long m = 0; m < mod; ++m) {
    bool ok = true;
    for (long long k = 0; k < mod && ok; ++k) ok = at(m - k) == at(k);
    if (ok) v.shifts.push_back(static_cast<int>(m));
  }
  v.symmetric = !v.shifts.empty();
  if (!v.symmetric) {
    for (long long k = 0; k < mod; ++k) {
      if (at(-k) != at(k)) {
        v.witness = AsymmetryWitness{0, static_cast<int>(k), at(k), at(-k)};
        break;
      }
    }
  }
  return v;
}

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct AnalysisOptions {
  std::optional<std::size_t> chern_number;  ///< adds rolled verdicts modulo 2N
};

struct RolledVerdict {
  RolledTable table;
  SymmetryVerdict verdict;
};

struct ActionReport {
  std::string name;
  BettiTable betti_positive;  ///< H(W, positive)
  BettiTable betti_negative;  ///< H(W, negative)
  SymmetryVerdict verdict_positive;
  SymmetryVerdict verdict_negative;
  CheckStatus duality = CheckStatus::skipped;
  std::optional<DualityReport> duality_report;
  std::string duality_note;  ///< why duality was skipped
  FactorTwoReport factor2;
  std::optional<RolledVerdict> rolled;

  /// Both regions give the same verdict.
  bool regions_agree() const noexcept { return verdict_positive.symmetric == verdict_negative.symmetric; }
};

/// Betti tables of both regions, their verdicts, duality, and the doubling identity.
/// Duality is skipped when the domain is not a pseudomanifold.
inline ActionReport analyze_action(const BoundarySplit& split, std::string name = {}, const AnalysisOptions& options = {}) {
  ActionReport r;
  r.name = std::move(name);
  r.betti_positive = betti(split.positive_pair(), Flavor::relative);
  r.betti_negative = betti(split.negative_pair(), Flavor::relative);
  r.verdict_positive = check_symmetry(r.betti_positive);
  r.verdict_negative = check_symmetry(r.betti_negative);

  const auto pm = check_pseudomanifold(split.domain());
  if (pm.ok) {
    r.duality_report = lefschetz_duality_check(split);
    r.duality = r.duality_report->pass ? CheckStatus::pass : CheckStatus::fail;
  } else {
    r.duality_note = pm.reason;
  }
  r.factor2 = factor_two_check(split);
  if (options.chern_number) {
    auto rolled = roll_up(r.betti_positive, *options.chern_number);
    auto verdict = check_symmetry_rolled(rolled);
    r.rolled = RolledVerdict{std::move(rolled), std::move(verdict)};
  }
  return r;
}

}  // namespace topsym
