#pragma once

// The identity suite run by `topsym verify`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "topsym/exactness.hpp"
#include "topsym/homology.hpp"
#include "topsym/morse.hpp"
#include "topsym/spaces.hpp"
#include "topsym/split.hpp"
#include "topsym/symmetry.hpp"

namespace topsym {

struct SuiteResult {
  std::string suite;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

namespace detail {

inline SuiteResult suite_from(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

/// Morse homology under the lexicographic order and `seeds` shuffled orders equals relative homology.
inline bool morse_agrees(const ComplexPair& pair, std::size_t seeds) {
  const auto expected = betti(pair, Flavor::relative);
  if (!(morse_betti(build_matching(pair)) == expected)) return false;
  for (std::uint64_t s = 1; s <= seeds; ++s) {
    if (!(morse_betti(build_matching(pair, s)) == expected)) return false;
  }
  return true;
}

}  // namespace detail

/// Duality, exact sequences, Mayer–Vietoris, the doubling identity and Morse homology
/// for one split. A suite is skipped only when its hypotheses do not hold.
inline std::vector<SuiteResult> run_identity_suite(const BoundarySplit& split, std::size_t morse_seeds = 10) {
  std::vector<SuiteResult> out;
  const auto td = truncated_double(split);

  const auto pm = check_pseudomanifold(split.domain());
  if (pm.ok) {
    const auto dual = lefschetz_duality_check(split);
    const auto vp = check_symmetry(dual.positive_table);
    const auto vn = check_symmetry(dual.negative_table);
    out.push_back(detail::suite_from("duality", dual.pass && vp.symmetric == vn.symmetric,
                                     "H(W,N) " + dual.negative_table.to_string() + " vs H(W,P) " +
                                         dual.positive_table.to_string() + " in dimension " +
                                         std::to_string(dual.dimension)));
  } else {
    out.push_back({"duality", CheckStatus::skipped, pm.reason});
  }

  {
    const std::vector<std::pair<std::string, ComplexPair>> pairs = {
        {"(W,P)", split.positive_pair()},
        {"(W,N)", split.negative_pair()},
        {"(cone P,P)", ComplexPair(cone(split.positive()), split.positive())},
        {"(M_T,minus)", ComplexPair(td.m_t, td.minus)}};
    std::string failed;
    for (const auto& [label, p] : pairs) {
      if (!les_exactness_check(p).pass) failed += (failed.empty() ? "" : ", ") + label;
    }
    out.push_back(detail::suite_from("les", failed.empty(), failed.empty() ? "4 pairs exact" : "not exact: " + failed));
  }

  {
    const auto mv = mayer_vietoris_check(td.m_t, td.v_a, td.v_b, td.u_a, td.u_b);
    out.push_back(detail::suite_from("mayer_vietoris", mv.pass(),
                                     "overlap " + mv.overlap.to_string() + ", whole " + mv.whole.to_string() +
                                         " = " + mv.part_a.to_string() + " + " + mv.part_b.to_string()));
  }

  {
    const auto f2 = factor_two_check(td);
    const bool copy_matches = betti(ComplexPair(td.v_a, td.u_a), Flavor::relative) == f2.single;
    out.push_back(detail::suite_from("factor2", f2.pass && copy_matches,
                                     "H(M_T,minus) " + f2.doubled.to_string() + ", H(W,P) " + f2.single.to_string()));
  }

  {
    const bool ok = detail::morse_agrees(split.positive_pair(), morse_seeds) &&
                    detail::morse_agrees(split.negative_pair(), morse_seeds) &&
                    detail::morse_agrees(ComplexPair(td.m_t, td.minus), morse_seeds);
    out.push_back(detail::suite_from("morse", ok,
                                     std::to_string(morse_seeds + 1) + " orders on (W,P), (W,N), (M_T,minus)"));
  }
  return out;
}

}  // namespace topsym
