#pragma once

// Induced maps, connecting homomorphisms and the exact-sequence / duality checks built on them.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "topsym/complex.hpp"
#include "topsym/errors.hpp"
#include "topsym/gf2.hpp"
#include "topsym/homology.hpp"
#include "topsym/split.hpp"

namespace topsym {

/// A linear map between homology groups, written in the stored bases.
///
/// `matrices[k]` maps H_k of the source to H_{k + degree_shift} of the target; column j is the
/// image of source basis class j. `witnesses[k][j]` records how that image was expressed in the
/// target basis, so every column can be re-checked at chain level.
struct HomologyMap {
  int degree_shift = 0;
  std::map<int, Gf2Matrix> matrices;
  std::map<int, std::vector<ClassCoordinates>> witnesses;
  std::map<int, std::vector<BitVector>> image_chains;

  const Gf2Matrix& at(int k) const {
    auto it = matrices.find(k);
    if (it == matrices.end()) throw InputError("homology map has no component in degree " + std::to_string(k));
    return it->second;
  }

  std::size_t rank_at(int k) const {
    auto it = matrices.find(k);
    return it == matrices.end() ? 0 : topsym::rank(it->second);
  }
};

namespace detail {

// Writes each image chain in the target basis and re-checks the chain-level witness.
inline void express_images(const PairHomology& target, int k, const std::vector<BitVector>& images, int source_degree,
                           HomologyMap& out) {
  std::vector<BitVector> cols;
  std::vector<ClassCoordinates> wit;
  const auto& basis = target.basis(k);
  for (const auto& img : images) {
    auto c = target.coordinates(k, img);
    BitVector rebuilt = target.boundary(k + 1).apply(c.bounding_chain);
    for (std::size_t i : c.coords.ones()) rebuilt ^= basis[i];
    if (rebuilt != img) throw std::logic_error("induced map witness does not reproduce the image chain");
    cols.push_back(c.coords);
    wit.push_back(std::move(c));
  }
  out.matrices.emplace(source_degree, Gf2Matrix::from_columns(target.dim(k), cols));
  out.witnesses.emplace(source_degree, std::move(wit));
  out.image_chains.emplace(source_degree, images);
}

}  // namespace detail

/// Map induced by the inclusion of one pair into another.
inline HomologyMap induced_map(const PairHomology& source, const PairHomology& target) {
  const auto& s = source.pair();
  const auto& t = target.pair();
  if (!s.ambient().is_subcomplex_of(t.ambient())) throw InputError("induced_map: source complex is not contained in target");
  if (!s.sub().is_subcomplex_of(t.sub())) throw InputError("induced_map: source subcomplex is not contained in target subcomplex");
  if (!s.augmented() && t.augmented()) {
    throw InputError("induced_map: an unreduced source cannot map into a reduced target");
  }

  HomologyMap out;
  for (int k = source.min_degree(); k <= source.max_degree(); ++k) {
    std::vector<BitVector> images;
    for (const auto& z : source.basis(k)) {
      BitVector img(target.cell_count(k));
      for (std::size_t i : z.ones()) {
        if (auto j = target.cell_index(source.cells(k)[i])) img.flip(*j);
      }
      images.push_back(std::move(img));
    }
    detail::express_images(target, k, images, k, out);
  }
  return out;
}

inline HomologyMap induced_map(const HomologyPair& source, const HomologyPair& target) {
  return induced_map(PairHomology(source), PairHomology(target));
}

/// Connecting map H_{k+1}(X, A) -> H_k(A, ...) of the triple sub(lower) ⊂ A ⊂ X.
/// `relative` must be the pair (X, A); `lower` a pair whose ambient is A.
inline HomologyMap connecting_map(const PairHomology& relative, const PairHomology& lower, int k) {
  const auto& a = relative.pair().sub();
  if (!(lower.pair().ambient() == a)) throw InputError("connecting_map: lower pair must live on the subcomplex");
  if (lower.pair().augmented() == false && relative.pair().augmented()) {
    throw InputError("connecting_map: incompatible augmentation");
  }

  HomologyMap out;
  out.degree_shift = -1;
  std::vector<BitVector> images;
  for (const auto& z : relative.basis(k + 1)) {
    std::set<Simplex> bd;
    for (std::size_t i : z.ones()) {
      const auto& cell = relative.cells(k + 1)[i];
      std::vector<Simplex> faces = cell.size() == 1 ? std::vector<Simplex>{Simplex{}} : facets_of(cell);
      for (auto& f : faces) {
        if (!bd.insert(f).second) bd.erase(f);
      }
    }
    BitVector img(lower.cell_count(k));
    for (const auto& f : bd) {
      if (relative.cell_index(f)) throw std::logic_error("connecting_map: representative is not a relative cycle");
      if (auto j = lower.cell_index(f)) img.flip(*j);
    }
    images.push_back(std::move(img));
  }
  detail::express_images(lower, k, images, k + 1, out);
  return out;
}

/// H_{k+1}(X, A) -> reduced H_k(A).
inline HomologyMap connecting_map(const ComplexPair& pair, int k) {
  return connecting_map(PairHomology(HomologyPair::relative(pair)), PairHomology(HomologyPair::reduced(pair.sub())), k);
}

/// One group of the long exact sequence with the maps entering and leaving it.
struct ExactSlot {
  std::string label;
  std::size_t dim = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  bool image_in_kernel = false;
  bool ranks_balance = false;

  bool exact() const noexcept { return image_in_kernel && ranks_balance; }
};

struct ExactnessReport {
  bool pass = true;
  std::vector<ExactSlot> slots;
  std::optional<std::size_t> first_failure;  ///< index into slots
};

namespace detail {

inline ExactSlot check_slot(std::string label, std::size_t middle_dim, const Gf2Matrix& in, const Gf2Matrix& out) {
  ExactSlot slot;
  slot.label = std::move(label);
  slot.dim = middle_dim;
  slot.rank_in = rank(in);
  slot.rank_out = rank(out);
  const auto kernel = kernel_basis(out);
  const Gf2Matrix kernel_cols = Gf2Matrix::from_columns(middle_dim, kernel);
  slot.image_in_kernel = true;
  for (const auto& c : in.columns()) {
    if (!solve_preimage(kernel_cols, c)) {
      slot.image_in_kernel = false;
      break;
    }
  }
  slot.ranks_balance = slot.rank_in + slot.rank_out == middle_dim;
  return slot;
}

inline Gf2Matrix component(const HomologyMap& m, int k, std::size_t rows, std::size_t cols) {
  auto it = m.matrices.find(k);
  if (it == m.matrices.end()) return Gf2Matrix::zero(rows, cols);
  return it->second;
}

}  // namespace detail

/// Checks image = kernel at every group of
///   ... -> H~_k(A) -> H~_k(X) -> H_k(X,A) -> H~_{k-1}(A) -> ...
inline ExactnessReport les_exactness_check(const ComplexPair& pair) {
  const PairHomology ra(HomologyPair::reduced(pair.sub()));
  const PairHomology rx(HomologyPair::reduced(pair.ambient()));
  const PairHomology rel(HomologyPair::relative(pair));

  const HomologyMap inc = induced_map(ra, rx);
  const HomologyMap quo = induced_map(rx, rel);
  const int top = pair.ambient().dim() + 1;
  std::map<int, HomologyMap> conn;
  for (int k = -1; k < top; ++k) conn.emplace(k, connecting_map(rel, ra, k));

  auto i_map = [&](int k) { return detail::component(inc, k, rx.dim(k), ra.dim(k)); };
  auto j_map = [&](int k) { return detail::component(quo, k, rel.dim(k), rx.dim(k)); };
  auto d_map = [&](int k) {  // H_k(X,A) -> H~_{k-1}(A)
    auto it = conn.find(k - 1);
    if (it == conn.end()) return Gf2Matrix::zero(ra.dim(k - 1), rel.dim(k));
    return detail::component(it->second, k, ra.dim(k - 1), rel.dim(k));
  };

  ExactnessReport report;
  for (int k = top; k >= -1; --k) {
    const std::string ks = std::to_string(k);
    report.slots.push_back(detail::check_slot("H~_" + ks + "(X)", rx.dim(k), i_map(k), j_map(k)));
    report.slots.push_back(detail::check_slot("H_" + ks + "(X,A)", rel.dim(k), j_map(k), d_map(k)));
    report.slots.push_back(
        detail::check_slot("H~_" + std::to_string(k - 1) + "(A)", ra.dim(k - 1), d_map(k), i_map(k - 1)));
  }
  for (std::size_t i = 0; i < report.slots.size(); ++i) {
    if (!report.slots[i].exact()) {
      report.pass = false;
      report.first_failure = i;
      break;
    }
  }
  return report;
}

struct MayerVietorisReport {
  BettiTable whole;    ///< H(X, U_A ∪ U_B)
  BettiTable part_a;   ///< H(V_A, U_A)
  BettiTable part_b;   ///< H(V_B, U_B)
  BettiTable overlap;  ///< H(V_A ∩ V_B, U_A ∩ U_B)
  bool overlap_acyclic = false;
  bool identity_holds = false;

  /// The direct-sum identity applies and holds.
  bool pass() const noexcept { return overlap_acyclic && identity_holds; }
};

/// Relative Mayer–Vietoris in the acyclic-overlap case:
/// H_k(X, U_A ∪ U_B) = H_k(V_A, U_A) ⊕ H_k(V_B, U_B) whenever H(V_A ∩ V_B, U_A ∩ U_B) = 0.
inline MayerVietorisReport mayer_vietoris_check(const SimplicialComplex& x, const SimplicialComplex& va,
                                                const SimplicialComplex& vb, const SimplicialComplex& ua,
                                                const SimplicialComplex& ub) {
  if (!va.is_subcomplex_of(x) || !vb.is_subcomplex_of(x)) throw InputError("mayer_vietoris: cover pieces must lie in X");
  if (!ua.is_subcomplex_of(va)) throw InputError("mayer_vietoris: U_A is not a subcomplex of V_A");
  if (!ub.is_subcomplex_of(vb)) throw InputError("mayer_vietoris: U_B is not a subcomplex of V_B");
  for (const auto& s : x.all()) {
    if (!va.contains(s) && !vb.contains(s)) throw InputError("mayer_vietoris: simplex " + to_string(s) + " is not covered");
  }

  MayerVietorisReport r;
  r.whole = betti(ComplexPair(x, complex_union(ua, ub)), Flavor::relative);
  r.part_a = betti(ComplexPair(va, ua), Flavor::relative);
  r.part_b = betti(ComplexPair(vb, ub), Flavor::relative);
  r.overlap = betti(ComplexPair(complex_intersection(va, vb), complex_intersection(ua, ub)), Flavor::relative);
  r.overlap_acyclic = r.overlap.vanishes();
  r.identity_holds = r.overlap_acyclic && r.whole == r.part_a + r.part_b;
  return r;
}

struct DualityRow {
  int degree = 0;
  std::size_t negative_side = 0;  ///< dim H_k(W, negative)
  std::size_t positive_side = 0;  ///< dim H_{d-k}(W, positive)
};

struct DualityReport {
  int dimension = 0;
  BettiTable negative_table;  ///< H(W, negative)
  BettiTable positive_table;  ///< H(W, positive)
  std::vector<DualityRow> rows;
  bool pass = false;
};

/// dim H_k(W, negative) = dim H_{d-k}(W, positive) for every k, W of dimension d.
inline DualityReport lefschetz_duality_check(const BoundarySplit& split) {
  require_pseudomanifold(split.domain(), "lefschetz duality");
  DualityReport r;
  r.dimension = split.domain().dim();
  r.negative_table = betti(split.negative_pair(), Flavor::relative);
  r.positive_table = betti(split.positive_pair(), Flavor::relative);
  r.pass = true;
  for (int k = 0; k <= std::max(r.dimension, 0); ++k) {
    DualityRow row{k, r.negative_table.at(k), r.positive_table.at(r.dimension - k)};
    r.pass = r.pass && row.negative_side == row.positive_side;
    r.rows.push_back(row);
  }
  // Entries outside [0, d] must vanish on both sides.
  for (const auto* t : {&r.negative_table, &r.positive_table}) {
    if (!t->vanishes() && (t->min_degree() < 0 || t->max_degree() > r.dimension)) r.pass = false;
  }
  return r;
}

}  // namespace topsym
