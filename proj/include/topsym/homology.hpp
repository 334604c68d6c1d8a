#pragma once

// Chain complexes of simplicial pairs over GF(2) and their homology.
//
// Chains of a pair (X, A) live on the simplices of X that are not in A. The reduced
// flavour adds one augmentation cell in degree -1 (the empty simplex), so the empty
// complex has reduced homology of dimension one in degree -1.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "topsym/complex.hpp"
#include "topsym/errors.hpp"
#include "topsym/gf2.hpp"

namespace topsym {

enum class Flavor { absolute, reduced, relative };

inline const char* to_string(Flavor f) noexcept {
  switch (f) {
    case Flavor::absolute: return "absolute";
    case Flavor::reduced: return "reduced";
    case Flavor::relative: return "relative";
  }
  return "?";
}

/// Degree -> dimension. Only nonzero entries are stored; equality ignores the flavour tag.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(Flavor flavor) : flavor_(flavor) {}

  static BettiTable from_dims(Flavor flavor, const std::map<int, std::size_t>& dims) {
    BettiTable t(flavor);
    for (const auto& [k, d] : dims) t.set(k, d);
    return t;
  }

  Flavor flavor() const noexcept { return flavor_; }
  const std::map<int, std::size_t>& dims() const noexcept { return dims_; }

  std::size_t at(int k) const {
    auto it = dims_.find(k);
    return it == dims_.end() ? 0 : it->second;
  }

  void set(int k, std::size_t d) {
    if (d == 0) {
      dims_.erase(k);
    } else {
      dims_[k] = d;
    }
  }

  /// True when every entry is zero.
  bool vanishes() const noexcept { return dims_.empty(); }
  int min_degree() const { return dims_.begin()->first; }
  int max_degree() const { return dims_.rbegin()->first; }

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [k, d] : dims_) t += d;
    return t;
  }

  /// Entries from the lowest to the highest nonzero degree, zeros included.
  std::vector<std::pair<int, std::size_t>> hull_entries() const {
    std::vector<std::pair<int, std::size_t>> out;
    if (vanishes()) return out;
    for (int k = min_degree(); k <= max_degree(); ++k) out.emplace_back(k, at(k));
    return out;
  }

  long long alternating_sum() const {
    long long s = 0;
    for (const auto& [k, d] : dims_) s += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(d);
    return s;
  }

  BettiTable shifted(int offset) const {
    BettiTable t(flavor_);
    for (const auto& [k, d] : dims_) t.set(k + offset, d);
    return t;
  }

  BettiTable scaled(std::size_t factor) const {
    BettiTable t(flavor_);
    for (const auto& [k, d] : dims_) t.set(k, d * factor);
    return t;
  }

  friend BettiTable operator+(const BettiTable& a, const BettiTable& b) {
    BettiTable t(a.flavor_);
    for (const auto& [k, d] : a.dims_) t.set(k, d + b.at(k));
    for (const auto& [k, d] : b.dims_) {
      if (!a.dims_.contains(k)) t.set(k, d);
    }
    return t;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.dims_ == b.dims_; }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, d] : dims_) {
      if (!first) s += ", ";
      first = false;
      s += std::to_string(k) + ":" + std::to_string(d);
    }
    return s + "}";
  }

 private:
  Flavor flavor_ = Flavor::absolute;
  std::map<int, std::size_t> dims_;
};

/// Which chain complex to build: the pair's quotient complex, optionally augmented.
class HomologyPair {
 public:
  static HomologyPair absolute(SimplicialComplex x) {
    return HomologyPair(ComplexPair::absolute(std::move(x)), false, Flavor::absolute);
  }
  static HomologyPair relative(ComplexPair p) { return HomologyPair(std::move(p), false, Flavor::relative); }
  static HomologyPair relative(SimplicialComplex x, SimplicialComplex a) {
    return relative(ComplexPair(std::move(x), std::move(a)));
  }
  static HomologyPair reduced(SimplicialComplex x) {
    return HomologyPair(ComplexPair::absolute(std::move(x)), true, Flavor::reduced);
  }

  const ComplexPair& pair() const noexcept { return pair_; }
  const SimplicialComplex& ambient() const noexcept { return pair_.ambient(); }
  const SimplicialComplex& sub() const noexcept { return pair_.sub(); }
  bool augmented() const noexcept { return augmented_; }
  Flavor flavor() const noexcept { return flavor_; }

  /// Whether a simplex (the empty simplex included) carries a chain generator.
  bool is_cell(const Simplex& s) const {
    if (s.empty()) return augmented_;
    return pair_.ambient().contains(s) && !pair_.sub().contains(s);
  }

  /// Whether a simplex is quotiented away (lies in the sub, or is the unaugmented empty simplex).
  bool is_collapsed(const Simplex& s) const {
    if (s.empty()) return !augmented_;
    return pair_.sub().contains(s);
  }

 private:
  HomologyPair(ComplexPair p, bool augmented, Flavor flavor)
      : pair_(std::move(p)), augmented_(augmented), flavor_(flavor) {}

  ComplexPair pair_;
  bool augmented_ = false;
  Flavor flavor_ = Flavor::absolute;
};

/// Coordinates of a cycle in a homology basis, plus the chain whose boundary accounts for the rest:
/// cycle = sum(coords[i] * basis[i]) + boundary(bounding_chain).
struct ClassCoordinates {
  BitVector coords;
  BitVector bounding_chain;
};

/// Chain complex, cycle representatives and Betti numbers of one HomologyPair.
class PairHomology {
 public:
  explicit PairHomology(HomologyPair pair) : pair_(std::move(pair)) {
    min_degree_ = pair_.augmented() ? -1 : 0;
    max_degree_ = pair_.ambient().dim();
    const int levels = max_degree_ - min_degree_ + 1;
    cells_.resize(static_cast<std::size_t>(std::max(levels, 0)));
    index_.resize(cells_.size());
    for (int k = min_degree_; k <= max_degree_; ++k) {
      auto& level = cells_[slot(k)];
      if (k == -1) {
        level.push_back(Simplex{});
      } else {
        for (const auto& s : pair_.ambient().simplices(k)) {
          if (!pair_.sub().contains(s)) level.push_back(s);
        }
      }
      for (std::size_t i = 0; i < level.size(); ++i) index_[slot(k)].emplace(level[i], i);
    }
    for (int k = min_degree_; k <= max_degree_; ++k) boundaries_.push_back(build_boundary(k));
    for (int k = min_degree_ + 1; k <= max_degree_; ++k) {
      if (!(boundary(k - 1) * boundary(k)).is_zero()) {
        throw std::logic_error("boundary of boundary is nonzero in degree " + std::to_string(k));
      }
    }
    for (int k = min_degree_; k <= max_degree_; ++k) build_basis(k);
  }

  const HomologyPair& pair() const noexcept { return pair_; }
  int min_degree() const noexcept { return min_degree_; }
  int max_degree() const noexcept { return max_degree_; }

  const std::vector<Simplex>& cells(int k) const {
    static const std::vector<Simplex> none;
    return in_range(k) ? cells_[slot(k)] : none;
  }
  std::size_t cell_count(int k) const { return cells(k).size(); }

  std::optional<std::size_t> cell_index(const Simplex& s) const {
    const int k = simplex_dim(s);
    if (!in_range(k)) return std::nullopt;
    auto it = index_[slot(k)].find(s);
    if (it == index_[slot(k)].end()) return std::nullopt;
    return it->second;
  }

  /// Boundary C_k -> C_{k-1}; rows index cells(k-1), columns index cells(k).
  Gf2Matrix boundary(int k) const {
    if (in_range(k)) return boundaries_[slot(k)];
    return Gf2Matrix::zero(cell_count(k - 1), cell_count(k));
  }

  std::size_t dim(int k) const { return in_range(k) ? bases_[slot(k)].size() : 0; }

  /// Cycle representatives whose classes form a basis of H_k.
  const std::vector<BitVector>& basis(int k) const {
    static const std::vector<BitVector> none;
    return in_range(k) ? bases_[slot(k)] : none;
  }

  bool is_cycle(int k, const BitVector& chain) const { return boundary(k).apply(chain).none(); }

  ClassCoordinates coordinates(int k, const BitVector& cycle) const {
    if (cycle.size() != cell_count(k)) throw InputError("coordinates: chain length mismatch");
    if (!is_cycle(k, cycle)) throw InputError("coordinates: chain is not a cycle");
    if (!in_range(k)) return {BitVector(0), BitVector(cell_count(k + 1))};
    const auto& sys = class_systems_[slot(k)];
    auto x = solve_preimage(sys, cycle);
    if (!x) throw std::logic_error("coordinates: cycle outside span of basis and boundaries");
    const std::size_t r = dim(k);
    return {x->slice(0, r), x->slice(r, x->size() - r)};
  }

  BettiTable table() const {
    BettiTable t(pair_.flavor());
    for (int k = min_degree_; k <= max_degree_; ++k) t.set(k, dim(k));
    return t;
  }

  /// Chain with coefficient one on each listed simplex (all must be cells).
  BitVector chain_of(const std::vector<Simplex>& simplices, int k) const {
    BitVector c(cell_count(k));
    for (const auto& s : simplices) {
      auto i = cell_index(s);
      if (!i || simplex_dim(s) != k) throw InputError("chain_of: " + to_string(s) + " is not a cell in degree " + std::to_string(k));
      c.flip(*i);
    }
    return c;
  }

 private:
  bool in_range(int k) const noexcept { return k >= min_degree_ && k <= max_degree_; }
  std::size_t slot(int k) const noexcept { return static_cast<std::size_t>(k - min_degree_); }

  Gf2Matrix build_boundary(int k) const {
    const auto& cols = cells(k);
    const std::size_t nrows = cell_count(k - 1);
    std::vector<BitVector> rows(nrows, BitVector(cols.size()));
    if (k - 1 >= min_degree_) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& f : face_list(cols[j])) {
          if (auto i = cell_index(f)) rows[*i].flip(j);
        }
      }
    }
    return Gf2Matrix::from_rows(cols.size(), std::move(rows));
  }

  static std::vector<Simplex> face_list(const Simplex& s) {
    if (s.size() == 1) return {Simplex{}};
    return facets_of(s);
  }

  void build_basis(int k) {
    const Gf2Matrix next = boundary(k + 1);
    XorBasis span(cell_count(k));
    const auto bd_cols = next.columns();
    for (const auto& b : bd_cols) span.insert(b);
    std::vector<BitVector> reps;
    for (auto& z : kernel_basis(boundary(k))) {
      if (span.insert(z)) reps.push_back(std::move(z));
    }
    // Columns: representatives first, then boundaries of (k+1)-cells.
    Gf2Matrix sys = Gf2Matrix::from_columns(cell_count(k), reps).hconcat(next);
    bases_.push_back(std::move(reps));
    class_systems_.push_back(std::move(sys));
  }

  HomologyPair pair_;
  int min_degree_ = 0;
  int max_degree_ = -1;
  std::vector<std::vector<Simplex>> cells_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::vector<Gf2Matrix> boundaries_;
  std::vector<std::vector<BitVector>> bases_;
  std::vector<Gf2Matrix> class_systems_;
};

/// Relative (quotient) chain complex of a pair, unaugmented.
struct ChainComplex {
  std::vector<std::vector<Simplex>> cells;  ///< cells[k]: simplices of the ambient not in the sub
  std::vector<Gf2Matrix> boundaries;        ///< boundaries[k] = d_k : C_k -> C_{k-1}; d_0 has zero rows
};

inline ChainComplex chain_complex(const ComplexPair& pair) {
  PairHomology h(HomologyPair::relative(pair));
  ChainComplex out;
  for (int k = 0; k <= h.max_degree(); ++k) {
    out.cells.push_back(h.cells(k));
    out.boundaries.push_back(h.boundary(k));
  }
  return out;
}

/// Betti table of a pair in the requested flavour.
/// Absolute reads only the ambient complex; relative with an empty sub equals absolute.
inline BettiTable betti(const ComplexPair& pair, Flavor flavor) {
  switch (flavor) {
    case Flavor::absolute: return PairHomology(HomologyPair::absolute(pair.ambient())).table();
    case Flavor::relative: return PairHomology(HomologyPair::relative(pair)).table();
    case Flavor::reduced:
      if (!pair.sub().empty()) throw InputError("reduced homology is only defined here for a complex, not a pair");
      return PairHomology(HomologyPair::reduced(pair.ambient())).table();
  }
  throw InputError("unknown flavor");
}

inline BettiTable betti(const SimplicialComplex& x, Flavor flavor = Flavor::absolute) {
  return betti(ComplexPair::absolute(x), flavor);
}

inline BettiTable betti(const SimplicialComplex& x, const SimplicialComplex& a) {
  return betti(ComplexPair(x, a), Flavor::relative);
}

/// Alternating count of simplices of the ambient that are not in the sub.
inline long long euler_characteristic(const ComplexPair& pair) {
  long long chi = 0;
  for (int k = 0; k <= pair.ambient().dim(); ++k) {
    const long long n = static_cast<long long>(pair.ambient().count(k)) - static_cast<long long>(pair.sub().count(k));
    chi += (k % 2 == 0 ? 1 : -1) * n;
  }
  return chi;
}

inline bool is_pure(const SimplicialComplex& x) {
  for (const auto& s : x.maximal_simplices()) {
    if (simplex_dim(s) != x.dim()) return false;
  }
  return true;
}

/// Ridge -> number of top-dimensional simplices containing it.
inline std::map<Simplex, std::size_t> ridge_degrees(const SimplicialComplex& x) {
  std::map<Simplex, std::size_t> deg;
  for (const auto& r : x.simplices(x.dim() - 1)) deg.emplace(r, 0);
  for (const auto& top : x.simplices(x.dim())) {
    for (const auto& f : facets_of(top)) ++deg[f];
  }
  return deg;
}

/// Face closure of the ridges that lie in exactly one top simplex.
inline SimplicialComplex boundary_subcomplex(const SimplicialComplex& x) {
  if (x.dim() <= 0) {
    if (!is_pure(x)) throw NotPseudomanifoldError("boundary: complex is not pure");
    return {};
  }
  if (!is_pure(x)) throw NotPseudomanifoldError("boundary: complex is not pure of dimension " + std::to_string(x.dim()));
  std::vector<Simplex> free_ridges;
  for (const auto& [ridge, n] : ridge_degrees(x)) {
    if (n >= 3) {
      throw NotPseudomanifoldError("boundary: ridge " + to_string(ridge) + " lies in " + std::to_string(n) +
                                   " top simplices");
    }
    if (n == 1) free_ridges.push_back(ridge);
  }
  return SimplicialComplex::from_maximal(free_ridges);
}

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t classes() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) n += find(i) == i ? 1 : 0;
    return n;
  }
  std::vector<std::size_t> parent;
};

}  // namespace detail

inline std::size_t connected_components(const SimplicialComplex& x) {
  const auto verts = x.vertices();
  std::map<Vertex, std::size_t> at;
  for (std::size_t i = 0; i < verts.size(); ++i) at[verts[i]] = i;
  detail::DisjointSets ds(verts.size());
  for (const auto& e : x.simplices(1)) ds.unite(at[e[0]], at[e[1]]);
  return ds.classes();
}

struct PseudomanifoldCheck {
  bool ok = false;
  std::string reason;  ///< empty when ok
};

/// Pure, every ridge in at most two top simplices, and each connected component
/// strongly connected through ridges.
inline PseudomanifoldCheck check_pseudomanifold(const SimplicialComplex& x) {
  if (x.empty()) return {true, {}};
  if (!is_pure(x)) return {false, "complex is not pure"};
  if (x.dim() == 0) return {true, {}};
  std::map<Simplex, std::vector<std::size_t>> cofaces;
  const auto& tops = x.simplices(x.dim());
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (auto& f : facets_of(tops[i])) cofaces[std::move(f)].push_back(i);
  }
  detail::DisjointSets dual(tops.size());
  for (const auto& [ridge, owners] : cofaces) {
    if (owners.size() > 2) {
      return {false, "ridge " + to_string(ridge) + " lies in " + std::to_string(owners.size()) + " top simplices"};
    }
    if (owners.size() == 2) dual.unite(owners[0], owners[1]);
  }
  if (dual.classes() != connected_components(x)) return {false, "a connected component is not strongly connected"};
  return {true, {}};
}

inline void require_pseudomanifold(const SimplicialComplex& x, const std::string& context) {
  auto check = check_pseudomanifold(x);
  if (!check.ok) throw NotPseudomanifoldError(context + ": " + check.reason);
}

}  // namespace topsym
