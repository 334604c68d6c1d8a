#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topsym/errors.hpp"

namespace topsym {

using Vertex = std::int64_t;

/// Strictly ascending vertex tuple. The empty tuple stands for the (-1)-dimensional empty simplex.
using Simplex = std::vector<Vertex>;

inline int simplex_dim(const Simplex& s) noexcept { return static_cast<int>(s.size()) - 1; }

inline std::string to_string(const Simplex& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

/// Codimension-one faces, obtained by dropping one vertex at a time (in vertex order).
inline std::vector<Simplex> facets_of(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.empty()) return out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != i) f.push_back(s[j]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

/// Sorts a raw tuple; rejects empty tuples and repeated vertices.
inline Simplex normalize_simplex(std::span<const Vertex> raw) {
  if (raw.empty()) throw InputError("simplex must contain at least one vertex");
  Simplex s(raw.begin(), raw.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InputError("duplicate vertex in simplex " + to_string(Simplex(raw.begin(), raw.end())));
  }
  return s;
}

/// Finite face-closed set of simplices, stored per dimension in lexicographic order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face closure of the given tuples.
  static SimplicialComplex from_maximal(std::span<const Simplex> tuples) {
    std::vector<std::set<Simplex>> acc;
    for (const auto& raw : tuples) {
      Simplex s = normalize_simplex(raw);
      if (acc.size() < s.size()) acc.resize(s.size());
      const std::size_t n = s.size();
      // Every nonempty subset; desk-scale simplices keep 2^n small.
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (std::uint64_t{1} << i)) face.push_back(s[i]);
        }
        acc[face.size() - 1].insert(std::move(face));
      }
    }
    SimplicialComplex out;
    out.by_dim_.reserve(acc.size());
    for (auto& level : acc) out.by_dim_.emplace_back(level.begin(), level.end());
    return out;
  }

  static SimplicialComplex from_maximal(std::initializer_list<Simplex> tuples) {
    return from_maximal(std::span<const Simplex>(tuples.begin(), tuples.size()));
  }

  /// Builds from a set already known to be face-closed (checked).
  static SimplicialComplex from_closed_set(const std::set<Simplex>& simplices) {
    SimplicialComplex out;
    for (const auto& s : simplices) {
      if (s.empty()) continue;
      if (out.by_dim_.size() < s.size()) out.by_dim_.resize(s.size());
      out.by_dim_[s.size() - 1].push_back(s);
    }
    for (const auto& s : simplices) {
      if (s.size() < 2) continue;
      for (const auto& f : facets_of(s)) {
        if (!simplices.contains(f)) throw InputError("simplex set is not face-closed at " + to_string(s));
      }
    }
    return out;
  }

  /// Top dimension; -1 for the empty complex.
  int dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const noexcept { return by_dim_.empty(); }

  const std::vector<Simplex>& simplices(int k) const {
    static const std::vector<Simplex> none;
    if (k < 0 || k > dim()) return none;
    return by_dim_[static_cast<std::size_t>(k)];
  }

  std::size_t count(int k) const { return simplices(k).size(); }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& level : by_dim_) n += level.size();
    return n;
  }

  bool contains(const Simplex& s) const {
    if (s.empty()) return true;
    const auto& level = simplices(simplex_dim(s));
    return std::binary_search(level.begin(), level.end(), s);
  }

  /// All simplices, ascending dimension then lexicographic.
  std::vector<Simplex> all() const {
    std::vector<Simplex> out;
    out.reserve(size());
    for (const auto& level : by_dim_) out.insert(out.end(), level.begin(), level.end());
    return out;
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (const auto& s : simplices(0)) out.push_back(s[0]);
    return out;
  }

  /// Simplices that are not a proper face of another simplex, lexicographically sorted.
  std::vector<Simplex> maximal_simplices() const {
    std::set<Simplex> non_maximal;
    for (int k = 1; k <= dim(); ++k) {
      for (const auto& s : simplices(k)) {
        for (auto& f : facets_of(s)) non_maximal.insert(std::move(f));
      }
    }
    std::vector<Simplex> out;
    for (const auto& s : all()) {
      if (!non_maximal.contains(s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_subcomplex_of(const SimplicialComplex& other) const {
    for (const auto& level : by_dim_) {
      for (const auto& s : level) {
        if (!other.contains(s)) return false;
      }
    }
    return true;
  }

  /// Applies a vertex map that is injective on this complex.
  template <typename Map>
  SimplicialComplex relabeled(Map&& map) const {
    std::vector<Simplex> tops;
    for (const auto& s : maximal_simplices()) {
      Simplex t;
      for (Vertex v : s) t.push_back(map(v));
      tops.push_back(std::move(t));
    }
    return from_maximal(tops);
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
};

/// Face closure of maximal simplices; idempotent on its own maximal simplices.
inline SimplicialComplex build_complex(std::span<const Simplex> maximal_simplices) {
  return SimplicialComplex::from_maximal(maximal_simplices);
}

inline SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto tops = a.maximal_simplices();
  auto more = b.maximal_simplices();
  tops.insert(tops.end(), more.begin(), more.end());
  return SimplicialComplex::from_maximal(tops);
}

inline SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::set<Simplex> common;
  for (const auto& s : a.all()) {
    if (b.contains(s)) common.insert(s);
  }
  return SimplicialComplex::from_closed_set(common);
}

/// Subcomplex of `x` consisting of the simplices all of whose vertices satisfy `keep`.
template <typename Pred>
SimplicialComplex induced_subcomplex(const SimplicialComplex& x, Pred&& keep) {
  std::set<Simplex> kept;
  for (const auto& s : x.all()) {
    if (std::all_of(s.begin(), s.end(), keep)) kept.insert(s);
  }
  return SimplicialComplex::from_closed_set(kept);
}

/// A complex together with a subcomplex.
class ComplexPair {
 public:
  ComplexPair() = default;

  ComplexPair(SimplicialComplex ambient, SimplicialComplex sub)
      : ambient_(std::move(ambient)), sub_(std::move(sub)) {
    for (int k = 0; k <= sub_.dim(); ++k) {
      for (const auto& s : sub_.simplices(k)) {
        if (!ambient_.contains(s)) {
          throw InputError("pair: simplex " + to_string(s) + " of the subcomplex is not in the ambient complex");
        }
      }
    }
  }

  static ComplexPair absolute(SimplicialComplex x) { return ComplexPair(std::move(x), SimplicialComplex{}); }

  const SimplicialComplex& ambient() const noexcept { return ambient_; }
  const SimplicialComplex& sub() const noexcept { return sub_; }

  friend bool operator==(const ComplexPair&, const ComplexPair&) = default;

 private:
  SimplicialComplex ambient_;
  SimplicialComplex sub_;
};

}  // namespace topsym
