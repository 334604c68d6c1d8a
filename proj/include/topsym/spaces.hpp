#pragma once

// Example spaces and the doubling constructions.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "topsym/complex.hpp"
#include "topsym/errors.hpp"
#include "topsym/homology.hpp"
#include "topsym/split.hpp"

namespace topsym {

/// Boundary of the (d+1)-dimensional cross-polytope. Vertices 2i and 2i+1 are antipodal.
inline SimplicialComplex cross_polytope_sphere(int d) {
  if (d < 0) throw InputError("cross_polytope_sphere: dimension must be nonnegative");
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  std::vector<Simplex> facets;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
    Simplex s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(static_cast<Vertex>(2 * i + ((choice >> i) & 1U)));
    facets.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal(facets);
}

/// Joins a fresh apex (one past the largest vertex, or 0) to every simplex.
inline SimplicialComplex cone(const SimplicialComplex& x) {
  const auto verts = x.vertices();
  const Vertex apex = verts.empty() ? 0 : verts.back() + 1;
  std::vector<Simplex> tops;
  for (auto s : x.maximal_simplices()) {
    s.push_back(apex);
    tops.push_back(std::move(s));
  }
  if (tops.empty()) tops.push_back({apex});
  return SimplicialComplex::from_maximal(tops);
}

/// `count` copies of the boundary of an (n+1)-simplex, all sharing vertex 0.
inline SimplicialComplex wedge_of_spheres(int n, int count) {
  if (n < 1 || count < 1) throw InputError("wedge_of_spheres: need n >= 1 and count >= 1");
  std::vector<Simplex> facets;
  const Vertex width = n + 1;
  for (int c = 0; c < count; ++c) {
    Simplex verts{0};
    for (Vertex t = 0; t < width; ++t) verts.push_back(1 + c * width + t);
    for (std::size_t drop = 0; drop < verts.size(); ++drop) {
      Simplex f;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i != drop) f.push_back(verts[i]);
      }
      facets.push_back(std::move(f));
    }
  }
  return SimplicialComplex::from_maximal(facets);
}

/// Quotient of a rows x cols grid of squares, two triangles per square. With `twist`,
/// the horizontal wrap reverses the vertical direction (Klein bottle); otherwise a torus.
inline SimplicialComplex grid_surface(int rows, int cols, bool twist) {
  auto id = [&](int i, int j) -> Vertex {
    if (i == rows) i = 0;
    if (j == cols) {
      j = 0;
      if (twist) i = (rows - i) % rows;
    }
    return static_cast<Vertex>(i * cols + j);
  };
  std::vector<Simplex> tris;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  }
  return SimplicialComplex::from_maximal(tris);
}

inline SimplicialComplex torus() { return grid_surface(3, 3, false); }

inline SimplicialComplex klein_bottle() { return grid_surface(4, 4, true); }

/// Six-vertex real projective plane.
inline SimplicialComplex projective_plane() {
  return SimplicialComplex::from_maximal({{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                          {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

/// Every simplex of `x` whose vertices all lie in `sub` belongs to `sub`.
inline bool is_full_subcomplex(const SimplicialComplex& x, const SimplicialComplex& sub) {
  std::set<Vertex> verts;
  for (Vertex v : sub.vertices()) verts.insert(v);
  for (const auto& s : x.all()) {
    if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return verts.contains(v); }) && !sub.contains(s)) return false;
  }
  return true;
}

/// Barycentric subdivision. Vertex i of the result is the i-th simplex of `x` in
/// (dimension, lexicographic) order; `labels` receives that correspondence.
class BarycentricSubdivision {
 public:
  explicit BarycentricSubdivision(const SimplicialComplex& x) {
    const auto all = x.all();
    for (std::size_t i = 0; i < all.size(); ++i) label_.emplace(all[i], static_cast<Vertex>(i));
  }

  /// Subdivision of a subcomplex of the complex this was built from.
  SimplicialComplex operator()(const SimplicialComplex& k) const {
    std::vector<Simplex> flags;
    for (const auto& top : k.maximal_simplices()) {
      Simplex perm = top;
      do {
        Simplex flag;
        Simplex prefix;
        for (Vertex v : perm) {
          prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
          flag.push_back(label_.at(prefix));
        }
        flags.push_back(std::move(flag));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex::from_maximal(flags);
  }

 private:
  std::map<Simplex, Vertex> label_;
};

inline BoundarySplit subdivide(const BoundarySplit& split) {
  BarycentricSubdivision sd(split.domain());
  return BoundarySplit(sd(split.domain()), sd(split.positive()), sd(split.negative()));
}

/// Two copies of a split domain glued along the interface of its regions.
struct TruncatedDouble {
  BoundarySplit base;        ///< the split actually doubled (subdivided when the interface was not full)
  bool subdivided = false;
  SimplicialComplex m_t;     ///< the glued complex
  SimplicialComplex minus;   ///< both copies of the positive region
  SimplicialComplex plus;    ///< both copies of the negative region
  SimplicialComplex v_a, v_b;
  SimplicialComplex u_a, u_b;
};

namespace detail {

// Copy A keeps even labels 2v; copy B uses 2v+1 except on the shared vertices.
struct TwoCopies {
  std::set<Vertex> shared;
  SimplicialComplex a(const SimplicialComplex& k) const {
    return k.relabeled([](Vertex v) { return 2 * v; });
  }
  SimplicialComplex b(const SimplicialComplex& k) const {
    return k.relabeled([this](Vertex v) { return shared.contains(v) ? 2 * v : 2 * v + 1; });
  }
};

inline std::set<Vertex> vertex_set(const SimplicialComplex& k) {
  auto v = k.vertices();
  return {v.begin(), v.end()};
}

}  // namespace detail

inline TruncatedDouble truncated_double(const BoundarySplit& split) {
  TruncatedDouble out;
  out.base = split;
  if (!is_full_subcomplex(split.domain(), split.interface())) {
    out.base = subdivide(split);
    out.subdivided = true;
  }
  const auto& base = out.base;
  detail::TwoCopies copies{detail::vertex_set(base.interface())};

  out.v_a = copies.a(base.domain());
  out.v_b = copies.b(base.domain());
  out.u_a = copies.a(base.positive());
  out.u_b = copies.b(base.positive());
  out.m_t = complex_union(out.v_a, out.v_b);
  out.minus = complex_union(out.u_a, out.u_b);
  out.plus = complex_union(copies.a(base.negative()), copies.b(base.negative()));

  if (!(complex_intersection(out.v_a, out.v_b) == copies.a(base.interface()))) {
    throw std::logic_error("truncated_double: copies overlap outside the interface");
  }
  return out;
}

/// Two copies of W glued along its whole boundary.
inline SimplicialComplex full_double(const SimplicialComplex& w) {
  require_pseudomanifold(w, "full_double");
  auto boundary = boundary_subcomplex(w);
  if (boundary.empty()) throw InputError("full_double: complex has empty boundary");
  SimplicialComplex domain = w;
  if (!is_full_subcomplex(w, boundary)) {
    BarycentricSubdivision sd(w);
    domain = sd(w);
    boundary = sd(boundary);
  }
  detail::TwoCopies copies{detail::vertex_set(boundary)};
  return complex_union(copies.a(domain), copies.b(domain));
}

/// dim H_k(M_T, minus) against 2 dim H_k(W, positive).
struct FactorTwoReport {
  BettiTable doubled;  ///< H(M_T, minus)
  BettiTable single;   ///< H(W, positive)
  bool pass = false;
};

inline FactorTwoReport factor_two_check(const TruncatedDouble& td) {
  FactorTwoReport r;
  r.doubled = betti(ComplexPair(td.m_t, td.minus), Flavor::relative);
  r.single = betti(td.base.positive_pair(), Flavor::relative);
  r.pass = r.doubled == r.single.scaled(2);
  return r;
}

inline FactorTwoReport factor_two_check(const BoundarySplit& split) { return factor_two_check(truncated_double(split)); }

// ---------------------------------------------------------------------------
// Catalog

inline SimplicialComplex point() { return SimplicialComplex::from_maximal({{0}}); }
inline SimplicialComplex circle() { return SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}}); }

inline SimplicialComplex ball(int d) {
  if (d < 0) throw InputError("ball: dimension must be nonnegative");
  return d == 0 ? point() : cone(cross_polytope_sphere(d - 1));
}

/// Ball of dimension 2n with the whole boundary sphere negative.
inline BoundarySplit reeb_ball(int n) {
  if (n < 1) throw InputError("reeb_ball: n must be at least 1");
  return BoundarySplit::all_negative(ball(2 * n));
}

/// Wedge of 2^n n-spheres with empty positive region.
inline BoundarySplit brieskorn(int n) {
  if (n < 1) throw InputError("brieskorn: n must be at least 1");
  return BoundarySplit::all_negative(wedge_of_spheres(n, 1 << n));
}

/// Disk (cone over a square) with the boundary cut into two arcs meeting at vertices 0 and 2.
inline BoundarySplit disk_half_split() {
  auto disk = SimplicialComplex::from_maximal({{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}});
  return BoundarySplit(disk, SimplicialComplex::from_maximal({{0, 1}, {1, 2}}),
                       SimplicialComplex::from_maximal({{2, 3}, {0, 3}}));
}

/// Prism over a triangle; inner circle 0,1,2 negative, outer circle 3,4,5 positive.
inline SimplicialComplex annulus() {
  std::vector<Simplex> tris;
  for (Vertex i = 0; i < 3; ++i) {
    const Vertex j = (i + 1) % 3;
    tris.push_back({i, j, i + 3});
    tris.push_back({j, i + 3, j + 3});
  }
  return SimplicialComplex::from_maximal(tris);
}

inline BoundarySplit annulus_split() {
  return BoundarySplit(annulus(), SimplicialComplex::from_maximal({{3, 4}, {4, 5}, {3, 5}}),
                       SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}}));
}

using CatalogObject = std::variant<SimplicialComplex, BoundarySplit>;

inline const std::vector<std::string>& catalog_patterns() {
  static const std::vector<std::string> names = {
      "point", "circle", "sphere_<d>", "ball_<d>", "wedge_<n>_<c>", "torus", "klein_bottle", "projective_plane",
      "reeb_ball_<n>", "brieskorn_<n>", "disk_half_split", "annulus_split"};
  return names;
}

/// Concrete catalog instances exercised by the test and verification suites.
inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "point", "circle", "sphere_0", "sphere_1", "sphere_2", "sphere_3", "ball_1", "ball_2", "ball_3",
      "wedge_1_1", "wedge_2_4", "torus", "klein_bottle", "projective_plane", "reeb_ball_1", "reeb_ball_2",
      "brieskorn_2", "brieskorn_3", "disk_half_split", "annulus_split"};
  return names;
}

namespace detail {

inline int bounded_parameter(const std::string& text, int lo, int hi, const std::string& name) {
  int v = 0;
  try {
    v = std::stoi(text);
  } catch (const std::exception&) {
    throw InputError("catalog: bad parameter in " + name);
  }
  if (v < lo || v > hi) {
    throw InputError("catalog: parameter of " + name + " must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
  return v;
}

inline std::string catalog_listing() {
  std::string s;
  for (const auto& n : catalog_patterns()) s += (s.empty() ? "" : ", ") + n;
  return s;
}

}  // namespace detail

inline CatalogObject builtin_example(const std::string& name) {
  static const std::regex sphere_re(R"(sphere_(\d+))");
  static const std::regex ball_re(R"(ball_(\d+))");
  static const std::regex wedge_re(R"(wedge_(\d+)_(\d+))");
  static const std::regex reeb_re(R"(reeb_ball_(\d+))");
  static const std::regex brieskorn_re(R"(brieskorn_(\d+))");
  std::smatch m;

  if (name == "point") return point();
  if (name == "circle") return circle();
  if (name == "torus") return torus();
  if (name == "klein_bottle") return klein_bottle();
  if (name == "projective_plane") return projective_plane();
  if (name == "disk_half_split") return disk_half_split();
  if (name == "annulus_split") return annulus_split();
  if (std::regex_match(name, m, sphere_re)) return cross_polytope_sphere(detail::bounded_parameter(m[1], 0, 7, name));
  if (std::regex_match(name, m, reeb_re)) return reeb_ball(detail::bounded_parameter(m[1], 1, 3, name));
  if (std::regex_match(name, m, ball_re)) return ball(detail::bounded_parameter(m[1], 0, 7, name));
  if (std::regex_match(name, m, wedge_re)) {
    return wedge_of_spheres(detail::bounded_parameter(m[1], 1, 6, name), detail::bounded_parameter(m[2], 1, 64, name));
  }
  if (std::regex_match(name, m, brieskorn_re)) return brieskorn(detail::bounded_parameter(m[1], 1, 5, name));
  throw InputError("unknown example '" + name + "'; catalog: " + detail::catalog_listing());
}

/// Catalog object viewed as a split; a bare complex gets an empty positive region.
inline BoundarySplit as_split(const CatalogObject& obj) {
  if (const auto* s = std::get_if<BoundarySplit>(&obj)) return *s;
  return BoundarySplit::all_negative(std::get<SimplicialComplex>(obj));
}

}  // namespace topsym
