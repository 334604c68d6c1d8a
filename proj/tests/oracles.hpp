#pragma once

// Test-only reference computations. Nothing here calls into the elimination code under test.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "topsym/complex.hpp"
#include "topsym/gf2.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;

inline Dense to_dense(const topsym::Gf2Matrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.at(i, j) ? 1 : 0;
  }
  return d;
}

/// Size of the largest linearly independent subset of rows, by enumerating all row subsets.
/// A subset is dependent when it contains a nonempty sub-subset whose rows sum to zero.
inline std::size_t rank_by_row_subsets(const Dense& m) {
  const std::size_t r = m.size();
  const std::size_t c = r == 0 ? 0 : m[0].size();
  std::vector<std::uint64_t> row_bits(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (m[i][j]) row_bits[i] |= std::uint64_t{1} << j;
    }
  }
  const std::size_t subsets = std::size_t{1} << r;
  std::vector<std::uint64_t> sum(subsets, 0);
  std::vector<bool> dependent(subsets, false);
  std::size_t best = 0;
  for (std::size_t s = 1; s < subsets; ++s) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
    sum[s] = sum[s & (s - 1)] ^ row_bits[low];
    bool dep = sum[s] == 0;
    for (std::size_t i = 0; i < r && !dep; ++i) {
      if (s & (std::size_t{1} << i)) dep = dependent[s & ~(std::size_t{1} << i)];
    }
    dependent[s] = dep;
    if (!dep) best = std::max(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

/// All x in GF(2)^n with M x = b, by enumeration (n small).
inline std::vector<std::vector<int>> all_solutions(const Dense& m, const std::vector<int>& b, std::size_t n) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < m.size() && ok; ++i) {
      int acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc ^= m[i][j] & static_cast<int>((x >> j) & 1U);
      ok = acc == b[i];
    }
    if (ok) {
      std::vector<int> v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<int>((x >> j) & 1U);
      out.push_back(v);
    }
  }
  return out;
}

/// Column-by-column elimination on an int matrix, processing columns right to left.
inline std::size_t rank_dense(Dense m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t jj = cols; jj-- > 0 && r < rows;) {
    std::size_t piv = rows;
    for (std::size_t i = rows; i-- > r;) {
      if (m[i][jj]) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && m[i][jj]) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
      }
    }
    ++r;
  }
  return r;
}

/// Relative Betti numbers of (X, A) with simplices enumerated in reverse order and
/// boundary matrices assembled from scratch.
inline std::map<int, std::size_t> betti_reversed(const topsym::SimplicialComplex& x, const topsym::SimplicialComplex& a) {
  const int d = x.dim();
  std::vector<std::vector<topsym::Simplex>> cells(static_cast<std::size_t>(std::max(d + 1, 0)));
  for (int k = 0; k <= d; ++k) {
    auto level = x.simplices(k);
    std::reverse(level.begin(), level.end());
    for (auto& s : level) {
      if (!a.contains(s)) cells[static_cast<std::size_t>(k)].push_back(s);
    }
  }
  auto rank_of_boundary = [&](int k) -> std::size_t {
    if (k <= 0 || k > d) return 0;
    const auto& hi = cells[static_cast<std::size_t>(k)];
    const auto& lo = cells[static_cast<std::size_t>(k - 1)];
    Dense m(lo.size(), std::vector<int>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j) {
      for (std::size_t drop = 0; drop < hi[j].size(); ++drop) {
        topsym::Simplex f;
        for (std::size_t t = 0; t < hi[j].size(); ++t) {
          if (t != drop) f.push_back(hi[j][t]);
        }
        auto it = std::find(lo.begin(), lo.end(), f);
        if (it != lo.end()) m[static_cast<std::size_t>(it - lo.begin())][j] ^= 1;
      }
    }
    return rank_dense(m);
  };
  std::map<int, std::size_t> out;
  for (int k = 0; k <= d; ++k) {
    const std::size_t n = cells[static_cast<std::size_t>(k)].size();
    const std::size_t b = n - rank_of_boundary(k) - rank_of_boundary(k + 1);
    if (b != 0) out[k] = b;
  }
  return out;
}

inline topsym::Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  std::vector<topsym::BitVector> out;
  for (std::size_t i = 0; i < rows; ++i) {
    topsym::BitVector r(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      if (bit(rng)) r.set(j);
    }
    out.push_back(std::move(r));
  }
  return topsym::Gf2Matrix::from_rows(cols, std::move(out));
}

/// Face closure of a random subset of the simplices of x.
inline topsym::SimplicialComplex random_subcomplex(std::mt19937_64& rng, const topsym::SimplicialComplex& x,
                                                   double keep = 0.3) {
  std::bernoulli_distribution pick(keep);
  std::vector<topsym::Simplex> chosen;
  for (const auto& s : x.all()) {
    if (pick(rng)) chosen.push_back(s);
  }
  return topsym::SimplicialComplex::from_maximal(chosen);
}

}  // namespace oracle
