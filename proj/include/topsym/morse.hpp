#pragma once

// Relative discrete Morse theory: acyclic matchings on the cells of X outside an exit
// subcomplex A, and the Morse complex whose homology is H(X, A).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "topsym/complex.hpp"
#include "topsym/errors.hpp"
#include "topsym/gf2.hpp"
#include "topsym/homology.hpp"

namespace topsym {

struct MatchedPair {
  Simplex lower;  ///< codimension-one face of `upper`
  Simplex upper;

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

namespace detail {

// Cells of X not in the exit subcomplex, with facet/coface adjacency restricted to them.
class CellGraph {
 public:
  explicit CellGraph(const ComplexPair& pair) {
    for (const auto& s : pair.ambient().all()) {
      if (pair.sub().contains(s)) continue;
      index_.emplace(s, cells_.size());
      cells_.push_back(s);
    }
    facets_.resize(cells_.size());
    cofaces_.resize(cells_.size());
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      for (const auto& f : facets_of(cells_[c])) {
        auto it = index_.find(f);
        if (it == index_.end()) continue;
        facets_[c].push_back(it->second);
        cofaces_[it->second].push_back(c);
      }
    }
  }

  std::size_t size() const noexcept { return cells_.size(); }
  const Simplex& cell(std::size_t i) const { return cells_[i]; }
  int dim(std::size_t i) const { return simplex_dim(cells_[i]); }
  const std::vector<std::size_t>& facets(std::size_t i) const { return facets_[i]; }
  const std::vector<std::size_t>& cofaces(std::size_t i) const { return cofaces_[i]; }

  std::optional<std::size_t> find(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<Simplex> cells_;
  std::map<Simplex, std::size_t> index_;
  std::vector<std::vector<std::size_t>> facets_;
  std::vector<std::vector<std::size_t>> cofaces_;
};

constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

}  // namespace detail

/// A validated acyclic matching on the non-exit cells of a pair.
class AcyclicMatching {
 public:
  /// Validates all matching invariants; throws InvalidMatchingError on violation.
  AcyclicMatching(ComplexPair pair, std::vector<MatchedPair> matched)
      : pair_(std::move(pair)), matched_(std::move(matched)) {
    detail::CellGraph g(pair_);
    partner_.assign(g.size(), detail::kUnmatched);
    for (const auto& m : matched_) {
      if (pair_.sub().contains(m.lower) || pair_.sub().contains(m.upper)) {
        throw InvalidMatchingError("matching uses exit cell " + to_string(m.lower) + " / " + to_string(m.upper));
      }
      auto lo = g.find(m.lower);
      auto hi = g.find(m.upper);
      if (!lo || !hi) throw InvalidMatchingError("matched cell is not in the complex");
      const auto& fs = g.facets(*hi);
      if (std::find(fs.begin(), fs.end(), *lo) == fs.end()) {
        throw InvalidMatchingError(to_string(m.lower) + " is not a facet of " + to_string(m.upper));
      }
      if (partner_[*lo] != detail::kUnmatched || partner_[*hi] != detail::kUnmatched) {
        throw InvalidMatchingError("cell matched twice near " + to_string(m.upper));
      }
      partner_[*lo] = *hi;
      partner_[*hi] = *lo;
    }
    require_acyclic(g);
    critical_.resize(static_cast<std::size_t>(std::max(pair_.ambient().dim() + 1, 0)));
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (partner_[c] == detail::kUnmatched) critical_[static_cast<std::size_t>(g.dim(c))].push_back(g.cell(c));
    }
  }

  const ComplexPair& pair() const noexcept { return pair_; }
  const std::vector<MatchedPair>& matched() const noexcept { return matched_; }

  /// Unmatched non-exit cells of dimension k, lexicographically sorted.
  const std::vector<Simplex>& critical(int k) const {
    static const std::vector<Simplex> none;
    if (k < 0 || static_cast<std::size_t>(k) >= critical_.size()) return none;
    return critical_[static_cast<std::size_t>(k)];
  }

  std::size_t critical_count() const {
    std::size_t n = 0;
    for (const auto& level : critical_) n += level.size();
    return n;
  }

  long long critical_alternating_sum() const {
    long long s = 0;
    for (std::size_t k = 0; k < critical_.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(critical_[k].size());
    return s;
  }

 private:
  // DFS on the modified Hasse digraph: upper -> facet, except matched pairs point lower -> upper.
  void require_acyclic(const detail::CellGraph& g) const {
    enum : std::uint8_t { kNew, kActive, kDone };
    std::vector<std::uint8_t> state(g.size(), kNew);
    auto successors = [&](std::size_t c) {
      std::vector<std::size_t> next;
      if (partner_[c] != detail::kUnmatched && g.dim(partner_[c]) > g.dim(c)) next.push_back(partner_[c]);
      for (std::size_t f : g.facets(c)) {
        if (partner_[c] != f) next.push_back(f);
      }
      return next;
    };
    for (std::size_t root = 0; root < g.size(); ++root) {
      if (state[root] != kNew) continue;
      std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack;
      stack.emplace_back(root, successors(root));
      state[root] = kActive;
      while (!stack.empty()) {
        auto& [c, next] = stack.back();
        if (next.empty()) {
          state[c] = kDone;
          stack.pop_back();
          continue;
        }
        const std::size_t n = next.back();
        next.pop_back();
        if (state[n] == kActive) throw InvalidMatchingError("matching has a closed V-path through " + to_string(g.cell(n)));
        if (state[n] == kNew) {
          state[n] = kActive;
          stack.emplace_back(n, successors(n));
        }
      }
    }
  }

  ComplexPair pair_;
  std::vector<MatchedPair> matched_;
  std::vector<std::size_t> partner_;
  std::vector<std::vector<Simplex>> critical_;
};

/// Greedy coreduction matching.
///
/// Cells are ranked by `seed`: without one, in (dimension, lexicographic) order; with one,
/// by a seeded shuffle. While some remaining cell has exactly one remaining facet, the
/// lowest-ranked such cell is matched with that facet; otherwise the lowest-dimensional,
/// lowest-ranked remaining cell becomes critical.
inline AcyclicMatching build_matching(const ComplexPair& pair, std::optional<std::uint64_t> seed = std::nullopt) {
  detail::CellGraph g(pair);
  const std::size_t n = g.size();
  std::vector<std::size_t> rank_of(n);
  std::iota(rank_of.begin(), rank_of.end(), std::size_t{0});
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(rank_of.begin(), rank_of.end(), rng);
  }

  std::vector<bool> alive(n, true);
  std::vector<std::size_t> live_facets(n);
  std::set<std::pair<std::size_t, std::size_t>> single;           // (rank, cell) with one live facet
  std::set<std::tuple<int, std::size_t, std::size_t>> remaining;  // (dim, rank, cell)
  for (std::size_t c = 0; c < n; ++c) {
    live_facets[c] = g.facets(c).size();
    if (live_facets[c] == 1) single.emplace(rank_of[c], c);
    remaining.emplace(g.dim(c), rank_of[c], c);
  }

  auto remove = [&](std::size_t c) {
    alive[c] = false;
    remaining.erase({g.dim(c), rank_of[c], c});
    single.erase({rank_of[c], c});
    for (std::size_t up : g.cofaces(c)) {
      if (!alive[up]) continue;
      if (live_facets[up] == 1) single.erase({rank_of[up], up});
      --live_facets[up];
      if (live_facets[up] == 1) single.emplace(rank_of[up], up);
    }
  };

  std::vector<MatchedPair> matched;
  while (!remaining.empty()) {
    if (!single.empty()) {
      const std::size_t up = single.begin()->second;
      std::size_t low = detail::kUnmatched;
      for (std::size_t f : g.facets(up)) {
        if (alive[f]) low = f;
      }
      matched.push_back({g.cell(low), g.cell(up)});
      remove(up);
      remove(low);
    } else {
      remove(std::get<2>(*remaining.begin()));
    }
  }
  return AcyclicMatching(pair, std::move(matched));
}

/// Critical cells and the Morse boundary (gradient paths counted mod 2).
struct MorseComplexData {
  std::vector<std::vector<Simplex>> critical;  ///< critical[k]
  std::vector<Gf2Matrix> boundaries;           ///< boundaries[k] : critical[k] -> critical[k-1]

  std::size_t critical_count(int k) const {
    return k < 0 || static_cast<std::size_t>(k) >= critical.size() ? 0 : critical[static_cast<std::size_t>(k)].size();
  }
};

inline MorseComplexData morse_complex(const AcyclicMatching& m) {
  detail::CellGraph g(m.pair());
  const std::size_t n = g.size();
  std::vector<std::size_t> partner(n, detail::kUnmatched);
  for (const auto& mp : m.matched()) {
    const std::size_t lo = *g.find(mp.lower);
    const std::size_t hi = *g.find(mp.upper);
    partner[lo] = hi;
    partner[hi] = lo;
  }

  MorseComplexData out;
  const int top = m.pair().ambient().dim();
  for (int k = 0; k <= top; ++k) out.critical.push_back(m.critical(k));
  std::vector<std::size_t> crit_index(n, detail::kUnmatched);
  for (int k = 0; k <= top; ++k) {
    const auto& level = out.critical[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < level.size(); ++i) crit_index[*g.find(level[i])] = i;
  }

  // flow[c]: mod-2 count of gradient paths from cell c down to each critical cell of its dimension.
  std::vector<std::optional<BitVector>> flow(n);
  std::vector<bool> visiting(n, false);
  auto compute = [&](auto&& self, std::size_t c) -> const BitVector& {
    if (flow[c]) return *flow[c];
    if (visiting[c]) throw InvalidMatchingError("gradient path cycles through " + to_string(g.cell(c)));
    visiting[c] = true;
    const std::size_t width = out.critical_count(g.dim(c));
    BitVector acc(width);
    if (crit_index[c] != detail::kUnmatched) {
      acc.set(crit_index[c]);
    } else if (partner[c] != detail::kUnmatched && g.dim(partner[c]) > g.dim(c)) {
      const std::size_t up = partner[c];
      for (std::size_t f : g.facets(up)) {
        if (f != c) acc ^= self(self, f);
      }
    }
    visiting[c] = false;
    flow[c] = std::move(acc);
    return *flow[c];
  };

  for (int k = 0; k <= top; ++k) {
    const auto& cols = out.critical[static_cast<std::size_t>(k)];
    std::vector<BitVector> columns;
    for (const auto& tau : cols) {
      BitVector col(out.critical_count(k - 1));
      for (std::size_t f : g.facets(*g.find(tau))) col ^= compute(compute, f);
      columns.push_back(std::move(col));
    }
    out.boundaries.push_back(Gf2Matrix::from_columns(out.critical_count(k - 1), columns));
  }
  for (int k = 1; k <= top; ++k) {
    if (!(out.boundaries[static_cast<std::size_t>(k - 1)] * out.boundaries[static_cast<std::size_t>(k)]).is_zero()) {
      throw std::logic_error("Morse boundary squares to a nonzero map in degree " + std::to_string(k));
    }
  }
  return out;
}

inline BettiTable morse_betti(const MorseComplexData& mc) {
  BettiTable t(Flavor::relative);
  const int top = static_cast<int>(mc.critical.size()) - 1;
  for (int k = 0; k <= top; ++k) {
    const std::size_t r_out = rank(mc.boundaries[static_cast<std::size_t>(k)]);
    const std::size_t r_in = k + 1 <= top ? rank(mc.boundaries[static_cast<std::size_t>(k + 1)]) : 0;
    t.set(k, mc.critical_count(k) - r_out - r_in);
  }
  return t;
}

inline BettiTable morse_betti(const AcyclicMatching& m) { return morse_betti(morse_complex(m)); }

}  // namespace topsym
