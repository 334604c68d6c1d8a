#include <map>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "topsym/spaces.hpp"
#include "topsym/symmetry.hpp"

using namespace topsym;

namespace {

BettiTable table(std::map<int, std::size_t> d) { return BettiTable::from_dims(Flavor::relative, std::move(d)); }

RolledTable rolled(std::vector<std::size_t> entries) { return RolledTable{entries.size(), std::move(entries)}; }

// Every m in [lo, hi] with dims_{m-k} = dims_k for all k, by direct scan.
std::vector<int> scan_shifts(const BettiTable& t, int lo, int hi) {
  std::vector<int> out;
  for (int m = lo; m <= hi; ++m) {
    bool ok = true;
    for (int k = -2 * (std::abs(lo) + std::abs(hi)) - 2; k <= 2 * (std::abs(lo) + std::abs(hi)) + 2 && ok; ++k) {
      ok = t.at(m - k) == t.at(k);
    }
    if (ok) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST(CheckSymmetry, Examples) {
  const auto reeb = check_symmetry(table({{0, 1}}));
  EXPECT_TRUE(reeb.symmetric);
  EXPECT_EQ(reeb.shifts, std::vector<int>{0});

  const auto brieskorn = check_symmetry(table({{0, 1}, {2, 4}}));
  EXPECT_FALSE(brieskorn.symmetric);
  EXPECT_TRUE(brieskorn.shifts.empty());
  ASSERT_TRUE(brieskorn.witness.has_value());
  EXPECT_EQ(*brieskorn.witness, (AsymmetryWitness{2, 0, 1, 4}));

  const auto pal = check_symmetry(table({{0, 1}, {1, 3}, {2, 3}, {3, 1}}));
  EXPECT_TRUE(pal.symmetric);
  EXPECT_EQ(pal.shifts, std::vector<int>{3});

  const auto empty = check_symmetry(table({}));
  EXPECT_TRUE(empty.symmetric);
  EXPECT_EQ(empty.shifts, std::vector<int>{0});
}

TEST(CheckSymmetry, ShiftIsUniqueAndEqualsHullSum) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> dim(0, 2);
  std::uniform_int_distribution<int> len(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::map<int, std::size_t> d;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) d[k] = static_cast<std::size_t>(dim(rng));
    // Randomly force palindromes so both outcomes are exercised.
    if (trial % 3 == 0) {
      for (int k = 0; k < n; ++k) d[n - 1 - k] = d[k];
    }
    const auto t = table(d);
    if (t.vanishes()) continue;
    const int max = t.max_degree();
    const auto scanned = scan_shifts(t, -2 * max, 2 * max);
    const auto v = check_symmetry(t);
    EXPECT_LE(scanned.size(), 1u);
    EXPECT_EQ(v.shifts, scanned);
    if (v.symmetric) {
      EXPECT_EQ(v.shifts.front(), t.min_degree() + t.max_degree());
    }
    if (!v.symmetric) {
      ASSERT_TRUE(v.witness.has_value());
      EXPECT_EQ(t.at(v.witness->degree), v.witness->dim);
      EXPECT_EQ(t.at(v.witness->shift - v.witness->degree), v.witness->reflected_dim);
      EXPECT_NE(v.witness->dim, v.witness->reflected_dim);
    }
  }
}

TEST(CheckSymmetry, StableUnderDegreeOffsets) {
  for (const auto& d : {std::map<int, std::size_t>{{0, 1}, {2, 4}}, {{0, 1}, {1, 3}, {2, 3}, {3, 1}}, {{1, 2}}}) {
    const auto base = check_symmetry(table(d));
    for (int offset : {-3, -1, 2, 5}) {
      const auto moved = check_symmetry(table(d).shifted(offset));
      EXPECT_EQ(moved.symmetric, base.symmetric);
      if (base.symmetric) {
        EXPECT_EQ(moved.shifts.front(), base.shifts.front() + 2 * offset);
      }
    }
  }
}

TEST(SphereAction, Examples) {
  const auto empty = check_sphere_action(SimplicialComplex{});
  EXPECT_TRUE(empty.symmetric);
  EXPECT_EQ(empty.shifts, std::vector<int>{-2});

  const auto two = check_sphere_action(SimplicialComplex::from_maximal({{0}, {1}}));
  EXPECT_TRUE(two.symmetric);
  EXPECT_EQ(two.shifts, std::vector<int>{0});

  const auto mixed = check_sphere_action(SimplicialComplex::from_maximal({{9}, {0, 1}, {1, 2}, {0, 2}}));
  EXPECT_TRUE(mixed.symmetric);
  EXPECT_EQ(mixed.shifts, std::vector<int>{1});
}

TEST(SphereAction, AgreesWithConePairUpToShiftTwo) {
  std::vector<SimplicialComplex> corpus = {SimplicialComplex{}, SimplicialComplex::from_maximal({{0}, {1}})};
  for (const auto& name : catalog_names()) corpus.push_back(as_split(builtin_example(name)).domain());
  for (const auto& p : corpus) {
    const auto reduced = check_sphere_action(p);
    const auto pair = check_symmetry(betti(ComplexPair(cone(p), p), Flavor::relative));
    EXPECT_EQ(reduced.symmetric, pair.symmetric);
    if (reduced.symmetric && !betti(p, Flavor::reduced).vanishes()) {
      EXPECT_EQ(pair.shifts.front(), reduced.shifts.front() + 2);
    }
  }
}

TEST(RollUp, Examples) {
  const auto t = table({{0, 1}, {2, 2}, {4, 1}});
  EXPECT_EQ(roll_up(t, 1).entries, (std::vector<std::size_t>{4, 0}));
  EXPECT_EQ(roll_up(t, 2).entries, (std::vector<std::size_t>{2, 0, 2, 0}));
  EXPECT_EQ(roll_up(table({}), 3).entries, std::vector<std::size_t>(6, 0));
  EXPECT_EQ(roll_up(table({{-1, 3}}), 2).entries, (std::vector<std::size_t>{0, 0, 0, 3}));
  EXPECT_THROW(roll_up(t, 0), InputError);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(roll_up(t, n).total(), t.total());
}

TEST(RolledSymmetry, Examples) {
  for (const auto& entries : {std::vector<std::size_t>{1, 0}, {3, 7}, {0, 0}}) {
    const auto v = check_symmetry_rolled(rolled(entries));
    EXPECT_TRUE(v.symmetric);
    EXPECT_EQ(v.shifts.front(), 0);
  }
  const auto sym = check_symmetry_rolled(rolled({1, 0, 2, 0}));
  EXPECT_TRUE(sym.symmetric);
  EXPECT_EQ(sym.shifts.front(), 0);

  const auto asym = check_symmetry_rolled(rolled({1, 2, 0, 0}));
  EXPECT_FALSE(asym.symmetric);
  EXPECT_TRUE(asym.witness.has_value());
}

TEST(RolledSymmetry, InheritsIntegerShift) {
  std::vector<BettiTable> symmetric = {table({{0, 1}}), table({{0, 1}, {1, 3}, {2, 3}, {3, 1}}), table({{2, 5}, {7, 5}}),
                                       table({{0, 1}, {2, 2}, {4, 1}}), table({})};
  for (const auto& t : symmetric) {
    const auto v = check_symmetry(t);
    ASSERT_TRUE(v.symmetric);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto r = check_symmetry_rolled(roll_up(t, n));
      EXPECT_TRUE(r.symmetric);
      const int residue = ((v.shifts.front() % static_cast<int>(2 * n)) + static_cast<int>(2 * n)) % static_cast<int>(2 * n);
      EXPECT_NE(std::find(r.shifts.begin(), r.shifts.end(), residue), r.shifts.end()) << t.to_string() << " N=" << n;
    }
  }
}

TEST(AnalyzeAction, CatalogExamples) {
  const auto reeb = analyze_action(reeb_ball(2), "reeb_ball_2");
  EXPECT_TRUE(reeb.verdict_positive.symmetric);
  EXPECT_TRUE(reeb.verdict_negative.symmetric);
  EXPECT_EQ(reeb.verdict_positive.shifts, std::vector<int>{0});
  EXPECT_EQ(reeb.duality, CheckStatus::pass);
  EXPECT_TRUE(reeb.factor2.pass);

  const auto half = analyze_action(disk_half_split());
  EXPECT_TRUE(half.betti_positive.vanishes());
  EXPECT_TRUE(half.betti_negative.vanishes());
  EXPECT_TRUE(half.verdict_positive.symmetric);
  EXPECT_EQ(half.duality, CheckStatus::pass);
  EXPECT_TRUE(half.factor2.pass);

  const auto b = analyze_action(brieskorn(2));
  EXPECT_FALSE(b.verdict_positive.symmetric);
  EXPECT_EQ(b.duality, CheckStatus::skipped);
  EXPECT_FALSE(b.duality_note.empty());
}

TEST(AnalyzeAction, RegionsAgreeOnPseudomanifolds) {
  for (const auto& name : catalog_names()) {
    const auto split = as_split(builtin_example(name));
    const auto r = analyze_action(split, name, AnalysisOptions{2});
    if (check_pseudomanifold(split.domain()).ok) {
      EXPECT_TRUE(r.regions_agree()) << name;
      EXPECT_EQ(r.duality, CheckStatus::pass) << name;
    }
    ASSERT_TRUE(r.rolled.has_value());
    EXPECT_EQ(r.rolled->table.modulus, 4u);
    if (r.verdict_positive.symmetric) {
      EXPECT_TRUE(r.rolled->verdict.symmetric) << name;
    }
  }
}
