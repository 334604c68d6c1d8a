#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "topsym/exactness.hpp"
#include "topsym/spaces.hpp"

using namespace topsym;

namespace {

SimplicialComplex hollow_triangle() { return SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}}); }
SimplicialComplex disk() { return cone(hollow_triangle()); }
SimplicialComplex two_points() { return SimplicialComplex::from_maximal({{0}, {1}}); }

}  // namespace

TEST(InducedMap, IdentityInclusionGivesIdentity) {
  for (const auto& name : {"torus", "disk_half_split", "wedge_2_4", "projective_plane"}) {
    const auto split = as_split(builtin_example(name));
    const PairHomology h(HomologyPair::relative(split.positive_pair()));
    const auto m = induced_map(h, h);
    for (int k = h.min_degree(); k <= h.max_degree(); ++k) EXPECT_EQ(m.at(k), Gf2Matrix::identity(h.dim(k))) << name;
  }
}

TEST(InducedMap, CircleIntoDiskKillsTheLoop) {
  const PairHomology circle(HomologyPair::absolute(hollow_triangle()));
  const PairHomology d(HomologyPair::absolute(disk()));
  const auto m = induced_map(circle, d);
  ASSERT_EQ(m.at(1).cols(), 1u);
  EXPECT_EQ(m.at(1).rows(), 0u);
  // The loop bounds in the disk: its image is the boundary of the recorded 2-chain.
  const auto& w = m.witnesses.at(1).at(0);
  const auto& image = m.image_chains.at(1).at(0);
  EXPECT_EQ(image.count(), 3u);
  EXPECT_EQ(d.boundary(2).apply(w.bounding_chain), image);
  EXPECT_TRUE(solve_preimage(d.boundary(2), image).has_value());
  EXPECT_EQ(rank(m.at(0)), 1u);
}

TEST(InducedMap, PointIntoTwoPoints) {
  const auto m = induced_map(HomologyPair::absolute(point()), HomologyPair::absolute(two_points()));
  EXPECT_EQ(m.at(0).rows(), 2u);
  EXPECT_EQ(m.at(0).cols(), 1u);
  EXPECT_EQ(rank(m.at(0)), 1u);
}

TEST(InducedMap, RejectsNonInclusion) {
  EXPECT_THROW(induced_map(HomologyPair::absolute(disk()), HomologyPair::absolute(hollow_triangle())), InputError);
  EXPECT_THROW(induced_map(HomologyPair::absolute(point()), HomologyPair::reduced(point())), InputError);
}

TEST(ConnectingMap, DiskOverCircleIsIsomorphism) {
  const auto m = connecting_map(ComplexPair(disk(), hollow_triangle()), 1);
  EXPECT_EQ(m.degree_shift, -1);
  ASSERT_EQ(m.at(2).rows(), 1u);
  ASSERT_EQ(m.at(2).cols(), 1u);
  EXPECT_EQ(rank(m.at(2)), 1u);
}

TEST(ConnectingMap, EmptySubGivesZeroInNonnegativeDegrees) {
  for (const auto& name : {"torus", "ball_2", "circle"}) {
    const auto x = as_split(builtin_example(name)).domain();
    for (int k = 0; k <= x.dim(); ++k) {
      EXPECT_EQ(connecting_map(ComplexPair::absolute(x), k).rank_at(k + 1), 0u) << name << " " << k;
    }
  }
}

TEST(ConnectingMap, ConeOverTwoPoints) {
  const auto p = two_points();
  const auto m = connecting_map(ComplexPair(cone(p), p), 0);
  EXPECT_EQ(rank(m.at(1)), 1u);
  // The relative 1-class is the path through the apex; its boundary is the point difference.
  EXPECT_EQ(m.image_chains.at(1).at(0).count(), 2u);
}

TEST(LongExactSequence, ConeOverCatalogComplexes) {
  for (const auto& name : {"point", "circle", "sphere_0", "sphere_2", "torus", "wedge_2_4", "projective_plane"}) {
    const auto p = as_split(builtin_example(name)).domain();
    const ComplexPair pair(cone(p), p);
    const auto report = les_exactness_check(pair);
    EXPECT_TRUE(report.pass) << name;
    const auto rel = betti(pair, Flavor::relative);
    const auto red = betti(p, Flavor::reduced);
    for (int k = -1; k <= p.dim(); ++k) EXPECT_EQ(rel.at(k + 1), red.at(k)) << name << " k=" << k;
  }
  // Empty P: the cone is a point and the reduced class of the empty complex sits in degree -1.
  const SimplicialComplex empty;
  EXPECT_TRUE(les_exactness_check(ComplexPair(cone(empty), empty)).pass);
}

TEST(LongExactSequence, DiskOverCircleAndTrivialPairs) {
  EXPECT_TRUE(les_exactness_check(ComplexPair(disk(), hollow_triangle())).pass);
  for (const auto& name : {"torus", "annulus_split", "klein_bottle"}) {
    const auto x = as_split(builtin_example(name)).domain();
    const ComplexPair same(x, x);
    EXPECT_TRUE(les_exactness_check(same).pass);
    EXPECT_TRUE(betti(same, Flavor::relative).vanishes());
  }
}

TEST(LongExactSequence, RankNullityAtEverySlot) {
  std::mt19937_64 rng(17);
  for (const auto& name : {"torus", "klein_bottle", "ball_3", "wedge_2_4", "annulus_split", "sphere_2"}) {
    const auto x = as_split(builtin_example(name)).domain();
    for (int trial = 0; trial < 4; ++trial) {
      const auto a = oracle::random_subcomplex(rng, x, 0.35);
      const auto report = les_exactness_check(ComplexPair(x, a));
      EXPECT_TRUE(report.pass) << name << " trial " << trial;
      for (const auto& slot : report.slots) {
        EXPECT_EQ(slot.rank_in + slot.rank_out, slot.dim) << name << " " << slot.label;
      }
    }
  }
}

TEST(LongExactSequence, DetectsABrokenSequence) {
  // A slot whose incoming map is not contained in the outgoing kernel.
  const auto bad = detail::check_slot("x", 1, Gf2Matrix::identity(1), Gf2Matrix::identity(1));
  EXPECT_FALSE(bad.image_in_kernel);
  EXPECT_FALSE(bad.exact());
}

TEST(MayerVietoris, TwoDisksSharingTwoVertices) {
  const auto va = SimplicialComplex::from_maximal({{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}});
  const auto vb = SimplicialComplex::from_maximal({{0, 5, 7}, {2, 5, 7}, {2, 6, 7}, {0, 6, 7}});
  const auto ua = SimplicialComplex::from_maximal({{0, 1}, {1, 2}});
  const auto ub = SimplicialComplex::from_maximal({{0, 5}, {2, 5}});
  const auto x = complex_union(va, vb);
  const auto r = mayer_vietoris_check(x, va, vb, ua, ub);
  EXPECT_EQ(r.overlap.vanishes(), true);
  EXPECT_TRUE(r.part_a.vanishes());
  EXPECT_TRUE(r.part_b.vanishes());
  EXPECT_TRUE(r.whole.vanishes());
  EXPECT_TRUE(r.pass());
}

TEST(MayerVietoris, DisjointUnion) {
  const auto va = disk();
  const auto vb = disk().relabeled([](Vertex v) { return v + 10; });
  const auto x = complex_union(va, vb);
  const auto r = mayer_vietoris_check(x, va, vb, hollow_triangle(), SimplicialComplex{});
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.whole, r.part_a + r.part_b);
  EXPECT_EQ(r.whole.dims(), (std::map<int, std::size_t>{{0, 1}, {2, 1}}));
}

TEST(MayerVietoris, TruncatedDoubleOfDiskWithEmptyPositiveRegion) {
  const auto td = truncated_double(BoundarySplit::all_negative(disk()));
  const auto r = mayer_vietoris_check(td.m_t, td.v_a, td.v_b, td.u_a, td.u_b);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.whole.at(0), 2u);
  EXPECT_EQ(r.whole.at(0), 2 * betti(disk()).at(0));
}

TEST(MayerVietoris, ReportsOverlapObstruction) {
  // Two arcs forming a circle, overlapping in two points with nothing relative: overlap is H_0 = 2.
  const auto va = SimplicialComplex::from_maximal({{0, 1}, {1, 2}});
  const auto vb = SimplicialComplex::from_maximal({{2, 3}, {0, 3}});
  const auto r = mayer_vietoris_check(complex_union(va, vb), va, vb, {}, {});
  EXPECT_FALSE(r.overlap_acyclic);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.overlap.at(0), 2u);
}

TEST(MayerVietoris, CoverPreconditions) {
  const auto x = disk();
  EXPECT_THROW(mayer_vietoris_check(x, hollow_triangle(), hollow_triangle(), {}, {}), InputError);
  EXPECT_THROW(mayer_vietoris_check(x, x, x, SimplicialComplex::from_maximal({{9}}), {}), InputError);
}

TEST(LefschetzDuality, DiskWithEmptyPositiveRegion) {
  const auto r = lefschetz_duality_check(BoundarySplit::all_negative(disk()));
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.rows.size(), 3u);
  const std::vector<std::size_t> expected = {0, 0, 1};
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(r.rows[k].negative_side, expected[k]);
    EXPECT_EQ(r.rows[k].positive_side, expected[k]);
  }
}

TEST(LefschetzDuality, HalfSplitAndAnnulusVanish) {
  for (const auto& split : {disk_half_split(), annulus_split()}) {
    const auto r = lefschetz_duality_check(split);
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.negative_table.vanishes());
    EXPECT_TRUE(r.positive_table.vanishes());
  }
}

TEST(LefschetzDuality, RejectsPinchedDomain) {
  EXPECT_THROW(lefschetz_duality_check(brieskorn(2)), NotPseudomanifoldError);
}
