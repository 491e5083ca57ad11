#include "graphframes/graph_frame.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "graphframes/errors.hpp"
#include "graphframes/rng.hpp"
#include "support/test_util.hpp"

namespace graphframes {
namespace {

using testing::c4_reference_frame;
using testing::eigenbasis_variant;
using testing::random_connected_graph;
using testing::star4_reference_frame;

TEST(LgFrame, TwoVertexGraphGivesSignedUnitVectors) {
  // L(K_2) has eigenpair (2, (1,-1)/sqrt(2)), so the frame is {+1, -1}.
  const LgFrameResult lg = lg_frame(complete(2));
  EXPECT_EQ(lg.rank, 1u);
  ASSERT_EQ(lg.frame.size(), 2u);
  EXPECT_NEAR(lg.frame[0][0], 1.0, 1e-12);
  EXPECT_NEAR(lg.frame[1][0], -1.0, 1e-12);
  EXPECT_NEAR(lg.laplacian_spectrum[0], 2.0, 1e-12);
  EXPECT_NEAR(lg.laplacian_spectrum[1], 0.0, 1e-12);
}

TEST(LgFrame, CycleFrameHasDiagonalOperatorAndLaplacianGramian) {
  const Graph g = cycle(4);
  const LgFrameResult lg = lg_frame(g);
  EXPECT_EQ(lg.rank, 3u);
  const std::vector<double> expected_spectrum = {4.0, 2.0, 2.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(lg.laplacian_spectrum[i], expected_spectrum[i], 1e-12);
  }

  const SymmetricMatrix s = frame_operator(lg.frame);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(s(i, j), i == j ? lg.laplacian_spectrum[i] : 0.0, 1e-12);
    }
  }
  EXPECT_LE(max_abs_diff(gramian(lg.frame).dense(), laplacian_matrix(g).dense()),
            1e-12);
}

TEST(LgFrame, EdgelessGraphIsRejected) {
  EXPECT_THROW(lg_frame(Graph::from_edge_list(3, {})), InputError);
  EXPECT_THROW(lg_frame(path(1)), InputError);
}

TEST(LgFrame, RankCountsNonzeroEigenvaluesAcrossComponents) {
  const LgFrameResult lg = lg_frame(disjoint_union(complete(3), path(2)));
  EXPECT_EQ(lg.rank, 3u);  // n=5 minus p=2
  EXPECT_EQ(lg.frame.dim(), 3u);
  EXPECT_EQ(lg.frame.size(), 5u);
}

TEST(GFrameCheck, AcceptsReferenceFramesAndRejectsWrongGraph) {
  const GFrameCheck cycle_check = is_g_frame(c4_reference_frame(), cycle(4));
  EXPECT_TRUE(cycle_check.ok);
  EXPECT_EQ(cycle_check.residual, 0.0);

  const GFrameCheck star_check = is_g_frame(star4_reference_frame(), star(4));
  EXPECT_TRUE(star_check.ok);
  EXPECT_EQ(star_check.residual, 0.0);

  // Against the wrong graph the Gramian misses by a full matrix unit.
  const GFrameCheck wrong = is_g_frame(c4_reference_frame(), path(4));
  EXPECT_FALSE(wrong.ok);
  EXPECT_GE(wrong.residual, 1.0);
}

TEST(GFrameCheck, DimensionMustBeVertexCountMinusComponents) {
  // A full-rank frame in R^2 cannot be a graph frame for a connected graph
  // on 4 vertices even if numbers happen to line up elsewhere.
  const Frame f(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  EXPECT_FALSE(is_g_frame(f, cycle(4)).ok);
}

TEST(LgFrameCheck, DiagonalOperatorSeparatesTheTwoReferenceFrames) {
  const LgFrameCheck cycle_check = is_lg_frame(c4_reference_frame(), cycle(4));
  EXPECT_TRUE(cycle_check.ok);
  EXPECT_EQ(cycle_check.off_diagonal_residual, 0.0);

  // The star frame has Gramian L but frame operator with off-diagonal 1.
  const LgFrameCheck star_check = is_lg_frame(star4_reference_frame(), star(4));
  EXPECT_FALSE(star_check.ok);
  EXPECT_NEAR(star_check.off_diagonal_residual, 1.0, 1e-15);

  EXPECT_THROW(is_lg_frame(star4_reference_frame(), cycle(4)), InputError);
}

TEST(CanonicalDualLg, MatchesGenericDualAndExactDiagonalScaling) {
  const LgFrameResult lg = lg_frame(cycle(4));
  const Frame fast = canonical_dual_lg(lg);
  const Frame generic = canonical_dual(lg.frame);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_LE(max_abs_diff(fast[i], generic[i]), 1e-9);
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(fast[i][j], lg.frame[i][j] / lg.laplacian_spectrum[j], 1e-12);
    }
  }
  const DualCheck check = verify_dual(lg.frame, fast);
  EXPECT_TRUE(check.valid);
  EXPECT_LE(check.residual, 1e-10);
}

TEST(DualFamily, ShiftedDualsOfConnectedGraphStayValid) {
  const Graph g = star(4);
  const LgFrameResult lg = lg_frame(g);
  const DualSpec spec{{{7.0, -1.0, 2.0}}};
  const Frame shifted = dual_from_shifts(lg.frame, g, spec);
  const DualCheck check = verify_dual(lg.frame, shifted);
  EXPECT_TRUE(check.valid);
  EXPECT_LE(check.residual, 1e-10);

  const DualFamilyCheck family = dual_is_in_family(lg.frame, g, shifted);
  EXPECT_TRUE(family.in_family);
  ASSERT_EQ(family.shifts.shifts.size(), 1u);
  EXPECT_LE(max_abs_diff(family.shifts.shifts[0], spec.shifts[0]), 1e-8);
  EXPECT_LE(family.constancy_residual, 1e-9);
}

TEST(DualFamily, DisconnectedGraphTakesOneShiftPerComponent) {
  const Graph g = disjoint_union(complete(3), complete(3));
  const LgFrameResult lg = lg_frame(g);
  ASSERT_EQ(lg.rank, 4u);
  const DualSpec spec{{{1.0, -2.0, 0.5, 3.0}, {-4.0, 0.0, 1.0, 2.0}}};
  const Frame shifted = dual_from_shifts(lg.frame, g, spec);
  EXPECT_TRUE(verify_dual(lg.frame, shifted).valid);

  const DualFamilyCheck family = dual_is_in_family(lg.frame, g, shifted);
  EXPECT_TRUE(family.in_family);
  ASSERT_EQ(family.shifts.shifts.size(), 2u);
  EXPECT_LE(max_abs_diff(family.shifts.shifts[0], spec.shifts[0]), 1e-8);
  EXPECT_LE(max_abs_diff(family.shifts.shifts[1], spec.shifts[1]), 1e-8);
}

TEST(DualFamily, ShiftAppliedToPartOfAComponentIsRejected) {
  const Graph g = star(4);
  const LgFrameResult lg = lg_frame(g);
  Frame canonical = canonical_dual_lg(lg);
  std::vector<std::vector<double>> vectors = canonical.vectors();
  vectors[1][0] += 0.5;  // moves one vertex only, so not constant per component
  const DualFamilyCheck family =
      dual_is_in_family(lg.frame, g, Frame(3, vectors));
  EXPECT_FALSE(family.in_family);
}

TEST(DualFamily, CanonicalDualHasZeroShifts) {
  const Graph g = cycle(5);
  const LgFrameResult lg = lg_frame(g);
  const DualFamilyCheck family =
      dual_is_in_family(lg.frame, g, canonical_dual_lg(lg));
  EXPECT_TRUE(family.in_family);
  ASSERT_EQ(family.shifts.shifts.size(), 1u);
  EXPECT_LE(max_abs(family.shifts.shifts[0]), 1e-10);
}

TEST(DualFamily, ShiftSpecShapeIsValidated) {
  const Graph g = star(4);
  const LgFrameResult lg = lg_frame(g);
  EXPECT_THROW(dual_from_shifts(lg.frame, g, DualSpec{{}}), InputError);
  EXPECT_THROW(dual_from_shifts(lg.frame, g, DualSpec{{{1.0, 2.0}}}), InputError);
  EXPECT_THROW(
      dual_from_shifts(lg.frame, g, DualSpec{{{1, 0, 0}, {0, 1, 0}}}),
      InputError);
}

TEST(Equivalence, FrameIsEquivalentToItselfViaIdentity) {
  const Graph g = cycle(4);
  const LgFrameResult lg = lg_frame(g);
  const EquivalenceMap map = unitary_equivalence_map(lg.frame, lg.frame, g);
  EXPECT_LE(map.orthogonality_residual, 1e-10);
  EXPECT_LE(map.map_residual, 1e-10);
  EXPECT_LE(max_abs_diff(map.map, Matrix::identity(3)), 1e-10);
}

TEST(Equivalence, ReferenceAndComputedCycleFramesAreUnitarilyEquivalent) {
  const Graph g = cycle(4);
  const LgFrameResult lg = lg_frame(g);
  const EquivalenceMap map =
      unitary_equivalence_map(c4_reference_frame(), lg.frame, g);
  EXPECT_LE(map.orthogonality_residual, 1e-10);
  EXPECT_LE(map.map_residual, 1e-10);
  for (std::size_t i = 0; i < 4; ++i) {
    const std::vector<double> mapped = matvec(map.map, lg.frame[i]);
    EXPECT_LE(max_abs_diff(mapped, c4_reference_frame()[i]), 1e-10);
  }
}

TEST(Equivalence, EigenbasisVariantsMapBackToTheOriginal) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = random_connected_graph(7, 0.45, seed);
    const LgFrameResult lg = lg_frame(g);
    const Frame variant = eigenbasis_variant(lg, seed * 101);
    ASSERT_TRUE(is_g_frame(variant, g).ok) << "seed=" << seed;
    EXPECT_TRUE(is_lg_frame(variant, g).ok) << "seed=" << seed;

    const EquivalenceMap map = unitary_equivalence_map(lg.frame, variant, g);
    EXPECT_LE(map.orthogonality_residual, 1e-8) << "seed=" << seed;
    EXPECT_LE(map.map_residual, 1e-8) << "seed=" << seed;
  }
}

TEST(Equivalence, FramesOfDifferentGraphsAreRejected) {
  const LgFrameResult a = lg_frame(cycle(4));
  const LgFrameResult b = lg_frame(star(4));
  EXPECT_THROW(unitary_equivalence_map(a.frame, b.frame, cycle(4)), InputError);
  EXPECT_THROW(unitary_equivalence_map(b.frame, a.frame, cycle(4)), InputError);
}

TEST(Tightness, CompleteGraphFrameIsTightWithAlphaN) {
  const TightnessReport report = tightness_report(complete(4));
  EXPECT_TRUE(report.tight);
  ASSERT_TRUE(report.alpha.has_value());
  EXPECT_NEAR(*report.alpha, 4.0, 1e-9);
  EXPECT_TRUE(report.graph_regular);
  EXPECT_EQ(report.regular_degree, 3);
  ASSERT_TRUE(report.predicted_alpha.has_value());
  EXPECT_EQ(*report.predicted_alpha, 4.0);
  EXPECT_TRUE(report.complete);
  EXPECT_FALSE(report.null_vertex);
  EXPECT_TRUE(report.uniform);
  EXPECT_NEAR(*report.uniform_norm, std::sqrt(3.0), 1e-9);
  ASSERT_EQ(report.adjacency_distinct.size(), 2u);
  EXPECT_NEAR(report.adjacency_distinct[0].value, 3.0, 1e-9);
  EXPECT_EQ(report.adjacency_distinct[0].multiplicity, 1u);
  EXPECT_NEAR(report.adjacency_distinct[1].value, -1.0, 1e-9);
  EXPECT_EQ(report.adjacency_distinct[1].multiplicity, 3u);
}

TEST(Tightness, PathFrameIsNotTight) {
  const TightnessReport report = tightness_report(path(3));
  EXPECT_FALSE(report.tight);
  EXPECT_FALSE(report.alpha.has_value());
  EXPECT_NEAR(report.bounds.lower, 1.0, 1e-9);
  EXPECT_NEAR(report.bounds.upper, 3.0, 1e-9);
  EXPECT_FALSE(report.graph_regular);
  EXPECT_FALSE(report.complete);
}

TEST(Tightness, RegularButIncompleteGraphIsNotTight) {
  const TightnessReport report = tightness_report(cycle(4));
  EXPECT_FALSE(report.tight);
  EXPECT_NEAR(report.bounds.lower, 2.0, 1e-9);
  EXPECT_NEAR(report.bounds.upper, 4.0, 1e-9);
  EXPECT_TRUE(report.graph_regular);
  EXPECT_EQ(*report.predicted_alpha, 3.0);  // r + 1 prediction, unmet
  EXPECT_TRUE(report.uniform);
  EXPECT_NEAR(*report.uniform_norm, std::sqrt(2.0), 1e-9);
  // Three distinct adjacency eigenvalues (2, 0, -2) rule tightness out.
  EXPECT_EQ(report.adjacency_distinct.size(), 3u);
}

TEST(Tightness, DisjointCompleteGraphsAreTightWithoutBeingComplete) {
  const Graph g = disjoint_union(complete(3), complete(3));
  const TightnessReport report = tightness_report(g);
  EXPECT_TRUE(report.tight);
  EXPECT_NEAR(*report.alpha, 3.0, 1e-9);
  EXPECT_FALSE(report.complete);
  ASSERT_EQ(report.components.size(), 2u);
  for (const ComponentRegularity& comp : report.components) {
    EXPECT_TRUE(comp.regular);
    EXPECT_EQ(comp.degree, 2);
  }
}

TEST(Tightness, NullVertexAllowsTightnessWithoutCompleteness) {
  const Graph g = disjoint_union(complete(3), path(1));
  const TightnessReport report = tightness_report(g);
  EXPECT_TRUE(report.tight);
  EXPECT_NEAR(*report.alpha, 3.0, 1e-9);
  EXPECT_TRUE(report.null_vertex);
  EXPECT_FALSE(report.complete);
  EXPECT_FALSE(report.uniform);  // the isolated vertex carries a zero vector
}

TEST(Tightness, PrecomputedOverloadAgreesWithPlainOne) {
  const Graph g = cycle(5);
  const LgFrameResult lg = lg_frame(g);
  const TightnessReport a = tightness_report(g);
  const TightnessReport b = tightness_report(g, lg);
  EXPECT_EQ(a.tight, b.tight);
  EXPECT_EQ(a.bounds.lower, b.bounds.lower);
  EXPECT_EQ(a.bounds.upper, b.bounds.upper);
  EXPECT_EQ(a.laplacian_spectrum, b.laplacian_spectrum);
}

TEST(LaplacianBounds, StarAchievesTheDegreeBoundExactly) {
  const LaplacianBoundCheck check = laplacian_bound_check(star(4));
  EXPECT_TRUE(check.largest_holds);
  EXPECT_NEAR(check.largest_eigenvalue, 4.0, 1e-9);
  EXPECT_EQ(check.degree_bound, 4.0);  // max degree 3, plus one
  EXPECT_TRUE(check.connected);
  ASSERT_TRUE(check.second_smallest.has_value());
  EXPECT_NEAR(*check.second_smallest, 1.0, 1e-9);
  EXPECT_NEAR(*check.connectivity_bound, 4.0 / 3.0, 1e-12);
  EXPECT_TRUE(*check.second_smallest_holds);
}

TEST(LaplacianBounds, TwoVertexGraphMeetsBothBoundsWithEquality) {
  const LaplacianBoundCheck check = laplacian_bound_check(complete(2));
  EXPECT_TRUE(check.largest_holds);
  EXPECT_NEAR(check.largest_eigenvalue, 2.0, 1e-12);
  EXPECT_EQ(check.degree_bound, 2.0);
  EXPECT_NEAR(*check.second_smallest, 2.0, 1e-12);
  EXPECT_NEAR(*check.connectivity_bound, 2.0, 1e-12);
  EXPECT_TRUE(*check.second_smallest_holds);
}

TEST(LaplacianBounds, DisconnectedGraphSkipsTheConnectivityBound) {
  const LaplacianBoundCheck check =
      laplacian_bound_check(disjoint_union(complete(3), complete(3)));
  EXPECT_TRUE(check.largest_holds);
  EXPECT_FALSE(check.connected);
  EXPECT_FALSE(check.second_smallest.has_value());
  EXPECT_FALSE(check.connectivity_bound.has_value());
  EXPECT_FALSE(check.second_smallest_holds.has_value());
}

TEST(LaplacianBounds, EdgelessGraphIsRejected) {
  EXPECT_THROW(laplacian_bound_check(Graph::from_edge_list(4, {})), InputError);
}

TEST(LaplacianBounds, HoldOnRandomConnectedGraphs) {
  for (std::uint64_t seed = 10; seed < 20; ++seed) {
    const Graph g = random_connected_graph(9, 0.4, seed);
    const LaplacianBoundCheck check = laplacian_bound_check(g);
    EXPECT_TRUE(check.largest_holds) << "seed=" << seed;
    ASSERT_TRUE(check.second_smallest_holds.has_value()) << "seed=" << seed;
    EXPECT_TRUE(*check.second_smallest_holds) << "seed=" << seed;
  }
}

}  // namespace
}  // namespace graphframes
