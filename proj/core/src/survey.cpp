#include "graphframes/survey.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "graphframes/errors.hpp"
#include "graphframes/frame.hpp"
#include "graphframes/graph.hpp"
#include "graphframes/graph_frame.hpp"

namespace graphframes {

namespace {

// Agreement thresholds for the surveyed facts. These are fixed acceptance
// levels for integer-structured spectra, deliberately independent of the
// (configurable) TolerancePolicy so a loosened policy cannot mask a defect.
constexpr double kConstructionResidualLimit = 1e-9;
constexpr double kNormResidualLimit = 1e-8;
constexpr std::size_t kMaxExamples = 10;

std::string describe(int n, const std::vector<std::pair<int, int>>& edges,
                     const char* predicate) {
  std::string text = std::string(predicate) + ": n=" + std::to_string(n) + " edges=";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) text += ",";
    text += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return text;
}

}  // namespace

SurveyReport survey(int vertex_count, const TolerancePolicy& tol) {
  if (vertex_count < 2 || vertex_count > 6) {
    throw InputError("survey supports 2..6 vertices, got " + std::to_string(vertex_count));
  }

  std::vector<std::pair<int, int>> all_pairs;
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) all_pairs.emplace_back(u, v);
  }
  const std::uint64_t subsets = std::uint64_t{1} << all_pairs.size();

  SurveyReport report;
  report.vertex_count = vertex_count;

  auto record = [&report, vertex_count](std::uint64_t& counter,
                                        const std::vector<std::pair<int, int>>& edges,
                                        const char* predicate) {
    ++counter;
    if (report.violation_examples.size() < kMaxExamples) {
      report.violation_examples.push_back(describe(vertex_count, edges, predicate));
    }
  };

  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t bit = 0; bit < all_pairs.size(); ++bit) {
      if (mask & (std::uint64_t{1} << bit)) edges.push_back(all_pairs[bit]);
    }
    const Graph g = Graph::from_edge_list(vertex_count, edges);
    ++report.graphs;

    LgFrameResult built = lg_frame(g, tol);
    const TightnessReport facts = tightness_report(g, built, tol);

    // Construction soundness: Gramian reproduces the Laplacian and the
    // frame operator is diagonal.
    const double gramian_residual =
        max_abs_diff(gramian(built.frame).dense(), laplacian_matrix(g).dense());
    double off_diagonal = 0.0;
    {
      const SymmetricMatrix s = frame_operator(built.frame);
      for (std::size_t i = 0; i < s.order(); ++i) {
        for (std::size_t j = i + 1; j < s.order(); ++j) {
          off_diagonal = std::max(off_diagonal, std::abs(s(i, j)));
        }
      }
    }
    if (gramian_residual > kConstructionResidualLimit ||
        off_diagonal > kConstructionResidualLimit) {
      record(report.construction_violations, edges, "construction");
    }

    const bool connected = facts.components.size() == 1;
    if (facts.tight) {
      ++report.tight;
      if (connected) {
        ++report.connected_tight;
        if (facts.complete) ++report.connected_tight_complete;
      }
    }

    // Tightness forces every component to be regular.
    if (facts.tight) {
      for (const ComponentRegularity& c : facts.components) {
        if (!c.regular) {
          record(report.component_regularity_violations, edges, "component-regularity");
          break;
        }
      }
    }

    // Without null vertices, tightness is equivalent to an adjacency
    // spectrum with exactly two distinct values.
    if (!facts.null_vertex) {
      const bool two_distinct = facts.adjacency_distinct.size() == 2;
      if (facts.tight != two_distinct) {
        record(report.two_eigenvalue_iff_violations, edges, "two-eigenvalue-iff");
      }
    }

    // On connected graphs, tightness is equivalent to completeness.
    if (connected && facts.tight != facts.complete) {
      record(report.complete_iff_violations, edges, "complete-iff");
    }

    // A tight frame without null vertices lives on a regular graph and has
    // all vector norms equal to sqrt(degree).
    if (facts.tight && !facts.null_vertex) {
      bool ok = facts.graph_regular;
      if (ok) {
        const double expected = std::sqrt(static_cast<double>(*facts.regular_degree));
        for (std::size_t i = 0; i < built.frame.size(); ++i) {
          if (std::abs(norm(built.frame[i]) - expected) > kNormResidualLimit) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) record(report.uniform_norm_violations, edges, "uniform-norm");
    }

    const LaplacianBoundCheck bounds = laplacian_bound_check(g, tol);
    const bool second_ok =
        !bounds.second_smallest_holds.has_value() || *bounds.second_smallest_holds;
    if (!bounds.largest_holds || !second_ok) {
      record(report.laplacian_bound_violations, edges, "laplacian-bound");
    }
  }
  return report;
}

}  // namespace graphframes
