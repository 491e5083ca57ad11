#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphframes/tolerance.hpp"

namespace graphframes {

// Outcome of checking every nonempty-edge labeled graph on a fixed vertex
// count against the structural facts that relate tightness, regularity,
// adjacency spectra, completeness, and the Laplacian-generated frame.
struct SurveyReport {
  int vertex_count = 0;
  std::uint64_t graphs = 0;

  std::uint64_t tight = 0;
  std::uint64_t connected_tight = 0;
  std::uint64_t connected_tight_complete = 0;

  // Tight frame on a graph with an irregular component.
  std::uint64_t component_regularity_violations = 0;
  // No null vertex, but tightness and the two-distinct-adjacency-eigenvalue
  // condition disagree.
  std::uint64_t two_eigenvalue_iff_violations = 0;
  // Connected, but tightness and completeness disagree.
  std::uint64_t complete_iff_violations = 0;
  // Tight with no null vertex, but the frame is not uniform with norm
  // sqrt(degree).
  std::uint64_t uniform_norm_violations = 0;
  // A spectral degree bound failed.
  std::uint64_t laplacian_bound_violations = 0;
  // The constructed frame's Gramian or frame-operator diagonality failed.
  std::uint64_t construction_violations = 0;

  // Edge lists of the first few violating graphs, for diagnosis.
  std::vector<std::string> violation_examples;

  std::uint64_t total_violations() const {
    return component_regularity_violations + two_eigenvalue_iff_violations +
           complete_iff_violations + uniform_norm_violations +
           laplacian_bound_violations + construction_violations;
  }
};

// Enumerates all 2^(n(n-1)/2) - 1 nonempty edge subsets on exactly
// vertex_count labeled vertices (graphs with fewer vertices appear as
// subsets leaving some vertices isolated) and checks each one. Allowed
// range is 2..6; anything else throws InputError.
SurveyReport survey(int vertex_count, const TolerancePolicy& tol = {});

}  // namespace graphframes
