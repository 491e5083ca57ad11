#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphframes/eigen.hpp"
#include "graphframes/frame.hpp"
#include "graphframes/graph.hpp"
#include "graphframes/graph_frame.hpp"
#include "graphframes/survey.hpp"
#include "graphframes/tolerance.hpp"

namespace graphframes {

// Everything the frame construction produced for one graph, plus the
// residual of every numerical invariant that was checked along the way.
// Serializes to JSON with a fixed key order; numeric fields round-trip to
// the identical doubles.
struct Report {
  int format = 0;
  std::string tool_name;
  std::string tool_version;
  TolerancePolicy tolerances;

  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::size_t components = 0;
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;
  bool regular = false;
  std::optional<int> regular_degree;
  bool null_vertex = false;
  bool complete = false;

  std::vector<double> laplacian_spectrum;
  std::vector<double> adjacency_spectrum;

  std::size_t rank = 0;
  std::vector<std::vector<double>> frame_vectors;
  FrameBounds bounds;
  bool tight = false;
  std::optional<double> alpha;
  bool parseval = false;
  bool uniform = false;
  std::optional<double> uniform_norm;
  bool unit_norm = false;

  std::vector<EigenCluster> adjacency_distinct;
  std::vector<ComponentRegularity> components_regular;
  std::optional<double> predicted_alpha;

  double gramian_residual = 0.0;
  double frame_operator_off_diagonal = 0.0;
  double eigenbasis_orthogonality = 0.0;
  double laplacian_reconstruction = 0.0;
  double canonical_dual_residual = 0.0;
};

Report build_report(const Graph& g, const LgFrameResult& result,
                    const TolerancePolicy& tol = {});

std::string report_to_json(const Report& report);
Report report_from_json(std::string_view text);

// Graph-level analysis without the frame vectors.
std::string analyze_report_json(const Graph& g, const TightnessReport& facts,
                                const LaplacianBoundCheck& bounds,
                                const TolerancePolicy& tol);

// Per-check outcome of `verify`. dual and family are present only when a
// dual candidate was supplied, lg only when the Gramian check passed.
struct VerifyOutcome {
  GFrameCheck g_frame;
  std::optional<LgFrameCheck> lg_frame_check;
  std::optional<DualCheck> dual;
  std::optional<DualFamilyCheck> family;

  bool passed() const {
    return g_frame.ok && (!dual.has_value() || (dual->valid && family->in_family));
  }
};
std::string verify_report_json(const VerifyOutcome& outcome, const TolerancePolicy& tol);

std::string survey_report_json(const SurveyReport& report, const TolerancePolicy& tol);

}  // namespace graphframes
