#include "graphframes/report.hpp"

#include <json.hpp>

#include "graphframes/errors.hpp"
#include "graphframes/version.hpp"

namespace graphframes {

namespace {

using Json = nlohmann::ordered_json;

Json tolerances_json(const TolerancePolicy& tol) {
  return Json{{"orth", tol.orth},
              {"recon", tol.recon},
              {"zero", tol.zero},
              {"tight", tol.tight},
              {"cluster", tol.cluster}};
}

TolerancePolicy tolerances_from(const Json& j) {
  TolerancePolicy tol;
  tol.orth = j.at("orth").get<double>();
  tol.recon = j.at("recon").get<double>();
  tol.zero = j.at("zero").get<double>();
  tol.tight = j.at("tight").get<double>();
  tol.cluster = j.at("cluster").get<double>();
  return tol;
}

Json graph_json(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                std::size_t components, const std::vector<int>& degrees,
                int min_degree, int max_degree, bool regular,
                const std::optional<int>& regular_degree, bool null_vertex,
                bool complete) {
  Json edge_array = Json::array();
  for (const auto& [u, v] : edges) edge_array.push_back(Json::array({u, v}));
  Json j{{"vertex_count", vertex_count},
         {"edge_count", edges.size()},
         {"edges", std::move(edge_array)},
         {"components", components},
         {"degrees", degrees},
         {"min_degree", min_degree},
         {"max_degree", max_degree},
         {"regular", regular},
         {"regular_degree", nullptr},
         {"null_vertex", null_vertex},
         {"complete", complete}};
  if (regular_degree.has_value()) j["regular_degree"] = *regular_degree;
  return j;
}

Json clusters_json(const std::vector<EigenCluster>& clusters) {
  Json array = Json::array();
  for (const EigenCluster& c : clusters) {
    array.push_back(Json{{"value", c.value}, {"multiplicity", c.multiplicity}});
  }
  return array;
}

Json components_regular_json(const std::vector<ComponentRegularity>& components) {
  Json array = Json::array();
  for (const ComponentRegularity& c : components) {
    Json item{{"regular", c.regular}, {"degree", nullptr}};
    if (c.regular) item["degree"] = c.degree;
    array.push_back(std::move(item));
  }
  return array;
}

Json optional_json(const std::optional<double>& value) {
  return value.has_value() ? Json(*value) : Json(nullptr);
}

}  // namespace

Report build_report(const Graph& g, const LgFrameResult& result,
                    const TolerancePolicy& tol) {
  Report report;
  report.format = kReportFormat;
  report.tool_name = kToolName;
  report.tool_version = kToolVersion;
  report.tolerances = tol;

  report.vertex_count = g.vertex_count();
  report.edges = g.edges();
  const ComponentPartition parts = connected_components(g);
  report.components = parts.count;
  const DegreeInfo degrees = degree_info(g);
  report.degrees = degrees.degrees;
  report.min_degree = degrees.min_degree;
  report.max_degree = degrees.max_degree;

  const TightnessReport facts = tightness_report(g, result, tol);
  report.regular = facts.graph_regular;
  report.regular_degree = facts.regular_degree;
  report.null_vertex = facts.null_vertex;
  report.complete = facts.complete;
  report.laplacian_spectrum = facts.laplacian_spectrum;
  report.adjacency_spectrum = facts.adjacency_spectrum;

  report.rank = result.rank;
  report.frame_vectors = result.frame.vectors();
  report.bounds = facts.bounds;
  report.tight = facts.tight;
  report.alpha = facts.alpha;
  report.parseval = is_parseval(result.frame, tol);
  report.uniform = facts.uniform;
  report.uniform_norm = facts.uniform_norm;
  report.unit_norm = is_unit_norm(result.frame, tol);

  report.adjacency_distinct = facts.adjacency_distinct;
  report.components_regular = facts.components;
  report.predicted_alpha = facts.predicted_alpha;

  const SymmetricMatrix l = laplacian_matrix(g);
  report.gramian_residual = max_abs_diff(gramian(result.frame).dense(), l.dense());
  report.frame_operator_off_diagonal =
      is_lg_frame(result.frame, g, tol).off_diagonal_residual;

  const std::size_t n = result.eigenbasis.rows();
  const Matrix mt = transpose(result.eigenbasis);
  report.eigenbasis_orthogonality =
      max_abs_diff(matmul(mt, result.eigenbasis), Matrix::identity(n));
  Matrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      scaled(i, j) = result.eigenbasis(i, j) * result.laplacian_spectrum[j];
    }
  }
  report.laplacian_reconstruction = max_abs_diff(matmul(scaled, mt), l.dense());

  report.canonical_dual_residual =
      verify_dual(result.frame, canonical_dual_lg(result, tol), tol).residual;
  return report;
}

std::string report_to_json(const Report& report) {
  Json j{{"format", report.format},
         {"tool", Json{{"name", report.tool_name}, {"version", report.tool_version}}},
         {"tolerances", tolerances_json(report.tolerances)},
         {"graph", graph_json(report.vertex_count, report.edges, report.components,
                              report.degrees, report.min_degree, report.max_degree,
                              report.regular, report.regular_degree,
                              report.null_vertex, report.complete)},
         {"laplacian_spectrum", report.laplacian_spectrum},
         {"adjacency_spectrum", report.adjacency_spectrum},
         {"frame",
          Json{{"rank", report.rank},
               {"vectors", report.frame_vectors},
               {"bounds", Json{{"lower", report.bounds.lower}, {"upper", report.bounds.upper}}},
               {"tight", report.tight},
               {"alpha", optional_json(report.alpha)},
               {"parseval", report.parseval},
               {"uniform", report.uniform},
               {"uniform_norm", optional_json(report.uniform_norm)},
               {"unit_norm", report.unit_norm}}},
         {"structure",
          Json{{"adjacency_distinct", clusters_json(report.adjacency_distinct)},
               {"components_regular", components_regular_json(report.components_regular)},
               {"predicted_alpha", optional_json(report.predicted_alpha)}}},
         {"residuals",
          Json{{"gramian_vs_laplacian", report.gramian_residual},
               {"frame_operator_off_diagonal", report.frame_operator_off_diagonal},
               {"eigenbasis_orthogonality", report.eigenbasis_orthogonality},
               {"laplacian_reconstruction", report.laplacian_reconstruction},
               {"canonical_dual", report.canonical_dual_residual}}}};
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
    Report report;
    report.format = j.at("format").get<int>();
    report.tool_name = j.at("tool").at("name").get<std::string>();
    report.tool_version = j.at("tool").at("version").get<std::string>();
    report.tolerances = tolerances_from(j.at("tolerances"));

    const Json& graph = j.at("graph");
    report.vertex_count = graph.at("vertex_count").get<int>();
    for (const Json& e : graph.at("edges")) {
      report.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    report.components = graph.at("components").get<std::size_t>();
    report.degrees = graph.at("degrees").get<std::vector<int>>();
    report.min_degree = graph.at("min_degree").get<int>();
    report.max_degree = graph.at("max_degree").get<int>();
    report.regular = graph.at("regular").get<bool>();
    if (!graph.at("regular_degree").is_null()) {
      report.regular_degree = graph.at("regular_degree").get<int>();
    }
    report.null_vertex = graph.at("null_vertex").get<bool>();
    report.complete = graph.at("complete").get<bool>();

    report.laplacian_spectrum = j.at("laplacian_spectrum").get<std::vector<double>>();
    report.adjacency_spectrum = j.at("adjacency_spectrum").get<std::vector<double>>();

    const Json& frame = j.at("frame");
    report.rank = frame.at("rank").get<std::size_t>();
    report.frame_vectors = frame.at("vectors").get<std::vector<std::vector<double>>>();
    report.bounds.lower = frame.at("bounds").at("lower").get<double>();
    report.bounds.upper = frame.at("bounds").at("upper").get<double>();
    report.tight = frame.at("tight").get<bool>();
    if (!frame.at("alpha").is_null()) report.alpha = frame.at("alpha").get<double>();
    report.parseval = frame.at("parseval").get<bool>();
    report.uniform = frame.at("uniform").get<bool>();
    if (!frame.at("uniform_norm").is_null()) {
      report.uniform_norm = frame.at("uniform_norm").get<double>();
    }
    report.unit_norm = frame.at("unit_norm").get<bool>();

    const Json& structure = j.at("structure");
    for (const Json& c : structure.at("adjacency_distinct")) {
      report.adjacency_distinct.push_back(
          {c.at("value").get<double>(), c.at("multiplicity").get<std::size_t>()});
    }
    for (const Json& c : structure.at("components_regular")) {
      ComponentRegularity item;
      item.regular = c.at("regular").get<bool>();
      item.degree = c.at("degree").is_null() ? 0 : c.at("degree").get<int>();
      report.components_regular.push_back(item);
    }
    if (!structure.at("predicted_alpha").is_null()) {
      report.predicted_alpha = structure.at("predicted_alpha").get<double>();
    }

    const Json& residuals = j.at("residuals");
    report.gramian_residual = residuals.at("gramian_vs_laplacian").get<double>();
    report.frame_operator_off_diagonal =
        residuals.at("frame_operator_off_diagonal").get<double>();
    report.eigenbasis_orthogonality =
        residuals.at("eigenbasis_orthogonality").get<double>();
    report.laplacian_reconstruction =
        residuals.at("laplacian_reconstruction").get<double>();
    report.canonical_dual_residual = residuals.at("canonical_dual").get<double>();
    return report;
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad report JSON: ") + e.what());
  }
}

std::string analyze_report_json(const Graph& g, const TightnessReport& facts,
                                const LaplacianBoundCheck& bounds,
                                const TolerancePolicy& tol) {
  const ComponentPartition parts = connected_components(g);
  const DegreeInfo degrees = degree_info(g);
  std::optional<int> regular_degree;
  if (facts.graph_regular) regular_degree = *facts.regular_degree;

  Json bounds_json{{"largest_eigenvalue", bounds.largest_eigenvalue},
                   {"degree_bound", bounds.degree_bound},
                   {"largest_holds", bounds.largest_holds},
                   {"connected", bounds.connected},
                   {"second_smallest", optional_json(bounds.second_smallest)},
                   {"connectivity_bound", optional_json(bounds.connectivity_bound)},
                   {"second_smallest_holds", nullptr}};
  if (bounds.second_smallest_holds.has_value()) {
    bounds_json["second_smallest_holds"] = *bounds.second_smallest_holds;
  }

  Json j{{"format", kReportFormat},
         {"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
         {"tolerances", tolerances_json(tol)},
         {"graph", graph_json(g.vertex_count(), g.edges(), parts.count, degrees.degrees,
                              degrees.min_degree, degrees.max_degree, facts.graph_regular,
                              regular_degree, facts.null_vertex, facts.complete)},
         {"laplacian_spectrum", facts.laplacian_spectrum},
         {"adjacency_spectrum", facts.adjacency_spectrum},
         {"frame_bounds", Json{{"lower", facts.bounds.lower}, {"upper", facts.bounds.upper}}},
         {"is_tight", facts.tight},
         {"alpha", optional_json(facts.alpha)},
         {"is_uniform", facts.uniform},
         {"uniform_norm", optional_json(facts.uniform_norm)},
         {"adjacency_distinct", clusters_json(facts.adjacency_distinct)},
         {"components_regular", components_regular_json(facts.components)},
         {"predicted_alpha", optional_json(facts.predicted_alpha)},
         {"laplacian_bounds", std::move(bounds_json)}};
  return j.dump(2) + "\n";
}

std::string verify_report_json(const VerifyOutcome& outcome, const TolerancePolicy& tol) {
  Json j{{"format", kReportFormat},
         {"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
         {"tolerances", tolerances_json(tol)},
         {"is_g_frame", outcome.g_frame.ok},
         {"gramian_residual", outcome.g_frame.residual},
         {"is_lg_frame", nullptr},
         {"frame_operator_off_diagonal", nullptr},
         {"passed", outcome.passed()}};
  if (outcome.lg_frame_check.has_value()) {
    j["is_lg_frame"] = outcome.lg_frame_check->ok;
    j["frame_operator_off_diagonal"] = outcome.lg_frame_check->off_diagonal_residual;
  }
  if (outcome.dual.has_value()) {
    j["dual"] = Json{{"valid", outcome.dual->valid},
                     {"residual", outcome.dual->residual}};
  }
  if (outcome.family.has_value()) {
    Json shifts = Json::array();
    for (const std::vector<double>& s : outcome.family->shifts.shifts) shifts.push_back(s);
    j["dual_family"] = Json{{"in_family", outcome.family->in_family},
                            {"shifts", std::move(shifts)},
                            {"constancy_residual", outcome.family->constancy_residual},
                            {"duality_residual", outcome.family->duality_residual}};
  }
  return j.dump(2) + "\n";
}

std::string survey_report_json(const SurveyReport& report, const TolerancePolicy& tol) {
  Json j{{"format", kReportFormat},
         {"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
         {"tolerances", tolerances_json(tol)},
         {"vertex_count", report.vertex_count},
         {"graphs", report.graphs},
         {"tight", report.tight},
         {"connected_tight", report.connected_tight},
         {"connected_tight_complete", report.connected_tight_complete},
         {"violations",
          Json{{"component_regularity", report.component_regularity_violations},
               {"two_eigenvalue_iff", report.two_eigenvalue_iff_violations},
               {"complete_iff", report.complete_iff_violations},
               {"uniform_norm", report.uniform_norm_violations},
               {"laplacian_bounds", report.laplacian_bound_violations},
               {"construction", report.construction_violations},
               {"total", report.total_violations()}}},
         {"violation_examples", report.violation_examples}};
  return j.dump(2) + "\n";
}

}  // namespace graphframes
