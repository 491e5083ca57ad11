#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphframes/edge_list.hpp"
#include "graphframes/errors.hpp"
#include "graphframes/frame_csv.hpp"
#include "graphframes/graph_frame.hpp"
#include "graphframes/report.hpp"
#include "graphframes/survey.hpp"
#include "graphframes/version.hpp"

namespace {

using namespace graphframes;

// Exit codes: 0 success, 1 a requested check failed, 2 bad input,
// 3 internal numerical inconsistency.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw InputError("cannot open '" + out_path + "' for writing");
  }
  out << content;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_spectrum(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_double(values[i]);
  }
  return out;
}

const char* yes_no(bool value) { return value ? "yes" : "no"; }

struct GenGraphOptions {
  std::string kind;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string union_path;
  std::string out_path;
  bool p_given = false;
};

int run_gen_graph(const GenGraphOptions& opt) {
  Graph g = [&opt]() {
    if (opt.kind == "complete") return complete(opt.n);
    if (opt.kind == "cycle") return cycle(opt.n);
    if (opt.kind == "path") return path(opt.n);
    if (opt.kind == "star") return star(opt.n);
    if (opt.kind == "random") {
      if (!opt.p_given) {
        throw InputError("--kind random needs --p");
      }
      return random_graph(opt.n, opt.p, opt.seed);
    }
    throw InputError("unknown graph kind '" + opt.kind + "'");
  }();

  std::vector<std::string> comments;
  if (opt.kind == "random") {
    comments.push_back(std::string("rng ") + kRngAlgorithm + " seed=" +
                       std::to_string(opt.seed) + " p=" + format_double(opt.p));
  }
  if (!opt.union_path.empty()) {
    g = disjoint_union(g, parse_edge_list(read_file(opt.union_path)));
  }
  emit(opt.out_path, write_edge_list(g, comments));
  return kExitOk;
}

struct FrameOptions {
  std::string input_path;
  std::string out_path;
  bool json = false;
};

int run_frame(const FrameOptions& opt, const TolerancePolicy& tol) {
  const Graph g = parse_edge_list(read_file(opt.input_path));
  const LgFrameResult result = lg_frame(g, tol);
  const std::string csv = frame_to_csv(result.frame);

  if (!opt.out_path.empty()) {
    emit(opt.out_path, csv);
  }
  if (opt.json) {
    std::cout << report_to_json(build_report(g, result, tol));
  } else if (opt.out_path.empty()) {
    std::cout << csv;
  } else {
    std::cout << "wrote " << result.frame.size() << " frame vectors of dimension "
              << result.frame.dim() << " to " << opt.out_path << "\n";
  }
  return kExitOk;
}

struct AnalyzeOptions {
  std::string input_path;
  bool json = false;
};

int run_analyze(const AnalyzeOptions& opt, const TolerancePolicy& tol) {
  const Graph g = parse_edge_list(read_file(opt.input_path));
  const TightnessReport facts = tightness_report(g, tol);
  const LaplacianBoundCheck bounds = laplacian_bound_check(g, tol);

  if (opt.json) {
    std::cout << analyze_report_json(g, facts, bounds, tol);
    return kExitOk;
  }

  const ComponentPartition parts = connected_components(g);
  std::cout << "vertices: " << g.vertex_count() << "\n"
            << "edges: " << g.edge_count() << "\n"
            << "components: " << parts.count << "\n"
            << "regular: " << yes_no(facts.graph_regular);
  if (facts.graph_regular) std::cout << " (degree " << *facts.regular_degree << ")";
  std::cout << "\n"
            << "null_vertex: " << yes_no(facts.null_vertex) << "\n"
            << "complete: " << yes_no(facts.complete) << "\n"
            << "laplacian_spectrum: " << format_spectrum(facts.laplacian_spectrum) << "\n"
            << "adjacency_spectrum: " << format_spectrum(facts.adjacency_spectrum) << "\n"
            << "adjacency_distinct:";
  for (const EigenCluster& c : facts.adjacency_distinct) {
    std::cout << " " << format_double(c.value) << "(x" << c.multiplicity << ")";
  }
  std::cout << "\n"
            << "frame_bounds: [" << format_double(facts.bounds.lower) << ", "
            << format_double(facts.bounds.upper) << "]\n"
            << "is_tight: " << yes_no(facts.tight);
  if (facts.tight) std::cout << " (alpha " << format_double(*facts.alpha) << ")";
  std::cout << "\n"
            << "is_uniform: " << yes_no(facts.uniform);
  if (facts.uniform) std::cout << " (norm " << format_double(*facts.uniform_norm) << ")";
  std::cout << "\n"
            << "largest_eigenvalue_bound: " << format_double(bounds.largest_eigenvalue)
            << " >= " << format_double(bounds.degree_bound) << " "
            << (bounds.largest_holds ? "holds" : "FAILS") << "\n";
  if (bounds.second_smallest_holds.has_value()) {
    std::cout << "second_smallest_bound: " << format_double(*bounds.second_smallest)
              << " <= " << format_double(*bounds.connectivity_bound) << " "
              << (*bounds.second_smallest_holds ? "holds" : "FAILS") << "\n";
  }
  return kExitOk;
}

struct DualOptions {
  std::string input_path;
  std::string frame_path;
  std::string shifts_path;
  std::string out_path;
};

int run_dual(const DualOptions& opt, const TolerancePolicy& tol) {
  const Graph g = parse_edge_list(read_file(opt.input_path));
  const Frame f = frame_from_csv(read_file(opt.frame_path));
  const GFrameCheck check = is_g_frame(f, g, tol);
  if (!check.ok) {
    throw InputError("frame is not a frame of this graph (gramian residual " +
                     format_double(check.residual) + ")");
  }

  DualSpec spec;
  if (opt.shifts_path.empty()) {
    spec.shifts.assign(connected_components(g).count,
                       std::vector<double>(f.dim(), 0.0));
  } else {
    spec = shifts_from_csv(read_file(opt.shifts_path));
  }
  const Frame dual = dual_from_shifts(f, g, spec, tol);

  const DualCheck duality = verify_dual(f, dual, tol);
  if (!duality.valid) {
    throw InternalError("computed dual fails its own duality check, residual " +
                        format_double(duality.residual));
  }
  emit(opt.out_path, frame_to_csv(dual));
  return kExitOk;
}

struct VerifyOptions {
  std::string input_path;
  std::string frame_path;
  std::string dual_path;
  bool json = false;
};

int run_verify(const VerifyOptions& opt, const TolerancePolicy& tol) {
  const Graph g = parse_edge_list(read_file(opt.input_path));
  const Frame f = frame_from_csv(read_file(opt.frame_path));

  VerifyOutcome outcome;
  outcome.g_frame = is_g_frame(f, g, tol);
  if (outcome.g_frame.ok) {
    outcome.lg_frame_check = is_lg_frame(f, g, tol);
  }
  if (!opt.dual_path.empty()) {
    const Frame dual = frame_from_csv(read_file(opt.dual_path));
    outcome.dual = verify_dual(f, dual, tol);
    outcome.family = dual_is_in_family(f, g, dual, tol);
  }

  if (opt.json) {
    std::cout << verify_report_json(outcome, tol);
  } else {
    std::cout << "is_g_frame: " << (outcome.g_frame.ok ? "true" : "false")
              << " (gramian residual " << format_double(outcome.g_frame.residual) << ")\n";
    if (outcome.lg_frame_check.has_value()) {
      std::cout << "is_lg_frame: " << (outcome.lg_frame_check->ok ? "true" : "false")
                << " (frame-operator off-diagonal "
                << format_double(outcome.lg_frame_check->off_diagonal_residual) << ")\n";
    }
    if (outcome.dual.has_value()) {
      std::cout << "dual_valid: " << (outcome.dual->valid ? "true" : "false")
                << " (residual " << format_double(outcome.dual->residual) << ")\n";
      std::cout << "dual_in_family: " << (outcome.family->in_family ? "true" : "false")
                << " (constancy residual "
                << format_double(outcome.family->constancy_residual) << ")\n";
    }
    std::cout << "passed: " << (outcome.passed() ? "true" : "false") << "\n";
  }
  return outcome.passed() ? kExitOk : kExitCheckFailed;
}

struct EquivOptions {
  std::string input_path;
  std::string to_path;
  std::string from_path;
  std::string out_path;
};

int run_equiv(const EquivOptions& opt, const TolerancePolicy& tol) {
  const Graph g = parse_edge_list(read_file(opt.input_path));
  const Frame to = frame_from_csv(read_file(opt.to_path));
  const Frame from = frame_from_csv(read_file(opt.from_path));
  const EquivalenceMap map = unitary_equivalence_map(to, from, g, tol);

  std::string out = "# orthogonality_residual " +
                    format_double(map.orthogonality_residual) + "\n" +
                    "# map_residual " + format_double(map.map_residual) + "\n" +
                    matrix_to_csv(map.map);
  emit(opt.out_path, out);
  const bool ok = map.orthogonality_residual <= tol.orth && map.map_residual <= tol.orth;
  return ok ? kExitOk : kExitCheckFailed;
}

struct SurveyOptions {
  int max_n = 0;
  bool json = false;
};

int run_survey(const SurveyOptions& opt, const TolerancePolicy& tol) {
  const SurveyReport report = survey(opt.max_n, tol);
  if (opt.json) {
    std::cout << survey_report_json(report, tol);
  } else {
    std::cout << "vertices: " << report.vertex_count << "\n"
              << "graphs: " << report.graphs << "\n"
              << "tight: " << report.tight << "\n"
              << "connected_tight: " << report.connected_tight << "\n"
              << "connected_tight_complete: " << report.connected_tight_complete << "\n"
              << "violations: " << report.total_violations() << "\n";
    for (const std::string& example : report.violation_examples) {
      std::cout << "violation: " << example << "\n";
    }
  }
  return report.total_violations() == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) + ": frames generated by graph Laplacians"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  TolerancePolicy tol;
  app.add_option("--tol-orth", tol.orth, "Orthogonality residual threshold");
  app.add_option("--tol-recon", tol.recon, "Reconstruction residual threshold");
  app.add_option("--tol-zero", tol.zero, "Zero eigenvalue threshold");
  app.add_option("--tol-tight", tol.tight, "Frame-bound comparison threshold");
  app.add_option("--tol-cluster", tol.cluster, "Eigenvalue cluster gap threshold");

  GenGraphOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen-graph", "Generate a graph edge list");
  gen->fallthrough();
  gen->add_option("--kind", gen_opt.kind, "complete|cycle|path|star|random")->required();
  gen->add_option("--n", gen_opt.n, "Number of vertices")->required();
  CLI::Option* p_option = gen->add_option("--p", gen_opt.p, "Edge probability for random");
  gen->add_option("--seed", gen_opt.seed, "Seed for random");
  gen->add_option("--union", gen_opt.union_path, "Edge-list file to union with");
  gen->add_option("--out", gen_opt.out_path, "Output file (default stdout)");

  FrameOptions frame_opt;
  CLI::App* frame = app.add_subcommand("frame", "Build the Laplacian-generated frame");
  frame->fallthrough();
  frame->add_option("--input", frame_opt.input_path, "Graph edge-list file")->required();
  frame->add_option("--out", frame_opt.out_path, "Frame CSV output file");
  frame->add_flag("--json", frame_opt.json, "Print the full JSON report");

  AnalyzeOptions analyze_opt;
  CLI::App* analyze = app.add_subcommand("analyze", "Tightness and spectral-bound analysis");
  analyze->fallthrough();
  analyze->add_option("--input", analyze_opt.input_path, "Graph edge-list file")->required();
  analyze->add_flag("--json", analyze_opt.json, "Print the JSON report");

  DualOptions dual_opt;
  CLI::App* dual = app.add_subcommand("dual", "Compute a dual frame");
  dual->fallthrough();
  dual->add_option("--input", dual_opt.input_path, "Graph edge-list file")->required();
  dual->add_option("--frame", dual_opt.frame_path, "Frame CSV file")->required();
  dual->add_option("--shifts", dual_opt.shifts_path,
                   "Per-component shift CSV (default: all zero, the canonical dual)");
  dual->add_option("--out", dual_opt.out_path, "Dual CSV output file (default stdout)");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "Check a frame (and optional dual) against a graph");
  verify->fallthrough();
  verify->add_option("--input", verify_opt.input_path, "Graph edge-list file")->required();
  verify->add_option("--frame", verify_opt.frame_path, "Frame CSV file")->required();
  verify->add_option("--dual", verify_opt.dual_path, "Dual candidate CSV file");
  verify->add_flag("--json", verify_opt.json, "Print the JSON report");

  EquivOptions equiv_opt;
  CLI::App* equiv = app.add_subcommand("equiv", "Unitary map between two frames of one graph");
  equiv->fallthrough();
  equiv->add_option("--input", equiv_opt.input_path, "Graph edge-list file")->required();
  equiv->add_option("--to", equiv_opt.to_path, "Target frame CSV")->required();
  equiv->add_option("--from", equiv_opt.from_path, "Source frame CSV")->required();
  equiv->add_option("--out", equiv_opt.out_path, "Map CSV output file (default stdout)");

  SurveyOptions survey_opt;
  CLI::App* survey_cmd = app.add_subcommand("survey", "Exhaustive small-graph tightness survey");
  survey_cmd->fallthrough();
  survey_cmd->add_option("--max-n", survey_opt.max_n, "Vertex count (2..6)")->required();
  survey_cmd->add_flag("--json", survey_opt.json, "Print the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }
  gen_opt.p_given = p_option->count() > 0;

  try {
    if (gen->parsed()) return run_gen_graph(gen_opt);
    if (frame->parsed()) return run_frame(frame_opt, tol);
    if (analyze->parsed()) return run_analyze(analyze_opt, tol);
    if (dual->parsed()) return run_dual(dual_opt, tol);
    if (verify->parsed()) return run_verify(verify_opt, tol);
    if (equiv->parsed()) return run_equiv(equiv_opt, tol);
    if (survey_cmd->parsed()) return run_survey(survey_opt, tol);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}
