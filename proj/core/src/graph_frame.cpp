#include "graphframes/graph_frame.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "graphframes/errors.hpp"

namespace graphframes {

namespace {

// V diag(w^exponent) V^T for the eigendecomposition of a positive definite
// matrix, mirrored from the lower triangle.
SymmetricMatrix spectral_power(const EigenDecomposition& eig, double exponent) {
  const std::size_t n = eig.values.size();
  SymmetricMatrix out(n);
  std::vector<double> powered(n);
  for (std::size_t l = 0; l < n; ++l) powered[l] = std::pow(eig.values[l], exponent);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        s += eig.vectors(i, l) * eig.vectors(j, l) * powered[l];
      }
      out.set(i, j, s);
    }
  }
  return out;
}

double off_diagonal_max(const SymmetricMatrix& s) {
  double m = 0.0;
  for (std::size_t i = 0; i < s.order(); ++i) {
    for (std::size_t j = i + 1; j < s.order(); ++j) {
      m = std::max(m, std::abs(s(i, j)));
    }
  }
  return m;
}

}  // namespace

LgFrameResult lg_frame(const Graph& g, const TolerancePolicy& tol) {
  if (g.edge_count() == 0) {
    throw InputError("graph has no edges: the Laplacian has rank 0 and generates no frame");
  }
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const ComponentPartition parts = connected_components(g);
  const std::size_t k = n - parts.count;

  EigenDecomposition eig = eigh(laplacian_matrix(g), tol);

  // The spectrum must agree with the exact component count: k positive
  // eigenvalues followed by one zero per component.
  if (eig.values[k - 1] <= tol.zero) {
    throw InternalError("laplacian rank mismatch: eigenvalue " + std::to_string(k - 1) +
                        " is " + std::to_string(eig.values[k - 1]) + " but " +
                        std::to_string(k) + " positive eigenvalues were expected");
  }
  for (std::size_t j = k; j < n; ++j) {
    if (std::abs(eig.values[j]) > tol.zero) {
      throw InternalError("laplacian rank mismatch: eigenvalue " + std::to_string(j) +
                          " is " + std::to_string(eig.values[j]) +
                          " but should vanish for " + std::to_string(parts.count) +
                          " components");
    }
  }

  // Row i of M_1, scaled by sqrt(mu) per column, is the frame vector of
  // vertex i. Vertices in components of their own get the zero vector.
  std::vector<std::vector<double>> vectors(n, std::vector<double>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      vectors[i][j] = std::sqrt(eig.values[j]) * eig.vectors(i, j);
    }
  }

  LgFrameResult result{Frame(k, std::move(vectors)), std::move(eig.values), k,
                       std::move(eig.vectors)};
  return result;
}

GFrameCheck is_g_frame(const Frame& f, const Graph& g, const TolerancePolicy& tol) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (f.size() != n) {
    throw InputError("frame has " + std::to_string(f.size()) + " vectors but the graph has " +
                     std::to_string(n) + " vertices");
  }
  const SymmetricMatrix l = laplacian_matrix(g);
  const double residual = max_abs_diff(gramian(f).dense(), l.dense());
  const bool entries_match = residual <= tol.recon * std::max(1.0, max_abs(l.dense()));

  const ComponentPartition parts = connected_components(g);
  const bool shape_ok = f.dim() == n - parts.count;

  return {entries_match && shape_ok && is_frame(f, tol), residual};
}

LgFrameCheck is_lg_frame(const Frame& f, const Graph& g, const TolerancePolicy& tol) {
  const GFrameCheck base = is_g_frame(f, g, tol);
  if (!base.ok) {
    throw InputError("is_lg_frame needs a frame whose Gramian is the graph Laplacian; "
                     "gramian residual " + std::to_string(base.residual));
  }
  const SymmetricMatrix s = frame_operator(f);
  const double off = off_diagonal_max(s);
  return {off <= tol.recon * std::max(1.0, max_abs(s.dense())), off};
}

Frame canonical_dual_lg(const LgFrameResult& result, const TolerancePolicy& tol) {
  const Frame& f = result.frame;
  const std::size_t k = result.rank;
  for (std::size_t j = 0; j < k; ++j) {
    if (result.laplacian_spectrum[j] <= tol.zero) {
      throw InputError("canonical dual needs positive frame-operator eigenvalues, got " +
                       std::to_string(result.laplacian_spectrum[j]));
    }
  }
  std::vector<std::vector<double>> duals(f.size(), std::vector<double>(k));
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      duals[i][j] = f[i][j] / result.laplacian_spectrum[j];
    }
  }
  return Frame(k, std::move(duals));
}

Frame dual_from_shifts(const Frame& f, const Graph& g, const DualSpec& spec,
                       const TolerancePolicy& tol) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (f.size() != n) {
    throw InputError("frame has " + std::to_string(f.size()) + " vectors but the graph has " +
                     std::to_string(n) + " vertices");
  }
  const ComponentPartition parts = connected_components(g);
  if (spec.shifts.size() != parts.count) {
    throw InputError("got " + std::to_string(spec.shifts.size()) + " shifts for " +
                     std::to_string(parts.count) + " components");
  }
  for (std::size_t c = 0; c < spec.shifts.size(); ++c) {
    if (spec.shifts[c].size() != f.dim()) {
      throw InputError("shift " + std::to_string(c) + " has " +
                       std::to_string(spec.shifts[c].size()) + " entries, expected " +
                       std::to_string(f.dim()));
    }
  }

  const SymmetricMatrix inverse = spd_inverse(frame_operator(f), tol);
  std::vector<std::vector<double>> duals;
  duals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> d = matvec(inverse.dense(), f[i]);
    const auto& shift = spec.shifts[static_cast<std::size_t>(parts.label[i])];
    for (std::size_t j = 0; j < f.dim(); ++j) d[j] += shift[j];
    duals.push_back(std::move(d));
  }
  return Frame(f.dim(), std::move(duals));
}

DualFamilyCheck dual_is_in_family(const Frame& f, const Graph& g, const Frame& dual,
                                  const TolerancePolicy& tol) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (f.size() != n || dual.size() != n || f.dim() != dual.dim()) {
    throw InputError("frame, dual, and graph sizes disagree in dual_is_in_family");
  }
  const ComponentPartition parts = connected_components(g);
  const SymmetricMatrix inverse = spd_inverse(frame_operator(f), tol);

  // h_i = dual_i - S^{-1} f_i must be one constant vector per component.
  std::vector<std::vector<double>> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = matvec(inverse.dense(), f[i]);
    for (std::size_t j = 0; j < f.dim(); ++j) h[i][j] = dual[i][j] - h[i][j];
  }

  DualFamilyCheck check;
  check.shifts.shifts.assign(parts.count, std::vector<double>(f.dim(), 0.0));
  std::vector<std::size_t> members(parts.count, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(parts.label[i]);
    ++members[c];
    for (std::size_t j = 0; j < f.dim(); ++j) check.shifts.shifts[c][j] += h[i][j];
  }
  double shift_scale = 1.0;
  for (std::size_t c = 0; c < parts.count; ++c) {
    for (std::size_t j = 0; j < f.dim(); ++j) {
      check.shifts.shifts[c][j] /= static_cast<double>(members[c]);
      shift_scale = std::max(shift_scale, std::abs(check.shifts.shifts[c][j]));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(parts.label[i]);
    check.constancy_residual =
        std::max(check.constancy_residual, max_abs_diff(h[i], check.shifts.shifts[c]));
  }

  const DualCheck duality = verify_dual(f, dual, tol);
  check.duality_residual = duality.residual;
  check.in_family =
      duality.valid && check.constancy_residual <= tol.recon * shift_scale;
  return check;
}

EquivalenceMap unitary_equivalence_map(const Frame& to, const Frame& from,
                                       const Graph& g, const TolerancePolicy& tol) {
  const GFrameCheck to_check = is_g_frame(to, g, tol);
  if (!to_check.ok) {
    throw InputError("target frame is not a frame of this graph (gramian residual " +
                     std::to_string(to_check.residual) + ")");
  }
  const GFrameCheck from_check = is_g_frame(from, g, tol);
  if (!from_check.ok) {
    throw InputError("source frame is not a frame of this graph (gramian residual " +
                     std::to_string(from_check.residual) + ")");
  }

  const Matrix b = synthesis_matrix(to);
  const Matrix c = synthesis_matrix(from);
  const EigenDecomposition s_to = eigh(frame_operator(to), tol);
  if (s_to.values.back() <= tol.zero) {
    throw InternalError("frame operator lost rank after is_g_frame accepted it");
  }
  const SymmetricMatrix s_to_inv_sq = spectral_power(s_to, -2.0);
  const SymmetricMatrix s_from = frame_operator(from);

  // U = S_to^{-2} B C^T S_from maps from_i to to_i: both Gramians equal L,
  // so B C^T conjugates one frame operator into the other.
  const Matrix u = matmul(matmul(s_to_inv_sq.dense(), matmul(b, transpose(c))),
                          s_from.dense());

  EquivalenceMap map{u, 0.0, 0.0};
  const Matrix id = Matrix::identity(to.dim());
  map.orthogonality_residual = std::max(max_abs_diff(matmul(transpose(u), u), id),
                                        max_abs_diff(matmul(u, transpose(u)), id));
  for (std::size_t i = 0; i < from.size(); ++i) {
    const std::vector<double> mapped = matvec(u, from[i]);
    map.map_residual = std::max(map.map_residual, max_abs_diff(mapped, to[i]));
  }
  return map;
}

TightnessReport tightness_report(const Graph& g, const TolerancePolicy& tol) {
  return tightness_report(g, lg_frame(g, tol), tol);
}

TightnessReport tightness_report(const Graph& g, const LgFrameResult& result,
                                 const TolerancePolicy& tol) {
  TightnessReport report;
  report.laplacian_spectrum = result.laplacian_spectrum;

  const EigenDecomposition adjacency = eigh(adjacency_matrix(g), tol);
  report.adjacency_spectrum = adjacency.values;
  report.adjacency_distinct = cluster_distinct(adjacency.values, tol.cluster);

  report.bounds = frame_bounds(result.frame, tol);
  const Tightness tight = is_tight(result.frame, tol);
  report.tight = tight.tight;
  if (tight.tight) report.alpha = tight.bound;

  const ComponentPartition parts = connected_components(g);
  const DegreeInfo degrees = degree_info(g);
  report.components.assign(parts.count, ComponentRegularity{});
  {
    // Degree within the whole graph equals degree within the component.
    std::vector<int> seen(parts.count, -1);
    std::vector<bool> mismatch(parts.count, false);
    for (std::size_t v = 0; v < degrees.degrees.size(); ++v) {
      const auto c = static_cast<std::size_t>(parts.label[v]);
      if (seen[c] == -1) {
        seen[c] = degrees.degrees[v];
      } else if (seen[c] != degrees.degrees[v]) {
        mismatch[c] = true;
      }
    }
    for (std::size_t c = 0; c < parts.count; ++c) {
      report.components[c].regular = !mismatch[c];
      report.components[c].degree = mismatch[c] ? 0 : seen[c];
    }
  }

  const Regularity reg = is_regular(g);
  report.graph_regular = reg.regular;
  if (reg.regular) {
    report.regular_degree = reg.degree;
    report.predicted_alpha = static_cast<double>(reg.degree) + 1.0;
  }
  report.null_vertex = has_null_vertex(g);
  report.complete = is_complete(g);

  const Uniformity uniform = is_uniform(result.frame, tol);
  report.uniform = uniform.uniform;
  if (uniform.uniform) report.uniform_norm = uniform.norm;

  if (report.tight && parts.count == 1 && !report.complete) {
    throw InternalError("tight frame on a connected non-complete graph; "
                        "tightness should imply completeness here");
  }
  return report;
}

LaplacianBoundCheck laplacian_bound_check(const Graph& g, const TolerancePolicy& tol) {
  if (g.edge_count() == 0) {
    throw InputError("spectral bounds need at least one edge");
  }
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const EigenDecomposition eig = eigh(laplacian_matrix(g), tol);
  const DegreeInfo degrees = degree_info(g);

  LaplacianBoundCheck check;
  check.largest_eigenvalue = eig.values.front();
  check.degree_bound = static_cast<double>(degrees.max_degree) + 1.0;
  check.largest_holds = check.largest_eigenvalue >= check.degree_bound - tol.zero;

  check.connected = connected_components(g).count == 1;
  if (check.connected && n >= 2) {
    const double mu = eig.values[n - 2];
    const double bound = static_cast<double>(n) /
                         static_cast<double>(n - 1) *
                         static_cast<double>(degrees.min_degree);
    check.second_smallest = mu;
    check.connectivity_bound = bound;
    check.second_smallest_holds = mu <= bound + tol.zero;
  }
  return check;
}

}  // namespace graphframes
