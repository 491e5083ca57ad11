#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphframes/eigen.hpp"
#include "graphframes/frame.hpp"
#include "graphframes/graph.hpp"
#include "graphframes/matrix.hpp"
#include "graphframes/tolerance.hpp"

namespace graphframes {

// Frame read off from a spectral factorization L = M diag(mu) M^T of a graph
// Laplacian: with k = rank L, the scaled leading eigenvector rows
// B = diag(sqrt(mu_1..mu_k)) M_1^T give one frame vector per vertex. Its
// Gramian is L and its frame operator is diag(mu_1..mu_k).
struct LgFrameResult {
  Frame frame;
  // All n Laplacian eigenvalues, descending.
  std::vector<double> laplacian_spectrum;
  // k = n - (number of connected components).
  std::size_t rank = 0;
  // The n x n orthonormal eigenbasis M, columns ordered with the spectrum.
  Matrix eigenbasis;
};

// Builds the Laplacian-generated frame of g. Throws InputError for an
// edgeless graph (rank 0 leaves nothing to span) and InternalError when the
// computed spectrum disagrees with the component count about the rank.
LgFrameResult lg_frame(const Graph& g, const TolerancePolicy& tol = {});

struct GFrameCheck {
  bool ok = false;
  // Entrywise gap between gramian(f) and the Laplacian of g.
  double residual = 0.0;
};
// True when f is a frame for R^{n-p} whose Gramian is the Laplacian of g.
GFrameCheck is_g_frame(const Frame& f, const Graph& g, const TolerancePolicy& tol = {});

struct LgFrameCheck {
  bool ok = false;
  // Largest off-diagonal frame-operator entry.
  double off_diagonal_residual = 0.0;
};
// Among frames with Gramian L, the Laplacian-generated ones are exactly
// those with a diagonal frame operator. Requires is_g_frame(f, g) to hold;
// throws InputError otherwise.
LgFrameCheck is_lg_frame(const Frame& f, const Graph& g, const TolerancePolicy& tol = {});

// Canonical dual of a Laplacian-generated frame, using the diagonal frame
// operator directly: dual_i = diag(1/mu_1..1/mu_k) f_i.
Frame canonical_dual_lg(const LgFrameResult& result, const TolerancePolicy& tol = {});

// One shift vector in R^k per connected component of the graph.
struct DualSpec {
  std::vector<std::vector<double>> shifts;
};

// Dual g_i = S^{-1} f_i + shift[component(i)]. Constant-per-component shifts
// are exactly the perturbations h_i with sum_i <x, h_i> f_i = 0 for all x,
// so every member of this family is a valid dual. Throws InputError when the
// shift count differs from the component count or dimensions mismatch.
Frame dual_from_shifts(const Frame& f, const Graph& g, const DualSpec& spec,
                       const TolerancePolicy& tol = {});

struct DualFamilyCheck {
  bool in_family = false;
  // Per-component mean of h_i = dual_i - S^{-1} f_i.
  DualSpec shifts;
  // Largest deviation of any h_i from its component's shift.
  double constancy_residual = 0.0;
  // verify_dual residual of the candidate.
  double duality_residual = 0.0;
};
// Decides membership in the shift family and recovers the shifts.
DualFamilyCheck dual_is_in_family(const Frame& f, const Graph& g, const Frame& dual,
                                  const TolerancePolicy& tol = {});

struct EquivalenceMap {
  // k x k orthogonal map with map * from_i = to_i.
  Matrix map;
  // Largest entry of |U^T U - I| and |U U^T - I|.
  double orthogonality_residual = 0.0;
  // Largest entry of |U * from_i - to_i| over all i.
  double map_residual = 0.0;
};
// Any two frames with Gramian L(g) differ by a unitary: this computes
// U = S_to^{-2} * B_to * B_from^T * S_from and checks it. Both inputs must
// satisfy is_g_frame against the same graph; throws InputError otherwise.
EquivalenceMap unitary_equivalence_map(const Frame& to, const Frame& from,
                                       const Graph& g, const TolerancePolicy& tol = {});

struct ComponentRegularity {
  bool regular = false;
  int degree = 0;
};

// Tightness of the Laplacian-generated frame side by side with the graph
// facts that are equivalent to or implied by it.
struct TightnessReport {
  FrameBounds bounds;
  bool tight = false;
  // Mean frame-operator eigenvalue when tight.
  std::optional<double> alpha;

  std::vector<ComponentRegularity> components;
  bool graph_regular = false;
  std::optional<int> regular_degree;
  bool null_vertex = false;
  bool complete = false;
  // r + 1 for an r-regular graph: the tight bound predicted by the
  // adjacency spectrum when the frame is tight.
  std::optional<double> predicted_alpha;

  std::vector<EigenCluster> adjacency_distinct;
  bool uniform = false;
  std::optional<double> uniform_norm;

  std::vector<double> laplacian_spectrum;
  std::vector<double> adjacency_spectrum;
};

// Throws InternalError if the computed report contradicts the structural
// fact that a tight connected graph frame forces a complete graph.
TightnessReport tightness_report(const Graph& g, const TolerancePolicy& tol = {});
TightnessReport tightness_report(const Graph& g, const LgFrameResult& result,
                                 const TolerancePolicy& tol = {});

struct LaplacianBoundCheck {
  double largest_eigenvalue = 0.0;
  // max degree + 1, a lower bound for the largest Laplacian eigenvalue.
  double degree_bound = 0.0;
  bool largest_holds = false;
  bool connected = false;
  // Second-smallest Laplacian eigenvalue; meaningful for connected graphs.
  std::optional<double> second_smallest;
  // n/(n-1) * min degree, an upper bound for it on connected graphs.
  std::optional<double> connectivity_bound;
  std::optional<bool> second_smallest_holds;
};
// Checks the two spectral bounds (largest eigenvalue >= max degree + 1 for
// a graph with at least one edge; second smallest <= n/(n-1) * min degree
// for a connected graph) with slack tol.zero. Throws InputError for an
// edgeless graph.
LaplacianBoundCheck laplacian_bound_check(const Graph& g, const TolerancePolicy& tol = {});

}  // namespace graphframes
