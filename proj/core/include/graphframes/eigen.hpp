#pragma once

#include <cstddef>
#include <vector>

#include "graphframes/matrix.hpp"
#include "graphframes/tolerance.hpp"

namespace graphframes {

// Spectral factorization of a real symmetric matrix: A = V diag(values) V^T
// with orthonormal columns in V. values are sorted descending and column j
// of vectors pairs with values[j].
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;
};

// Cyclic Jacobi eigensolver. The rotation schedule is fixed (sweeps visit
// (p, q) in row-major order of the upper triangle), so the result is a pure
// function of the input entries: same matrix in, bit-identical output out.
//
// Convergence: off-diagonal Frobenius norm <= 1e-12 * ||A||_F, checked
// before each sweep; more than 100 sweeps throws InternalError. Ordering is
// a stable descending sort, so equal eigenvalues keep the solver's column
// order. Sign convention: the first component of each eigenvector whose
// magnitude exceeds tol.zero is made positive.
EigenDecomposition eigh(const SymmetricMatrix& a, const TolerancePolicy& tol = {});

// One maximal run of approximately equal values in a descending spectrum.
// value is the mean of the run's members.
struct EigenCluster {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

// Splits a descending list into clusters: a gap between consecutive values
// of more than cluster_tol * max(1, spread) starts a new cluster, where
// spread is the distance between the largest and smallest input values.
std::vector<EigenCluster> cluster_distinct(const std::vector<double>& descending,
                                           double cluster_tol);

// Inverse of a symmetric positive definite matrix, computed spectrally as
// V diag(1/values) V^T. Throws InputError when the smallest eigenvalue is
// not above tol.zero.
SymmetricMatrix spd_inverse(const SymmetricMatrix& a, const TolerancePolicy& tol = {});

}  // namespace graphframes
