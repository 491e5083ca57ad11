#include "graphframes/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "graphframes/errors.hpp"

namespace graphframes {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kConvergenceFactor = 1e-12;

double frobenius(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  }
  return std::sqrt(s);
}

double off_diagonal_frobenius(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

// One Jacobi rotation annihilating a(p, q). a stays exactly symmetric:
// both triangles are written from the same computed value.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    // tan would underflow through theta^2; first-order form is exact here.
    t = 1.0 / (2.0 * theta);
  } else {
    const double sign = theta >= 0.0 ? 1.0 : -1.0;
    t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = a.rows();
  const double app = a(p, p);
  const double aqq = a(q, q);
  a(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
  a(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const double aip = a(i, p);
    const double aiq = a(i, q);
    a(i, p) = c * aip - s * aiq;
    a(p, i) = a(i, p);
    a(i, q) = s * aip + c * aiq;
    a(q, i) = a(i, q);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double vip = v(i, p);
    const double viq = v(i, q);
    v(i, p) = c * vip - s * viq;
    v(i, q) = s * vip + c * viq;
  }
}

}  // namespace

EigenDecomposition eigh(const SymmetricMatrix& input, const TolerancePolicy& tol) {
  const std::size_t n = input.order();
  Matrix a = input.dense();
  Matrix v = Matrix::identity(n);

  // ||A||_F is invariant under the rotations, so the target is fixed up front.
  const double target = kConvergenceFactor * frobenius(a);

  bool converged = off_diagonal_frobenius(a) <= target;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) != 0.0) rotate(a, v, p, q);
      }
    }
    converged = off_diagonal_frobenius(a) <= target;
  }
  if (!converged) {
    throw InternalError("eigh: no convergence after " + std::to_string(kMaxSweeps) +
                        " sweeps, off-diagonal norm " +
                        std::to_string(off_diagonal_frobenius(a)));
  }

  // Stable descending sort keeps the solver's order within equal eigenvalues.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  EigenDecomposition result;
  result.values.resize(n);
  result.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    result.values[j] = a(src, src);
    double flip = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v(i, src)) > tol.zero) {
        flip = v(i, src) < 0.0 ? -1.0 : 1.0;
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      result.vectors(i, j) = flip * v(i, src);
    }
  }
  return result;
}

std::vector<EigenCluster> cluster_distinct(const std::vector<double>& descending,
                                           double cluster_tol) {
  std::vector<EigenCluster> clusters;
  if (descending.empty()) return clusters;
  for (std::size_t i = 1; i < descending.size(); ++i) {
    if (descending[i - 1] < descending[i]) {
      throw InputError("cluster_distinct: values are not sorted descending");
    }
  }
  const double spread = descending.front() - descending.back();
  const double gap_limit = cluster_tol * std::max(1.0, spread);

  double run_sum = descending.front();
  std::size_t run_size = 1;
  for (std::size_t i = 1; i < descending.size(); ++i) {
    if (descending[i - 1] - descending[i] > gap_limit) {
      clusters.push_back({run_sum / static_cast<double>(run_size), run_size});
      run_sum = 0.0;
      run_size = 0;
    }
    run_sum += descending[i];
    ++run_size;
  }
  clusters.push_back({run_sum / static_cast<double>(run_size), run_size});
  return clusters;
}

SymmetricMatrix spd_inverse(const SymmetricMatrix& a, const TolerancePolicy& tol) {
  const EigenDecomposition eig = eigh(a, tol);
  const std::size_t n = a.order();
  if (n == 0) return SymmetricMatrix(0);
  if (eig.values.back() <= tol.zero) {
    throw InputError("spd_inverse: matrix is singular within tolerance, smallest eigenvalue " +
                     std::to_string(eig.values.back()));
  }
  // (V diag(1/w) V^T)_{ij}, filled from the lower triangle so the result is
  // exactly symmetric.
  SymmetricMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        s += eig.vectors(i, l) * eig.vectors(j, l) / eig.values[l];
      }
      inv.set(i, j, s);
    }
  }
  return inv;
}

}  // namespace graphframes
