#include "graphframes/frame.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "graphframes/eigen.hpp"
#include "graphframes/errors.hpp"

namespace graphframes {

Frame::Frame(std::size_t dim, std::vector<std::vector<double>> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  if (dim_ < 1) {
    throw InputError("frame dimension must be at least 1");
  }
  if (vectors_.size() < dim_) {
    throw InputError("a frame for dimension " + std::to_string(dim_) +
                     " needs at least " + std::to_string(dim_) + " vectors, got " +
                     std::to_string(vectors_.size()));
  }
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (vectors_[i].size() != dim_) {
      throw InputError("frame vector " + std::to_string(i) + " has " +
                       std::to_string(vectors_[i].size()) + " entries, expected " +
                       std::to_string(dim_));
    }
  }
}

Matrix synthesis_matrix(const Frame& f) {
  Matrix b(f.dim(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.dim(); ++j) {
      b(j, i) = f[i][j];
    }
  }
  return b;
}

std::vector<double> analysis_apply(const Frame& f, std::span<const double> x) {
  if (x.size() != f.dim()) {
    throw InputError("analysis input has length " + std::to_string(x.size()) +
                     ", frame dimension is " + std::to_string(f.dim()));
  }
  std::vector<double> coefficients(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    coefficients[i] = dot(x, f[i]);
  }
  return coefficients;
}

SymmetricMatrix frame_operator(const Frame& f) {
  SymmetricMatrix s(f.dim());
  for (std::size_t a = 0; a < f.dim(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      double sum = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        sum += f[i][a] * f[i][b];
      }
      s.set(a, b, sum);
    }
  }
  return s;
}

SymmetricMatrix gramian(const Frame& f) {
  SymmetricMatrix g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      g.set(i, j, dot(f[i], f[j]));
    }
  }
  return g;
}

FrameBounds frame_bounds(const Frame& f, const TolerancePolicy& tol) {
  const EigenDecomposition eig = eigh(frame_operator(f), tol);
  return {eig.values.back(), eig.values.front()};
}

bool is_frame(const Frame& f, const TolerancePolicy& tol) {
  return frame_bounds(f, tol).lower > tol.zero;
}

Tightness is_tight(const Frame& f, const TolerancePolicy& tol) {
  const EigenDecomposition eig = eigh(frame_operator(f), tol);
  const double lower = eig.values.back();
  const double upper = eig.values.front();
  const double mean = std::accumulate(eig.values.begin(), eig.values.end(), 0.0) /
                      static_cast<double>(eig.values.size());
  const bool tight = lower > tol.zero &&
                     upper - lower <= tol.tight * std::max(1.0, upper);
  return {tight, mean};
}

bool is_parseval(const Frame& f, const TolerancePolicy& tol) {
  const Tightness t = is_tight(f, tol);
  return t.tight && std::abs(t.bound - 1.0) <= tol.tight;
}

Uniformity is_uniform(const Frame& f, const TolerancePolicy& tol) {
  double lo = norm(f[0]);
  double hi = lo;
  for (std::size_t i = 1; i < f.size(); ++i) {
    const double c = norm(f[i]);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  return {hi - lo <= tol.tight * std::max(1.0, hi), hi};
}

bool is_unit_norm(const Frame& f, const TolerancePolicy& tol) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(norm(f[i]) - 1.0) > tol.tight) return false;
  }
  return true;
}

Frame canonical_dual(const Frame& f, const TolerancePolicy& tol) {
  SymmetricMatrix inverse(0);
  try {
    inverse = spd_inverse(frame_operator(f), tol);
  } catch (const InputError& e) {
    throw InputError(std::string("canonical dual needs a frame: ") + e.what());
  }
  std::vector<std::vector<double>> duals;
  duals.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    duals.push_back(matvec(inverse.dense(), f[i]));
  }
  return Frame(f.dim(), std::move(duals));
}

DualCheck verify_dual(const Frame& f, const Frame& dual, const TolerancePolicy& tol) {
  if (f.dim() != dual.dim() || f.size() != dual.size()) {
    throw InputError("dual candidate shape (" + std::to_string(dual.size()) + "," +
                     std::to_string(dual.dim()) + ") does not match frame shape (" +
                     std::to_string(f.size()) + "," + std::to_string(f.dim()) + ")");
  }
  const Matrix b = synthesis_matrix(f);
  const Matrix c = synthesis_matrix(dual);
  const Matrix id = Matrix::identity(f.dim());
  // x = sum <x, f_i> g_i for all x iff C B^T = I; the transposed ordering
  // covers x = sum <x, g_i> f_i.
  const double forward = max_abs_diff(matmul(c, transpose(b)), id);
  const double backward = max_abs_diff(matmul(b, transpose(c)), id);
  const double residual = std::max(forward, backward);
  return {residual <= tol.tight, residual};
}

std::vector<double> reconstruct(const Frame& f, const Frame& dual,
                                std::span<const double> coefficients) {
  if (f.dim() != dual.dim() || f.size() != dual.size()) {
    throw InputError("dual shape does not match frame shape in reconstruct");
  }
  if (coefficients.size() != f.size()) {
    throw InputError("got " + std::to_string(coefficients.size()) +
                     " coefficients for " + std::to_string(f.size()) + " frame vectors");
  }
  std::vector<double> x(f.dim(), 0.0);
  for (std::size_t i = 0; i < dual.size(); ++i) {
    for (std::size_t j = 0; j < dual.dim(); ++j) {
      x[j] += coefficients[i] * dual[i][j];
    }
  }
  return x;
}

}  // namespace graphframes
