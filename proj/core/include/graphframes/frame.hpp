#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphframes/matrix.hpp"
#include "graphframes/tolerance.hpp"

namespace graphframes {

// Ordered list of n candidate frame vectors in R^k, n >= k >= 1. Whether the
// list actually spans (and so is a frame) is a numerical question answered
// by is_frame(); the type itself only pins the shape.
class Frame {
 public:
  // Throws InputError unless dim >= 1, vectors.size() >= dim, and every
  // vector has exactly dim entries.
  Frame(std::size_t dim, std::vector<std::vector<double>> vectors);

  std::size_t dim() const { return dim_; }     // k
  std::size_t size() const { return vectors_.size(); }  // n

  const std::vector<double>& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<std::vector<double>>& vectors() const { return vectors_; }

  bool operator==(const Frame&) const = default;

 private:
  std::size_t dim_;
  std::vector<std::vector<double>> vectors_;
};

// k x n matrix whose column i is the i-th frame vector.
Matrix synthesis_matrix(const Frame& f);

// Coefficient sequence (<x, f_0>, ..., <x, f_{n-1}>).
std::vector<double> analysis_apply(const Frame& f, std::span<const double> x);

// Frame operator S = B B^T (k x k) where B is the synthesis matrix.
SymmetricMatrix frame_operator(const Frame& f);

// Gramian B^T B (n x n): entry (i, j) is <f_j, f_i>.
SymmetricMatrix gramian(const Frame& f);

struct FrameBounds {
  double lower = 0.0;  // smallest frame-operator eigenvalue
  double upper = 0.0;  // largest frame-operator eigenvalue
};
FrameBounds frame_bounds(const Frame& f, const TolerancePolicy& tol = {});

// True when the lower frame bound is positive beyond tol.zero, i.e. the
// vectors span R^k.
bool is_frame(const Frame& f, const TolerancePolicy& tol = {});

struct Tightness {
  bool tight = false;
  // Mean frame-operator eigenvalue; equals the tight bound when tight.
  double bound = 0.0;
};
// Tight when upper - lower <= tol.tight * max(1, upper).
Tightness is_tight(const Frame& f, const TolerancePolicy& tol = {});

// Tight with bound 1.
bool is_parseval(const Frame& f, const TolerancePolicy& tol = {});

struct Uniformity {
  bool uniform = false;
  // Largest vector norm; the common norm when uniform.
  double norm = 0.0;
};
Uniformity is_uniform(const Frame& f, const TolerancePolicy& tol = {});

bool is_unit_norm(const Frame& f, const TolerancePolicy& tol = {});

// Canonical dual {S^{-1} f_i}. Throws InputError when the vectors do not
// form a frame (S singular within tolerance).
Frame canonical_dual(const Frame& f, const TolerancePolicy& tol = {});

struct DualCheck {
  bool valid = false;
  // Largest deviation of C B^T and B C^T from the identity, i.e. the worst
  // reconstruction defect over standard basis vectors in either role.
  double residual = 0.0;
};
DualCheck verify_dual(const Frame& f, const Frame& dual, const TolerancePolicy& tol = {});

// Sum of coefficients[i] * dual_i. With coefficients = analysis_apply(f, x)
// and a verified dual, this returns x up to the duality residual.
std::vector<double> reconstruct(const Frame& f, const Frame& dual,
                                std::span<const double> coefficients);

}  // namespace graphframes
