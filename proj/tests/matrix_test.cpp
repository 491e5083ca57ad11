#include "graphframes/matrix.hpp"

#include <gtest/gtest.h>

#include "graphframes/errors.hpp"

namespace graphframes {
namespace {

TEST(Matrix, IdentityAndAccess) {
  const Matrix id = Matrix::identity(3);
  EXPECT_EQ(id.rows(), 3u);
  EXPECT_EQ(id.cols(), 3u);
  EXPECT_EQ(id(0, 0), 1.0);
  EXPECT_EQ(id(0, 1), 0.0);
  EXPECT_EQ(id(2, 2), 1.0);
}

TEST(Matrix, MatmulAgainstHandComputedProduct) {
  Matrix a(2, 3);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
  a(1, 0) = 4; a(1, 1) = 5; a(1, 2) = 6;
  Matrix b(3, 2);
  b(0, 0) = 7; b(0, 1) = 8;
  b(1, 0) = 9; b(1, 1) = 10;
  b(2, 0) = 11; b(2, 1) = 12;

  const Matrix c = matmul(a, b);
  ASSERT_EQ(c.rows(), 2u);
  ASSERT_EQ(c.cols(), 2u);
  EXPECT_EQ(c(0, 0), 58.0);
  EXPECT_EQ(c(0, 1), 64.0);
  EXPECT_EQ(c(1, 0), 139.0);
  EXPECT_EQ(c(1, 1), 154.0);
}

TEST(Matrix, MatmulIdentityIsNeutral) {
  Matrix a(2, 2);
  a(0, 0) = 1.5; a(0, 1) = -2.25;
  a(1, 0) = 0.125; a(1, 1) = 3.75;
  EXPECT_EQ(matmul(a, Matrix::identity(2)), a);
  EXPECT_EQ(matmul(Matrix::identity(2), a), a);
}

TEST(Matrix, MatmulShapeMismatchThrows) {
  EXPECT_THROW(matmul(Matrix(2, 3), Matrix(2, 3)), InputError);
}

TEST(Matrix, TransposeIsInvolutive) {
  Matrix a(2, 3);
  a(0, 2) = 5.0;
  a(1, 0) = -1.0;
  const Matrix t = transpose(a);
  EXPECT_EQ(t.rows(), 3u);
  EXPECT_EQ(t(2, 0), 5.0);
  EXPECT_EQ(t(0, 1), -1.0);
  EXPECT_EQ(transpose(t), a);
}

TEST(Matrix, MaxAbsDiff) {
  Matrix a(2, 2);
  Matrix b(2, 2);
  b(1, 0) = -0.5;
  EXPECT_EQ(max_abs_diff(a, b), 0.5);
  EXPECT_EQ(max_abs_diff(a, a), 0.0);
  EXPECT_THROW(max_abs_diff(a, Matrix(2, 3)), InputError);
}

TEST(Matrix, MatvecAndVectorHelpers) {
  Matrix a(2, 2);
  a(0, 0) = 2; a(0, 1) = 1;
  a(1, 0) = 0; a(1, 1) = -1;
  const std::vector<double> x{3, 4};
  const std::vector<double> y = matvec(a, x);
  EXPECT_EQ(y, (std::vector<double>{10, -4}));

  EXPECT_EQ(dot(x, x), 25.0);
  EXPECT_EQ(norm(x), 5.0);
  EXPECT_EQ(max_abs(std::span<const double>(x)), 4.0);
  EXPECT_THROW(dot(x, std::vector<double>{1}), InputError);
}

TEST(SymmetricMatrix, SetMirrorsEntries) {
  SymmetricMatrix s(3);
  s.set(0, 2, -4.0);
  EXPECT_EQ(s(0, 2), -4.0);
  EXPECT_EQ(s(2, 0), -4.0);
}

TEST(SymmetricMatrix, FromDenseRejectsAsymmetry) {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0 + 1e-15;
  EXPECT_THROW(SymmetricMatrix::from_dense(m), InputError);
  EXPECT_THROW(SymmetricMatrix::from_dense(Matrix(2, 3)), InputError);

  m(1, 0) = 1.0;
  const SymmetricMatrix s = SymmetricMatrix::from_dense(m);
  EXPECT_EQ(s(0, 1), 1.0);
}

}  // namespace
}  // namespace graphframes
