#pragma once

#include <vector>

#include "dilute/scalars.hpp"

namespace dilute {

// Dense matrix over the exact scalar field; just enough linear algebra for
// rank computations, Kronecker products and 2x2 inverses.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ScalarMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RationalScalar& at(int r, int c) { return data_[r * cols_ + c]; }
  const RationalScalar& at(int r, int c) const { return data_[r * cols_ + c]; }

  bool operator==(const ScalarMatrix&) const = default;

  ScalarMatrix operator*(const ScalarMatrix& rhs) const;
  ScalarMatrix operator+(const ScalarMatrix& rhs) const;
  ScalarMatrix operator-(const ScalarMatrix& rhs) const;
  ScalarMatrix scaled(const RationalScalar& s) const;
  ScalarMatrix transposed() const;

  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<RationalScalar> data_;
};

ScalarMatrix kronecker(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix inverse2x2(const ScalarMatrix& m);  // throws if singular or not 2x2 / 1x1

// Exact rank by Gaussian elimination.
int rank(ScalarMatrix m);

}  // namespace dilute
