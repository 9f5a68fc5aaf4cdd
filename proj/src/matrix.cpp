#include "dilute/matrix.hpp"

#include <stdexcept>

namespace dilute {

ScalarMatrix ScalarMatrix::identity(int n) {
  ScalarMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RationalScalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  ScalarMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return out;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch");
  ScalarMatrix out = *this;
  for (int i = 0; i < rows_ * cols_; ++i) out.data_[i] += rhs.data_[i];
  return out;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& rhs) const {
  return *this + rhs.scaled(RationalScalar(-1));
}

ScalarMatrix ScalarMatrix::scaled(const RationalScalar& s) const {
  ScalarMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

ScalarMatrix ScalarMatrix::transposed() const {
  ScalarMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

ScalarMatrix kronecker(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return out;
}

ScalarMatrix inverse2x2(const ScalarMatrix& m) {
  if (m.rows() == 1 && m.cols() == 1) {
    ScalarMatrix out(1, 1);
    out.at(0, 0) = m.at(0, 0).inverse();
    return out;
  }
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("inverse2x2: bad shape");
  RationalScalar det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (det.is_zero()) throw std::domain_error("singular matrix");
  ScalarMatrix out(2, 2);
  RationalScalar inv = det.inverse();
  out.at(0, 0) = m.at(1, 1) * inv;
  out.at(1, 1) = m.at(0, 0) * inv;
  out.at(0, 1) = -m.at(0, 1) * inv;
  out.at(1, 0) = -m.at(1, 0) * inv;
  return out;
}

int rank(ScalarMatrix m) {
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = -1;
    for (int row = r; row < m.rows(); ++row) {
      if (!m.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    RationalScalar lead = m.at(r, col).inverse();
    for (int row = r + 1; row < m.rows(); ++row) {
      if (m.at(row, col).is_zero()) continue;
      RationalScalar f = m.at(row, col) * lead;
      for (int j = col; j < m.cols(); ++j) m.at(row, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace dilute
