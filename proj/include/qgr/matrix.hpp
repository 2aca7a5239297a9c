#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "qgr/numeric.hpp"

namespace qgr {

// Dense exact matrix. All arithmetic is exact (Int or Rat entries);
// no floating point anywhere in the library.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& v = (*this)(i, k);
        if (v == T(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix pow(unsigned long e) const {
    assert(rows_ == cols_);
    Matrix base = *this;
    Matrix acc = identity(rows_);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

  std::vector<T> row(std::size_t i) const {
    std::vector<T> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != T(0)) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

// Rows span {x : x * m = 0}.
RatMatrix left_kernel(const RatMatrix& m);

// Columns span {z : m * z = 0}.
RatMatrix right_kernel(const RatMatrix& m);

// One solution x of m * x = b (column vector), if consistent.
std::optional<std::vector<Rat>> solve(const RatMatrix& m, const std::vector<Rat>& b);

// Row-vector product x * m.
template <typename T>
std::vector<T> vec_mat(const std::vector<T>& x, const Matrix<T>& m) {
  assert(x.size() == m.rows());
  std::vector<T> r(m.cols(), T(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == T(0)) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += x[i] * m(i, j);
  }
  return r;
}

// Matrix-vector product m * x.
template <typename T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& x) {
  assert(x.size() == m.cols());
  std::vector<T> r(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) r[i] += m(i, j) * x[j];
  return r;
}

// Exact inverse of a unipotent upper-triangular integer matrix,
// via the finite Neumann series of N - I.
IntMatrix unipotent_inverse(const IntMatrix& n);

// Integer power N^z for unipotent N, z of either sign.
IntMatrix unipotent_power(const IntMatrix& n, const Int& z);

// Polynomial in the binomial basis: p(z) = sum_l coeff[l] * C(z, l).
class BinomialPolynomial {
 public:
  BinomialPolynomial() = default;
  explicit BinomialPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rat eval(const Int& z) const {
    Rat r = 0;
    for (std::size_t l = 0; l < coeffs_.size(); ++l) r += coeffs_[l] * binomial_at(z, l);
    return r;
  }

  // Coefficients in the monomial basis, ascending powers of z.
  std::vector<Rat> monomial_coeffs() const;

  Rat leading_monomial_coeff() const;

  // All real roots lie strictly below this bound (Cauchy bound); for
  // integer z > bound the sign of p(z) is the sign of the leading
  // coefficient. Returns 0 for constant polynomials.
  Int real_root_bound() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;
};

}  // namespace qgr
