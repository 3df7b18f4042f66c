#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lojex/rational.hpp"
#include "lojex/upoly.hpp"

namespace lojex {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Rational trace() const;
  Matrix transposed() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, Matrix m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Rational determinant(Matrix m);
std::size_t rank(Matrix m);
/// nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Unique solution of m x = b for square non-singular m; nullopt otherwise.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);

/// det(t I - m) by the Faddeev-LeVerrier recursion.
UPoly charpoly_faddeev(const Matrix& m);
/// det(t I - m) from sums of principal minors (elementary symmetric functions
/// of the eigenvalues). Exponential in n; an independent check for small n.
UPoly charpoly_minors(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace lojex
