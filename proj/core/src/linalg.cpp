#include "lojex/linalg.hpp"

#include "lojex/errors.hpp"

namespace lojex {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rational Matrix::trace() const {
  if (!is_square()) throw DomainError("trace of a non-square matrix");
  Rational t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum shape mismatch");
  Matrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
  return r;
}

Matrix operator*(const Rational& s, Matrix m) {
  for (auto& x : m.a_) x *= s;
  return m;
}

namespace {

// Gaussian elimination to row echelon form; returns the rank and the sign/
// product bookkeeping for the determinant.
struct Echelon {
  std::size_t rank = 0;
  Rational det_factor{1};
};

Echelon eliminate(Matrix& m, Matrix* companion = nullptr) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) {
      e.det_factor = 0;
      continue;
    }
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j)
          std::swap((*companion)(piv, j), (*companion)(row, j));
      e.det_factor = -e.det_factor;
    }
    Rational p = m(row, col);
    e.det_factor *= p;
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) /= p;
    if (companion)
      for (std::size_t j = 0; j < companion->cols(); ++j) (*companion)(row, j) /= p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j)
          (*companion)(i, j) -= f * (*companion)(row, j);
    }
    ++row;
  }
  e.rank = row;
  return e;
}

}  // namespace

Rational determinant(Matrix m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  Echelon e = eliminate(m);
  return e.rank == m.rows() ? e.det_factor : Rational(0);
}

std::size_t rank(Matrix m) { return eliminate(m).rank; }

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  Matrix a = m;
  Matrix inv = Matrix::identity(m.rows());
  if (eliminate(a, &inv).rank != m.rows()) return std::nullopt;
  return inv;
}

std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
  if (!m.is_square() || b.size() != m.rows()) throw DomainError("solve: shape mismatch");
  Matrix a = m;
  Matrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  if (eliminate(a, &rhs).rank != m.rows()) return std::nullopt;
  std::vector<Rational> x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
  return x;
}

UPoly charpoly_faddeev(const Matrix& a) {
  if (!a.is_square()) throw DomainError("charpoly of a non-square matrix");
  const std::size_t n = a.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + c[n - k + 1] * Matrix::identity(n);
    c[n - k] = -(a * mk).trace() / static_cast<unsigned long>(k);
  }
  return UPoly(std::move(c));
}

UPoly charpoly_minors(const Matrix& a) {
  if (!a.is_square()) throw DomainError("charpoly of a non-square matrix");
  const std::size_t n = a.rows();
  if (n > 20) throw DomainError("charpoly_minors: matrix too large for subset enumeration");
  std::vector<Rational> e(n + 1, Rational(0));
  e[0] = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Matrix sub(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = a(idx[i], idx[j]);
    e[idx.size()] += determinant(sub);
  }
  // det(tI - A) = sum_k (-1)^k e_k t^(n-k)
  std::vector<Rational> c(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = (k % 2 ? -e[k] : e[k]);
  return UPoly(std::move(c));
}

std::string to_string(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + to_string(m(i, j));
    out += "]";
  }
  return out + "]";
}

}  // namespace lojex
