#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lojex/poly.hpp"
#include "lojex/rational.hpp"

namespace lojex {

/// Dense univariate polynomial c[0] + c[1] t + ... with rational coefficients.
/// The coefficient vector never ends in a zero, so the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly monomial(std::size_t k, const Rational& c = Rational(1));
  static UPoly constant(const Rational& c) { return monomial(0, c); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Index of the lowest non-zero coefficient; nullopt for zero.
  std::optional<std::size_t> order() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, UPoly a);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};
UDivision divide(const UPoly& a, const UPoly& b);

/// Monic greatest common divisor (zero when both inputs are zero).
UPoly gcd(UPoly a, UPoly b);

/// Yun's square-free decomposition: p = lc * prod factors[k]^(k+1), each
/// factor square-free, monic and pairwise coprime. Entries may be 1.
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

/// Distinct rational roots (rational root test on the integer-scaled polynomial).
std::vector<Rational> rational_roots(const UPoly& p);

std::string to_string(const UPoly& p, const std::string& var = "t");

/// p(phi_1(t), ..., phi_n(t)).
UPoly compose_curve(const Poly& p, std::span<const UPoly> phi);

}  // namespace lojex
