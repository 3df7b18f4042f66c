#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lojex/rational.hpp"

namespace lojex {

/// Exponent vector a of the monomial z^a.
using Exponent = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponent& a);

/// Graded-lex "greater than": higher total degree first, ties broken
/// lexicographically with the first variable most significant.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in graded-lex descending order and no stored coefficient is
/// ever zero, so two polynomials are equal iff their term maps are equal and
/// printing is canonical.
class Poly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  Poly() : Poly(1) {}
  explicit Poly(std::size_t nvars);

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(const Exponent& a, const Rational& c = Rational(1));

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coeff(const Exponent& a) const;
  Rational constant_term() const;

  /// Adds c*z^a, dropping the term if it cancels.
  void add_term(const Exponent& a, const Rational& c);

  /// Highest total degree; 0 for constants, nullopt for the zero polynomial.
  std::optional<std::uint64_t> degree() const;
  /// Ordinary order (lowest total degree); nullopt for the zero polynomial.
  std::optional<std::uint64_t> order() const;

  /// Terms of total degree <= max_degree.
  Poly truncated(std::uint64_t max_degree) const;
  /// Terms of total degree exactly k.
  Poly homogeneous_part(std::uint64_t k) const;

  bool depends_on(std::size_t i) const;

  Poly partial(std::size_t i) const;
  std::vector<Poly> gradient() const;
  /// Gradient with the i-th partial omitted.
  std::vector<Poly> deleted_gradient(std::size_t i) const;

  Poly pow(unsigned k) const;

  /// Re-embeds into a ring with new_nvars variables; variable j goes to
  /// position placement[j].
  Poly embed(std::size_t new_nvars, std::span<const std::size_t> placement) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_arity(const Poly& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// Product with all terms of total degree > max_degree discarded.
Poly multiply_truncated(const Poly& a, const Poly& b, std::uint64_t max_degree);

/// p(map[0], ..., map[n-1]); every map entry lives in the same target ring.
Poly substitute(const Poly& p, std::span<const Poly> map);

/// As substitute, discarding every term of total degree > max_degree.
Poly substitute_truncated(const Poly& p, std::span<const Poly> map,
                          std::uint64_t max_degree);

/// Canonical text: graded-lex descending, explicit '*' and '^'.
std::string to_string(const Poly& p, std::span<const std::string> names);

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t n);

}  // namespace lojex
