#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lojex/poly.hpp"
#include "lojex/rational.hpp"
#include "lojex/upoly.hpp"

namespace lojex {

/// Analytic arc t -> (phi_1(t), ..., phi_n(t)) through the origin.
struct TestCurve {
  std::vector<UPoly> components;

  /// Minimum t-order over the non-zero components; throws DomainError for
  /// the zero curve or a component with a constant term.
  std::uint64_t ord() const;
};

std::string to_string(const TestCurve& c);

/// ord(grad f o phi) / ord(phi), a lower bound for the exponent.
/// Throws DomainError when grad f vanishes identically along phi.
Rational curve_ratio(const Poly& f, const TestCurve& phi);

struct LowerBound {
  Rational value;
  TestCurve witness;
  std::string witness_text;
  /// "axis", "monomial" or "random".
  std::string family;
  std::size_t curves_tried = 0;
};

/// Best ratio over the coordinate axes, every monomial curve (c_i t^{e_i})
/// with c_i in {0, 1, -1} and 1 <= e_i <= max_exponent, and `trials` seeded
/// random polynomial curves with coefficients p/q, |p|, |q| <= 10. Ties go to
/// the lexicographically smallest (family, witness text), axes first.
LowerBound lower_bound_search(const Poly& f, unsigned max_exponent, std::size_t trials,
                              std::uint64_t seed);

}  // namespace lojex
