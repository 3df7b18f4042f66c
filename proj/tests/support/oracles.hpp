#pragma once

// Independent reference computations used to cross-check the library.
// None of these call into the algorithms they are meant to validate.

#include <cstdint>
#include <optional>
#include <vector>

#include "lojex/linalg.hpp"
#include "lojex/poly.hpp"
#include "lojex/rational.hpp"
#include "lojex/upoly.hpp"

namespace lojex::testing {

/// dim O / (I + m^B) for the ideal generated by `gens`, by plain linear
/// algebra on the truncated monomial space.
std::uint64_t truncated_colength(const std::vector<Poly>& gens, unsigned B);

/// Milnor number from the first plateau of B -> dim O/(grad f + m^B).
/// A plateau at B means m^B lies in I + m^(B+1), hence in I (Nakayama), so
/// the value is exact. nullopt when no plateau shows up by max_B.
std::optional<std::uint64_t> nakayama_milnor(const Poly& f, unsigned max_B = 12);

/// det(t I - m) by cofactor expansion along the first row.
UPoly laplace_charpoly(const Matrix& m);

/// ord_t of grad f along phi_i = c_i t^{e_i}, computed by grouping terms by
/// the pairing <a, e> instead of expanding compositions. nullopt when every
/// component vanishes identically.
std::optional<std::uint64_t> monomial_curve_gradient_order(const Poly& f,
                                                           const std::vector<Rational>& c,
                                                           const std::vector<unsigned>& e);

/// Multiset exponent written from scratch: drop one copy of 1 - a for each
/// weight a > 1/2, add 1/2, take the minimum m, return 1/m - 1. nullopt when
/// a partner 1 - a is missing.
std::optional<Rational> reference_multiset_exponent(const std::vector<Rational>& weights);

/// Brieskorn-Pham invariants: max(a) - 1 and prod(a - 1).
Rational bp_exponent(const std::vector<unsigned>& a);
std::uint64_t bp_milnor(const std::vector<unsigned>& a);

/// sum z_i^{a_i}
Poly bp_germ(const std::vector<unsigned>& a);

}  // namespace lojex::testing
