#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lojex/grading.hpp"
#include "lojex/poly.hpp"
#include "lojex/reduce.hpp"

namespace lojex::testing {

struct Germ {
  std::string name;
  std::vector<std::string> vars;
  Poly f;
  WeightVector w;
};

/// Exponent tuples of the diagonal corpus: every ordered tuple over {2..6}
/// for n = 2, 3 and every non-decreasing tuple for n = 4.
std::vector<std::vector<unsigned>> bp_tuples();

/// Hand-picked germs with a known weight type.
std::vector<Germ> named_germs();

/// Semiquasihomogeneous corpus: diagonal germs, diagonal germs with seeded
/// tails above level 1, and the named positive-weight germs.
std::vector<Germ> sqh_corpus();

/// Random monomial strictly above the level of w. A draw of total degree in
/// [2, max_degree] that lands too low is pushed up along positive-weight
/// variables, so small weights still get tails.
Exponent random_tail_exponent(const WeightVector& w, unsigned max_degree, std::mt19937_64& rng);

/// Small non-zero rational p/q with |p|, q <= 5.
Rational random_coefficient(std::mt19937_64& rng);

/// Random three-variable type that satisfies the Saito pairing together with
/// a germ of that type whose principal part is an isolated singularity.
struct WitnessedType {
  WeightVector w;
  Poly germ;
  std::string family;
};
WitnessedType random_saito_type(std::mt19937_64& rng);

/// Germ of the hyperbolic-pair shape f0(y) + sum c_j x_j z_j + tail.
struct SplittingGerm {
  Poly f;
  WeightVector w;
  Pairing pairing;
  std::vector<std::size_t> y_vars;
  Poly f0;  // in the y variables only
  WeightVector y_weights;
};
SplittingGerm random_splitting_germ(std::mt19937_64& rng);

}  // namespace lojex::testing
