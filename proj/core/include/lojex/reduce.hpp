#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lojex/grading.hpp"
#include "lojex/linalg.hpp"
#include "lojex/localring.hpp"
#include "lojex/poly.hpp"

namespace lojex {

/// (x index, z index) of a hyperbolic pair x*z whose weights sum to 1.
using Pairing = std::vector<std::pair<std::size_t, std::size_t>>;

/// Splitting iteration state. The germ is tracked as
///   germ = principal_y + H + sum_j (x_j + Gamma_j)(z_j + Delta_j) + R
/// exactly, where principal_y involves only the unpaired variables.
struct ReductionState {
  std::size_t m = 1;
  Poly H;
  std::vector<Poly> Gamma;
  std::vector<Poly> Delta;
  Poly R;
  /// Weighted order of the initial tail; empty when the tail is zero.
  std::optional<Rational> d1;
  Pairing pairing;
  std::uint64_t M = 1;
  WeightVector weights;  // normalized, full arity
  Poly germ;
  Poly principal_y;
};

/// Violations of the state invariants (empty when all hold): the
/// reconstruction identity, ord H > 1, the Gamma/Delta order bounds and
/// ord R >= m(d1 - 1) + 1, all in exact weighted orders.
std::vector<std::string> check_state(const ReductionState& s);

/// One splitting step: R = eta(y) + sum_j (x_j delta_j + z_j gamma_j), with
/// y-only monomials to eta, then the smallest x_j dividing, then the smallest
/// z_j dividing. Throws InvariantError on a constant monomial in R.
ReductionState decompose_step(const ReductionState& s);

struct TraceStep {
  enum class Kind { AddSquare, RemoveSquarePair, LinearChange, PolynomialChange };
  Kind kind = Kind::LinearChange;
  /// Variable names of the ring the step acts on.
  std::vector<std::string> names;
  /// Variables touched (square: the new one; pair: x then z; linear: rows).
  std::vector<std::size_t> vars;
  /// Linear change on `vars` (new = matrix * old).
  Matrix matrix;
  /// Polynomial change: new coordinates as functions of the old ones, and
  /// the inverse, checked to compose to the identity up to verified_degree.
  std::vector<Poly> map;
  std::vector<Poly> inverse;
  std::uint64_t verified_degree = 0;
  bool exact_inverse = false;
  std::string note;
};

std::string to_string(TraceStep::Kind k);

struct StableEquivalenceTrace {
  std::vector<TraceStep> steps;
  void append(const StableEquivalenceTrace& o) {
    steps.insert(steps.end(), o.steps.begin(), o.steps.end());
  }
};

struct ReduceOptions {
  LocalRingOptions local;
  /// Splitting iteration budget; 0 means 4 * M.
  std::size_t max_iterations = 0;
  /// Cap on the total number of terms in H, R, Gamma and Delta. Exact states
  /// can grow quickly when d1 is close to 1; 0 disables the cap.
  std::size_t max_state_terms = 20000;
  /// Variable names of the input ring; defaults to x1..xn.
  std::vector<std::string> names;
  /// Called with every splitting state, the initial one included.
  std::function<void(const ReductionState&)> observer;
};

struct ReductionResult {
  /// Reduced germ in the surviving variables (zero variables for A1).
  Poly core;
  WeightVector weights;
  std::vector<std::string> names;
  StableEquivalenceTrace trace;
  bool a1 = false;
  std::size_t iterations = 0;
  std::uint64_t milnor_bound = 0;
  /// M fell back to the weight product bound because mu(f0) was over budget.
  bool milnor_fallback = false;
};

/// Splitting of hyperbolic pairs. The level-1 part of f must be f0(y) + sum c_j x_j z_j.
ReductionResult splitting_reduce(const Poly& f, const WeightVector& w, const Pairing& pairing,
                                 const ReduceOptions& options = {});

/// Eliminates weights above 1/2 for WSQH germs with all weights in (0, 1).
ReductionResult theorem4_reduce(const Poly& f, const WeightVector& w,
                                const ReduceOptions& options = {});

/// Removes the non-positive weights under the restricted pattern: every
/// x_j of weight <= 0 appears in the principal part as x_j * P_j with the
/// linear parts of the P_j invertible over the partner variables.
ReductionResult corollary25_reduce(const Poly& f, const WeightVector& w,
                                   const ReduceOptions& options = {});

/// Runs corollary25_reduce when needed, then theorem4_reduce. The result is
/// flagged A1 when every surviving weight is 1/2.
ReductionResult full_reduce(const Poly& f, const WeightVector& w, const ReduceOptions& options = {});

/// f + u^2 in a fresh last variable.
Poly add_square(const Poly& f);
WeightVector add_square(const WeightVector& w);

/// Inverse of a polynomial map with vanishing constant terms and invertible
/// linear part, truncated at `degree` and verified; nullopt if the linear
/// part is singular.
std::optional<std::vector<Poly>> invert_map(std::span<const Poly> map, std::uint64_t degree);

/// True when map(inverse(v)) == v modulo terms of degree > degree.
bool verify_inverse(std::span<const Poly> map, std::span<const Poly> inverse,
                    std::uint64_t degree);

/// Restricts p to the variables `keep` (in that order). Throws DomainError if
/// p involves any other variable.
Poly project(const Poly& p, std::span<const std::size_t> keep);

}  // namespace lojex
