#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lojex/grading.hpp"
#include "lojex/poly.hpp"

namespace lojex {

/// Computations in the local ring of germs at the origin.
///
/// Monomials are compared by the local degree order: lower total degree is
/// larger, ties broken lexicographically in the declared variable order.
///
/// Two completion modes exist. The truncated mode works in O/m^B, where plain
/// reduction terminates; once every monomial of degree B-1 is a leading
/// monomial, Nakayama gives m^(B-1) inside the ideal and the basis is exact
/// (the ideal is then "closed"). The exact mode runs Mora's tangent-cone
/// normal form and handles ideals of positive dimension.
struct LocalRingOptions {
  /// Degree up to which cofactor series are expanded in the exact mode.
  std::uint64_t cofactor_degree = 6;
  /// Fixed truncation: work modulo m^(degree_bound+1). Zero selects the
  /// automatic schedule (doubling truncation, then exact completion).
  std::uint64_t degree_bound = 0;
  /// Largest truncation tried by the automatic schedule.
  std::uint64_t degree_cap = 256;
  /// Record division histories so membership can return cofactors.
  bool track_cofactors = false;
  std::size_t max_basis_size = 4000;
  std::size_t max_pairs = 200000;
  std::size_t max_terms = 500000;
  std::size_t max_reduction_steps = 2000000;
};

/// Local standard basis of an ideal.
class LocalBasis {
 public:
  const std::vector<Poly>& generators() const { return basis_; }
  const std::vector<Poly>& source_ideal() const { return source_; }
  std::size_t nvars() const { return nvars_; }
  bool reduced() const { return false; }
  bool tracks_cofactors() const { return tracking_; }
  std::uint64_t cofactor_degree() const { return cofactor_degree_; }
  /// Truncation degree B (arithmetic modulo m^B); 0 for an exact basis.
  std::uint64_t truncation() const { return truncation_; }
  /// True when the truncated computation proved m^(B-1) lies in the ideal,
  /// so normal forms decide membership exactly.
  bool closed() const { return closed_; }
  /// True when membership answers are exact (closed, or not truncated).
  bool decisive() const { return truncation_ == 0 || closed_; }
  /// Human-readable descriptor of the monomial order.
  static std::string order_name() { return "local degree order (anti-graded, lex tie-break)"; }

  /// Leading exponents of the basis elements under the local order.
  std::vector<Exponent> leading_exponents() const;

  /// Representation of basis element k: unit * basis[k] = sum cof[i] * source[i],
  /// exact up to cofactor_degree. Empty unless cofactors are tracked.
  struct Representation {
    Poly unit;
    std::vector<Poly> cofactors;
  };
  const std::vector<Representation>& representations() const { return reps_; }

 private:
  friend LocalBasis standard_basis(std::span<const Poly>, const LocalRingOptions&);
  std::size_t nvars_ = 0;
  std::vector<Poly> source_;
  std::vector<Poly> basis_;
  std::vector<Representation> reps_;
  bool tracking_ = false;
  std::uint64_t cofactor_degree_ = 0;
  std::uint64_t truncation_ = 0;
  bool closed_ = false;
  LocalRingOptions options_;
  friend struct LocalBasisAccess;
};

LocalBasis standard_basis(std::span<const Poly> gens, const LocalRingOptions& options = {});

/// Local normal form (modulo m^B for truncated bases). For a decisive basis
/// it vanishes iff p lies in the ideal.
Poly normal_form(const Poly& p, const LocalBasis& basis);

/// target = sum cofactors[i] * generators[i] in the local ring.
///
/// Cofactors are power series truncated at certified_degree; the identity is
/// checked modulo terms of degree > certified_degree, and identically when
/// `exact` is set.
struct MembershipCertificate {
  Poly target;
  std::vector<Poly> generators;
  std::vector<Poly> cofactors;
  std::uint64_t certified_degree = 0;
  bool exact = false;
  /// Optional unit-scaled identity unit * target = sum scaled[i] * generators[i],
  /// exact when `unit_identity_exact` (no truncation happened).
  std::optional<Poly> unit;
  std::vector<Poly> scaled_cofactors;
  bool unit_identity_exact = false;
};

/// Re-verifies a certificate by expansion.
bool verify_certificate(const MembershipCertificate& cert);

/// Returns a certificate iff p lies in the ideal. The basis must track cofactors.
/// A non-zero normal form is always a certified "no"; a zero normal form over
/// a truncated basis that is not closed throws InconclusiveError.
std::optional<MembershipCertificate> membership(const Poly& p, const LocalBasis& basis);

/// Milnor number as the local quotient dimension by the gradient ideal.
struct MilnorResult {
  /// nullopt: the staircase is not cofinite (non-isolated critical point).
  std::optional<std::uint64_t> value;
  std::vector<Exponent> staircase_corners;
  std::size_t basis_size = 0;
  /// Truncation degree of the deciding computation (0: exact completion).
  std::uint64_t truncation = 0;
};

MilnorResult milnor_number(const Poly& f, const LocalRingOptions& options = {});

/// Local quotient dimension of an arbitrary ideal; nullopt when infinite.
/// Throws InconclusiveError for a truncated basis that is not closed.
std::optional<std::uint64_t> quotient_dimension(const LocalBasis& basis);

/// Smallest k <= k_max with z_i^k in the ideal generated by the gradient with
/// the i-th partial omitted.
struct PowerMembershipResult {
  std::uint32_t k = 0;
  MembershipCertificate certificate;
};
std::optional<PowerMembershipResult> power_membership(const Poly& f, std::size_t i,
                                                      std::uint32_t k_max,
                                                      const LocalRingOptions& options = {});

/// Euler relation sum l_i z_i df/dz_i = f for f quasihomogeneous of type (1; l).
/// Throws DomainError when f is not of that type.
MembershipCertificate euler_certificate(const Poly& f, const WeightVector& w);

/// Inverse of a unit power series up to the given degree.
Poly invert_unit(const Poly& u, std::uint64_t max_degree);

}  // namespace lojex
