#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lojex/exponent.hpp"
#include "lojex/linalg.hpp"
#include "lojex/localring.hpp"
#include "lojex/rational.hpp"
#include "lojex/upoly.hpp"

namespace lojex {

/// Disk |z - center| <= radius holding `multiplicity` eigenvalues (counted
/// with multiplicity). A zero radius marks an exact rational eigenvalue.
struct ComplexEnclosure {
  Rational re;
  Rational im;
  Rational radius;
  std::uint32_t multiplicity = 1;
};

struct EigenOptions {
  /// Target width of each real-part interval relative to max(1, |root|).
  Rational tol{Rational(1) / Rational(Integer(1) << 64)};
  /// Working precision cap in bits before giving up on the target width.
  unsigned max_precision = 4096;
};

struct EigenWeightData {
  Matrix jacobian;
  UPoly charpoly;
  std::vector<ComplexEnclosure> alpha;
  /// Real parts with multiplicity, sorted by midpoint.
  std::vector<Interval> realparts;
  /// False when refinement stalled before the target width.
  bool converged = true;
  Rational max_width;
  std::string report;
};

/// Linear coefficients of the cofactors: row i holds the gradient of g_i at 0.
Matrix jacobian_at_zero(const MembershipCertificate& cert);

/// Exact characteristic polynomial (two independent computations are
/// compared), rational roots split off exactly, the remaining roots isolated
/// in certified disks.
EigenWeightData eigen_real_parts(const Matrix& m, const EigenOptions& options = {});

struct Theorem5Options {
  EigenOptions eigen;
  /// Largest denominator accepted when the exponent is read off an enclosure.
  Integer denominator_cap{1000000};
  /// Extra refinement rounds when an interval comparison is undecided.
  unsigned retries = 4;
  LocalRingOptions local;
};

struct Theorem5Result {
  Rational value;
  /// The value was recovered from a narrow enclosure, not computed exactly.
  bool recovered = false;
  MembershipCertificate certificate;
  bool certificate_constructed = false;
  EigenWeightData eigen;
  ExponentData exponent;
};

/// Throws DomainError when f is not in its gradient ideal, and
/// InconclusiveError when the eigen-weight comparisons stay undecided.
Theorem5Result theorem5_exponent(const Poly& f, const std::optional<MembershipCertificate>& cert,
                                 const Theorem5Options& options = {});

}  // namespace lojex
