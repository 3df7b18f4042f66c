#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lojex/grading.hpp"
#include "lojex/rational.hpp"

namespace lojex {

/// Multisets behind the multiset formula for the Lojasiewicz exponent.
///
/// L holds the weights, L_minus holds 1 - a for every weight a > 1/2,
/// L_zero is (L minus L_minus, one copy per element) together with 1/2, and
/// value = 1/l_min - 1 with l_min = min L_zero. Exact weights give point
/// intervals throughout.
struct ExponentData {
  std::vector<Interval> L;
  /// 1/l_i where l_i is an exact weight outside {0, 1}.
  std::vector<std::optional<Rational>> reciprocals;
  std::vector<Interval> L_minus;
  /// Sorted ascending, duplicates (equal point intervals) removed.
  std::vector<Interval> L_zero;
  Interval l_min;
  Interval value;

  bool exact() const { return value.is_point(); }
  /// The exact value; throws DomainError when only an enclosure is known.
  const Rational& exact_value() const;
};

/// Exact evaluation. Throws DomainError when some 1 - a (a > 1/2) is not a
/// weight: such a vector cannot be the type of a WSQH germ.
ExponentData loj_wsqh(const WeightVector& w);

/// Interval evaluation for certified real parts. Comparisons against 1/2 that
/// straddle, and unmatched or ambiguous removals, throw InconclusiveError.
ExponentData loj_wsqh(std::span<const Interval> weights);

/// max(1/l_i) - 1 for weights in (0, 1/2].
Rational loj_sqh(const WeightVector& w);

/// min(max(w_i - 1), prod(w_i - 1)) with w_i = 1/l_i, or 2 when l_i is 0 or 1.
/// Fewer than three weights are padded with 1/2 (adding squares).
Rational loj_wqh_n3(const WeightVector& w);

struct ConsistencyReport {
  bool consistent = false;
  Rational n3_value;
  Rational multiset_value;
  std::string detail;
};

/// Compares the three-variable formula against the multiset formula.
ConsistencyReport consistency_n3(const WeightVector& w);

}  // namespace lojex
