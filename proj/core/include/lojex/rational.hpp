#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace lojex {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

inline int sign(const Rational& q) { return sgn(q); }

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Simplest rational (smallest denominator, then numerator) in the closed
/// interval [lo, hi]. Requires lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Closed interval with rational endpoints. Point intervals carry exact values.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  explicit Interval(const Rational& v) : lo(v), hi(v) {}
  Interval(const Rational& l, const Rational& h) : lo(l), hi(h) {}

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool overlaps(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }

  // Certain comparisons; false when the intervals overlap undecidably.
  bool certainly_less(const Interval& o) const { return hi < o.lo; }
  bool certainly_greater(const Interval& o) const { return lo > o.hi; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend Interval operator-(const Rational& c, const Interval& a) {
    return {c - a.hi, c - a.lo};
  }
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

}  // namespace lojex
