#include "lojex/exponent.hpp"

#include <algorithm>

#include "lojex/errors.hpp"

namespace lojex {

namespace {

const Rational kHalf(1, 2);

bool same(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }

// a > 1/2 decided with certainty, or throw.
bool above_half(const Interval& a) {
  if (a.lo > kHalf) return true;
  if (a.hi <= kHalf) return false;
  throw InconclusiveError("weight enclosure straddles 1/2");
}

ExponentData build(std::vector<Interval> L, bool exact) {
  ExponentData d;
  d.L = L;
  for (const auto& a : L) {
    if (a.is_point() && a.lo != 0 && a.lo != 1) d.reciprocals.push_back(Rational(1) / a.lo);
    else d.reciprocals.push_back(std::nullopt);
  }
  for (const auto& a : L)
    if (above_half(a)) d.L_minus.push_back(Rational(1) - a);

  std::vector<Interval> rest = L;
  for (const auto& m : d.L_minus) {
    auto hit = rest.end();
    if (exact) {
      hit = std::find_if(rest.begin(), rest.end(), [&](const Interval& b) { return same(b, m); });
      if (hit == rest.end())
        throw DomainError("weight " + to_string(Rational(1) - m.lo) + " has no partner " +
                          to_string(m.lo) + " (not the type of a WSQH germ)");
    } else {
      std::vector<decltype(rest.begin())> hits;
      for (auto it = rest.begin(); it != rest.end(); ++it)
        if (it->overlaps(m)) hits.push_back(it);
      if (hits.empty()) throw InconclusiveError("no weight enclosure matches a partner 1 - a");
      // Candidates must agree among themselves, otherwise the removal is ambiguous.
      for (auto h : hits)
        if (!h->overlaps(*hits.front()))
          throw InconclusiveError("ambiguous partner removal among weight enclosures");
      hit = hits.front();
    }
    rest.erase(hit);
  }
  rest.push_back(Interval(kHalf));
  std::sort(rest.begin(), rest.end(), [](const Interval& a, const Interval& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  for (const auto& a : rest)
    if (d.L_zero.empty() || !same(d.L_zero.back(), a)) d.L_zero.push_back(a);

  // min over enclosures: [min lo, min hi]
  Rational lo = d.L_zero.front().lo, hi = d.L_zero.front().hi;
  for (const auto& a : d.L_zero) {
    lo = std::min(lo, a.lo);
    hi = std::min(hi, a.hi);
  }
  if (lo <= 0) {
    if (exact) throw DomainError("multiset formula: non-positive minimum in L_zero");
    throw InconclusiveError("multiset formula: minimum enclosure reaches 0");
  }
  d.l_min = Interval(lo, hi);
  d.value = Interval(Rational(1) / hi - 1, Rational(1) / lo - 1);
  return d;
}

}  // namespace

const Rational& ExponentData::exact_value() const {
  if (!value.is_point()) throw DomainError("exponent is only known as an enclosure");
  return value.lo;
}

ExponentData loj_wsqh(const WeightVector& w) {
  WeightVector n = w.normalized();
  std::vector<Interval> L;
  for (const auto& l : n.weights()) L.emplace_back(l);
  return build(std::move(L), true);
}

ExponentData loj_wsqh(std::span<const Interval> weights) {
  std::vector<Interval> L(weights.begin(), weights.end());
  for (const auto& a : L)
    if (a.lo > a.hi) throw DomainError("malformed interval");
  return build(std::move(L), false);
}

Rational loj_sqh(const WeightVector& w) {
  WeightVector n = w.normalized();
  if (n.size() == 0) throw DomainError("loj_sqh: empty weight vector");
  Rational best;
  bool first = true;
  for (const auto& l : n.weights()) {
    if (l <= 0 || l > kHalf) throw DomainError("loj_sqh: weight " + to_string(l) + " outside (0, 1/2]");
    Rational v = Rational(1) / l - 1;
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

Rational loj_wqh_n3(const WeightVector& w) {
  WeightVector n = w.normalized();
  if (n.size() > 3) throw DomainError("loj_wqh_n3: the three-variable formula needs n <= 3");
  if (n.size() == 0) throw DomainError("loj_wqh_n3: empty weight vector");
  while (n.size() < 3) n = n.appended(kHalf);
  Rational mx, prod(1);
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational& l = n[i];
    Rational wi = (l == 0 || l == 1) ? Rational(2) : Rational(1) / l;
    Rational t = wi - 1;
    if (i == 0 || t > mx) mx = t;
    prod *= t;
  }
  return std::min(mx, prod);
}

ConsistencyReport consistency_n3(const WeightVector& w) {
  if (w.size() != 3) throw DomainError("consistency_n3: expects three weights");
  ConsistencyReport r;
  r.n3_value = loj_wqh_n3(w);
  r.multiset_value = loj_wsqh(w).exact_value();
  r.consistent = r.n3_value == r.multiset_value;
  if (!r.consistent)
    r.detail = "three-variable formula gives " + to_string(r.n3_value) +
               ", multiset formula gives " + to_string(r.multiset_value);
  return r;
}

}  // namespace lojex
