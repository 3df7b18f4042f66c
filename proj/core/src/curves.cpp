#include "lojex/curves.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <random>

#include "lojex/errors.hpp"

namespace lojex {

std::uint64_t TestCurve::ord() const {
  std::optional<std::uint64_t> best;
  for (const auto& c : components) {
    if (c.is_zero()) continue;
    if (c[0] != 0) throw DomainError("test curve component does not vanish at 0");
    std::uint64_t o = *c.order();
    if (!best || o < *best) best = o;
  }
  if (!best) throw DomainError("zero test curve");
  return *best;
}

std::string to_string(const TestCurve& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    if (i) s += ", ";
    s += to_string(c.components[i], "t");
  }
  return s + ")";
}

Rational curve_ratio(const Poly& f, const TestCurve& phi) {
  if (phi.components.size() != f.nvars()) throw DomainError("curve_ratio: arity mismatch");
  const std::uint64_t o = phi.ord();
  std::optional<std::size_t> best;
  for (const auto& g : f.gradient()) {
    UPoly h = compose_curve(g, phi.components);
    if (h.is_zero()) continue;
    std::size_t k = *h.order();
    if (!best || k < *best) best = k;
  }
  if (!best) throw DomainError("curve_ratio: the gradient vanishes along the curve");
  return Rational(static_cast<unsigned long>(*best)) / Rational(static_cast<unsigned long>(o));
}

namespace {

// A partial derivative scaled to integer coefficients; the common positive
// factor does not move the order of any composition.
struct IntPartial {
  std::vector<Exponent> exps;
  std::vector<std::int64_t> coeffs;
};

std::optional<std::vector<IntPartial>> integer_partials(const Poly& f) {
  std::vector<IntPartial> out;
  for (const auto& g : f.gradient()) {
    Integer l = 1;
    for (const auto& [a, c] : g) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPartial p;
    for (const auto& [a, c] : g) {
      Rational s = c * l;
      // Bounded so sums over a partial's support cannot overflow.
      if (!s.get_num().fits_slong_p() || abs(s.get_num()) >= Integer(1) << 40) return std::nullopt;
      p.exps.push_back(a);
      p.coeffs.push_back(s.get_num().get_si());
    }
    out.push_back(std::move(p));
  }
  return out;
}

struct Search {
  std::optional<Rational> best;
  std::string text;
  TestCurve witness;
  std::string family;
  std::size_t tried = 0;

  int rank = 0;

  // Ties compare (family, text) lexicographically: axes before monomial
  // curves before random ones.
  void offer(const Rational& r, const TestCurve& c, const char* fam) {
    if (best && r < *best) return;
    const int k = fam[0] == 'a' ? 0 : fam[0] == 'm' ? 1 : 2;
    if (best && r == *best && k > rank) return;
    std::string t = to_string(c);
    if (best && r == *best && k == rank && t >= text) return;
    rank = k;
    best = r;
    text = std::move(t);
    witness = c;
    family = fam;
  }
};

TestCurve monomial_curve(std::size_t n, const std::vector<int>& sign, const std::vector<unsigned>& e) {
  TestCurve c;
  for (std::size_t i = 0; i < n; ++i)
    c.components.push_back(sign[i] ? UPoly::monomial(e[i], Rational(sign[i])) : UPoly());
  return c;
}

}  // namespace

LowerBound lower_bound_search(const Poly& f, unsigned max_exponent, std::size_t trials,
                              std::uint64_t seed) {
  if (max_exponent < 1) throw DomainError("lower_bound_search: max_exponent must be at least 1");
  const std::size_t n = f.nvars();
  Search s;

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> sign(n, 0);
    sign[i] = 1;
    TestCurve c = monomial_curve(n, sign, std::vector<unsigned>(n, 1));
    ++s.tried;
    try {
      s.offer(curve_ratio(f, c), c, "axis");
    } catch (const DomainError&) {
    }
  }

  // Monomial curves; exponents of zero components are irrelevant and skipped.
  const auto ip = integer_partials(f);
  std::vector<int> sign(n, 0);
  std::vector<unsigned> e(n, 1);
  std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
  auto evaluate = [&]() -> std::optional<Rational> {
    std::uint64_t o = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 0; i < n; ++i)
      if (sign[i]) o = std::min<std::uint64_t>(o, e[i]);
    if (!ip) {
      try {
        return curve_ratio(f, monomial_curve(n, sign, e));
      } catch (const DomainError&) {
        return std::nullopt;
      }
    }
    std::optional<std::uint64_t> best;
    for (const auto& p : *ip) {
      terms.clear();
      for (std::size_t t = 0; t < p.exps.size(); ++t) {
        const Exponent& a = p.exps[t];
        std::uint64_t deg = 0;
        int sg = 1;
        bool zero = false;
        for (std::size_t j = 0; j < n && !zero; ++j) {
          if (!a[j]) continue;
          if (!sign[j]) zero = true;
          deg += static_cast<std::uint64_t>(a[j]) * e[j];
          if (sign[j] < 0 && (a[j] & 1)) sg = -sg;
        }
        if (!zero) terms.emplace_back(deg, static_cast<std::int64_t>(p.coeffs[t]) * sg);
      }
      std::sort(terms.begin(), terms.end());
      for (std::size_t t = 0; t < terms.size();) {
        std::size_t u = t;
        std::int64_t sum = 0;
        while (u < terms.size() && terms[u].first == terms[t].first) sum += terms[u++].second;
        if (sum != 0) {
          if (!best || terms[t].first < *best) best = terms[t].first;
          break;
        }
        t = u;
      }
    }
    if (!best) return std::nullopt;
    return Rational(static_cast<unsigned long>(*best)) / Rational(static_cast<unsigned long>(o));
  };

  // Odometer over signs in {0, 1, -1}^n, then exponents of the non-zero slots.
  std::vector<std::size_t> active;
  while (true) {
    std::size_t i = 0;
    while (i < n && sign[i] == -1) sign[i++] = 0;
    if (i == n) break;
    sign[i] = sign[i] == 0 ? 1 : -1;
    active.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (sign[j]) active.push_back(j);
    for (std::size_t j : active) e[j] = 1;
    while (true) {
      unsigned g = 0;
      for (std::size_t j : active) g = std::gcd(g, e[j]);
      if (g == 1) {
        ++s.tried;
        if (auto r = evaluate(); r && (!s.best || *r >= *s.best))
          s.offer(*r, monomial_curve(n, sign, e), "monomial");
      }
      std::size_t k = 0;
      while (k < active.size() && e[active[k]] == max_exponent) e[active[k++]] = 1;
      if (k == active.size()) break;
      ++e[active[k]];
    }
  }

  std::mt19937_64 rng(seed);
  auto small = [&](bool nonzero) {
    while (true) {
      long p = static_cast<long>(rng() % 21) - 10;
      long q = static_cast<long>(rng() % 10) + 1;
      if (nonzero && p == 0) continue;
      return make_rational(p, q);
    }
  };
  for (std::size_t t = 0; t < trials; ++t) {
    TestCurve c;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 4 == 0) {
        c.components.emplace_back();
        continue;
      }
      const unsigned lo = 1 + static_cast<unsigned>(rng() % max_exponent);
      const unsigned hi = lo + static_cast<unsigned>(rng() % (max_exponent - lo + 1));
      std::vector<Rational> coeffs(hi + 1);
      coeffs[lo] = small(true);
      for (unsigned k = lo + 1; k <= hi; ++k) coeffs[k] = rng() % 2 ? small(false) : Rational(0);
      c.components.emplace_back(std::move(coeffs));
      any = true;
    }
    if (!any) continue;
    ++s.tried;
    try {
      s.offer(curve_ratio(f, c), c, "random");
    } catch (const DomainError&) {
    }
  }

  if (!s.best) throw DomainError("lower_bound_search: the gradient vanishes along every test curve");
  LowerBound out;
  out.value = *s.best;
  out.witness = s.witness;
  out.witness_text = s.text;
  out.family = s.family;
  out.curves_tried = s.tried;
  return out;
}

}  // namespace lojex
