#include "lojex/upoly.hpp"

#include <algorithm>

#include "lojex/errors.hpp"

namespace lojex {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<std::size_t> UPoly::order() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return k;
  return std::nullopt;
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<unsigned long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * *this;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != 0)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

UPoly operator*(const Rational& s, UPoly a) {
  if (s == 0) return {};
  for (auto& c : a.c_) c *= s;
  return a;
}

UDivision divide(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("UPoly division by zero");
  std::vector<Rational> rem = a.coeffs();
  long db = b.degree();
  if (a.degree() < db) return {UPoly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (long k = a.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] / b.leading();
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  if (p.degree() < 1) return {};
  UPoly f = p.monic();
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = divide(f, a).quotient;
  UPoly c = divide(fp, a).quotient;
  UPoly d = c - b.derivative();
  std::vector<UPoly> out;
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    out.push_back(g);
    b = divide(b, g).quotient;
    c = divide(d, g).quotient;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

namespace {

std::vector<Integer> divisors(Integer m) {
  m = abs(m);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(Integer(m / d));
    }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  UPoly f = p;
  if (auto o = f.order(); o && *o > 0) {
    roots.push_back(Rational(0));
    std::vector<Rational> shifted(f.coeffs().begin() + static_cast<long>(*o), f.coeffs().end());
    f = UPoly(std::move(shifted));
  }
  if (f.degree() < 1) return roots;
  // Clear denominators.
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer a0 = Rational(f.coeffs().front() * l).get_num();
  Integer an = Rational(f.leading() * l).get_num();
  if (abs(a0) > Integer("1000000000000") || abs(an) > Integer("1000000000000"))
    throw InconclusiveError("rational_roots: coefficients too large for divisor enumeration");
  for (const auto& pn : divisors(a0))
    for (const auto& qd : divisors(an))
      for (int s : {1, -1}) {
        Rational r(pn * s, qd);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (f.eval(r) == 0) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string to_string(const UPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty()) out += to_string(mag);
    else if (mag == 1) out += mono;
    else out += to_string(mag) + "*" + mono;
  }
  return out;
}

UPoly compose_curve(const Poly& p, std::span<const UPoly> phi) {
  if (phi.size() != p.nvars()) throw DomainError("compose_curve: arity mismatch");
  std::vector<std::vector<UPoly>> powers(phi.size());
  UPoly result;
  for (const auto& [a, c] : p) {
    UPoly term = UPoly::constant(c);
    for (std::size_t i = 0; i < a.size() && !term.is_zero(); ++i) {
      if (a[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(UPoly::constant(1));
      while (pw.size() <= a[i]) pw.push_back(pw.back() * phi[i]);
      term = term * pw[a[i]];
    }
    result += term;
  }
  return result;
}

}  // namespace lojex
