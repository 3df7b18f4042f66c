#include "lojex/poly.hpp"

#include <algorithm>
#include <numeric>

#include "lojex/errors.hpp"

namespace lojex {

std::uint64_t total_degree(const Exponent& a) {
  return std::accumulate(a.begin(), a.end(), std::uint64_t{0});
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  std::uint64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(std::size_t nvars) : nvars_(nvars) {}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DomainError("variable index out of range");
  Exponent a(nvars, 0);
  a[i] = 1;
  return monomial(a);
}

Poly Poly::monomial(const Exponent& a, const Rational& c) {
  Poly p(a.size());
  p.add_term(a, c);
  return p;
}

Rational Poly::coeff(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coeff(Exponent(nvars_, 0)); }

void Poly::add_term(const Exponent& a, const Rational& c) {
  if (a.size() != nvars_) throw DomainError("exponent length does not match nvars");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::uint64_t> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return total_degree(terms_.begin()->first);
}

std::optional<std::uint64_t> Poly::order() const {
  if (terms_.empty()) return std::nullopt;
  return total_degree(terms_.rbegin()->first);
}

Poly Poly::truncated(std::uint64_t max_degree) const {
  Poly r(nvars_);
  for (const auto& [a, c] : terms_)
    if (total_degree(a) <= max_degree) r.terms_.emplace_hint(r.terms_.end(), a, c);
  return r;
}

Poly Poly::homogeneous_part(std::uint64_t k) const {
  Poly r(nvars_);
  for (const auto& [a, c] : terms_)
    if (total_degree(a) == k) r.terms_.emplace_hint(r.terms_.end(), a, c);
  return r;
}

bool Poly::depends_on(std::size_t i) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [i](const auto& t) { return t.first[i] != 0; });
}

Poly Poly::partial(std::size_t i) const {
  if (i >= nvars_) throw DomainError("partial: variable index out of range");
  Poly r(nvars_);
  for (const auto& [a, c] : terms_) {
    if (a[i] == 0) continue;
    Exponent b = a;
    --b[i];
    r.add_term(b, c * a[i]);
  }
  return r;
}

std::vector<Poly> Poly::gradient() const {
  std::vector<Poly> g;
  g.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) g.push_back(partial(i));
  return g;
}

std::vector<Poly> Poly::deleted_gradient(std::size_t i) const {
  if (i >= nvars_) throw DomainError("deleted_gradient: variable index out of range");
  std::vector<Poly> g;
  g.reserve(nvars_ - 1);
  for (std::size_t j = 0; j < nvars_; ++j)
    if (j != i) g.push_back(partial(j));
  return g;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::embed(std::size_t new_nvars, std::span<const std::size_t> placement) const {
  if (placement.size() != nvars_) throw DomainError("embed: placement arity mismatch");
  Poly r(new_nvars);
  for (const auto& [a, c] : terms_) {
    Exponent b(new_nvars, 0);
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (placement[j] >= new_nvars) throw DomainError("embed: placement out of range");
      b[placement[j]] += a[j];
    }
    r.add_term(b, c);
  }
  return r;
}

void Poly::check_arity(const Poly& o) const {
  if (o.nvars_ != nvars_) throw DomainError("polynomial arity mismatch");
}

Poly& Poly::operator+=(const Poly& o) {
  check_arity(o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_arity(o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

namespace {

Poly multiply_impl(const Poly& a, const Poly& b, std::uint64_t max_degree) {
  if (a.nvars() != b.nvars()) throw DomainError("polynomial arity mismatch");
  Poly r(a.nvars());
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a) {
    std::uint64_t da = total_degree(ea);
    if (da > max_degree) continue;
    for (const auto& [eb, cb] : b) {
      if (da + total_degree(eb) > max_degree) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  return multiply_impl(a, b, UINT64_MAX);
}

Poly multiply_truncated(const Poly& a, const Poly& b, std::uint64_t max_degree) {
  return multiply_impl(a, b, max_degree);
}

namespace {

Poly substitute_impl(const Poly& p, std::span<const Poly> map, std::uint64_t max_degree) {
  if (map.size() != p.nvars()) throw DomainError("substitute: map arity mismatch");
  if (map.empty()) return p;
  std::size_t target = map[0].nvars();
  for (const auto& m : map)
    if (m.nvars() != target) throw DomainError("substitute: map entries live in different rings");

  std::vector<std::uint32_t> max_exp(p.nvars(), 0);
  for (const auto& [a, c] : p)
    for (std::size_t i = 0; i < a.size(); ++i) max_exp[i] = std::max(max_exp[i], a[i]);

  // powers[i][k] = map[i]^k
  std::vector<std::vector<Poly>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    powers[i].push_back(Poly::constant(target, 1));
    for (std::uint32_t k = 1; k <= max_exp[i]; ++k)
      powers[i].push_back(multiply_impl(powers[i].back(), map[i], max_degree));
  }

  Poly r(target);
  for (const auto& [a, c] : p) {
    Poly term = Poly::constant(target, c);
    for (std::size_t i = 0; i < a.size() && !term.is_zero(); ++i)
      if (a[i] > 0) term = multiply_impl(term, powers[i][a[i]], max_degree);
    r += term;
  }
  return r;
}

}  // namespace

Poly substitute(const Poly& p, std::span<const Poly> map) {
  return substitute_impl(p, map, UINT64_MAX);
}

Poly substitute_truncated(const Poly& p, std::span<const Poly> map, std::uint64_t max_degree) {
  return substitute_impl(p, map, max_degree);
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string to_string(const Poly& p, std::span<const std::string> names) {
  if (names.size() != p.nvars()) throw DomainError("to_string: wrong number of variable names");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, c] : p) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (a[i] > 1) mono += "^" + std::to_string(a[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace lojex
