#include "lojex/rational.hpp"

#include <cctype>

#include "lojex/errors.hpp"

namespace lojex {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::size_t slash = text.find('/');
  auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!valid_int(num, true)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  if (!valid_int(den, false))
    throw ParseError("malformed rational '" + std::string(text) + "'", num.size() + 1);
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer p(n), q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", num.size() + 1);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  // Continued-fraction descent (Stern-Brocot).
  if (lo > hi) return simplest_between(hi, lo);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  Integer fl = floor(lo);
  if (fl == lo) return Rational(fl);
  if (fl + 1 <= hi) return Rational(fl + 1);
  // lo and hi share the integer part fl; recurse on reciprocals of fractional parts.
  Rational a = lo - fl, b = hi - fl;
  Rational inner = simplest_between(1 / b, 1 / a);
  Rational r = fl + 1 / inner;
  r.canonicalize();
  return r;
}

}  // namespace lojex
