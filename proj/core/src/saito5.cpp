#include "lojex/saito5.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include "lojex/errors.hpp"

namespace lojex {

namespace {

struct Cx {
  Rational re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rational norm2(const Cx& a) { return a.re * a.re + a.im * a.im; }
Cx operator/(const Cx& a, const Cx& b) {
  Rational d = norm2(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
bool is_zero(const Cx& a) { return a.re == 0 && a.im == 0; }

Cx eval(const UPoly& p, const Cx& z) {
  Cx acc{0, 0};
  for (long k = p.degree(); k >= 0; --k) acc = acc * z + Cx{p[static_cast<std::size_t>(k)], 0};
  return acc;
}

Rational shift(const Rational& x, long k) {
  Rational r;
  if (k >= 0) mpq_mul_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  else mpq_div_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  return r;
}

// Nearest multiple of 2^k.
Rational round_to(const Rational& x, long k) {
  Rational s = shift(x, -k) + Rational(1, 2);
  return shift(Rational(floor(s)), k);
}

// log2 of max(1, |x|) rounded down, without overflowing doubles.
long magnitude(const Cx& z) {
  auto bits = [](const Rational& q) -> long {
    if (q == 0) return 0;
    return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  };
  return std::max({0L, bits(z.re), bits(z.im)});
}

// Rational r with r >= sqrt(x).
Rational sqrt_upper(const Rational& x) {
  if (x <= 0) return 0;
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  long s = e / 2;
  Rational scaled = shift(x, -2 * s);
  Rational y = shift(Rational(std::sqrt(scaled.get_d()) * (1 + 1e-12)), s);
  const Rational bump = 1 + Rational(1, 1L << 40);
  while (y * y < x) y *= bump;
  return y;
}

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::vector<std::complex<double>> seed_roots(const UPoly& p) {
  const long d = p.degree();
  std::vector<std::complex<double>> a(static_cast<std::size_t>(d) + 1);
  Rational lc = p.leading();
  for (long k = 0; k <= d; ++k)
    a[static_cast<std::size_t>(k)] = Rational(p[static_cast<std::size_t>(k)] / lc).get_d();
  double bound = 0;
  for (long k = 0; k < d; ++k) bound = std::max(bound, std::abs(a[static_cast<std::size_t>(k)]));
  bound = 1 + bound;
  auto ev = [&](std::complex<double> z, bool deriv) {
    std::complex<double> v = 0, dv = 0;
    for (long k = d; k >= 0; --k) {
      dv = dv * z + v;
      v = v * z + a[static_cast<std::size_t>(k)];
    }
    return deriv ? dv : v;
  };
  std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
  for (long i = 0; i < d; ++i)
    z[static_cast<std::size_t>(i)] =
        std::polar(bound * 0.7, 2 * std::numbers::pi * (static_cast<double>(i) + 0.25) / static_cast<double>(d));
  for (int it = 0; it < 500; ++it) {
    double moved = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      std::complex<double> dv = ev(z[i], true);
      if (std::abs(dv) == 0) continue;
      std::complex<double> N = ev(z[i], false) / dv, S = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i && z[i] != z[j]) S += 1.0 / (z[i] - z[j]);
      std::complex<double> step = N / (1.0 - N * S);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      moved = std::max(moved, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (moved < 1e-15) break;
  }
  return z;
}

struct Isolation {
  std::vector<ComplexEnclosure> disks;
  bool converged = false;
};

// Certified isolation of the roots of a square-free polynomial.
Isolation isolate(const UPoly& p, const EigenOptions& opt) {
  const long d = p.degree();
  Isolation out;
  if (d <= 0) {
    out.converged = true;
    return out;
  }
  std::vector<Cx> z;
  for (auto s : seed_roots(p)) z.push_back({Rational(s.real()), Rational(s.imag())});
  const UPoly dp = p.derivative();
  const Rational lc = p.leading();
  std::vector<Rational> radius(z.size());

  for (unsigned prec = 64;; prec *= 2) {
    for (int it = 0; it < 64; ++it) {
      bool settled = true;
      for (std::size_t i = 0; i < z.size(); ++i) {
        Cx v = eval(p, z[i]);
        if (is_zero(v)) continue;
        Cx dv = eval(dp, z[i]);
        if (is_zero(dv)) continue;
        Cx N = v / dv, S{0, 0};
        bool ok = true;
        for (std::size_t j = 0; j < z.size(); ++j) {
          if (j == i) continue;
          Cx diff = z[i] - z[j];
          if (is_zero(diff)) {
            ok = false;
            break;
          }
          S = S + Cx{1, 0} / diff;
        }
        if (!ok) continue;
        Cx den = Cx{1, 0} - N * S;
        if (is_zero(den)) continue;
        Cx step = N / den;
        long k = magnitude(z[i]) - static_cast<long>(prec);
        Cx next{round_to(z[i].re - step.re, k), round_to(z[i].im - step.im, k)};
        if (norm2(next - z[i]) > shift(Rational(1), 2 * k)) settled = false;
        z[i] = next;
      }
      if (settled) break;
    }

    // Inclusion disks |z - z_i| <= d |W_i|.
    bool degenerate = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Cx den{lc, 0};
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) den = den * (z[i] - z[j]);
      if (is_zero(den)) {
        degenerate = true;
        break;
      }
      Cx W = eval(p, z[i]) / den;
      radius[i] = sqrt_upper(Rational(d * d) * norm2(W));
      // Keep the bound's size proportional to the working precision.
      if (radius[i] != 0) {
        long k = magnitude(z[i]) - 2 * static_cast<long>(prec);
        Rational up = round_to(radius[i], k) + shift(Rational(1), k);
        radius[i] = up;
      }
    }
    bool disjoint = !degenerate;
    for (std::size_t i = 0; i < z.size() && disjoint; ++i)
      for (std::size_t j = i + 1; j < z.size() && disjoint; ++j) {
        Rational r = radius[i] + radius[j];
        if (norm2(z[i] - z[j]) <= r * r) disjoint = false;
      }
    bool narrow = disjoint;
    for (std::size_t i = 0; i < z.size() && narrow; ++i) {
      Rational scale = std::max({Rational(1), abs_q(z[i].re), abs_q(z[i].im)});
      if (2 * radius[i] > opt.tol * scale) narrow = false;
    }
    if (narrow) {
      for (std::size_t i = 0; i < z.size(); ++i) out.disks.push_back({z[i].re, z[i].im, radius[i], 1});
      out.converged = true;
      return out;
    }
    if (prec >= opt.max_precision) {
      if (degenerate)
        throw InconclusiveError("eigen_real_parts: root approximations collided");
      // Merge overlapping disks into clusters; a cluster of m disks holds m roots.
      std::vector<std::size_t> comp(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) comp[i] = i;
      std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return comp[i] == i ? i : comp[i] = find(comp[i]);
      };
      for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) {
          Rational r = radius[i] + radius[j];
          if (norm2(z[i] - z[j]) <= r * r) comp[find(i)] = find(j);
        }
      for (std::size_t root = 0; root < z.size(); ++root) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < z.size(); ++i)
          if (find(i) == root) members.push_back(i);
        if (members.empty()) continue;
        Rational relo, rehi, imlo, imhi;
        for (std::size_t t = 0; t < members.size(); ++t) {
          std::size_t i = members[t];
          Rational a = z[i].re - radius[i], b = z[i].re + radius[i];
          Rational c = z[i].im - radius[i], e = z[i].im + radius[i];
          if (t == 0 || a < relo) relo = a;
          if (t == 0 || b > rehi) rehi = b;
          if (t == 0 || c < imlo) imlo = c;
          if (t == 0 || e > imhi) imhi = e;
        }
        ComplexEnclosure enc{(relo + rehi) / 2, (imlo + imhi) / 2,
                             (rehi - relo + imhi - imlo) / 2,
                             static_cast<std::uint32_t>(members.size())};
        out.disks.push_back(enc);
      }
      out.converged = false;
      return out;
    }
  }
}

Integer leading_integer(const UPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Rational lead = p.leading() * l;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Rational s = c * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  Integer a = lead.get_num() / g;
  return a < 0 ? Integer(-a) : a;
}

UPoly linear_factor(const Rational& r) { return UPoly({-r, Rational(1)}); }

}  // namespace

Matrix jacobian_at_zero(const MembershipCertificate& cert) {
  const std::size_t n = cert.cofactors.size();
  if (cert.certified_degree < 1) throw DomainError("jacobian_at_zero: certificate degree below 1");
  Matrix J(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Poly& g = cert.cofactors[i];
    if (g.nvars() != n) throw DomainError("jacobian_at_zero: cofactor arity mismatch");
    if (g.constant_term() != 0)
      throw DomainError("jacobian_at_zero: cofactor with non-zero constant term");
    for (std::size_t j = 0; j < n; ++j) {
      Exponent a(n, 0);
      a[j] = 1;
      J(i, j) = g.coeff(a);
    }
  }
  return J;
}

EigenWeightData eigen_real_parts(const Matrix& m, const EigenOptions& options) {
  if (!m.is_square()) throw DomainError("eigen_real_parts: matrix is not square");
  if (options.tol <= 0) throw DomainError("eigen_real_parts: tolerance must be positive");
  EigenWeightData out;
  out.jacobian = m;
  out.charpoly = charpoly_faddeev(m);
  if (m.rows() <= 20 && charpoly_minors(m) != out.charpoly)
    throw InvariantError("eigen_real_parts: characteristic polynomial computations disagree");

  std::size_t exact_roots = 0, isolated = 0;
  const auto factors = squarefree_decomposition(out.charpoly);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    UPoly q = factors[k];
    const auto mult = static_cast<std::uint32_t>(k + 1);
    auto take_rational = [&](const Rational& r) {
      out.alpha.push_back({r, 0, 0, mult});
      q = divide(q, linear_factor(r)).quotient;
      ++exact_roots;
    };
    try {
      for (const auto& r : rational_roots(q)) take_rational(r);
    } catch (const InconclusiveError&) {
      // Heights too large for the divisor test; candidates come from the
      // isolated disks instead.
    }
    while (q.degree() > 0) {
      Isolation iso = isolate(q, options);
      const Integer an = leading_integer(q);
      bool found = false;
      for (const auto& disk : iso.disks) {
        if (abs_q(disk.im) > disk.radius) continue;
        Rational scaled = disk.re * an;
        for (Integer c : {floor(scaled), ceil(scaled)}) {
          Rational r = Rational(c) / an;
          if (q.eval(r) == 0) {
            take_rational(r);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) continue;
      for (auto disk : iso.disks) {
        isolated += disk.multiplicity;
        disk.multiplicity *= mult;
        out.alpha.push_back(disk);
      }
      out.converged = out.converged && iso.converged;
      break;
    }
  }

  for (const auto& a : out.alpha)
    for (std::uint32_t t = 0; t < a.multiplicity; ++t)
      out.realparts.push_back({a.re - a.radius, a.re + a.radius});
  std::sort(out.realparts.begin(), out.realparts.end(), [](const Interval& a, const Interval& b) {
    Rational ma = a.lo + a.hi, mb = b.lo + b.hi;
    return ma != mb ? ma < mb : a.lo < b.lo;
  });
  if (out.realparts.size() != m.rows())
    throw InvariantError("eigen_real_parts: eigenvalue count does not match the dimension");

  Rational lo = 0, hi = 0;
  out.max_width = 0;
  for (const auto& r : out.realparts) {
    lo += r.lo;
    hi += r.hi;
    out.max_width = std::max(out.max_width, Rational(r.hi - r.lo));
  }
  const Rational tr = m.trace();
  if (tr < lo || tr > hi) throw InvariantError("eigen_real_parts: trace outside the real-part sum");

  out.report = std::to_string(m.rows()) + " eigenvalues: " + std::to_string(exact_roots) +
               " exact rational root(s), " + std::to_string(isolated) + " isolated; max width " +
               to_string(out.max_width);
  if (!out.converged) out.report += "; refinement stalled before the requested width";
  return out;
}

Theorem5Result theorem5_exponent(const Poly& f, const std::optional<MembershipCertificate>& cert,
                                 const Theorem5Options& options) {
  Theorem5Result out;
  if (cert) {
    if (cert->target != f) throw DomainError("theorem5_exponent: certificate is for another germ");
    out.certificate = *cert;
  } else {
    LocalRingOptions lo = options.local;
    lo.track_cofactors = true;
    auto grad = f.gradient();
    LocalBasis basis = standard_basis(grad, lo);
    auto m = membership(f, basis);
    if (!m)
      throw DomainError(
          "theorem5_exponent: f is not in its gradient ideal, so it is not weakly "
          "quasihomogeneous in any coordinates");
    out.certificate = *m;
    out.certificate_constructed = true;
  }
  Matrix J = jacobian_at_zero(out.certificate);

  EigenOptions eo = options.eigen;
  for (unsigned attempt = 0;; ++attempt) {
    const bool last = attempt >= options.retries;
    out.eigen = eigen_real_parts(J, eo);
    try {
      out.exponent = loj_wsqh(out.eigen.realparts);
    } catch (const InconclusiveError&) {
      if (last) throw;
      eo.tol /= Rational(Integer(1) << 32);
      eo.max_precision *= 2;
      continue;
    }
    const Interval& v = out.exponent.value;
    if (v.is_point()) {
      out.value = v.lo;
      return out;
    }
    const Rational cap2 = Rational(options.denominator_cap * options.denominator_cap);
    if (v.width() * cap2 < 1) {
      Rational s = simplest_between(v.lo, v.hi);
      if (s.get_den() <= options.denominator_cap) {
        out.value = s;
        out.recovered = true;
        return out;
      }
    }
    if (last)
      throw InconclusiveError("theorem5_exponent: exponent enclosure [" + to_string(v.lo) + ", " +
                              to_string(v.hi) + "] too wide to determine a rational value");
    eo.tol /= Rational(Integer(1) << 32);
    eo.max_precision *= 2;
  }
}

}  // namespace lojex
