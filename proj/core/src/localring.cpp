#include "lojex/localring.hpp"

#include <algorithm>
#include <limits>
#include <memory>

#include "lojex/errors.hpp"

namespace lojex {

namespace {

constexpr std::uint64_t kNoTruncation = std::numeric_limits<std::uint64_t>::max();

struct Term {
  Exponent e;
  std::uint32_t deg;
  Rational c;
};

// Terms sorted with the local leading term first.
using LPoly = std::vector<Term>;

bool lex_greater(const Exponent& a, const Exponent& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool local_greater(const Term& a, const Term& b) {
  if (a.deg != b.deg) return a.deg < b.deg;
  return lex_greater(a.e, b.e);
}

LPoly to_local(const Poly& p) {
  LPoly r;
  r.reserve(p.size());
  for (const auto& [a, c] : p) r.push_back({a, static_cast<std::uint32_t>(total_degree(a)), c});
  std::sort(r.begin(), r.end(), local_greater);
  return r;
}

Poly to_poly(const LPoly& p, std::size_t nvars) {
  Poly r(nvars);
  for (const auto& t : p) r.add_term(t.e, t.c);
  return r;
}

std::uint32_t ecart(const LPoly& p) {
  std::uint32_t maxdeg = 0;
  for (const auto& t : p) maxdeg = std::max(maxdeg, t.deg);
  return maxdeg - p.front().deg;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent quotient(const Exponent& b, const Exponent& a) {
  Exponent q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

// h - c * z^m * g, merged in local order. Terms that cancel are dropped, as are
// shifted terms of degree >= cutoff (work modulo m^cutoff).
LPoly axpy(const LPoly& h, const Rational& c, const Exponent& m, const LPoly& g,
           std::uint32_t cutoff = std::numeric_limits<std::uint32_t>::max()) {
  std::uint32_t dm = static_cast<std::uint32_t>(total_degree(m));
  LPoly r;
  r.reserve(h.size() + g.size());
  std::size_t i = 0, j = 0;
  Term shifted;
  auto load = [&](std::size_t k) {
    shifted.e.resize(m.size());
    for (std::size_t v = 0; v < m.size(); ++v) shifted.e[v] = g[k].e[v] + m[v];
    shifted.deg = g[k].deg + dm;
    shifted.c = g[k].c * c;
  };
  // g is sorted by ascending degree, so once a shifted term reaches the
  // cutoff every later one does too.
  std::size_t gend = g.size();
  for (std::size_t k = 0; k < g.size(); ++k)
    if (std::uint64_t{g[k].deg} + dm >= cutoff) {
      gend = k;
      break;
    }
  if (j < gend) load(j);
  while (i < h.size() || j < gend) {
    if (j >= gend || (i < h.size() && local_greater(h[i], shifted))) {
      r.push_back(h[i++]);
    } else if (i >= h.size() || local_greater(shifted, h[i])) {
      shifted.c = -shifted.c;
      r.push_back(std::move(shifted));
      shifted = Term{};
      if (++j < gend) load(j);
    } else {
      Rational v = h[i].c - shifted.c;
      if (v != 0) r.push_back({h[i].e, h[i].deg, std::move(v)});
      ++i;
      if (++j < gend) load(j);
    }
  }
  return r;
}

void make_monic(LPoly& p, Rational* scale_out) {
  Rational lc = p.front().c;
  if (scale_out) *scale_out = lc;
  if (lc == 1) return;
  for (auto& t : p) t.c /= lc;
}

// unit * h = sum cof[i] * G[i], truncated at `degree`.
struct Rep {
  Poly unit;
  std::vector<Poly> cof;
};

Poly monomial_poly(const Exponent& m, const Rational& c) { return Poly::monomial(m, c); }

Poly mul(const Poly& a, const Poly& b, std::uint64_t degree) {
  return degree == kNoTruncation ? a * b : multiply_truncated(a, b, degree);
}

bool is_one(const Poly& p) {
  return p.size() == 1 && p.begin()->second == 1 && total_degree(p.begin()->first) == 0;
}

// Representation of h - c*z^m*g from those of h and g.
Rep combine(const Rep& rh, const Rep& rg, const Rational& c, const Exponent& m,
            std::uint64_t degree) {
  Poly cm = monomial_poly(m, c);
  Rep r;
  bool gu1 = is_one(rg.unit), hu1 = is_one(rh.unit);
  r.unit = gu1 ? rh.unit : (hu1 ? rg.unit : mul(rg.unit, rh.unit, degree));
  Poly scale_g = hu1 ? cm : mul(cm, rh.unit, degree);
  r.cof.resize(rh.cof.size(), Poly(rh.unit.nvars()));
  for (std::size_t i = 0; i < rh.cof.size(); ++i) {
    Poly left = gu1 ? rh.cof[i] : mul(rg.unit, rh.cof[i], degree);
    if (!rg.cof[i].is_zero()) left -= mul(scale_g, rg.cof[i], degree);
    r.cof[i] = std::move(left);
  }
  return r;
}

constexpr std::uint32_t kNoCutoff = std::numeric_limits<std::uint32_t>::max();

struct Budget {
  const LocalRingOptions& opts;
  std::size_t steps = 0;

  void step() {
    if (++steps > opts.max_reduction_steps)
      throw InconclusiveError("local normal form exceeded reduction budget");
  }
  void terms(std::size_t n) const {
    if (n > opts.max_terms) throw InconclusiveError("local normal form exceeded term budget");
  }
};

struct Reducer {
  const LPoly* poly;
  const Rep* rep;
  std::uint32_t ecart;
};

// Local normal form; `rep` tracks unit * input = sum cof * source + h.
//
// Without a cutoff this is Mora's algorithm: an intermediate h joins the
// reducer set whenever the best reducer has a larger ecart. Modulo m^cutoff
// the leading monomial strictly drops among finitely many monomials, so plain
// reduction already terminates.
LPoly local_nf(LPoly h, Rep* rep, const std::vector<LPoly>& basis, const std::vector<Rep>* reps,
               std::uint64_t degree, std::uint32_t cutoff, Budget& budget) {
  const bool truncated = cutoff != kNoCutoff;
  std::vector<Reducer> T;
  T.reserve(basis.size() + 8);
  for (std::size_t k = 0; k < basis.size(); ++k)
    T.push_back({&basis[k], reps ? &(*reps)[k] : nullptr, ecart(basis[k])});
  std::vector<std::unique_ptr<LPoly>> owned_polys;
  std::vector<std::unique_ptr<Rep>> owned_reps;

  while (!h.empty()) {
    budget.step();
    budget.terms(h.size());
    const Exponent& lm = h.front().e;
    const Reducer* best = nullptr;
    for (const auto& t : T)
      if (divides(t.poly->front().e, lm) && (!best || t.ecart < best->ecart)) best = &t;
    if (!best) break;
    Reducer chosen = *best;
    if (!truncated) {
      std::uint32_t eh = ecart(h);
      if (chosen.ecart > eh) {
        owned_polys.push_back(std::make_unique<LPoly>(h));
        if (rep) owned_reps.push_back(std::make_unique<Rep>(*rep));
        T.push_back({owned_polys.back().get(), rep ? owned_reps.back().get() : nullptr, eh});
      }
    }
    Rational c = h.front().c / chosen.poly->front().c;
    Exponent m = quotient(lm, chosen.poly->front().e);
    h = axpy(h, c, m, *chosen.poly, cutoff);
    if (rep) *rep = combine(*rep, *chosen.rep, c, m, degree);
  }
  return h;
}

LPoly cut(LPoly p, std::uint32_t cutoff) {
  auto it = std::find_if(p.begin(), p.end(), [&](const Term& t) { return t.deg >= cutoff; });
  p.erase(it, p.end());
  return p;
}

Rep unit_rep(std::size_t nvars, std::size_t count, std::size_t index) {
  Rep r{Poly::constant(nvars, 1), std::vector<Poly>(count, Poly(nvars))};
  r.cof[index] = Poly::constant(nvars, 1);
  return r;
}

// Divides a representation through by unit * scale so the unit becomes 1.
void normalize_rep(Rep& r, const Rational& scale, std::uint64_t degree) {
  Poly inv = invert_unit(r.unit, degree);
  inv *= Rational(1) / scale;
  for (auto& c : r.cof) c = multiply_truncated(c, inv, degree);
  r.unit = Poly::constant(r.unit.nvars(), 1);
}

struct Engine {
  std::size_t nvars = 0;
  std::vector<LPoly> basis;
  std::vector<Rep> reps;
  std::uint32_t cutoff = kNoCutoff;
  std::uint64_t degree = 0;  // cofactor truncation
};

// Buchberger-style completion with the normal pair strategy (ascending lcm
// degree, then creation order) and the product criterion.
Engine complete(std::span<const Poly> gens, const LocalRingOptions& options, bool track,
                std::uint32_t cutoff, Budget& budget) {
  Engine eng;
  eng.nvars = gens[0].nvars();
  eng.cutoff = cutoff;
  eng.degree = cutoff == kNoCutoff ? options.cofactor_degree : cutoff - 1;
  const std::size_t n = eng.nvars;
  const std::size_t k = gens.size();
  auto& S = eng.basis;
  auto& R = eng.reps;

  for (std::size_t i = 0; i < k; ++i) {
    LPoly g = cut(to_local(gens[i]), cutoff);
    if (g.empty()) continue;
    Rep r = track ? unit_rep(n, k, i) : Rep{};
    Rational lc;
    make_monic(g, &lc);
    if (track)
      for (auto& c : r.cof) c *= Rational(1) / lc;
    S.push_back(std::move(g));
    if (track) R.push_back(std::move(r));
  }

  struct Pair {
    std::size_t a, b;
    std::uint64_t deg;
    std::size_t serial;
  };
  std::vector<Pair> pairs;
  std::size_t serial = 0;
  auto add_pairs = [&](std::size_t idx) {
    for (std::size_t j = 0; j < idx; ++j) {
      if (coprime(S[j].front().e, S[idx].front().e)) continue;
      Exponent l = lcm(S[j].front().e, S[idx].front().e);
      if (total_degree(l) >= cutoff) continue;  // both shifts vanish modulo m^cutoff
      pairs.push_back({j, idx, total_degree(l), serial++});
      if (pairs.size() > options.max_pairs)
        throw InconclusiveError("standard basis exceeded pair budget");
    }
  };
  for (std::size_t i = 0; i < S.size(); ++i) add_pairs(i);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
      return x.deg != y.deg ? x.deg < y.deg : x.serial < y.serial;
    });
    Pair p = *it;
    pairs.erase(it);

    Exponent l = lcm(S[p.a].front().e, S[p.b].front().e);
    Exponent mf = quotient(l, S[p.a].front().e);
    Exponent mg = quotient(l, S[p.b].front().e);
    // Both are monic: spoly = z^mg g - z^mf f.
    LPoly sp = axpy(axpy(LPoly{}, Rational(-1), mf, S[p.a], cutoff), Rational(1), mg, S[p.b],
                    cutoff);
    Rep rep;
    if (track) {
      rep = Rep{Poly::constant(n, 1), std::vector<Poly>(k, Poly(n))};
      Poly zmf = Poly::monomial(mf), zmg = Poly::monomial(mg);
      for (std::size_t i = 0; i < k; ++i)
        rep.cof[i] = multiply_truncated(zmf, R[p.a].cof[i], eng.degree) -
                     multiply_truncated(zmg, R[p.b].cof[i], eng.degree);
    }
    LPoly h = local_nf(std::move(sp), track ? &rep : nullptr, S, track ? &R : nullptr,
                       eng.degree, cutoff, budget);
    if (h.empty()) continue;
    Rational lc;
    make_monic(h, &lc);
    if (track) normalize_rep(rep, lc, eng.degree);
    S.push_back(std::move(h));
    if (track) R.push_back(std::move(rep));
    if (S.size() > options.max_basis_size)
      throw InconclusiveError("standard basis exceeded basis-size budget");
    add_pairs(S.size() - 1);
  }
  return eng;
}

// Number of standard monomials in each degree below `limit`, found level by
// level (standard monomials form an order ideal, so each one of degree d+1 is
// a variable times one of degree d). Stops early at the first empty level.
std::vector<std::uint64_t> standard_profile(const std::vector<Exponent>& corners,
                                            std::size_t nvars, std::uint64_t limit,
                                            std::size_t max_monomials) {
  auto standard = [&](const Exponent& a) {
    return std::none_of(corners.begin(), corners.end(),
                        [&](const Exponent& c) { return divides(c, a); });
  };
  std::vector<std::uint64_t> profile;
  std::vector<Exponent> level;
  if (Exponent one(nvars, 0); standard(one)) level.push_back(one);
  std::size_t total = 0;
  for (std::uint64_t d = 0; d < limit; ++d) {
    profile.push_back(level.size());
    total += level.size();
    if (total > max_monomials) throw InconclusiveError("staircase exceeded monomial budget");
    if (level.empty()) break;
    std::vector<Exponent> next;
    for (const auto& a : level)
      for (std::size_t i = 0; i < nvars; ++i) {
        // Generate each monomial once: only raise variables at or after the
        // last non-zero position of a.
        bool later_nonzero = false;
        for (std::size_t j = i + 1; j < nvars; ++j) later_nonzero |= a[j] != 0;
        if (later_nonzero) continue;
        Exponent b = a;
        ++b[i];
        if (standard(b)) next.push_back(std::move(b));
      }
    level = std::move(next);
  }
  return profile;
}

std::vector<Exponent> leads(const Engine& e) {
  std::vector<Exponent> out;
  for (const auto& p : e.basis) out.push_back(p.front().e);
  return out;
}

constexpr std::size_t kStaircaseBudget = 5'000'000;

struct Round {
  Engine engine;
  bool closed = false;
  std::uint64_t top = 0;  // standard monomials in the top degree below the cutoff
};

Round truncated_round(std::span<const Poly> gens, const LocalRingOptions& options, bool track,
                      std::uint64_t B) {
  if (B > kNoCutoff - 1) throw DomainError("standard_basis: degree bound too large");
  Budget budget{options};
  Round r{complete(gens, options, track, static_cast<std::uint32_t>(B), budget)};
  auto profile = standard_profile(leads(r.engine), r.engine.nvars, B, kStaircaseBudget);
  r.closed = profile.size() < B || profile.back() == 0;
  r.top = profile.size() == B ? profile.back() : 0;
  return r;
}

std::uint64_t max_degree(std::span<const Poly> gens) {
  std::uint64_t d = 0;
  for (const auto& g : gens) d = std::max<std::uint64_t>(d, g.degree().value_or(0));
  return d;
}

}  // namespace

struct LocalBasisAccess {
  static Engine engine(const LocalBasis& b) {
    Engine e;
    e.nvars = b.nvars_;
    for (const auto& p : b.basis_) e.basis.push_back(to_local(p));
    e.reps.reserve(b.reps_.size());
    for (const auto& r : b.reps_) e.reps.push_back({r.unit, r.cofactors});
    e.cutoff = b.truncation_ == 0 ? kNoCutoff : static_cast<std::uint32_t>(b.truncation_);
    e.degree = b.truncation_ == 0 ? b.cofactor_degree_ : b.truncation_ - 1;
    return e;
  }
  static const LocalRingOptions& options(const LocalBasis& b) { return b.options_; }
};

Poly invert_unit(const Poly& u, std::uint64_t max_degree) {
  Rational c0 = u.constant_term();
  if (c0 == 0) throw DomainError("invert_unit: not a unit (vanishes at the origin)");
  // u = c0 (1 + v), u^-1 = c0^-1 sum (-v)^k
  Poly v = u * (Rational(1) / c0);
  v -= Poly::constant(u.nvars(), 1);
  Poly result = Poly::constant(u.nvars(), 1);
  Poly power = Poly::constant(u.nvars(), 1);
  Poly neg_v = -v;
  for (std::uint64_t k = 1; k <= max_degree && !v.is_zero(); ++k) {
    power = multiply_truncated(power, neg_v, max_degree);
    if (power.is_zero()) break;
    result += power;
  }
  return result * (Rational(1) / c0);
}

std::vector<Exponent> LocalBasis::leading_exponents() const {
  std::vector<Exponent> out;
  for (const auto& p : basis_) out.push_back(to_local(p).front().e);
  return out;
}

LocalBasis standard_basis(std::span<const Poly> gens, const LocalRingOptions& options) {
  if (gens.empty()) throw DomainError("standard_basis: empty generator list");
  const std::size_t n = gens[0].nvars();
  for (const auto& g : gens)
    if (g.nvars() != n) throw DomainError("standard_basis: generator arity mismatch");
  const bool track = options.track_cofactors;

  LocalBasis out;
  out.nvars_ = n;
  out.source_.assign(gens.begin(), gens.end());
  out.tracking_ = track;
  out.options_ = options;

  auto finish = [&](Engine&& e, std::uint64_t truncation, bool closed) {
    out.truncation_ = truncation;
    out.closed_ = closed;
    out.cofactor_degree_ = e.degree;
    for (const auto& s : e.basis) out.basis_.push_back(to_poly(s, n));
    for (auto& r : e.reps) out.reps_.push_back({std::move(r.unit), std::move(r.cof)});
    return out;
  };

  if (options.degree_bound > 0) {
    if (options.degree_bound < max_degree(gens))
      throw InconclusiveError("standard_basis: degree bound below the generator degree");
    std::uint64_t B = options.degree_bound + 1;
    Round r = truncated_round(gens, options, track, B);
    return finish(std::move(r.engine), B, r.closed);
  }

  // Automatic schedule: doubling truncations while the top level keeps
  // shrinking, then exact completion for ideals that never close.
  std::optional<std::uint64_t> prev_top;
  for (std::uint64_t B = std::max<std::uint64_t>(4, 2 * max_degree(gens) + 2);
       B <= options.degree_cap; B *= 2) {
    Round r = truncated_round(gens, options, track, B);
    if (r.closed) return finish(std::move(r.engine), B, true);
    if (prev_top && r.top >= *prev_top) break;
    prev_top = r.top;
  }
  Budget budget{options};
  return finish(complete(gens, options, track, kNoCutoff, budget), 0, false);
}

Poly normal_form(const Poly& p, const LocalBasis& basis) {
  if (p.nvars() != basis.nvars()) throw DomainError("normal_form: arity mismatch");
  Engine e = LocalBasisAccess::engine(basis);
  Budget budget{LocalBasisAccess::options(basis)};
  return to_poly(local_nf(cut(to_local(p), e.cutoff), nullptr, e.basis, nullptr, kNoTruncation,
                          e.cutoff, budget),
                 basis.nvars());
}

bool verify_certificate(const MembershipCertificate& cert) {
  if (cert.cofactors.size() != cert.generators.size()) return false;
  Poly residual = cert.target;
  for (std::size_t i = 0; i < cert.generators.size(); ++i)
    residual -= cert.exact ? cert.cofactors[i] * cert.generators[i]
                           : multiply_truncated(cert.cofactors[i], cert.generators[i],
                                                cert.certified_degree);
  if (cert.exact) return residual.is_zero();
  return residual.truncated(cert.certified_degree).is_zero();
}

std::optional<MembershipCertificate> membership(const Poly& p, const LocalBasis& basis) {
  if (p.nvars() != basis.nvars()) throw DomainError("membership: arity mismatch");
  if (!basis.tracks_cofactors())
    throw DomainError("membership: basis was built without cofactor tracking");
  const std::size_t n = basis.nvars();
  const std::size_t k = basis.source_ideal().size();
  const std::uint64_t degree = basis.cofactor_degree();

  MembershipCertificate cert;
  cert.target = p;
  cert.generators = basis.source_ideal();
  cert.certified_degree = degree;
  if (p.is_zero()) {
    cert.cofactors.assign(k, Poly(n));
    cert.exact = true;
    return cert;
  }

  // Representations over (target, source_0, ..., source_{k-1}).
  Engine e = LocalBasisAccess::engine(basis);
  std::vector<Rep> reps;
  for (const auto& r : e.reps) {
    Rep ext{r.unit, std::vector<Poly>(k + 1, Poly(n))};
    for (std::size_t i = 0; i < k; ++i) ext.cof[i + 1] = r.cof[i];
    reps.push_back(std::move(ext));
  }
  Rep rep = unit_rep(n, k + 1, 0);
  Budget budget{LocalBasisAccess::options(basis)};
  LPoly h = local_nf(cut(to_local(p), e.cutoff), &rep, e.basis, &reps, degree, e.cutoff, budget);
  if (!h.empty()) return std::nullopt;
  if (!basis.decisive())
    throw InconclusiveError("membership: normal form vanishes only modulo m^" +
                            std::to_string(basis.truncation()) +
                            " and the ideal was not shown to contain a power of m");

  // 0 = a0 * p + sum a_i g_i  =>  p = sum (-a_i / a0) g_i
  const Poly& a0 = rep.cof[0];
  if (a0.constant_term() == 0)
    throw InvariantError("membership: target coefficient is not a unit");
  Poly inv = invert_unit(a0, degree);
  cert.cofactors.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    cert.cofactors.push_back(-multiply_truncated(rep.cof[i + 1], inv, degree));

  Poly residual = p;
  for (std::size_t i = 0; i < k; ++i) residual -= cert.cofactors[i] * cert.generators[i];
  cert.exact = residual.is_zero();

  cert.unit = a0;
  for (std::size_t i = 0; i < k; ++i) cert.scaled_cofactors.push_back(-rep.cof[i + 1]);
  Poly unit_residual = a0 * p;
  for (std::size_t i = 0; i < k; ++i) unit_residual -= cert.scaled_cofactors[i] * cert.generators[i];
  cert.unit_identity_exact = unit_residual.is_zero();

  if (!verify_certificate(cert))
    throw InvariantError("membership: certificate failed re-verification");
  return cert;
}

namespace {

// Counts monomials outside the monomial ideal generated by `corners`;
// nullopt when some variable has no pure power among the corners.
std::optional<std::uint64_t> count_staircase(const std::vector<Exponent>& corners,
                                             std::size_t nvars) {
  for (const auto& c : corners)
    if (total_degree(c) == 0) return 0;
  std::uint64_t bound = 0;
  for (std::size_t i = 0; i < nvars; ++i) {
    std::uint32_t best = 0;
    for (const auto& c : corners) {
      bool pure = c[i] > 0;
      for (std::size_t j = 0; j < nvars && pure; ++j)
        if (j != i && c[j] != 0) pure = false;
      if (pure && (best == 0 || c[i] < best)) best = c[i];
    }
    if (best == 0) return std::nullopt;
    bound += best;
  }
  // Every standard monomial has degree below the sum of the pure powers.
  auto profile = standard_profile(corners, nvars, bound + 1, kStaircaseBudget);
  std::uint64_t count = 0;
  for (auto c : profile) count += c;
  return count;
}

}  // namespace

std::optional<std::uint64_t> quotient_dimension(const LocalBasis& basis) {
  if (!basis.decisive())
    throw InconclusiveError("quotient_dimension: truncated basis is not closed");
  return count_staircase(basis.leading_exponents(), basis.nvars());
}

MilnorResult milnor_number(const Poly& f, const LocalRingOptions& options) {
  if (auto o = f.order(); o && *o < 2 && f.constant_term() == 0)
    throw DomainError("milnor_number: germ has a linear term (not a critical point)");
  std::vector<Poly> grad = f.gradient();
  bool all_zero = std::all_of(grad.begin(), grad.end(), [](const Poly& g) { return g.is_zero(); });
  MilnorResult r;
  if (all_zero) return r;  // infinite
  std::vector<Poly> nonzero;
  for (auto& g : grad)
    if (!g.is_zero()) nonzero.push_back(std::move(g));
  LocalRingOptions opts = options;
  opts.track_cofactors = false;
  LocalBasis b = standard_basis(nonzero, opts);
  r.staircase_corners = b.leading_exponents();
  r.basis_size = b.generators().size();
  r.truncation = b.truncation();
  if (!b.decisive())
    throw InconclusiveError("milnor_number: staircase did not close below degree " +
                            std::to_string(b.truncation()));
  r.value = quotient_dimension(b);
  return r;
}

std::optional<PowerMembershipResult> power_membership(const Poly& f, std::size_t i,
                                                      std::uint32_t k_max,
                                                      const LocalRingOptions& options) {
  if (i >= f.nvars()) throw DomainError("power_membership: index out of range");
  if (k_max < 1) throw DomainError("power_membership: k_max must be >= 1");
  std::vector<Poly> gens = f.deleted_gradient(i);
  if (gens.empty()) throw DomainError("power_membership: needs at least two variables");
  LocalRingOptions opts = options;
  opts.track_cofactors = true;
  LocalBasis b = standard_basis(gens, opts);
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    Exponent a(f.nvars(), 0);
    a[i] = k;
    if (auto cert = membership(Poly::monomial(a), b)) return PowerMembershipResult{k, *cert};
  }
  return std::nullopt;
}

MembershipCertificate euler_certificate(const Poly& f, const WeightVector& w) {
  if (w.size() != f.nvars()) throw DomainError("euler_certificate: arity mismatch");
  if (f.is_zero()) throw DomainError("euler_certificate: zero polynomial");
  WeightVector l = w.normalized();
  for (const auto& [a, c] : f)
    if (weighted_degree(a, l) != 1)
      throw DomainError("euler_certificate: polynomial is not weighted homogeneous of type " +
                        to_string(w));
  MembershipCertificate cert;
  cert.target = f;
  cert.generators = f.gradient();
  for (std::size_t i = 0; i < f.nvars(); ++i)
    cert.cofactors.push_back(Poly::variable(f.nvars(), i) * l[i]);
  cert.certified_degree = 1;
  cert.exact = true;
  if (!verify_certificate(cert)) throw InvariantError("Euler relation failed");
  return cert;
}

}  // namespace lojex
