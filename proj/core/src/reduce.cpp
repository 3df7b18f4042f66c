#include "lojex/reduce.hpp"

#include <algorithm>

#include "lojex/errors.hpp"
#include "lojex/weights.hpp"

namespace lojex {

namespace {

const Rational kHalf(1, 2);

Exponent unit(std::size_t n, std::size_t i) {
  Exponent a(n, 0);
  a[i] = 1;
  return a;
}

Exponent pair_exponent(std::size_t n, std::size_t i, std::size_t j) {
  Exponent a(n, 0);
  a[i] += 1;
  a[j] += 1;
  return a;
}

// Level-1 part and the strictly higher part; lower levels are rejected.
std::pair<Poly, Poly> split_levels(const Poly& f, const WeightVector& w) {
  Poly principal(f.nvars()), tail(f.nvars());
  for (const auto& [a, c] : f) {
    Rational d = weighted_degree(a, w);
    if (d < 1) throw DomainError("monomial below level 1");
    (d == 1 ? principal : tail).add_term(a, c);
  }
  return {principal, tail};
}

Poly hyperbolic_sum(std::size_t n, const Pairing& pairing) {
  Poly s(n);
  for (auto [x, z] : pairing) s.add_term(pair_exponent(n, x, z), 1);
  return s;
}

std::vector<Poly> identity_map(std::size_t n) {
  std::vector<Poly> m;
  for (std::size_t i = 0; i < n; ++i) m.push_back(Poly::variable(n, i));
  return m;
}

bool weights_above(const std::optional<Rational>& ord, const Rational& bound) {
  return !ord || *ord >= bound;
}

struct MilnorBound {
  std::uint64_t M = 1;
  bool fallback = false;
};

// mu of the principal part restricted to the unpaired variables.
MilnorBound milnor_bound(const Poly& f0y, const std::vector<std::size_t>& y,
                         const WeightVector& w, const LocalRingOptions& local) {
  if (y.empty()) return {1, false};
  Poly g = project(f0y, y);
  try {
    MilnorResult mu = milnor_number(g, local);
    if (!mu.value) throw DomainError("principal part is not an isolated singularity");
    return {std::max<std::uint64_t>(*mu.value, 1), false};
  } catch (const InconclusiveError&) {
    Rational prod(1);
    for (std::size_t i : y) prod *= 1 / w[i] - 1;
    Integer c = ceil(prod);
    return {c > 1 ? c.get_ui() : 1, true};
  }
}

std::vector<std::string> names_or_default(const ReduceOptions& o, std::size_t n) {
  if (o.names.empty()) return default_names(n);
  if (o.names.size() != n) throw DomainError("reduce: name list does not match the arity");
  return o.names;
}

TraceStep polynomial_step(std::vector<std::string> names, std::vector<Poly> map,
                          std::vector<Poly> inverse, std::string note) {
  TraceStep s;
  s.kind = TraceStep::Kind::PolynomialChange;
  s.names = std::move(names);
  // Exact inverses are checked by full composition.
  std::vector<Poly> composed;
  bool exact = true;
  for (const auto& m : map) {
    Poly c = substitute(m, inverse);
    composed.push_back(c);
  }
  for (std::size_t i = 0; i < composed.size(); ++i)
    if (composed[i] != Poly::variable(map.size(), i)) exact = false;
  if (!exact) throw InvariantError("coordinate change does not compose to the identity");
  s.exact_inverse = true;
  std::uint64_t deg = 0;
  for (const auto& m : map) deg = std::max<std::uint64_t>(deg, m.degree().value_or(0));
  s.verified_degree = deg;
  s.map = std::move(map);
  s.inverse = std::move(inverse);
  s.note = std::move(note);
  return s;
}

}  // namespace

std::string to_string(TraceStep::Kind k) {
  switch (k) {
    case TraceStep::Kind::AddSquare: return "add_square";
    case TraceStep::Kind::RemoveSquarePair: return "remove_square_pair";
    case TraceStep::Kind::LinearChange: return "linear_change";
    case TraceStep::Kind::PolynomialChange: return "polynomial_change";
  }
  return "unknown";
}

Poly project(const Poly& p, std::span<const std::size_t> keep) {
  std::vector<bool> kept(p.nvars(), false);
  for (std::size_t i : keep) {
    if (i >= p.nvars()) throw DomainError("project: index out of range");
    kept[i] = true;
  }
  Poly r(keep.size());
  for (const auto& [a, c] : p) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!kept[i] && a[i] != 0) throw DomainError("project: polynomial involves a dropped variable");
    Exponent b(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) b[j] = a[keep[j]];
    r.add_term(b, c);
  }
  return r;
}

bool verify_inverse(std::span<const Poly> map, std::span<const Poly> inverse,
                    std::uint64_t degree) {
  for (std::size_t i = 0; i < map.size(); ++i) {
    Poly c = substitute_truncated(map[i], inverse, degree);
    if (c != Poly::variable(map.size(), i).truncated(degree)) return false;
  }
  return true;
}

std::optional<std::vector<Poly>> invert_map(std::span<const Poly> map, std::uint64_t degree) {
  const std::size_t n = map.size();
  Matrix L(n, n);
  std::vector<Poly> N;
  for (std::size_t i = 0; i < n; ++i) {
    if (map[i].nvars() != n) throw DomainError("invert_map: map is not square");
    if (map[i].constant_term() != 0) throw DomainError("invert_map: component does not vanish at 0");
    Poly rest = map[i];
    for (std::size_t j = 0; j < n; ++j) {
      L(i, j) = map[i].coeff(unit(n, j));
      rest.add_term(unit(n, j), -L(i, j));
    }
    N.push_back(std::move(rest));
  }
  std::optional<Matrix> Li = inverse(L);
  if (!Li) return std::nullopt;
  auto apply = [&](const std::vector<Poly>& v) {
    std::vector<Poly> out(n, Poly(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((*Li)(i, j) != 0) out[i] += v[j] * (*Li)(i, j);
    return out;
  };
  std::vector<Poly> V = identity_map(n);
  std::vector<Poly> v = apply(V);
  // Each pass fixes one more degree of the inverse.
  for (std::uint64_t t = 1; t < degree; ++t) {
    std::vector<Poly> rhs(n, Poly(n));
    for (std::size_t i = 0; i < n; ++i) rhs[i] = V[i] - substitute_truncated(N[i], v, degree);
    std::vector<Poly> next = apply(rhs);
    if (next == v) break;
    v = std::move(next);
  }
  if (!verify_inverse(map, v, degree))
    throw InvariantError("invert_map: truncated inverse failed verification");
  return v;
}

Poly add_square(const Poly& f) {
  const std::size_t n = f.nvars();
  std::vector<std::size_t> placement(n);
  for (std::size_t i = 0; i < n; ++i) placement[i] = i;
  Poly g = f.embed(n + 1, placement);
  Exponent a(n + 1, 0);
  a[n] = 2;
  g.add_term(a, 1);
  return g;
}

WeightVector add_square(const WeightVector& w) { return w.appended(kHalf); }

std::vector<std::string> check_state(const ReductionState& s) {
  std::vector<std::string> bad;
  const std::size_t n = s.germ.nvars();
  Poly recon = s.principal_y + s.H + s.R;
  for (std::size_t j = 0; j < s.pairing.size(); ++j) {
    auto [x, z] = s.pairing[j];
    recon += (Poly::variable(n, x) + s.Gamma[j]) * (Poly::variable(n, z) + s.Delta[j]);
  }
  const std::string at = " at m=" + std::to_string(s.m);
  if (recon != s.germ) bad.push_back("reconstruction identity fails" + at);
  if (auto o = weighted_order(s.H, s.weights); o && *o <= 1) bad.push_back("ord H <= 1" + at);
  if (s.d1) {
    const Rational& d1 = *s.d1;
    for (std::size_t j = 0; j < s.pairing.size(); ++j) {
      auto [x, z] = s.pairing[j];
      if (!weights_above(weighted_order(s.Gamma[j], s.weights), d1 - s.weights[z]))
        bad.push_back("Gamma_" + std::to_string(j + 1) + " order bound fails" + at);
      if (!weights_above(weighted_order(s.Delta[j], s.weights), d1 - s.weights[x]))
        bad.push_back("Delta_" + std::to_string(j + 1) + " order bound fails" + at);
    }
    if (!weights_above(weighted_order(s.R, s.weights), Rational(s.m) * (d1 - 1) + 1))
      bad.push_back("ord R below m(d1-1)+1" + at);
  }
  return bad;
}

ReductionState decompose_step(const ReductionState& s) {
  const std::size_t n = s.germ.nvars();
  const std::size_t k = s.pairing.size();
  Poly eta(n);
  std::vector<Poly> gamma(k, Poly(n)), delta(k, Poly(n));
  for (const auto& [a, c] : s.R) {
    if (total_degree(a) == 0) throw InvariantError("decompose_step: constant term in R");
    bool placed = false;
    for (std::size_t j = 0; j < k && !placed; ++j) {
      std::size_t x = s.pairing[j].first;
      if (a[x] == 0) continue;
      Exponent b = a;
      --b[x];
      delta[j].add_term(b, c);
      placed = true;
    }
    for (std::size_t j = 0; j < k && !placed; ++j) {
      std::size_t z = s.pairing[j].second;
      if (a[z] == 0) continue;
      Exponent b = a;
      --b[z];
      gamma[j].add_term(b, c);
      placed = true;
    }
    if (!placed) eta.add_term(a, c);
  }
  ReductionState t = s;
  t.H += eta;
  t.R = Poly(n);
  for (std::size_t j = 0; j < k; ++j) {
    t.Delta[j] += delta[j];
    t.R -= s.Gamma[j] * delta[j] + gamma[j] * t.Delta[j];
    t.Gamma[j] += gamma[j];
  }
  ++t.m;
  return t;
}

ReductionResult splitting_reduce(const Poly& f_in, const WeightVector& w_in, const Pairing& pairing,
                                 const ReduceOptions& options) {
  const std::size_t n = f_in.nvars();
  if (w_in.size() != n) throw DomainError("splitting_reduce: arity mismatch");
  const WeightVector w = w_in.normalized();
  const std::vector<std::string> names = names_or_default(options, n);

  std::vector<int> role(n, -1);
  for (std::size_t j = 0; j < pairing.size(); ++j) {
    auto [x, z] = pairing[j];
    if (x >= n || z >= n || x == z || role[x] != -1 || role[z] != -1)
      throw DomainError("splitting_reduce: invalid pairing");
    if (w[x] + w[z] != 1) throw DomainError("splitting_reduce: paired weights must sum to 1");
    role[x] = role[z] = static_cast<int>(j);
  }
  std::vector<std::size_t> y;
  for (std::size_t i = 0; i < n; ++i)
    if (role[i] == -1) {
      if (w[i] <= 0) throw DomainError("splitting_reduce: unpaired weights must be positive");
      y.push_back(i);
    }

  Poly f = f_in;
  auto [principal, tail] = split_levels(f, w);
  Poly f0y(n);
  std::vector<Rational> c(pairing.size());
  for (const auto& [a, coef] : principal) {
    bool hyperbolic = false;
    for (std::size_t j = 0; j < pairing.size(); ++j)
      if (a == pair_exponent(n, pairing[j].first, pairing[j].second)) {
        c[j] = coef;
        hyperbolic = true;
      }
    if (hyperbolic) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (role[i] != -1 && a[i] != 0)
        throw DomainError("splitting_reduce: principal part is not f0(y) + sum x_j z_j");
    f0y.add_term(a, coef);
  }

  ReductionResult out;
  std::vector<std::size_t> scaled;
  Matrix scale(0, 0);
  std::vector<Poly> subst = identity_map(n);
  for (std::size_t j = 0; j < pairing.size(); ++j) {
    if (c[j] == 0) throw DomainError("splitting_reduce: pair monomial missing from principal part");
    if (c[j] != 1) {
      scaled.push_back(j);
      subst[pairing[j].first] *= 1 / c[j];
    }
  }
  if (!scaled.empty()) {
    f = substitute(f, subst);
    TraceStep st;
    st.kind = TraceStep::Kind::LinearChange;
    st.names = names;
    st.matrix = Matrix(scaled.size(), scaled.size());
    for (std::size_t r = 0; r < scaled.size(); ++r) {
      st.vars.push_back(pairing[scaled[r]].first);
      st.matrix(r, r) = c[scaled[r]];
    }
    st.note = "scale paired variables to unit coefficients";
    out.trace.steps.push_back(std::move(st));
    tail = f - f0y - hyperbolic_sum(n, pairing);
  }

  MilnorBound mb = milnor_bound(f0y, y, w, options.local);
  out.milnor_bound = mb.M;
  out.milnor_fallback = mb.fallback;

  ReductionState s;
  s.H = Poly(n);
  s.Gamma.assign(pairing.size(), Poly(n));
  s.Delta.assign(pairing.size(), Poly(n));
  s.R = tail;
  s.d1 = weighted_order(tail, w);
  s.pairing = pairing;
  s.M = mb.M;
  s.weights = w;
  s.germ = f;
  s.principal_y = f0y;

  auto check = [&](const ReductionState& st) {
    auto bad = check_state(st);
    if (!bad.empty()) throw InvariantError("splitting_reduce: " + bad.front());
    if (options.observer) options.observer(st);
  };
  check(s);
  const std::size_t budget = options.max_iterations ? options.max_iterations : 4 * mb.M;
  // At least one step always runs, so a tail already free of pairs lands in H.
  while (!s.R.is_zero() && (s.m == 1 || *s.R.order() <= mb.M)) {
    if (out.iterations >= budget)
      throw InconclusiveError("splitting_reduce: iteration budget of " + std::to_string(budget) +
                              " exhausted");
    s = decompose_step(s);
    ++out.iterations;
    if (options.max_state_terms) {
      std::size_t terms = s.H.size() + s.R.size();
      for (std::size_t j = 0; j < s.pairing.size(); ++j) terms += s.Gamma[j].size() + s.Delta[j].size();
      if (terms > options.max_state_terms)
        throw InconclusiveError("splitting_reduce: state grew to " + std::to_string(terms) +
                                " terms at m=" + std::to_string(s.m) + ", above the cap of " +
                                std::to_string(options.max_state_terms));
    }
    check(s);
  }

  if (!pairing.empty()) {
    std::vector<Poly> psi = identity_map(n);
    bool trivial = true;
    for (std::size_t j = 0; j < pairing.size(); ++j) {
      psi[pairing[j].first] += s.Gamma[j];
      psi[pairing[j].second] += s.Delta[j];
      trivial = trivial && s.Gamma[j].is_zero() && s.Delta[j].is_zero();
    }
    if (!trivial) {
      const std::uint64_t D = std::max<std::uint64_t>(mb.M, 2);
      auto inv = invert_map(psi, D);
      if (!inv) throw InvariantError("splitting_reduce: splitting map is not invertible");
      Poly lhs = substitute_truncated(f - s.R, *inv, D);
      Poly rhs = (f0y + s.H + hyperbolic_sum(n, pairing)).truncated(D);
      if (lhs != rhs) throw InvariantError("splitting_reduce: transformed germ mismatch");
      TraceStep st;
      st.kind = TraceStep::Kind::PolynomialChange;
      st.names = names;
      st.map = std::move(psi);
      st.inverse = std::move(*inv);
      st.verified_degree = D;
      st.note = "x_j -> x_j + Gamma_j, z_j -> z_j + Delta_j";
      out.trace.steps.push_back(std::move(st));
    }
    for (auto [x, z] : pairing) {
      TraceStep lin;
      lin.kind = TraceStep::Kind::LinearChange;
      lin.names = names;
      lin.vars = {x, z};
      lin.matrix = Matrix(2, 2);
      lin.matrix(0, 0) = kHalf;
      lin.matrix(0, 1) = kHalf;
      lin.matrix(1, 0) = kHalf;
      lin.matrix(1, 1) = -kHalf;
      lin.note = "x*z = u^2 - v^2";
      out.trace.steps.push_back(std::move(lin));
    }
    // Removing pairs one by one shifts indices; record each against its ring.
    std::vector<std::string> ring = names;
    std::vector<std::size_t> alive(n);
    for (std::size_t i = 0; i < n; ++i) alive[i] = i;
    for (auto [x, z] : pairing) {
      TraceStep rm;
      rm.kind = TraceStep::Kind::RemoveSquarePair;
      rm.names = ring;
      auto pos = [&](std::size_t v) {
        return static_cast<std::size_t>(std::find(alive.begin(), alive.end(), v) - alive.begin());
      };
      rm.vars = {pos(x), pos(z)};
      out.trace.steps.push_back(rm);
      for (std::size_t v : {std::max(pos(x), pos(z)), std::min(pos(x), pos(z))}) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(v));
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(v));
      }
    }
  }

  out.core = project(f0y + s.H, y);
  std::vector<Rational> q;
  for (std::size_t i : y) {
    q.push_back(w[i]);
    out.names.push_back(names[i]);
  }
  out.weights = WeightVector(q);
  out.a1 = y.empty();
  return out;
}

ReductionResult theorem4_reduce(const Poly& f_in, const WeightVector& w_in,
                                const ReduceOptions& options) {
  WeightVector w = w_in.normalized();
  Classification cls = classify(f_in, w, ClassifyOptions{options.local});
  if (cls.verdict == Verdict::NONE) throw DomainError("theorem4_reduce: " + cls.reason);
  for (const auto& l : w.weights())
    if (l <= 0 || l >= 1) throw DomainError("theorem4_reduce: weights must lie in (0, 1)");

  ReductionResult out;
  Poly f = f_in;
  std::vector<std::string> names = names_or_default(options, f.nvars());
  bool first = true;
  while (true) {
    const std::size_t n = f.nvars();
    std::size_t top = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (w[i] >= w[top]) top = i;
    if (n == 0 || w[top] <= kHalf) break;

    Poly f0 = split_levels(f, w).first;
    Poly A(n), B(n);
    for (const auto& [a, c] : f0) {
      if (a[top] == 0) {
        B.add_term(a, c);
        continue;
      }
      if (a[top] > 1) throw InvariantError("theorem4_reduce: principal part not linear in the top variable");
      Exponent b = a;
      b[top] = 0;
      A.add_term(b, c);
    }
    std::optional<std::size_t> partner;
    for (std::size_t i = 0; i < n && !partner; ++i)
      if (i != top && A.coeff(unit(n, i)) != 0) partner = i;
    if (!partner)
      throw DomainError("theorem4_reduce: no monomial z_n z_i in the principal part of weight type " +
                        to_string(w));
    const std::size_t i = *partner;
    const Rational c = A.coeff(unit(n, i));
    Poly Arest = A;
    Arest.add_term(unit(n, i), -c);

    // z_i' = c z_i + A'  (A' is free of z_i and z_n by weight).
    std::vector<Poly> map1 = identity_map(n), inv1 = identity_map(n);
    map1[i] = Poly::variable(n, i) * c + Arest;
    inv1[i] = (Poly::variable(n, i) - Arest) * (1 / c);
    out.trace.steps.push_back(polynomial_step(names, map1, inv1, "complete the pairing partner"));
    f = substitute(f, inv1);

    Poly g0 = split_levels(f, w).first;
    Poly Bt(n);
    Poly linear_top(n);
    for (const auto& [a, cc] : g0) (a[top] ? linear_top : Bt).add_term(a, cc);
    if (linear_top != Poly::monomial(pair_exponent(n, i, top)))
      throw InvariantError("theorem4_reduce: partner completion failed");
    Poly C(n);
    for (const auto& [a, cc] : Bt)
      if (a[i] > 0) {
        Exponent b = a;
        --b[i];
        C.add_term(b, cc);
      }
    if (!C.is_zero()) {
      // z_n' = z_n + C  absorbs z_i * C into the pair.
      std::vector<Poly> map2 = identity_map(n), inv2 = identity_map(n);
      map2[top] = Poly::variable(n, top) + C;
      inv2[top] = Poly::variable(n, top) - C;
      out.trace.steps.push_back(polynomial_step(names, map2, inv2, "absorb partner terms"));
      f = substitute(f, inv2);
    }

    ReduceOptions sub = options;
    sub.names = names;
    ReductionResult r = splitting_reduce(f, w, Pairing{{i, top}}, sub);
    out.trace.append(r.trace);
    out.iterations += r.iterations;
    if (first) out.milnor_bound = r.milnor_bound;
    out.milnor_fallback = out.milnor_fallback || r.milnor_fallback;
    first = false;
    f = r.core;
    w = r.weights;
    names = r.names;
    if (r.a1) {
      out.a1 = true;
      break;
    }
  }
  out.core = f;
  out.weights = w;
  out.names = names;
  return out;
}

ReductionResult corollary25_reduce(const Poly& f_in, const WeightVector& w_in,
                                   const ReduceOptions& options) {
  const std::size_t n = f_in.nvars();
  const WeightVector w = w_in.normalized();
  Classification cls = classify(f_in, w, ClassifyOptions{options.local});
  if (cls.verdict == Verdict::NONE) throw DomainError("corollary25_reduce: " + cls.reason);
  SymmetryCheck sym = saito_symmetry_check(w);
  if (!sym.consistent) throw DomainError("corollary25_reduce: " + sym.detail);
  const std::vector<std::string> names = names_or_default(options, n);
  if (sym.pairs.empty()) {
    ReductionResult id;
    id.core = f_in;
    id.weights = w;
    id.names = names;
    return id;
  }

  const Pairing pairs(sym.pairs.begin(), sym.pairs.end());
  const std::size_t k = pairs.size();
  std::vector<int> role(n, 0);  // 0 positive, 1 low, 2 high
  for (auto [x, z] : pairs) {
    role[x] = 1;
    role[z] = 2;
  }
  std::vector<std::size_t> y;
  for (std::size_t i = 0; i < n; ++i)
    if (role[i] == 0) y.push_back(i);

  const Poly& f0 = cls.principal;
  std::vector<Poly> P(k, Poly(n));
  Poly h(n);
  for (const auto& [a, c] : f0) {
    bool placed = false;
    for (std::size_t j = 0; j < k && !placed; ++j) {
      if (a[pairs[j].first] == 0) continue;
      Exponent b = a;
      --b[pairs[j].first];
      P[j].add_term(b, c);
      placed = true;
    }
    if (placed) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (role[i] != 0 && a[i] != 0)
        throw DomainError("corollary25_reduce: restricted pattern unmet (partner variable outside x_j P_j)");
    h.add_term(a, c);
  }
  Matrix lin(k, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t t = 0; t < k; ++t) lin(j, t) = P[j].coeff(unit(n, pairs[t].second));
  if (determinant(lin) == 0)
    throw DomainError("corollary25_reduce: restricted pattern unmet (singular linear part)");

  MilnorBound mb = milnor_bound(h, y, w, options.local);
  const std::uint64_t D =
      std::max<std::uint64_t>({mb.M + 1, f0.degree().value_or(0), std::uint64_t{2}});
  std::vector<Poly> G = identity_map(n);
  for (std::size_t j = 0; j < k; ++j) G[pairs[j].second] = P[j];
  auto Ginv = invert_map(G, D);
  if (!Ginv) throw InvariantError("corollary25_reduce: coordinate change is not invertible");

  Poly model = h + hyperbolic_sum(n, pairs);
  if (substitute_truncated(f0, *Ginv, D) != model.truncated(D))
    throw InvariantError("corollary25_reduce: transformed principal part mismatch");
  Poly ft = model + substitute_truncated(f_in - f0, *Ginv, D);

  ReductionResult out;
  TraceStep st;
  st.kind = TraceStep::Kind::PolynomialChange;
  st.names = names;
  st.map = G;
  st.inverse = *Ginv;
  st.verified_degree = D;
  st.note = "z_j -> P_j; transformed tail kept to degree " + std::to_string(D);
  out.trace.steps.push_back(std::move(st));

  ReduceOptions sub = options;
  sub.names = names;
  ReductionResult r = splitting_reduce(ft, w, pairs, sub);
  out.trace.append(r.trace);
  out.core = r.core;
  out.weights = r.weights;
  out.names = r.names;
  out.a1 = r.a1;
  out.iterations = r.iterations;
  out.milnor_bound = r.milnor_bound;
  out.milnor_fallback = r.milnor_fallback || mb.fallback;
  return out;
}

namespace {
// An accepted type whose weights are all 1/2 has a non-degenerate quadratic
// principal part, i.e. the germ is A1.
void mark_quadratic(ReductionResult& r) {
  if (std::all_of(r.weights.weights().begin(), r.weights.weights().end(),
                  [](const Rational& l) { return l == kHalf; }))
    r.a1 = true;
}
}  // namespace

ReductionResult full_reduce(const Poly& f, const WeightVector& w, const ReduceOptions& options) {
  const WeightVector wn = w.normalized();
  const bool nonpositive = std::any_of(wn.weights().begin(), wn.weights().end(),
                                       [](const Rational& l) { return l <= 0; });
  ReductionResult first;
  if (nonpositive) {
    first = corollary25_reduce(f, wn, options);
  } else {
    first.core = f;
    first.weights = wn;
    first.names = names_or_default(options, f.nvars());
  }
  const bool high = std::any_of(first.weights.weights().begin(), first.weights.weights().end(),
                                [](const Rational& l) { return l > kHalf; });
  if (first.a1 || !high) {
    if (!nonpositive) {
      // Nothing to reduce; still validate the type.
      Classification cls = classify(f, wn, ClassifyOptions{options.local});
      if (cls.verdict == Verdict::NONE) throw DomainError("full_reduce: " + cls.reason);
    }
    mark_quadratic(first);
    return first;
  }
  ReduceOptions sub = options;
  sub.names = first.names;
  ReductionResult second = theorem4_reduce(first.core, first.weights, sub);
  ReductionResult out = second;
  out.trace = first.trace;
  out.trace.append(second.trace);
  out.iterations += first.iterations;
  if (nonpositive) out.milnor_bound = first.milnor_bound;
  out.milnor_fallback = first.milnor_fallback || second.milnor_fallback;
  mark_quadratic(out);
  return out;
}

}  // namespace lojex
