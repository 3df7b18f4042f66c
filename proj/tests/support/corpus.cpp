#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lojex/linalg.hpp"
#include "lojex/parser.hpp"
#include "oracles.hpp"

namespace lojex::testing {
namespace {

std::vector<std::string> names_for(std::size_t n) {
  static const std::vector<std::string> xyz = {"x", "y", "z", "w"};
  if (n <= xyz.size()) return {xyz.begin(), xyz.begin() + static_cast<long>(n)};
  return default_names(n);
}

Germ make(std::string name, const std::string& vars, const std::string& text,
          const std::string& weights) {
  auto names = parse_variable_list(vars);
  Poly f = parse_poly(text, names);
  return {std::move(name), names, std::move(f), parse_weights(weights)};
}

void tuples(unsigned n, bool sorted, std::vector<unsigned>& cur,
            std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  unsigned lo = (sorted && !cur.empty()) ? cur.back() : 2;
  for (unsigned a = lo; a <= 6; ++a) {
    cur.push_back(a);
    tuples(n, sorted, cur, out);
    cur.pop_back();
  }
}

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[rng() % v.size()];
}

unsigned uniform(unsigned lo, unsigned hi, std::mt19937_64& rng) {
  return lo + static_cast<unsigned>(rng() % (hi - lo + 1));
}

Poly monomial(std::size_t n, std::initializer_list<std::pair<std::size_t, unsigned>> parts,
              const Rational& c = Rational(1)) {
  Exponent e(n, 0);
  for (auto [i, k] : parts) e[i] += k;
  return Poly::monomial(e, c);
}

// Solve the level equations of a three-variable invertible polynomial.
std::vector<Rational> solve_levels(const std::vector<Exponent>& rows) {
  Matrix m(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = rows[r][c];
  auto sol = solve(m, std::vector<Rational>(3, Rational(1)));
  if (!sol) throw std::logic_error("singular level system");
  return *sol;
}

Poly permuted(const Poly& f, const std::vector<std::size_t>& perm) {
  return f.embed(f.nvars(), perm);
}

std::vector<Rational> permuted(const std::vector<Rational>& w, const std::vector<std::size_t>& perm) {
  std::vector<Rational> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[perm[i]] = w[i];
  return out;
}

}  // namespace

std::vector<std::vector<unsigned>> bp_tuples() {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  tuples(2, false, cur, out);
  tuples(3, false, cur, out);
  tuples(4, true, cur, out);
  return out;
}

std::vector<Germ> named_germs() {
  return {
      make("mixed-type cubic, negative weights", "x,y,z", "x*y + x^4*y^3 + (z+y)^3", "1;-2,3,1/3"),
      make("mixed-type cubic, positive weights", "x,y,z", "x*y + x^4*y^3 + (z+y)^3",
           "1;2/3,1/3,1/3"),
      make("eigenvalue example", "x,y,z",
           "x*z + x*y*z^2 + x*y^3 + y^3*z^2 + y^5 + y^2*z^4 + z^8", "1;1/2,1/5,1/2"),
      make("hyperbolic pair over z^5", "x,y,z", "x*y + y^2*z^3 + z^5 + x^2*y^2",
           "1;-3/2,5/2,1/5"),
      make("pair over y^4", "x,y,z", "x*z + y^4 + x^3*y", "1;1/3,1/4,2/3"),
      make("A1", "x", "x^2", "1;1/2"),
      make("A1 in three variables", "x,y,z", "x^2 + y^2 + z^2", "1;1/2,1/2,1/2"),
      make("A3 with tail", "x,y", "x^2 + y^4 + x*y^3", "1;1/2,1/4"),
      make("D4", "x,y,z", "x^2*y + y^3 + z^2", "1;1/3,1/3,1/2"),
      make("D5", "x,y", "x^2*y + y^4", "1;3/8,1/4"),
      make("E6 with tail", "x,y", "x^3 + y^4 + x^2*y^2", "1;1/3,1/4"),
      make("E7", "x,y", "x^3 + x*y^3", "1;1/3,2/9"),
      make("E8", "x,y", "x^3 + y^5", "1;1/3,1/5"),
      make("cubic cone plus xyz", "x,y,z", "x^3 + y^3 + z^3 + x*y*z", "1;1/3,1/3,1/3"),
      make("chain", "x,y,z", "x^3 + x*y^2 + y*z^3", "1;1/3,1/3,2/9"),
      make("loop", "x,y", "x^2*y + x*y^3", "1;2/5,1/5"),
      make("diagonal with tail", "x,y,z", "x^2 + y^3 + z^7 + y^2*z^3", "1;1/2,1/3,1/7"),
  };
}

std::vector<Germ> sqh_corpus() {
  std::vector<Germ> out;
  std::mt19937_64 rng(20240613);
  for (const auto& a : bp_tuples()) {
    Germ g;
    g.vars = names_for(a.size());
    g.f = bp_germ(a);
    std::vector<Rational> l;
    for (unsigned k : a) l.emplace_back(1, k);
    g.w = WeightVector(l);
    g.name = "diagonal " + to_string(g.f, g.vars);
    out.push_back(g);
    if (a.size() <= 3) {
      Germ t = g;
      t.f += Poly::monomial(random_tail_exponent(g.w, 6, rng), random_coefficient(rng));
      t.name = "tailed " + to_string(t.f, t.vars);
      out.push_back(std::move(t));
    }
  }
  for (auto& g : named_germs()) {
    bool positive = std::all_of(g.w.weights().begin(), g.w.weights().end(), [](const Rational& l) {
      return l > 0 && l <= Rational(1, 2);
    });
    if (positive) out.push_back(std::move(g));
  }
  return out;
}

Exponent random_tail_exponent(const WeightVector& w, unsigned max_degree, std::mt19937_64& rng) {
  const std::size_t n = w.size();
  std::vector<std::size_t> up;
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] > 0) up.push_back(i);
  if (up.empty()) throw std::invalid_argument("random_tail_exponent: no positive weight");
  Exponent e(n, 0);
  unsigned total = uniform(2, max_degree, rng);
  for (unsigned k = 0; k < total; ++k) ++e[rng() % n];
  while (weighted_degree(e, w) <= w.level()) ++e[up[rng() % up.size()]];
  return e;
}

Rational random_coefficient(std::mt19937_64& rng) {
  long p = static_cast<long>(uniform(1, 5, rng));
  if (rng() % 2) p = -p;
  return make_rational(p, static_cast<long>(uniform(1, 5, rng)));
}

WitnessedType random_saito_type(std::mt19937_64& rng) {
  std::vector<Rational> l;
  Poly f(3);
  std::string family;
  switch (rng() % 5) {
    case 0:
    case 1: {
      // x z + y^c with x, z of weights p, 1 - p (p anywhere, including <= 0)
      family = "pair";
      long den = static_cast<long>(uniform(1, 12, rng));
      long num = static_cast<long>(rng() % static_cast<std::uint64_t>(7 * den)) - 3 * den;
      Rational p = make_rational(num, den);
      unsigned c = uniform(2, 9, rng);
      l = {p, Rational(1, c), 1 - p};
      f = monomial(3, {{0, 1}, {2, 1}}) + monomial(3, {{1, c}});
      break;
    }
    case 2: {
      family = "diagonal";
      std::vector<unsigned> a = {uniform(2, 9, rng), uniform(2, 9, rng), uniform(2, 9, rng)};
      l = {Rational(1, a[0]), Rational(1, a[1]), Rational(1, a[2])};
      f = bp_germ(a);
      break;
    }
    case 3: {
      // x^a + x y^b + y z^c
      family = "chain";
      unsigned a = uniform(2, 6, rng), b = uniform(2, 6, rng), c = uniform(2, 6, rng);
      l = solve_levels({{a, 0, 0}, {1, b, 0}, {0, 1, c}});
      f = monomial(3, {{0, a}}) + monomial(3, {{0, 1}, {1, b}}) + monomial(3, {{1, 1}, {2, c}});
      break;
    }
    default: {
      // x^a y + y^b z + z^c x
      family = "loop";
      unsigned a = uniform(2, 6, rng), b = uniform(2, 6, rng), c = uniform(2, 6, rng);
      l = solve_levels({{a, 1, 0}, {0, b, 1}, {1, 0, c}});
      f = monomial(3, {{0, a}, {1, 1}}) + monomial(3, {{1, b}, {2, 1}}) +
          monomial(3, {{2, c}, {0, 1}});
      break;
    }
  }
  std::vector<std::size_t> perm = {0, 1, 2};
  std::shuffle(perm.begin(), perm.end(), rng);
  WitnessedType out;
  out.family = family;
  out.w = WeightVector(permuted(l, perm));
  out.germ = permuted(f, perm);
  unsigned tails = uniform(0, 2, rng);
  for (unsigned k = 0; k < tails; ++k)
    out.germ += Poly::monomial(random_tail_exponent(out.w, 6, rng), random_coefficient(rng));
  return out;
}

SplittingGerm random_splitting_germ(std::mt19937_64& rng) {
  const std::size_t k = uniform(1, 2, rng);
  const std::size_t pairs = uniform(1, 2, rng);
  const std::size_t n = k + 2 * pairs;

  // f0 and its weights in local y coordinates
  Poly f0(k);
  std::vector<Rational> q;
  if (k == 1) {
    unsigned c = uniform(2, 7, rng);
    f0 = monomial(1, {{0, c}});
    q = {Rational(1, c)};
  } else {
    unsigned a = uniform(2, 5, rng), b = uniform(2, 5, rng);
    switch (rng() % 3) {
      case 0:
        f0 = monomial(2, {{0, a}}) + monomial(2, {{1, b}});
        q = {Rational(1, a), Rational(1, b)};
        break;
      case 1:
        f0 = monomial(2, {{0, a}}) + monomial(2, {{0, 1}, {1, b}});
        q = {Rational(1, a), Rational(a - 1, a * b)};
        break;
      default:
        f0 = monomial(2, {{0, a}, {1, 1}}) + monomial(2, {{0, 1}, {1, b}});
        q = {Rational(b - 1, a * b - 1), Rational(a - 1, a * b - 1)};
        break;
    }
    for (auto& v : q) v.canonicalize();
  }

  std::vector<std::size_t> slots(n);
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);

  SplittingGerm g;
  std::vector<Rational> l(n);
  for (std::size_t j = 0; j < k; ++j) {
    g.y_vars.push_back(slots[j]);
    l[slots[j]] = q[j];
  }
  std::sort(g.y_vars.begin(), g.y_vars.end());
  // Re-read f0 in sorted y order so project() on the core matches it.
  std::vector<std::size_t> order(k);
  for (std::size_t j = 0; j < k; ++j)
    order[j] = static_cast<std::size_t>(
        std::find(g.y_vars.begin(), g.y_vars.end(), slots[j]) - g.y_vars.begin());
  g.f0 = f0.embed(k, order);
  std::vector<Rational> yq(k);
  for (std::size_t j = 0; j < k; ++j) yq[order[j]] = q[j];
  g.y_weights = WeightVector(yq);

  std::vector<std::size_t> place(k);
  for (std::size_t j = 0; j < k; ++j) place[j] = slots[j];
  g.f = f0.embed(n, place);
  for (std::size_t j = 0; j < pairs; ++j) {
    std::size_t x = slots[k + 2 * j], z = slots[k + 2 * j + 1];
    long den = static_cast<long>(uniform(2, 9, rng));
    long num = static_cast<long>(uniform(1, static_cast<unsigned>(den - 1), rng));
    Rational p = make_rational(num, den);
    l[x] = p;
    l[z] = 1 - p;
    g.pairing.emplace_back(x, z);
    static const std::vector<Rational> scales = {Rational(1), Rational(2), Rational(-1),
                                                 Rational(3, 2)};
    g.f += monomial(n, {{x, 1}, {z, 1}}, pick(scales, rng));
  }
  g.w = WeightVector(l);
  unsigned tails = uniform(1, 4, rng);
  for (unsigned t = 0; t < tails; ++t)
    g.f += Poly::monomial(random_tail_exponent(g.w, 5, rng), random_coefficient(rng));
  return g;
}

}  // namespace lojex::testing
