#include "lojex/weights.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lojex/errors.hpp"
#include "lojex/linalg.hpp"

namespace lojex {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::WQH: return "WQH";
    case Verdict::QH: return "QH";
    case Verdict::SQH: return "SQH";
    case Verdict::WSQH: return "WSQH";
    case Verdict::NONE: return "NONE";
  }
  return "NONE";
}

namespace {

const Rational kHalf(1, 2);

bool all_in_sqh_range(const WeightVector& w) {
  return std::all_of(w.weights().begin(), w.weights().end(),
                     [](const Rational& l) { return l > 0 && l <= kHalf; });
}

// Level split without the singularity test; returns a reason on rejection.
std::string split(const Poly& p, const WeightVector& w, Poly& principal, Poly& tail) {
  principal = Poly(p.nvars());
  tail = Poly(p.nvars());
  for (const auto& [a, c] : p) {
    Rational d = weighted_degree(a, w);
    if (d < 1) return "monomial below level 1";
    (d == 1 ? principal : tail).add_term(a, c);
  }
  if (principal.is_zero()) return "empty principal part";
  if (auto o = tail.order(); o && *o <= 1) return "tail has order <= 1";
  if (auto o = principal.order(); o && *o <= 1) return "principal part has a linear term";
  return {};
}

}  // namespace

Classification classify(const Poly& p, const WeightVector& w, const ClassifyOptions& options) {
  if (p.is_zero()) throw DomainError("classify: zero polynomial");
  if (w.size() != p.nvars()) throw DomainError("classify: arity mismatch");
  Classification c;
  c.wtype = w.normalized();
  c.reason = split(p, c.wtype, c.principal, c.tail);
  if (!c.reason.empty()) return c;

  MilnorResult mu = milnor_number(c.principal, options.local);
  c.principal_milnor = mu.value;
  c.singular_principal = mu.value.has_value();
  if (!c.singular_principal) {
    c.reason = "principal part is not an isolated singularity";
    return c;
  }
  bool tail_empty = c.tail.is_zero();
  if (all_in_sqh_range(c.wtype)) c.verdict = tail_empty ? Verdict::QH : Verdict::SQH;
  else c.verdict = tail_empty ? Verdict::WQH : Verdict::WSQH;
  return c;
}

Discovery discover_types(const Poly& p, const DiscoveryOptions& options) {
  if (p.is_zero()) throw DomainError("discover_types: zero polynomial");
  const std::size_t n = p.nvars();
  std::vector<Exponent> support;
  for (const auto& [a, c] : p) support.push_back(a);
  if (support.size() > options.max_support)
    throw InconclusiveError("discover_types: support of " + std::to_string(support.size()) +
                            " monomials exceeds the cap of " +
                            std::to_string(options.max_support));

  std::set<std::vector<Rational>> seen;
  std::vector<WeightVector> candidates;
  auto consider = [&](const std::vector<Rational>& l) {
    if (!seen.insert(l).second) return;
    WeightVector w(l);
    Poly f0, tail;
    if (split(p, w, f0, tail).empty()) candidates.push_back(w);
  };

  // Choose a subset of k support monomials and n-k variables pinned at 1/2.
  std::vector<std::size_t> subset;
  auto solve_subset = [&]() {
    const std::size_t k = subset.size();
    std::vector<std::size_t> pinned;
    // Enumerate pinned variable sets of size n-k via a bitmask over n.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != n - k) continue;
      Matrix m(n, n);
      std::vector<Rational> rhs(n);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < n; ++j) m(r, j) = support[subset[r]][j];
        rhs[r] = 1;
      }
      std::size_t r = k;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) {
          m(r, j) = 1;
          rhs[r] = kHalf;
          ++r;
        }
      if (auto l = solve(m, rhs)) consider(*l);
    }
  };
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!subset.empty()) solve_subset();
    if (subset.size() == n) return;
    for (std::size_t s = start; s < support.size(); ++s) {
      subset.push_back(s);
      rec(s + 1);
      subset.pop_back();
    }
  };
  rec(0);

  std::sort(candidates.begin(), candidates.end());
  Discovery out;
  out.candidates = candidates.size();
  for (const auto& w : candidates) {
    try {
      if (classify(p, w, options.classify).verdict != Verdict::NONE) out.types.push_back(w);
    } catch (const InconclusiveError&) {
      out.inconclusive.push_back(w);
    }
  }
  return out;
}

SymmetryCheck saito_symmetry_check(const WeightVector& w) {
  WeightVector n = w.normalized();
  SymmetryCheck r;
  std::vector<std::size_t> low, high;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] <= 0) low.push_back(i);
    if (n[i] >= 1) high.push_back(i);
  }
  if (low.size() != high.size()) {
    r.detail = std::to_string(low.size()) + " weights <= 0 but " + std::to_string(high.size()) +
               " weights >= 1";
    return r;
  }
  auto by_weight = [&](std::size_t a, std::size_t b) {
    return n[a] != n[b] ? n[a] < n[b] : a < b;
  };
  std::sort(low.begin(), low.end(), by_weight);
  std::sort(high.begin(), high.end(), by_weight);
  // Smallest low weight pairs with the largest high weight.
  for (std::size_t j = 0; j < low.size(); ++j) {
    std::size_t a = low[j], b = high[high.size() - 1 - j];
    if (n[a] + n[b] != 1) {
      r.pairs.clear();
      r.detail = "weights " + to_string(n[a]) + " and " + to_string(n[b]) + " do not sum to 1";
      return r;
    }
    r.pairs.emplace_back(a, b);
  }
  r.consistent = true;
  return r;
}

Prop1Structure check_prop1_structure(const Poly& p, std::size_t i) {
  if (i >= p.nvars()) throw DomainError("check_prop1_structure: index out of range");
  Prop1Structure r;
  if (p.order() != std::optional<std::uint64_t>(2)) return r;
  for (std::size_t j = 0; j < p.nvars(); ++j) {
    if (j == i) continue;
    Exponent mixed(p.nvars(), 0), square(p.nvars(), 0);
    mixed[i] = 1;
    mixed[j] = 1;
    square[j] = 2;
    if (p.coeff(mixed) != 0 && p.coeff(square) == 0) {
      r.holds = true;
      r.witness = j;
      return r;
    }
  }
  return r;
}

}  // namespace lojex
