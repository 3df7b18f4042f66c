#include "lojex/grading.hpp"

#include <algorithm>

#include "lojex/errors.hpp"

namespace lojex {

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {}

WeightVector::WeightVector(Rational level, std::vector<Rational> weights)
    : level_(std::move(level)), weights_(std::move(weights)) {
  if (level_ <= 0) throw DomainError("weight type level must be positive");
}

WeightVector WeightVector::normalized() const {
  std::vector<Rational> l = weights_;
  for (auto& x : l) {
    x /= level_;
    x.canonicalize();
  }
  return WeightVector(std::move(l));
}

WeightVector WeightVector::appended(const Rational& w) const {
  std::vector<Rational> l = weights_;
  l.push_back(w * level_);
  return WeightVector(level_, std::move(l));
}

bool operator<(const WeightVector& a, const WeightVector& b) {
  if (a.level_ != b.level_) return a.level_ < b.level_;
  return std::lexicographical_compare(a.weights_.begin(), a.weights_.end(), b.weights_.begin(),
                                      b.weights_.end());
}

std::string to_string(const WeightVector& w) {
  std::string s = "(" + to_string(w.level()) + ";";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : " ") + to_string(w[i]);
  return s + ")";
}

WeightVector parse_weights(std::string_view text) {
  Rational level(1);
  std::size_t semi = text.find(';');
  std::size_t base = 0;
  if (semi != std::string_view::npos) {
    level = parse_rational(text.substr(0, semi));
    if (level <= 0) throw ParseError("weight level must be positive", 0);
    text.remove_prefix(semi + 1);
    base = semi + 1;
  }
  std::vector<Rational> weights;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    try {
      weights.push_back(parse_rational(item));
    } catch (const ParseError&) {
      throw ParseError("malformed weight '" + std::string(item) + "'", base + start);
    }
    start = comma + 1;
  }
  return WeightVector(level, std::move(weights));
}

Rational weighted_degree(const Exponent& a, std::span<const Rational> weights) {
  if (a.size() != weights.size()) throw DomainError("weighted_degree: length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += weights[i] * a[i];
  return s;
}

Rational weighted_degree(const Exponent& a, const WeightVector& w) {
  return weighted_degree(a, std::span<const Rational>(w.weights()));
}

std::optional<Rational> weighted_order(const Poly& p, const WeightVector& w) {
  if (p.nvars() != w.size()) throw DomainError("weighted_order: arity mismatch");
  std::optional<Rational> best;
  for (const auto& [a, c] : p) {
    Rational d = weighted_degree(a, w);
    if (!best || d < *best) best = d;
  }
  return best;
}

Poly weighted_part(const Poly& p, const WeightVector& w, const Rational& level) {
  Poly r(p.nvars());
  for (const auto& [a, c] : p)
    if (weighted_degree(a, w) == level) r.add_term(a, c);
  return r;
}

}  // namespace lojex
