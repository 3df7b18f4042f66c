#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lojex/poly.hpp"
#include "lojex/rational.hpp"

namespace lojex {

/// A type (d; l1, ..., ln): level d > 0 and weights li.
class WeightVector {
 public:
  WeightVector() = default;
  /// Level-1 type.
  explicit WeightVector(std::vector<Rational> weights);
  WeightVector(Rational level, std::vector<Rational> weights);

  const Rational& level() const { return level_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }
  bool is_normalized() const { return level_ == 1; }

  /// (1; l1/d, ..., ln/d).
  WeightVector normalized() const;

  /// Appends a weight (used when a fresh variable is added).
  WeightVector appended(const Rational& w) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  /// Lexicographic on (level, weights); used for deterministic ordering.
  friend bool operator<(const WeightVector& a, const WeightVector& b);

 private:
  Rational level_{1};
  std::vector<Rational> weights_;
};

/// "(1; -2, 3, 1/3)"
std::string to_string(const WeightVector& w);

/// Accepts "d;l1,l2,..." or "l1,l2,..." (d = 1 implied).
WeightVector parse_weights(std::string_view text);

/// <a, l>
Rational weighted_degree(const Exponent& a, const WeightVector& w);
Rational weighted_degree(const Exponent& a, std::span<const Rational> weights);

/// Minimum weighted degree over the support; nullopt stands for +infinity
/// (the zero polynomial).
std::optional<Rational> weighted_order(const Poly& p, const WeightVector& w);

/// Terms of p whose weighted degree equals `level`.
Poly weighted_part(const Poly& p, const WeightVector& w, const Rational& level);

}  // namespace lojex
