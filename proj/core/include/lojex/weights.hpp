#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lojex/grading.hpp"
#include "lojex/localring.hpp"
#include "lojex/poly.hpp"

namespace lojex {

enum class Verdict { WQH, QH, SQH, WSQH, NONE };
std::string to_string(Verdict v);

/// Result of testing a germ against one weight type.
struct Classification {
  Verdict verdict = Verdict::NONE;
  WeightVector wtype;  // normalized
  Poly principal;      // level-1 part f0
  Poly tail;           // terms above level 1
  bool singular_principal = false;
  /// Milnor number of the principal part when it was computed.
  std::optional<std::uint64_t> principal_milnor;
  /// Why the verdict is NONE (empty otherwise).
  std::string reason;
};

struct ClassifyOptions {
  LocalRingOptions local;
};

/// Splits p by weighted degree and decides the class. The singularity test
/// computes the Milnor number of the principal part. Throws
/// InconclusiveError when that computation exceeds its budget.
Classification classify(const Poly& p, const WeightVector& w, const ClassifyOptions& options = {});

struct DiscoveryOptions {
  std::size_t max_support = 24;
  ClassifyOptions classify;
};

struct Discovery {
  std::vector<WeightVector> types;         // accepted, sorted
  std::vector<WeightVector> inconclusive;  // candidates whose test ran out of budget
  std::size_t candidates = 0;              // distinct candidates examined
};

/// Candidate types from exact solutions of <a, l> = 1 over support subsets of
/// size <= n (variables left free are fixed at 1/2), kept when classify
/// accepts them. Throws InconclusiveError when the support exceeds the cap.
Discovery discover_types(const Poly& p, const DiscoveryOptions& options = {});

struct SymmetryCheck {
  bool consistent = false;
  /// Index pairs (weight <= 0, weight >= 1) whose weights sum to 1.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::string detail;
};

/// Weights <= 0 and weights >= 1 must be equinumerous and, sorted, pair up
/// to sums of 1.
SymmetryCheck saito_symmetry_check(const WeightVector& w);

struct Prop1Structure {
  bool holds = false;
  std::optional<std::size_t> witness;
};

/// ord p = 2 and some z_i z_j (j != i) appears while z_j^2 does not.
Prop1Structure check_prop1_structure(const Poly& p, std::size_t i);

}  // namespace lojex
