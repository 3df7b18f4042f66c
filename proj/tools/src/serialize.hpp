#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "lojex/curves.hpp"
#include "lojex/exponent.hpp"
#include "lojex/localring.hpp"
#include "lojex/reduce.hpp"
#include "lojex/saito5.hpp"
#include "lojex/weights.hpp"

namespace lojex::cli {

using nlohmann::json;
using Names = std::span<const std::string>;

json to_json(const Rational& q);
json to_json(const Interval& i);
json to_json(const WeightVector& w);
json to_json(const Matrix& m);
json to_json(const ExponentData& e);
json to_json(const Classification& c, Names names);
json to_json(const SymmetryCheck& s);
json to_json(const MilnorResult& m, Names names);
json to_json(const LowerBound& lb);
json to_json(const MembershipCertificate& c, Names names);
json to_json(const TraceStep& s);
json to_json(const ReductionResult& r);
json to_json(const EigenWeightData& e);

json polys(std::span<const Poly> ps, Names names);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a(std::string_view text);

}  // namespace lojex::cli
