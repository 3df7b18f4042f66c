#include "serialize.hpp"

#include <cstdint>
#include <cstdio>

namespace lojex::cli {

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Interval& i) { return {{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}}; }

json to_json(const WeightVector& w) {
  json vals = json::array();
  for (const auto& l : w.weights()) vals.push_back(to_string(l));
  return {{"text", to_string(w)}, {"level", to_string(w.level())}, {"weights", vals}};
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

namespace {
json intervals(const std::vector<Interval>& v) {
  json a = json::array();
  for (const auto& i : v) a.push_back(to_json(i));
  return a;
}
}  // namespace

json to_json(const ExponentData& e) {
  return {{"L", intervals(e.L)},
          {"L_minus", intervals(e.L_minus)},
          {"L_zero", intervals(e.L_zero)},
          {"l_min", to_json(e.l_min)},
          {"value", to_json(e.value)}};
}

json polys(std::span<const Poly> ps, Names names) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p, names));
  return a;
}

json to_json(const SymmetryCheck& s) {
  json pairs = json::array();
  for (auto [a, b] : s.pairs) pairs.push_back({a, b});
  return {{"consistent", s.consistent}, {"pairs", pairs}, {"detail", s.detail}};
}

json to_json(const Classification& c, Names names) {
  json j = {{"type", to_json(c.wtype)},
            {"verdict", to_string(c.verdict)},
            {"principal", to_string(c.principal, names)},
            {"tail", to_string(c.tail, names)},
            {"singular_principal", c.singular_principal},
            {"principal_milnor", nullptr},
            {"reason", c.reason}};
  if (c.principal_milnor) j["principal_milnor"] = *c.principal_milnor;
  return j;
}

json to_json(const MilnorResult& m, Names names) {
  json corners = json::array();
  for (const auto& a : m.staircase_corners) corners.push_back(to_string(Poly::monomial(a), names));
  json j = {{"value", nullptr},
            {"basis_size", m.basis_size},
            {"truncation", m.truncation},
            {"staircase_corners", corners}};
  if (m.value) j["value"] = *m.value;
  return j;
}

json to_json(const LowerBound& lb) {
  return {{"value", to_string(lb.value)},
          {"witness", lb.witness_text},
          {"family", lb.family},
          {"curves_tried", lb.curves_tried}};
}

json to_json(const MembershipCertificate& c, Names names) {
  return {{"cofactors", polys(c.cofactors, names)},
          {"generators", polys(c.generators, names)},
          {"certified_degree", c.certified_degree},
          {"exact", c.exact}};
}

json to_json(const TraceStep& s) {
  json j = {{"kind", to_string(s.kind)}, {"variables", s.names}, {"note", s.note}};
  json touched = json::array();
  for (std::size_t v : s.vars) touched.push_back(v < s.names.size() ? s.names[v] : std::to_string(v));
  j["touched"] = touched;
  if (s.kind == TraceStep::Kind::LinearChange) j["matrix"] = to_json(s.matrix);
  if (s.kind == TraceStep::Kind::PolynomialChange) {
    j["map"] = polys(s.map, s.names);
    j["inverse"] = polys(s.inverse, s.names);
    j["verified_degree"] = s.verified_degree;
    j["exact_inverse"] = s.exact_inverse;
  }
  return j;
}

json to_json(const ReductionResult& r) {
  json steps = json::array();
  for (const auto& s : r.trace.steps) steps.push_back(to_json(s));
  return {{"core", to_string(r.core, r.names)},
          {"core_variables", r.names},
          {"core_type", to_json(r.weights)},
          {"a1", r.a1},
          {"iterations", r.iterations},
          {"milnor_bound", r.milnor_bound},
          {"milnor_fallback", r.milnor_fallback},
          {"trace", steps}};
}

json to_json(const EigenWeightData& e) {
  json alpha = json::array();
  for (const auto& a : e.alpha)
    alpha.push_back({{"re", to_string(a.re)},
                     {"im", to_string(a.im)},
                     {"radius", to_string(a.radius)},
                     {"multiplicity", a.multiplicity}});
  return {{"jacobian", to_json(e.jacobian)},
          {"charpoly", to_string(e.charpoly)},
          {"alpha", alpha},
          {"realparts", intervals(e.realparts)},
          {"converged", e.converged},
          {"max_width", to_string(e.max_width)},
          {"report", e.report}};
}

std::string fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lojex::cli
