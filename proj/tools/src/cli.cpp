#include "lojex/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <gmp.h>

#include "CLI11.hpp"
#include "lojex/errors.hpp"
#include "lojex/parser.hpp"
#include "serialize.hpp"

#ifndef LOJEX_VERSION
#define LOJEX_VERSION "unknown"
#endif

namespace lojex::cli {

namespace {

struct Flags {
  std::string poly;
  std::string vars;
  std::string weights;
  bool json_out = false;
  std::uint64_t seed = 1;
  std::string oracles = "curves,milnor";
  std::uint64_t degree_bound = 0;
  std::string tol = "1/18446744073709551616";
  unsigned max_exp = 8;
  std::size_t trials = 64;
  // membership
  std::string target;
  std::size_t omit = 0;
  std::size_t power = 0;
  unsigned k_max = 8;
  // theorem5
  std::string cert;
};

// Identifiers in the polynomial text, sorted; used when -v is absent.
std::vector<std::string> infer_variables(const std::string& text) {
  std::set<std::string> ids;
  for (std::size_t i = 0; i < text.size();) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      ids.insert(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return {ids.begin(), ids.end()};
}

std::set<std::string> parse_oracles(const std::string& csv) {
  static const std::set<std::string> known{"curves", "milnor", "reduce", "theorem5", "none"};
  std::set<std::string> out;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    if (!known.count(item)) throw ParseError("unknown oracle '" + item + "'", 0);
    if (item != "none") out.insert(item);
  }
  return out;
}

class Session {
 public:
  explicit Session(const Flags& flags, std::string command) : flags_(flags) {
    report_ = {{"schema_version", kSchemaVersion},
               {"command", std::move(command)},
               {"versions", {{"lojex", LOJEX_VERSION}, {"gmp", gmp_version}}},
               {"input", {{"polynomial", nullptr}, {"variables", json::array()}, {"hash", nullptr}}},
               {"parameters",
                {{"seed", flags.seed},
                 {"max_exponent", flags.max_exp},
                 {"trials", flags.trials},
                 {"degree_bound", flags.degree_bound},
                 {"tol", flags.tol},
                 {"oracles", flags.oracles}}},
               {"classifications", json::array()},
               {"exponents", json::array()},
               {"milnor", nullptr},
               {"oracles", json::object()},
               {"reductions", json::array()},
               {"status", "ok"},
               {"diagnostics",
                {{"timings_ms", json::object()},
                 {"inconclusive", json::array()},
                 {"errors", json::array()},
                 {"notes", json::array()},
                 {"checks", json::array()}}}};
    local_.degree_bound = flags.degree_bound;
  }

  json& report() { return report_; }
  const Flags& flags() const { return flags_; }
  const LocalRingOptions& local() const { return local_; }
  const std::vector<std::string>& names() const { return names_; }
  const Poly& germ() const { return f_; }
  std::ostringstream& summary() { return summary_; }

  void load_germ() {
    if (flags_.poly.empty()) throw ParseError("missing polynomial argument", 0);
    names_ = flags_.vars.empty() ? infer_variables(flags_.poly) : parse_variable_list(flags_.vars);
    if (names_.empty()) throw ParseError("no variables", 0);
    f_ = parse_poly(flags_.poly, names_);
    std::string canon = to_string(f_, names_);
    std::string joined;
    for (const auto& n : names_) joined += n + ",";
    report_["input"] = {{"polynomial", canon},
                        {"variables", names_},
                        {"hash", "fnv1a64:" + fnv1a(joined + "|" + canon)}};
    summary_ << "germ " << canon << " in (" << joined.substr(0, joined.size() - 1) << ")\n";
  }

  WeightVector weights() const {
    WeightVector w = parse_weights(flags_.weights);
    if (!names_.empty() && w.size() != names_.size())
      throw DomainError("weight vector has " + std::to_string(w.size()) + " entries for " +
                        std::to_string(names_.size()) + " variables");
    return w.normalized();
  }

  template <class F>
  auto timed(const std::string& key, F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    auto record = [&] {
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      report_["diagnostics"]["timings_ms"][key] = ms;
    };
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      record();
    } else {
      auto r = fn();
      record();
      return r;
    }
  }

  void inconclusive(const std::string& what) {
    report_["diagnostics"]["inconclusive"].push_back(what);
    summary_ << "inconclusive: " << what << "\n";
  }
  void note(const std::string& what) { report_["diagnostics"]["notes"].push_back(what); }
  void check(const std::string& name, bool passed, const std::string& detail) {
    report_["diagnostics"]["checks"].push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
    if (!passed) failed_checks_.push_back(name + ": " + detail);
  }

  void add_exponent(const std::optional<WeightVector>& type, const std::string& formula,
                    const Rational& value, json data = nullptr) {
    json e = {{"type", type ? json(to_string(*type)) : json(nullptr)},
              {"formula", formula},
              {"value", to_string(value)}};
    if (!data.is_null()) e["data"] = std::move(data);
    report_["exponents"].push_back(std::move(e));
    values_.emplace_back(formula + (type ? " " + to_string(*type) : std::string()), value);
  }

  // Cross-formula agreement and lower-bound soundness.
  void final_checks() {
    if (!values_.empty()) {
      bool agree = std::all_of(values_.begin(), values_.end(),
                               [&](const auto& v) { return v.second == values_.front().second; });
      std::string detail;
      for (const auto& [k, v] : values_) detail += (detail.empty() ? "" : "; ") + k + " = " + to_string(v);
      check("cross_formula_agreement", agree, detail);
      if (lower_bound_) {
        bool sound = std::all_of(values_.begin(), values_.end(),
                                 [&](const auto& v) { return *lower_bound_ <= v.second; });
        check("lower_bound_soundness", sound,
              "curve bound " + to_string(*lower_bound_) + " vs formula values");
      }
    }
  }

  void set_lower_bound(const Rational& v) { lower_bound_ = v; }

  int finish(std::ostream& out) {
    final_checks();
    int code = kOk;
    if (!report_["diagnostics"]["inconclusive"].empty()) code = kInconclusive;
    if (!failed_checks_.empty()) code = kInvariant;
    return emit(out, code);
  }

  int fail(std::ostream& out, int code, const std::string& message) {
    report_["diagnostics"]["errors"].push_back(message);
    summary_ << "error: " << message << "\n";
    return emit(out, code);
  }

 private:
  int emit(std::ostream& out, int code) {
    report_["status"] = code == kOk ? "ok"
                        : code == kInconclusive ? "inconclusive"
                        : code == kInvariant ? "invariant_violation"
                                             : "error";
    for (const auto& f : failed_checks_) summary_ << "check failed: " << f << "\n";
    if (flags_.json_out) out << report_.dump(2) << "\n";
    else out << summary_.str();
    return code;
  }

  const Flags& flags_;
  json report_;
  LocalRingOptions local_;
  std::vector<std::string> names_;
  Poly f_;
  std::ostringstream summary_;
  std::vector<std::pair<std::string, Rational>> values_;
  std::optional<Rational> lower_bound_;
  std::vector<std::string> failed_checks_;
};

bool all_sqh(const WeightVector& w) {
  return std::all_of(w.weights().begin(), w.weights().end(),
                     [](const Rational& l) { return l > 0 && l <= Rational(1, 2); });
}

// Exponent formulas applicable to an accepted type.
void exponent_formulas(Session& s, const WeightVector& w, std::optional<Verdict> verdict) {
  ExponentData data = loj_wsqh(w);
  s.add_exponent(w, "thm4", data.exact_value(), to_json(data));
  std::ostringstream& sum = s.summary();
  sum << "  exponent " << to_string(data.exact_value()) << " [thm4]";
  if (all_sqh(w)) {
    Rational v = loj_sqh(w);
    s.add_exponent(w, "thm3", v);
    sum << ", " << to_string(v) << " [thm3]";
  }
  if (w.size() <= 3) {
    bool classic = verdict && (*verdict == Verdict::QH || *verdict == Verdict::WQH) &&
                   std::all_of(w.weights().begin(), w.weights().end(),
                               [](const Rational& l) { return l > 0 && l != 1; });
    Rational v = loj_wqh_n3(w);
    const char* tag = classic ? "thm1" : "cor3";
    s.add_exponent(w, tag, v);
    sum << ", " << to_string(v) << " [" << tag << "]";
  }
  sum << "\n";
}

void run_milnor(Session& s) {
  try {
    MilnorResult mr = s.timed("milnor", [&] { return milnor_number(s.germ(), s.local()); });
    s.report()["oracles"]["milnor"] = to_json(mr, s.names());
    if (mr.value) s.report()["milnor"] = *mr.value;
    s.summary() << "milnor number " << (mr.value ? std::to_string(*mr.value) : "infinite") << "\n";
  } catch (const InconclusiveError& e) {
    s.inconclusive(std::string("milnor: ") + e.what());
  } catch (const DomainError& e) {
    s.note(std::string("milnor: ") + e.what());
  }
}

void run_curves(Session& s) {
  try {
    LowerBound lb = s.timed("curves", [&] {
      return lower_bound_search(s.germ(), s.flags().max_exp, s.flags().trials, s.flags().seed);
    });
    json j = to_json(lb);
    j["max_exponent"] = s.flags().max_exp;
    j["trials"] = s.flags().trials;
    j["seed"] = s.flags().seed;
    s.report()["oracles"]["curves"] = j;
    s.set_lower_bound(lb.value);
    s.summary() << "curve lower bound " << to_string(lb.value) << " along " << lb.witness_text << "\n";
  } catch (const DomainError& e) {
    s.note(std::string("curves: ") + e.what());
  }
}

void run_reduce(Session& s, const WeightVector& w) {
  ReduceOptions ro;
  ro.local = s.local();
  ro.names = s.names();
  ReductionResult r = s.timed("reduce " + to_string(w), [&] { return full_reduce(s.germ(), w, ro); });
  json j = to_json(r);
  j["input_type"] = to_json(w);
  Rational in = loj_wsqh(w).exact_value();
  Rational out = loj_wsqh(r.weights).exact_value();
  j["input_exponent"] = to_string(in);
  j["core_exponent"] = to_string(out);
  j["verdict"] = r.a1 ? "A1" : "WSQH";
  s.report()["reductions"].push_back(j);
  s.check("reduction_preserves_exponent", in == out,
          to_string(w) + " -> " + to_string(r.weights) + ": " + to_string(in) + " vs " + to_string(out));
  if (r.a1) s.summary() << "  reduced to type A1 (sum of squares), exponent " << to_string(out) << "\n";
  else
    s.summary() << "  reduced to " << to_string(r.core, r.names) << " of type " << to_string(r.weights)
                << ", exponent " << to_string(out) << "\n";
}

void run_theorem5(Session& s, const std::optional<MembershipCertificate>& cert, bool record_exponent) {
  Theorem5Options o;
  o.local = s.local();
  o.eigen.tol = parse_rational(s.flags().tol);
  if (o.eigen.tol <= 0) throw DomainError("--tol must be positive");
  try {
    Theorem5Result r = s.timed("theorem5", [&] { return theorem5_exponent(s.germ(), cert, o); });
    json j = {{"value", to_string(r.value)},
              {"recovered", r.recovered},
              {"certificate", to_json(r.certificate, s.names())},
              {"certificate_constructed", r.certificate_constructed},
              {"eigen", to_json(r.eigen)},
              {"exponent_data", to_json(r.exponent)}};
    s.report()["oracles"]["theorem5"] = j;
    if (record_exponent) s.add_exponent(std::nullopt, "thm5", r.value, to_json(r.exponent));
    s.summary() << "eigen-weight exponent " << to_string(r.value) << " [thm5] (" << r.eigen.report << ")\n";
  } catch (const DomainError& e) {
    s.report()["oracles"]["theorem5"] = {{"applicable", false}, {"reason", e.what()}};
    s.note(std::string("theorem5: ") + e.what());
    s.summary() << "eigen-weight formula not applicable: " << e.what() << "\n";
  }
}

int cmd_analyze(Session& s, std::ostream& out) {
  s.load_germ();
  const auto oracles = parse_oracles(s.flags().oracles);
  std::vector<WeightVector> types;
  if (!s.flags().weights.empty()) {
    types.push_back(s.weights());
  } else {
    Discovery d = s.timed("discovery", [&] {
      DiscoveryOptions o;
      o.classify.local = s.local();
      return discover_types(s.germ(), o);
    });
    types = d.types;
    s.report()["discovery"] = {{"candidates", d.candidates}, {"accepted", d.types.size()}};
    for (const auto& w : d.inconclusive) s.inconclusive("classification of " + to_string(w));
    if (types.empty()) s.summary() << "no weight type found\n";
  }
  std::vector<WeightVector> accepted;
  for (const auto& w : types) {
    try {
      Classification c = s.timed("classify " + to_string(w), [&] {
        return classify(s.germ(), w, ClassifyOptions{s.local()});
      });
      json j = to_json(c, s.names());
      j["saito_symmetry"] = to_json(saito_symmetry_check(c.wtype));
      s.report()["classifications"].push_back(j);
      s.summary() << "type " << to_string(c.wtype) << ": " << to_string(c.verdict);
      if (c.verdict == Verdict::NONE) {
        s.summary() << " (" << c.reason << ")\n";
        continue;
      }
      s.summary() << ", principal part " << to_string(c.principal, s.names()) << "\n";
      exponent_formulas(s, c.wtype, c.verdict);
      accepted.push_back(c.wtype);
    } catch (const InconclusiveError& e) {
      s.inconclusive("classification of " + to_string(w) + ": " + e.what());
    }
  }
  if (oracles.count("reduce"))
    for (const auto& w : accepted) {
      try {
        run_reduce(s, w);
      } catch (const DomainError& e) {
        s.note("reduce " + to_string(w) + ": " + e.what());
      }
    }
  if (oracles.count("milnor")) run_milnor(s);
  if (oracles.count("curves")) run_curves(s);
  if (oracles.count("theorem5")) run_theorem5(s, std::nullopt, true);
  return s.finish(out);
}

int cmd_exponent(Session& s, std::ostream& out) {
  if (s.flags().weights.empty()) throw ParseError("exponent requires --weights", 0);
  std::optional<Verdict> verdict;
  if (!s.flags().poly.empty()) {
    s.load_germ();
    Classification c = classify(s.germ(), s.weights(), ClassifyOptions{s.local()});
    s.report()["classifications"].push_back(to_json(c, s.names()));
    s.summary() << "type " << to_string(c.wtype) << ": " << to_string(c.verdict) << "\n";
    if (c.verdict == Verdict::NONE) s.note("germ is not of the given type: " + c.reason);
    verdict = c.verdict;
  }
  WeightVector w = s.weights();
  s.summary() << "weights " << to_string(w) << "\n";
  exponent_formulas(s, w, verdict);
  if (w.size() == 3) {
    ConsistencyReport r = consistency_n3(w);
    s.report()["consistency_n3"] = {{"consistent", r.consistent},
                                    {"n3_value", to_string(r.n3_value)},
                                    {"multiset_value", to_string(r.multiset_value)},
                                    {"detail", r.detail}};
  }
  return s.finish(out);
}

int cmd_milnor(Session& s, std::ostream& out) {
  s.load_germ();
  run_milnor(s);
  return s.finish(out);
}

int cmd_membership(Session& s, std::ostream& out) {
  s.load_germ();
  const auto& f = s.germ();
  const std::size_t n = f.nvars();
  const auto& fl = s.flags();
  json j;
  if (fl.power) {
    if (fl.power > n) throw DomainError("--power index out of range");
    auto r = s.timed("power_membership", [&] {
      return power_membership(f, fl.power - 1, fl.k_max, s.local());
    });
    j = {{"mode", "power"},
         {"variable", s.names()[fl.power - 1]},
         {"omitted_partial", fl.power},
         {"k_max", fl.k_max},
         {"k", nullptr}};
    if (r) {
      j["k"] = r->k;
      j["certificate"] = to_json(r->certificate, s.names());
      s.summary() << s.names()[fl.power - 1] << "^" << r->k << " lies in the gradient ideal without d/d"
                  << s.names()[fl.power - 1] << "\n";
    } else {
      s.summary() << "no power up to " << fl.k_max << " is a member\n";
    }
  } else {
    if (fl.target.empty()) throw ParseError("membership requires --target or --power", 0);
    Poly target = parse_poly(fl.target, s.names());
    std::vector<Poly> gens;
    if (fl.omit) {
      if (fl.omit > n) throw DomainError("--omit index out of range");
      gens = f.deleted_gradient(fl.omit - 1);
    } else {
      gens = f.gradient();
    }
    LocalRingOptions lo = s.local();
    lo.track_cofactors = true;
    auto cert = s.timed("membership", [&] {
      LocalBasis b = standard_basis(gens, lo);
      return membership(target, b);
    });
    j = {{"mode", "target"},
         {"target", to_string(target, s.names())},
         {"omitted_partial", fl.omit ? json(fl.omit) : json(nullptr)},
         {"member", cert.has_value()}};
    if (cert) j["certificate"] = to_json(*cert, s.names());
    s.summary() << to_string(target, s.names()) << (cert ? " is" : " is not") << " a member\n";
  }
  s.report()["oracles"]["membership"] = j;
  return s.finish(out);
}

int cmd_reduce(Session& s, std::ostream& out) {
  s.load_germ();
  if (s.flags().weights.empty()) throw ParseError("reduce requires --weights", 0);
  WeightVector w = s.weights();
  Classification c = classify(s.germ(), w, ClassifyOptions{s.local()});
  json cj = to_json(c, s.names());
  cj["saito_symmetry"] = to_json(saito_symmetry_check(c.wtype));
  s.report()["classifications"].push_back(cj);
  if (c.verdict == Verdict::NONE) throw DomainError("germ is not of type " + to_string(w) + ": " + c.reason);
  s.summary() << "type " << to_string(w) << ": " << to_string(c.verdict) << "\n";
  exponent_formulas(s, w, c.verdict);
  run_reduce(s, w);
  return s.finish(out);
}

int cmd_theorem5(Session& s, std::ostream& out) {
  s.load_germ();
  std::optional<MembershipCertificate> cert;
  if (!s.flags().cert.empty()) {
    std::ifstream in(s.flags().cert);
    if (!in) throw ParseError("cannot read certificate file " + s.flags().cert, 0);
    json cj;
    try {
      cj = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError(std::string("certificate file: ") + e.what(), 0);
    }
    MembershipCertificate m;
    m.target = s.germ();
    m.generators = s.germ().gradient();
    for (const auto& c : cj.at("cofactors")) m.cofactors.push_back(parse_poly(c.get<std::string>(), s.names()));
    m.certified_degree = cj.at("certified_degree").get<std::uint64_t>();
    if (m.cofactors.size() != m.generators.size())
      throw DomainError("certificate needs one cofactor per variable");
    if (!verify_certificate(m)) throw DomainError("certificate does not verify");
    cert = m;
  } else if (!s.flags().weights.empty()) {
    cert = euler_certificate(s.germ(), s.weights());
    s.note("Euler certificate of type " + to_string(s.weights()));
  }
  run_theorem5(s, cert, true);
  return s.finish(out);
}

void add_common(CLI::App* sub, Flags& f, bool needs_poly) {
  if (needs_poly) sub->add_option("polynomial", f.poly, "Germ, e.g. \"x*y + (z+y)^3\"")->required();
  else sub->add_option("polynomial", f.poly, "Optional germ to classify first");
  sub->add_option("-v,--vars", f.vars, "Comma-separated variable names (default: sorted identifiers)");
  sub->add_option("--weights", f.weights, "Weight type \"d;l1,...\" or \"l1,...\"");
  sub->add_flag("--json", f.json_out, "Print the JSON report only");
  sub->add_option("--seed", f.seed, "Seed for random test curves")->capture_default_str();
  sub->add_option("--oracle", f.oracles, "Oracles: curves,milnor,reduce,theorem5 or none")
      ->capture_default_str();
  sub->add_option("--degree-bound", f.degree_bound, "Standard-basis degree bound (0: automatic)")
      ->capture_default_str();
  sub->add_option("--tol", f.tol, "Eigenvalue enclosure width, relative (p/q)")->capture_default_str();
  sub->add_option("--max-exp", f.max_exp, "Largest exponent for monomial test curves")
      ->capture_default_str()
      ->check(CLI::Range(1u, 64u));
  sub->add_option("--trials", f.trials, "Random test curves")->capture_default_str();
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lojasiewicz exponents of weighted semiquasihomogeneous germs", "lojex"};
  app.require_subcommand(1);
  app.set_version_flag("--version", LOJEX_VERSION);
  Flags flags;
  auto* analyze = app.add_subcommand("analyze", "Discover types, classify and evaluate exponent formulas");
  add_common(analyze, flags, true);
  auto* exponent = app.add_subcommand("exponent", "Evaluate the exponent formulas for a weight type");
  add_common(exponent, flags, false);
  auto* milnor = app.add_subcommand("milnor", "Milnor number via a local standard basis");
  add_common(milnor, flags, true);
  auto* member = app.add_subcommand("membership", "Local ideal membership in the gradient ideal");
  add_common(member, flags, true);
  member->add_option("--target", flags.target, "Polynomial to test");
  member->add_option("--omit", flags.omit, "Omit this partial derivative (1-based)");
  member->add_option("--power", flags.power,
                     "Smallest k with z_i^k in the gradient ideal without d/dz_i (1-based i)");
  member->add_option("--k-max", flags.k_max, "Largest power tried")->capture_default_str();
  auto* reduce = app.add_subcommand("reduce", "Reduce to a positive-weight core with a full trace");
  add_common(reduce, flags, true);
  auto* thm5 = app.add_subcommand("theorem5", "Exponent from eigenvalues of a gradient-ideal certificate");
  add_common(thm5, flags, true);
  thm5->add_option("--cert", flags.cert, "JSON file {\"cofactors\": [...], \"certified_degree\": D}");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Session s(flags, chosen->get_name());
  std::map<std::string, std::function<int(Session&, std::ostream&)>> table{
      {"analyze", cmd_analyze}, {"exponent", cmd_exponent}, {"milnor", cmd_milnor},
      {"membership", cmd_membership}, {"reduce", cmd_reduce}, {"theorem5", cmd_theorem5}};
  try {
    return table.at(chosen->get_name())(s, out);
  } catch (const ParseError& e) {
    return s.fail(out, kUsage, e.what());
  } catch (const InconclusiveError& e) {
    s.inconclusive(e.what());
    return s.fail(out, kInconclusive, e.what());
  } catch (const InvariantError& e) {
    return s.fail(out, kInvariant, e.what());
  } catch (const Error& e) {
    return s.fail(out, kUsage, e.what());
  }
}

}  // namespace lojex::cli
