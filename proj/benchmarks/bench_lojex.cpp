#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "lojex/curves.hpp"
#include "lojex/exponent.hpp"
#include "lojex/localring.hpp"
#include "lojex/parser.hpp"
#include "lojex/reduce.hpp"
#include "lojex/saito5.hpp"
#include "lojex/weights.hpp"

using namespace lojex;

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};
const char* kEigenExample = "x*z + x*y*z^2 + x*y^3 + y^3*z^2 + y^5 + y^2*z^4 + z^8";

void BM_PolyPower(benchmark::State& state) {
  Poly base = parse_poly("1 + x + 2*y - 3*z + x*y*z", kXYZ);
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    Poly p = base;
    for (unsigned i = 1; i < k; ++i) p = p * base;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PolyPower)->Arg(4)->Arg(8)->Arg(12);

void BM_StandardBasisGradient(benchmark::State& state) {
  Poly f = parse_poly(kEigenExample, kXYZ);
  auto grad = f.gradient();
  for (auto _ : state) benchmark::DoNotOptimize(standard_basis(grad));
}
BENCHMARK(BM_StandardBasisGradient);

void BM_MilnorDiagonal(benchmark::State& state) {
  const auto a = state.range(0);
  Poly f = parse_poly("x^" + std::to_string(a) + " + y^" + std::to_string(a + 1) + " + z^" +
                          std::to_string(a + 2) + " + x*y*z",
                      kXYZ);
  for (auto _ : state) benchmark::DoNotOptimize(milnor_number(f));
}
BENCHMARK(BM_MilnorDiagonal)->Arg(3)->Arg(5)->Arg(7);

void BM_FourVariablePowerMembership(benchmark::State& state) {
  const std::vector<std::string> v = {"z1", "z2", "z3", "z4"};
  Poly f = parse_poly("z1*z2 + (1+z2)*(z3^4 + z3^2*z4^3 + z4^5)", v);
  for (auto _ : state) benchmark::DoNotOptimize(power_membership(f, 0, 6));
}
BENCHMARK(BM_FourVariablePowerMembership)->Unit(benchmark::kMillisecond);

void BM_DiscoverTypes(benchmark::State& state) {
  Poly f = parse_poly("x*y + x^4*y^3 + (z+y)^3", kXYZ);
  for (auto _ : state) benchmark::DoNotOptimize(discover_types(f));
}
BENCHMARK(BM_DiscoverTypes);

void BM_MultisetExponent(benchmark::State& state) {
  WeightVector w = parse_weights("1;-3/2,5/2,1/5,1/3,2/3,1/7");
  for (auto _ : state) benchmark::DoNotOptimize(loj_wsqh(w));
}
BENCHMARK(BM_MultisetExponent);

void BM_SplittingReduce(benchmark::State& state) {
  const std::vector<std::string> v = {"x", "y", "z", "u", "t"};
  Poly f = parse_poly("x*z + u*t + y^5 + x^2*y^3 + z^2*y + u*y^4 + t^3", v);
  WeightVector w = parse_weights("1/3,1/5,2/3,2/5,3/5");
  for (auto _ : state) benchmark::DoNotOptimize(splitting_reduce(f, w, {{0, 2}, {3, 4}}));
}
BENCHMARK(BM_SplittingReduce)->Unit(benchmark::kMillisecond);

void BM_Theorem5Constructed(benchmark::State& state) {
  Poly f = parse_poly(kEigenExample, kXYZ);
  for (auto _ : state) benchmark::DoNotOptimize(theorem5_exponent(f, std::nullopt));
}
BENCHMARK(BM_Theorem5Constructed)->Unit(benchmark::kMillisecond);

void BM_LowerBoundSearch(benchmark::State& state) {
  Poly f = parse_poly(kEigenExample, kXYZ);
  const auto max_exp = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound_search(f, max_exp, 32, 1));
}
BENCHMARK(BM_LowerBoundSearch)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
