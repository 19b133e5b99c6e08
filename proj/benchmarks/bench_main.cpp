#include <benchmark/benchmark.h>

#include "cykit/cli/operator_text.hpp"
#include "cykit/cystruct/cystruct.hpp"
#include "cykit/families/families.hpp"
#include "cykit/frobenius/frobenius.hpp"

namespace {

using namespace cykit;

const opalg::ThetaOperator& quintic() {
  static const auto L = cli::parse_operator("T^4 - 5*x*(5*T+1)*(5*T+2)*(5*T+3)*(5*T+4)");
  return L;
}

const opalg::ThetaOperator& tilde3() {
  static const auto L = cli::parse_operator("T^4 - 16*x*(128*T^4+256*T^3+304*T^2+176*T+39) + 2^20*x^2*(T+1)^4");
  return L;
}

void BM_FrobeniusBasis(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius::frobenius_basis(tilde3(), order));
}
BENCHMARK(BM_FrobeniusBasis)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_YukawaCoupling(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius::yukawa_coupling(quintic(), order));
}
BENCHMARK(BM_YukawaCoupling)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_YangPullback(benchmark::State& state) {
  const auto L5 = families::hypergeometric_quintic(families::tilde_row(3).spec);
  for (auto _ : state) benchmark::DoNotOptimize(cystruct::yang_pullback(L5));
}
BENCHMARK(BM_YangPullback)->Unit(benchmark::kMillisecond);

void BM_WronskianLift(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cystruct::wronskian_lift(tilde3()));
}
BENCHMARK(BM_WronskianLift)->Unit(benchmark::kMillisecond);

void BM_SeriesAnnihilator(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto seq = frobenius::analytic_coefficients(tilde3(), 5 * (d + 1) + frobenius::kAnnihilatorGuard + 2);
  for (auto _ : state) benchmark::DoNotOptimize(frobenius::series_annihilator(seq, 4, d));
}
BENCHMARK(BM_SeriesAnnihilator)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cystruct::verify_identities(tilde3(), 20));
}
BENCHMARK(BM_IdentitySuite)->Unit(benchmark::kMillisecond);

void BM_ParseRender(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cli::parse_operator(cli::render_operator(tilde3())));
}
BENCHMARK(BM_ParseRender);

}  // namespace

BENCHMARK_MAIN();
