#include "cuspidal/classnum.hpp"
#include "cuspidal/curvering.hpp"
#include "cuspidal/cusps.hpp"
#include "cuspidal/invariants.hpp"
#include "cuspidal/units.hpp"

#include <benchmark/benchmark.h>

using namespace cuspidal;

static void BM_IdealFromGenerators(benchmark::State& state) {
    const Order R(FieldDesc(-23), state.range(0));
    const FieldDesc& F = R.field();
    const std::vector<QuadElt> g{QuadElt(F, 91, 0), QuadElt(F, 17, 13 * R.f()), QuadElt(F, 5, 3 * R.f())};
    for (auto _ : state) benchmark::DoNotOptimize(QIdeal::from_generators(R, g));
}
BENCHMARK(BM_IdealFromGenerators)->Arg(1)->Arg(12)->Arg(360);

static void BM_Fitt1(benchmark::State& state) {
    const Order R(FieldDesc(-7), 12);
    const QIdeal I = QIdeal::from_generators(R, {QuadElt(R.field(), 24), QuadElt(R.field(), 12, 12)});
    for (auto _ : state) benchmark::DoNotOptimize(fitt1(I));
}
BENCHMARK(BM_Fitt1);

static void BM_DetPair(benchmark::State& state) {
    const Order R(FieldDesc(-3), 4);
    const FieldDesc& F = R.field();
    const QIdeal I = QIdeal::from_generators(R, {QuadElt(F, 4), QuadElt(F, 0, 4)});
    const GenPair m(I, QuadElt(F, 4), QuadElt(F, 0, 4));
    const GenPair m2(I, QuadElt(F, 4), QuadElt(F, 0, 12));
    for (auto _ : state) benchmark::DoNotOptimize(det_pair(m, m2));
}
BENCHMARK(BM_DetPair);

static void BM_Sl2Witness(benchmark::State& state) {
    const Order R(FieldDesc(-3), 2);
    const FieldDesc& F = R.field();
    const QIdeal I = QIdeal::from_generators(R, {QuadElt(F, 2), QuadElt(F, 0, 2)});
    const GenPair m(I, QuadElt(F, 2), QuadElt(F, 0, 2));
    const GenPair m2(I, QuadElt(F, 0, 2), QuadElt(F, 2));
    for (auto _ : state) benchmark::DoNotOptimize(sl2_witness(m, m2));
}
BENCHMARK(BM_Sl2Witness);

static void BM_FundamentalUnit(benchmark::State& state) {
    const FieldDesc F(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(field_fundamental_unit(F));
}
BENCHMARK(BM_FundamentalUnit)->Arg(2)->Arg(94)->Arg(9199);

static void BM_PicardOrder(benchmark::State& state) {
    const Order R(FieldDesc(-15), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(picard_order(R));
}
BENCHMARK(BM_PicardOrder)->Arg(1)->Arg(6)->Arg(30);

static void BM_CuspCount(benchmark::State& state) {
    const Order R(FieldDesc(5), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cusp_count(R));
}
BENCHMARK(BM_CuspCount)->Arg(1)->Arg(12)->Arg(60);

static void BM_CuspCountDirect(benchmark::State& state) {
    const Order R(FieldDesc(-5), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cusp_count_direct(R));
}
BENCHMARK(BM_CuspCountDirect)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CurveReduce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CoeffField K = CoeffField::prime(5);
    const std::vector<CurvePoly> g{parse_curve_poly(K, "x^2 + 3*x^4 + x^" + std::to_string(n + 2)),
                                   parse_curve_poly(K, "x^4 + 2*x^" + std::to_string(n + 1))};
    for (auto _ : state) benchmark::DoNotOptimize(curve_reduce_pair(K, n, g));
}
BENCHMARK(BM_CurveReduce)->Arg(5)->Arg(11)->Arg(21);
BENCHMARK_MAIN();
