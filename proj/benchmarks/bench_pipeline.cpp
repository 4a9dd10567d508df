#include <benchmark/benchmark.h>

#include "apery/analysis.hpp"
#include "apery/graded_oracle.hpp"
#include "apery/graded_ring.hpp"
#include "apery/rectangularity.hpp"
#include "apery/survey.hpp"

using apery::NumericalSemigroup;

namespace {

const std::vector<std::vector<apery::Int>> kSamples = {
    {8, 10, 15},
    {16, 18, 21, 27},
    {30, 37, 41, 43, 58},
    {101, 135, 167},
};

void BM_construct(benchmark::State& state) {
    const auto& gens = kSamples[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) {
        auto s = NumericalSemigroup::from_generators(gens);
        benchmark::DoNotOptimize(s.frobenius());
    }
}
BENCHMARK(BM_construct)->DenseRange(0, 3);

void BM_rectangularity(benchmark::State& state) {
    auto s = NumericalSemigroup::from_generators(
        kSamples[static_cast<std::size_t>(state.range(0))]);
    for (auto _ : state) {
        auto p = apery::rectangularity_profile(s);
        benchmark::DoNotOptimize(p.gamma_rectangular);
    }
}
BENCHMARK(BM_rectangularity)->DenseRange(0, 3);

void BM_classify(benchmark::State& state) {
    auto s = NumericalSemigroup::from_generators(
        kSamples[static_cast<std::size_t>(state.range(0))]);
    for (auto _ : state) {
        auto c = apery::classify(s);
        benchmark::DoNotOptimize(c.gr_ci);
    }
}
BENCHMARK(BM_classify)->DenseRange(0, 3);

void BM_mu_J(benchmark::State& state) {
    auto s = NumericalSemigroup::from_generators(
        kSamples[static_cast<std::size_t>(state.range(0))]);
    for (auto _ : state) {
        auto mu = apery::mu_J(s);
        benchmark::DoNotOptimize(mu.mu);
    }
}
BENCHMARK(BM_mu_J)->DenseRange(0, 2);

void BM_full_analysis(benchmark::State& state) {
    auto s = NumericalSemigroup::from_generators(
        kSamples[static_cast<std::size_t>(state.range(0))]);
    for (auto _ : state) {
        auto report = apery::analyze(s, apery::OracleMode::Auto);
        benchmark::DoNotOptimize(report.gr_ci);
    }
}
BENCHMARK(BM_full_analysis)->DenseRange(0, 3);

void BM_tree_enumeration(benchmark::State& state) {
    const int genus = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto lists = apery::enumerate_tree(genus);
        benchmark::DoNotOptimize(lists.size());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(apery::enumerate_tree(genus).size()));
}
BENCHMARK(BM_tree_enumeration)->Arg(6)->Arg(9)->Arg(12);

}  // namespace
