#include <benchmark/benchmark.h>

#include <random>

#include "vest/brute_force.hpp"
#include "vest/dp.hpp"
#include "vest/reductions.hpp"
#include "vest/verify.hpp"

using namespace vest;

namespace {

VestInstance random_z2_instance(int d, int m, std::uint64_t seed) {
    verify::Rng rng(seed);
    return verify::random_prime_instance(rng, FieldTag::prime(2), d, m);
}

void BM_value_table(benchmark::State& state) {
    const VestInstance inst = random_z2_instance(3, 10, 99);
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_mk_dp(inst, k));
    }
}
BENCHMARK(BM_value_table)->Arg(10)->Arg(25)->Arg(50);

void BM_brute_force(benchmark::State& state) {
    const VestInstance inst = random_z2_instance(3, 4, 99);
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mk_bruteforce(inst, k));
    }
}
BENCHMARK(BM_brute_force)->DenseRange(4, 10, 2);

void BM_row_restricted_table(benchmark::State& state) {
    verify::Rng rng(7);
    const FieldTag z2 = FieldTag::prime(2);
    const int d = static_cast<int>(state.range(0));
    std::vector<Matrix> transforms;
    for (int t = 0; t < 6; ++t) {
        Matrix m(z2, d, d);
        for (int j = 0; j < d; ++j) m.set(0, j, Scalar::residue(z2, rng() % 2));
        transforms.push_back(std::move(m));
    }
    Vector v(z2, d);
    v.set(d - 1, Scalar::one(z2));
    const VestInstance inst(z2, d, std::move(transforms), std::nullopt, std::move(v),
                            TargetVariant::VectorZero);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_mk_dp_rows(inst, 1, 40));
    }
}
BENCHMARK(BM_row_restricted_table)->DenseRange(4, 16, 4);

void BM_min_k(benchmark::State& state) {
    const VestInstance inst = random_z2_instance(3, 3, 1234);
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_k(inst));
    }
}
BENCHMARK(BM_min_k);

void BM_word_matrix_products(benchmark::State& state) {
    using namespace vest::reductions;
    for (auto _ : state) {
        Matrix acc = word_matrix("");
        for (int i = 0; i < 64; ++i) {
            acc = acc * word_matrix(i % 2 ? "101" : "0110");
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_word_matrix_products);

void BM_dominating_set_generator(benchmark::State& state) {
    verify::Rng rng(5);
    const Graph g = verify::random_graph(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            reductions::dominating_set_to_vest(g, 2, DominatingStyle::Counting));
    }
}
BENCHMARK(BM_dominating_set_generator)->Arg(8)->Arg(16);

} // namespace

BENCHMARK_MAIN();
