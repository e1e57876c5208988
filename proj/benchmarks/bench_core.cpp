#include <benchmark/benchmark.h>

#include <hurwitz/hurwitz.hpp>

#include <random>
#include <vector>

using namespace hurwitz;

namespace {

Polynomial random_exact_poly(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<int> d(1, 9);
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(d(rng));
    return Polynomial::exact(std::move(c));
}

Polynomial random_stable_poly(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<int> d(1, 6);
    Polynomial p = Polynomial::exact({Rational(1)});
    int remaining = degree;
    while (remaining >= 2) {
        const Rational re(d(rng), 2), im(d(rng), 2);
        p = p * Polynomial::exact({Rational(1), 2 * re, re * re + im * im});
        remaining -= 2;
    }
    if (remaining == 1) p = p * Polynomial::exact({Rational(1), Rational(d(rng), 2)});
    return p;
}

} // namespace

static void BM_TnnExhaustive(benchmark::State& state) {
    // stable input: the matrix is TN, so every minor gets enumerated
    std::mt19937_64 rng(7);
    const Polynomial p = random_stable_poly(rng, static_cast<int>(state.range(0)));
    const StructuredMatrix h = finite_hurwitz(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_totally_nonnegative(h).minors_checked);
    }
}
BENCHMARK(BM_TnnExhaustive)->DenseRange(4, 10, 2);

static void BM_BareissDeterminant(benchmark::State& state) {
    std::mt19937_64 rng(8);
    const int n = static_cast<int>(state.range(0));
    std::uniform_int_distribution<int> d(-9, 9);
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rational(d(rng), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(det_exact(m));
    }
}
BENCHMARK(BM_BareissDeterminant)->DenseRange(4, 12, 4);

static void BM_AberthRoots(benchmark::State& state) {
    std::mt19937_64 rng(9);
    const Polynomial p = random_exact_poly(rng, static_cast<int>(state.range(0)));
    const std::vector<double> coeffs = p.to_float_poly().coeffs();
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_roots_descending(coeffs).residual_bound);
    }
}
BENCHMARK(BM_AberthRoots)->DenseRange(4, 16, 4);

static void BM_Classify(benchmark::State& state) {
    std::mt19937_64 rng(10);
    // product of stable factors keeps every route on its long path
    Polynomial p = Polynomial::exact({Rational(1), Rational(2)});
    for (int i = 1; i < state.range(0) / 2; ++i) {
        std::uniform_int_distribution<int> d(1, 6);
        const Rational re(d(rng), 2), im(d(rng), 2);
        p = p * Polynomial::exact({Rational(1), 2 * re, re * re + im * im});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(p).hurwitz_rank);
    }
}
BENCHMARK(BM_Classify)->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
