#include <benchmark/benchmark.h>

#include <metaopt/functions.hpp>
#include <metaopt/hypercomplex.hpp>
#include <metaopt/model_file.hpp>
#include <metaopt/run.hpp>

using namespace metaopt;

namespace {

const ObjectiveFunction& sphere() { return builtin_catalog().lookup("sphere"); }

SearchSpace proto(Technique t, int m, int n, int iterations) {
    SearchSpace s = create_search_space(m, n, t);
    s.iterations = iterations;
    set_bounds(s, -5.12, 5.12);
    return s;
}

void BM_optimize(benchmark::State& state) {
    const Technique t = static_cast<Technique>(state.range(0));
    const SearchSpace s = proto(t, 20, 10, 50);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const RunResult r = optimize(s, sphere(), seed++);
        benchmark::DoNotOptimize(r.best_fitness);
    }
}

void BM_lift(benchmark::State& state) {
    const SearchSpace s = proto(Technique::PSO, 20, 10, 50);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const RunResult r = lift(s, sphere(), static_cast<int>(state.range(0)), seed++);
        benchmark::DoNotOptimize(r.best_fitness);
    }
}

void BM_parse_model_file(benchmark::State& state) {
    ModelFile mf;
    mf.technique = Technique::PSO;
    mf.m = 30;
    mf.n = 20;
    mf.iterations = 500;
    mf.params = PsoParams{};
    for (int j = 0; j < mf.n; ++j) mf.bounds.emplace_back(-5.12, 5.12);
    const std::string text = write_model_file(mf);
    for (auto _ : state) {
        const ModelFile parsed = parse_model_file(text, Technique::PSO);
        benchmark::DoNotOptimize(parsed.m);
    }
}

void BM_mantegna(benchmark::State& state) {
    Rng rng(7);
    for (auto _ : state) benchmark::DoNotOptimize(mantegna_step(1.5, rng));
}

void BM_span_to_real(benchmark::State& state) {
    const std::vector<double> row(static_cast<std::size_t>(state.range(0)), 0.37);
    for (auto _ : state) benchmark::DoNotOptimize(span_to_real(row, -5.12, 5.12));
}

void BM_evaluate_catalog(benchmark::State& state) {
    const ObjectiveFunction& f = builtin_catalog().lookup("rastrigin");
    const std::vector<double> x(30, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(f(x));
}

} // namespace

BENCHMARK(BM_optimize)->DenseRange(0, 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lift)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parse_model_file);
BENCHMARK(BM_mantegna);
BENCHMARK(BM_span_to_real)->Arg(4)->Arg(8);
BENCHMARK(BM_evaluate_catalog);

BENCHMARK_MAIN();
