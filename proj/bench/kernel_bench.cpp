// Serial reference vs OpenMP kernel timings on corpus and random rings.

#include "mapspace/kernels.hpp"
#include "support/corpus.hpp"
#include "support/random_ring.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace mapspace;
using namespace mapspace::testing;

namespace {

struct Fixture {
    std::shared_ptr<const CanonicalBasis> B;
    std::unique_ptr<MinimalK1> M;
    std::unique_ptr<Splitting> S;
};

// 0..4 are corpus rings, 5.. random rings of dimension up to 12.
const Fixture& fixture(int id)
{
    static std::map<int, Fixture> cache;
    auto it = cache.find(id);
    if (it != cache.end())
        return it->second;
    Fixture f;
    if (id < static_cast<int>(std::size(corpus_names))) {
        f.B = corpus_basis(corpus_names[id]);
    } else {
        std::mt19937_64 rng(1000 + id);
        f.B = basis_of(random_ring(rng, 12));
    }
    f.M = std::make_unique<MinimalK1>(minimal_k1(f.B));
    f.S = std::make_unique<Splitting>(*f.M);
    return cache.emplace(id, std::move(f)).first->second;
}

void label(benchmark::State& state, const Fixture& f)
{
    state.SetLabel(f.B->ring().name() + " rank " + std::to_string(f.B->size()));
}

template <auto Kernel>
void basis_kernel(benchmark::State& state)
{
    const Fixture& f = fixture(static_cast<int>(state.range(0)));
    label(state, f);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(*f.B));
}

template <auto Kernel>
void d_squared(benchmark::State& state)
{
    const Fixture& f = fixture(static_cast<int>(state.range(0)));
    label(state, f);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(f.M->wbar.cga));
}

template <auto Kernel>
void layers(benchmark::State& state)
{
    const Fixture& f = fixture(static_cast<int>(state.range(0)));
    label(state, f);
    Polynomial R = f.S->xi();
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(*f.S, R));
}

void rings(benchmark::internal::Benchmark* b)
{
    for (int id : {1, 4, 5, 6, 7})
        b->Arg(id);
    b->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(basis_kernel<kernels::associativity_violations_serial>)->Name("associativity/serial")->Apply(rings);
BENCHMARK(basis_kernel<kernels::associativity_violations>)->Name("associativity/openmp")->Apply(rings);
BENCHMARK(basis_kernel<kernels::lambda_sum_violations_serial>)->Name("lambda_sum/serial")->Apply(rings);
BENCHMARK(basis_kernel<kernels::lambda_sum_violations>)->Name("lambda_sum/openmp")->Apply(rings);
BENCHMARK(d_squared<kernels::d_squared_residuals_serial>)->Name("d_squared/serial")->Apply(rings);
BENCHMARK(d_squared<kernels::d_squared_residuals>)->Name("d_squared/openmp")->Apply(rings);
BENCHMARK(layers<kernels::layer_residues_serial>)->Name("layer_residues/serial")->Apply(rings);
BENCHMARK(layers<kernels::layer_residues>)->Name("layer_residues/openmp")->Apply(rings);

BENCHMARK_MAIN();
