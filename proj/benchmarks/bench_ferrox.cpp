#include <benchmark/benchmark.h>

#include "ferrox/ferrers.hpp"
#include "ferrox/hyp2f1.hpp"
#include "ferrox/olbricht.hpp"
#include "ferrox/regions.hpp"

using namespace ferrox;

namespace {

// Inside the unit disk, near its edge, and in the continuation regions.
const cplx kArgs[] = {cplx(0.3, 0.1), cplx(0.9, 0.3), cplx(-3.0, 1.0), cplx(0.5, 0.85), cplx(12.0, -4.0)};

void BM_f21(benchmark::State& state) {
    const cplx w = kArgs[state.range(0)];
    const HypParams p{cplx(0.3, 0.2), 1.7, cplx(2.1, -0.4)};
    for (auto _ : state) benchmark::DoNotOptimize(f21(p, w));
    state.SetLabel("w = (" + std::to_string(w.real()) + ", " + std::to_string(w.imag()) + ")");
}
BENCHMARK(BM_f21)->DenseRange(0, 4);

void BM_f21_cut(benchmark::State& state) {
    const HypParams p{0.3, 0.7, 1.2};
    for (auto _ : state) benchmark::DoNotOptimize(f21_cut(p, 2.5, CutSide::Above));
}
BENCHMARK(BM_f21_cut);

void BM_ferrers_q(benchmark::State& state) {
    const ParamPair p{cplx(-0.4, 0.2), cplx(0.1, 0.1)};
    const cplx x = state.range(0) == 0 ? cplx(0.5) : cplx(0.3, -0.4);
    for (auto _ : state) benchmark::DoNotOptimize(ferrers_q(p, x));
}
BENCHMARK(BM_ferrers_q)->Arg(0)->Arg(1);

void BM_ferrers_q_rep(benchmark::State& state) {
    const auto rep = kAllRepresentations[std::size_t(state.range(0))];
    const ParamPair p{0.3, 0.25};
    const cplx x(0.3, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(ferrers_q_rep(rep, p, x));
    state.SetLabel(to_string(rep));
}
BENCHMARK(BM_ferrers_q_rep)->DenseRange(0, int(kAllRepresentations.size()) - 1);

void BM_region_grid(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) {
        int inside = 0;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                cplx x(-2.0 + 4.0 * i / (n - 1), -2.0 + 4.0 * k / (n - 1));
                for (int j = 1; j <= kNumArguments; ++j) inside += in_region(j, x) ? 1 : 0;
            }
        benchmark::DoNotOptimize(inside);
    }
    state.SetItemsProcessed(state.iterations() * n * n * kNumArguments);
}
BENCHMARK(BM_region_grid)->Arg(101);

void BM_olbricht_verify(benchmark::State& state) {
    const ParamPair p{0.3, 0.4};
    for (auto _ : state) {
        double worst = 0.0;
        for (const IdentityRecord& rec : olbricht_catalogue())
            worst = std::max(worst, verify_identity(rec.id, p, domain_samples(rec.identity_domain)).max_residual);
        benchmark::DoNotOptimize(worst);
    }
}
BENCHMARK(BM_olbricht_verify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
