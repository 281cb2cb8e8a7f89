// Parallel kernels against their serial references on a triangle-based cover
// of the unit square.

#include <map>

#include <benchmark/benchmark.h>

#include "inclusionkit/builder.hpp"
#include "inclusionkit/verify.hpp"

using namespace inclusionkit;

namespace {

struct Fixture {
    InclusionProblem problem;
    Rat delta;
    PiecewiseAffine solution;
    Pyramid pyramid;
};

const Fixture& fixture(long denominator)
{
    static std::map<long, Fixture> cache;
    auto it = cache.find(denominator);
    if (it != cache.end()) return it->second;
    const RatVec e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)}, e3{Rat(-1), Rat(-1)};
    std::vector<RatMat> e;
    for (const auto& f : {e1, e2, e3}) e.push_back(tensor({Rat(1)}, f));
    Fixture fx{InclusionProblem::make(OperatorKind::Gradient, 1, 2, e, Polytope::box(zeros(2), {Rat(1), Rat(1)})),
               Rat(1, denominator), {}, build_pyramid(PointSet(2, {e1, e2, e3}))};
    fx.solution = assemble_solution(decide(fx.problem), fx.problem.domain, fx.delta);
    return cache.emplace(denominator, std::move(fx)).first->second;
}

void place(benchmark::State& state, bool parallel)
{
    const Fixture& fx = fixture(state.range(0));
    const auto& base = fx.pyramid.function.cells;
    for (auto _ : state) {
        auto cells = parallel ? place_cells(base, fx.solution.copies) : place_cells_serial(base, fx.solution.copies);
        benchmark::DoNotOptimize(cells.data());
    }
    state.counters["copies"] = static_cast<double>(fx.solution.copies.size());
}

void verify(benchmark::State& state, bool parallel)
{
    const Fixture& fx = fixture(state.range(0));
    for (auto _ : state) {
        Report r = parallel ? verify_solution(fx.solution, fx.problem, fx.delta)
                            : verify_solution_serial(fx.solution, fx.problem, fx.delta);
        benchmark::DoNotOptimize(r.checks.data());
    }
    state.counters["cells"] = static_cast<double>(fx.solution.cells.size());
}

void BM_place_parallel(benchmark::State& s) { place(s, true); }
void BM_place_serial(benchmark::State& s) { place(s, false); }
void BM_verify_parallel(benchmark::State& s) { verify(s, true); }
void BM_verify_serial(benchmark::State& s) { verify(s, false); }

} // namespace

BENCHMARK(BM_place_parallel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_place_serial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_parallel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_serial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
