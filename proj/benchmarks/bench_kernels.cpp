#include <benchmark/benchmark.h>

#include <random>

#include "schwarz/harness.hpp"
#include "schwarz/krylov.hpp"
#include "schwarz/schwarz_preconditioner.hpp"

using namespace schwarz;

namespace {

struct Workspace {
    CartesianMesh mesh;
    SubdomainLayout layout;
    OverlapLayout overlap;
    SaddleSystem saddle;
    std::shared_ptr<SpdOperator> op;
    std::shared_ptr<SchwarzPreconditioner> prec;
    la::Vector x;
};

Workspace make_workspace(int nsub, int hh, SchwarzVariant variant) {
    Workspace w;
    std::tie(w.mesh, w.layout) = build_mesh(nsub, nsub, hh);
    const ReferenceBasis basis = ReferenceBasis::make(Discretization::fem_q2p1);
    RhsSpec rhs;
    rhs.seed = 1;
    w.saddle = assemble_saddle(w.mesh, w.layout, basis,
                               CoefficientField::constant(w.layout, 6000.0, 0.4999), rhs);
    w.op = std::make_shared<SpdOperator>(eliminate_pressure(w.saddle));
    w.overlap = extend_overlap(w.mesh, w.layout, 1);
    SchwarzOptions opt;
    opt.variant = variant;
    opt.levels = 2;
    w.prec = std::make_shared<SchwarzPreconditioner>(
        SchwarzPreconditioner::build(*w.op, w.overlap, opt));
    w.x.assign(std::size_t(w.op->size()), 0.0);
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double& v : w.x) v = dist(gen);
    return w;
}

} // namespace

static void BM_GllRule(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gll_rule(n));
}
BENCHMARK(BM_GllRule)->Arg(4)->Arg(8)->Arg(16);

static void BM_Spmv(benchmark::State& state) {
    const Workspace w = make_workspace(int(state.range(0)), 8, SchwarzVariant::additive);
    la::Vector y(w.x.size());
    for (auto _ : state) {
        w.op->matrix.apply(w.x.data(), y.data());
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * w.op->matrix.nnz());
}
BENCHMARK(BM_Spmv)->Arg(2)->Arg(4);

static void BM_Assembly(benchmark::State& state) {
    auto [mesh, layout] = build_mesh(int(state.range(0)), int(state.range(0)), 8);
    const ReferenceBasis basis = ReferenceBasis::make(Discretization::fem_q2p1);
    const CoefficientField coeffs = CoefficientField::constant(layout, 6000.0, 0.4999);
    RhsSpec rhs;
    for (auto _ : state) benchmark::DoNotOptimize(assemble_saddle(mesh, layout, basis, coeffs, rhs));
}
BENCHMARK(BM_Assembly)->Arg(2)->Arg(4);

static void BM_PreconditionerBuild(benchmark::State& state) {
    const Workspace w = make_workspace(int(state.range(0)), 8, SchwarzVariant::hybrid);
    SchwarzOptions opt;
    opt.variant = SchwarzVariant::hybrid;
    opt.levels = 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(SchwarzPreconditioner::build(*w.op, w.overlap, opt));
}
BENCHMARK(BM_PreconditionerBuild)->Arg(2)->Arg(4);

static void BM_PreconditionerApply(benchmark::State& state) {
    const Workspace w = make_workspace(4, 8, SchwarzVariant(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(w.prec->apply(w.x));
}
BENCHMARK(BM_PreconditionerApply)
    ->Arg(int(SchwarzVariant::additive))
    ->Arg(int(SchwarzVariant::hybrid))
    ->Arg(int(SchwarzVariant::multiplicative));

static void BM_PcgSolve(benchmark::State& state) {
    const Workspace w = make_workspace(int(state.range(0)), 8, SchwarzVariant::hybrid);
    for (auto _ : state) {
        auto [x, report] = pcg([&](const la::Vector& v) { return w.op->apply(v); },
                               [&](const la::Vector& v) { return w.prec->apply(v); }, w.op->F);
        benchmark::DoNotOptimize(report.iterations);
    }
}
BENCHMARK(BM_PcgSolve)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
