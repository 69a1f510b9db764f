#include <benchmark/benchmark.h>

#include <memory>
#include <string>
#include <vector>

#include "gbs/faithfulness.hpp"
#include "gbs/leavitt.hpp"

namespace {

using gbs::DirectedGraph;
using gbs::EdgeId;
using gbs::EdgeRecord;
using gbs::QuadScalar;

std::shared_ptr<const DirectedGraph> single_loop() {
  return std::make_shared<const DirectedGraph>(std::vector<std::string>{"v"},
                                               std::vector<EdgeRecord>{{"e", "v", "v"}});
}

/// Vertices v0..v(n-1) with edges vi -> vi+1 and vi -> vi+2 (indices mod n).
std::shared_ptr<const DirectedGraph> chorded_ring(std::size_t n) {
  std::vector<std::string> vertices;
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({"a" + std::to_string(i), vertices[i], vertices[(i + 1) % n]});
    edges.push_back({"b" + std::to_string(i), vertices[i], vertices[(i + 2) % n]});
  }
  return std::make_shared<const DirectedGraph>(std::move(vertices), std::move(edges));
}

const QuadScalar kTheta = QuadScalar::sqrt(2) - QuadScalar(1);

void BM_ComposePathMap(benchmark::State& state) {
  const auto g = single_loop();
  const gbs::BranchingSystem bs = gbs::build_rotation_system(g, {{EdgeId{0}, kTheta}});
  const gbs::Path alpha = gbs::Path(*g, {EdgeId{0}}).power(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gbs::compose_path_map(bs, alpha));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComposePathMap)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_VerifyAxioms(benchmark::State& state) {
  const gbs::BranchingSystem bs = gbs::build_affine_system(chorded_ring(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(gbs::verify_axioms(bs));
}
BENCHMARK(BM_VerifyAxioms)->RangeMultiplier(2)->Range(4, 32);

void BM_VerifyCkRelations(benchmark::State& state) {
  const gbs::BranchingSystem bs = gbs::build_affine_system(chorded_ring(static_cast<std::size_t>(state.range(0))));
  const gbs::Mode mode = state.range(1) ? gbs::Mode::algebraic : gbs::Mode::cstar;
  for (auto _ : state) benchmark::DoNotOptimize(gbs::verify_ck_relations(bs, mode));
}
BENCHMARK(BM_VerifyCkRelations)->ArgsProduct({{4, 8, 16}, {0, 1}});

void BM_OperatorCompose(benchmark::State& state) {
  const auto g = chorded_ring(8);
  const gbs::BranchingSystem bs = gbs::build_affine_system(g);
  std::vector<EdgeId> edges;
  for (std::int64_t i = 0; i < state.range(0); ++i) edges.push_back(g->edge("a" + std::to_string(i % 8)));
  const gbs::Path p(*g, edges);
  for (auto _ : state) benchmark::DoNotOptimize(gbs::op_path(bs, p, gbs::Mode::cstar));
}
BENCHMARK(BM_OperatorCompose)->RangeMultiplier(2)->Range(2, 64);

void BM_TermMul(benchmark::State& state) {
  const auto g = chorded_ring(6);
  const gbs::LeavittTerm x = gbs::parse_term(g, "s[a0.a1.b2]*s[b0.b2]^ + 1/2*s[a4.a5]*s[b4]^ - p[v0]");
  const gbs::LeavittTerm y = gbs::parse_term(g, "s[b0.b2]*s[a2.a3]^ + s[b4]*s[a4.a5]^ + 3*s[a0]");
  for (auto _ : state) benchmark::DoNotOptimize(gbs::term_mul(x, y));
}
BENCHMARK(BM_TermMul);

void BM_FaithfulnessCheck(benchmark::State& state) {
  const gbs::BranchingSystem bs = gbs::build_rotation_system(single_loop(), {{EdgeId{0}, kTheta}});
  for (auto _ : state) benchmark::DoNotOptimize(gbs::faithfulness_check(bs, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_FaithfulnessCheck)->RangeMultiplier(4)->Range(4, 64);

void BM_QuadCompare(benchmark::State& state) {
  const QuadScalar x = QuadScalar(gbs::Rational(99, 70)) - QuadScalar::sqrt(2);
  const QuadScalar y = QuadScalar(gbs::Rational(1, 1000000));
  for (auto _ : state) benchmark::DoNotOptimize(gbs::quad_compare(x, y));
}
BENCHMARK(BM_QuadCompare);

}  // namespace

BENCHMARK_MAIN();
