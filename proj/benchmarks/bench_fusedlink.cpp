#include <benchmark/benchmark.h>

#include "fusedlink/artin.hpp"
#include "fusedlink/lemmas.hpp"
#include "fusedlink/random.hpp"
#include "fusedlink/reducer.hpp"

using namespace fusedlink;

namespace {

std::vector<BraidWord> corpus(int strands, int length, double virtual_rate = 0.0) {
  Rng rng(static_cast<std::uint64_t>(strands * 1000 + length));
  std::vector<BraidWord> words;
  for (int k = 0; k < 64; ++k) words.push_back(random_word(rng, strands, length, virtual_rate));
  return words;
}

void BM_Canonicalize(benchmark::State& state) {
  const auto words = corpus(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(words[k++ % words.size()]));
}
BENCHMARK(BM_Canonicalize)->Args({3, 10})->Args({4, 25})->Args({6, 40})->Args({8, 80});

void BM_CanonicalForm(benchmark::State& state) {
  const auto words = corpus(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(words[k++ % words.size()]));
}
BENCHMARK(BM_CanonicalForm)->Args({4, 25})->Args({8, 80});

void BM_CheckCertificate(benchmark::State& state) {
  std::vector<Certificate> certs;
  for (const auto& w : corpus(6, 40)) certs.push_back(canonicalize(w).certificate);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(check_certificate(certs[k++ % certs.size()]));
}
BENCHMARK(BM_CheckCertificate);

void BM_ArtinImage(benchmark::State& state) {
  const auto words = corpus(5, static_cast<int>(state.range(0)), 0.3);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(artin_image(words[k++ % words.size()]));
}
BENCHMARK(BM_ArtinImage)->Arg(10)->Arg(20)->Arg(40);

void BM_CombLastStrand(benchmark::State& state) {
  const auto words = corpus(6, 40);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(comb_last_strand(words[k++ % words.size()]));
}
BENCHMARK(BM_CombLastStrand);

void BM_SearchDerivedMove(benchmark::State& state) {
  SearchOptions options;
  options.kinds = {MoveKind::R2, MoveKind::R3, MoveKind::FAR, MoveKind::V2,
                   MoveKind::V3, MoveKind::MIXED, MoveKind::F_O, MoveKind::F_U};
  const BraidWord a = parse_word("s1 S2 s1");
  const BraidWord b = parse_word("s2 S1 s2");
  for (auto _ : state) benchmark::DoNotOptimize(bfs_search(a, b, {0, 200'000}, options));
}
BENCHMARK(BM_SearchDerivedMove)->Unit(benchmark::kMillisecond);

void BM_SearchTrefoilClosure(benchmark::State& state) {
  SearchOptions options;
  options.level = MoveLevel::Closure;
  const BraidWord a = parse_word("s1 s1 s1");
  const BraidWord b = parse_word("n=1");
  for (auto _ : state) benchmark::DoNotOptimize(bfs_search(a, b, {0, 200'000}, options));
}
BENCHMARK(BM_SearchTrefoilClosure)->Unit(benchmark::kMillisecond);

void BM_LemmaSuite(benchmark::State& state) {
  SuiteOptions options;
  options.max_strands = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_lemma_suite(options));
}
BENCHMARK(BM_LemmaSuite)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
