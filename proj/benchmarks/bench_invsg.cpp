/*
 *   Copyright 2026 The invsg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <benchmark/benchmark.h>

#include "invsg/folog.hpp"
#include "invsg/lrtt.hpp"
#include "invsg/syntactic.hpp"

using namespace invsg;

namespace {

  InvolutoryAlphabet const ab  = InvolutoryAlphabet::hermitian("ab");
  InvolutoryAlphabet const abc = InvolutoryAlphabet::hermitian("abc");

  void BM_RegexToMinimalDfa(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(regex_dfa("(a|b)*a(a|b)(a|b)(a|b)(a|b)", ab));
    }
  }
  BENCHMARK(BM_RegexToMinimalDfa);

  void BM_SyntacticStarSemigroup(benchmark::State& state) {
    Dfa d = regex_dfa("(abc)+", abc);
    for (auto _ : state) {
      benchmark::DoNotOptimize(syntactic_star_semigroup(d, abc));
    }
  }
  BENCHMARK(BM_SyntacticStarSemigroup);

  void BM_Signature(benchmark::State& state) {
    Word w;
    for (int i = 0; i < state.range(0); ++i) {
      w.push_back(static_cast<Letter>((i * 7 + i / 3) % 3));
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(signature(abc, w, 3, 2, Mode::reverse));
    }
    state.SetComplexityN(state.range(0));
  }
  BENCHMARK(BM_Signature)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

  void BM_UnionCheck(benchmark::State& state) {
    Dfa         d = regex_dfa("(abc)+", abc);
    std::size_t k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(union_check_exact(d, abc, k, 1, Mode::reverse));
    }
  }
  BENCHMARK(BM_UnionCheck)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

  void BM_CanonicalImage(benchmark::State& state) {
    CanonicalRecognizer rec(ab, 1, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      auto img = recognizer_image(rec);
      benchmark::DoNotOptimize(img.size());
    }
  }
  BENCHMARK(BM_CanonicalImage)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

  void BM_BoundedLanguage(benchmark::State& state) {
    auto f = parse_formula(
        "P_a(min) & P_b(max) & forall x. forall y. (N(x,y) -> (P_a(x) <-> P_b(y)))", ab);
    for (auto _ : state) {
      benchmark::DoNotOptimize(bounded_language(f, ab, static_cast<std::size_t>(state.range(0))));
    }
  }
  BENCHMARK(BM_BoundedLanguage)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
