// Copyright 2026 The flexrow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "flexrow/corpus.hpp"
#include "flexrow/pipeline.hpp"

namespace {

using flexrow::Method;

flexrow::SyntheticPage page_for(double overlap, double diacritic) {
  flexrow::SynthSpec spec;
  spec.overlap_probability = overlap;
  spec.diacritic_probability = diacritic;
  return flexrow::generate(spec);
}

// Border construction and row cut on one 400x300 page; analysis excluded.
void segment(benchmark::State& state, Method method, double overlap, double diacritic) {
  const auto page = page_for(overlap, diacritic);
  const flexrow::PipelineConfig config;
  const auto layout = flexrow::analyze_page(page.image, config.analysis);
  for (auto _ : state) {
    auto result = flexrow::segment_page(page.image, layout, method, config);
    benchmark::DoNotOptimize(result.segmentation.assignment.data());
  }
}

void analysis(benchmark::State& state) {
  const auto page = page_for(0.6, 0.5);
  for (auto _ : state) {
    auto layout = flexrow::analyze_page(page.image);
    benchmark::DoNotOptimize(layout.valleys.data());
  }
}

void generation(benchmark::State& state) {
  flexrow::SynthSpec spec;
  for (auto _ : state) {
    auto page = flexrow::generate(spec);
    benchmark::DoNotOptimize(page.image.bits().data());
    ++spec.seed;
  }
}

BENCHMARK_CAPTURE(segment, straight_clean, Method::Straight, 0.0, 0.0);
BENCHMARK_CAPTURE(segment, flexible_clean, Method::Flexible, 0.0, 0.0);
BENCHMARK_CAPTURE(segment, straight_overlap, Method::Straight, 0.6, 0.5);
BENCHMARK_CAPTURE(segment, bottom_edge_overlap, Method::BottomEdge, 0.6, 0.5);
BENCHMARK_CAPTURE(segment, flexible_overlap, Method::Flexible, 0.6, 0.5);
BENCHMARK(analysis);
BENCHMARK(generation);

}  // namespace

BENCHMARK_MAIN();
