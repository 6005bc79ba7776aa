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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flexrow/labeling.hpp"
#include "flexrow/pipeline.hpp"
#include "flexrow/raster.hpp"
#include "flexrow/segment.hpp"

namespace flexrow {

// Steele, Lea and Flood's splitmix64. Fixed so corpora are reproducible
// across platforms and implementations.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Inclusive range; modulo bias is irrelevant at these sizes.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(double p) { return unit() < p; }

private:
  std::uint64_t state_;
};

struct SynthSpec {
  int rows = 4;
  int width = 400;
  int row_height = 60;
  double overlap_probability = 0.6;
  double diacritic_probability = 0.5;
  double unresolvable_probability = 0.0;
  std::uint64_t seed = 42;
  // Row angle of the generated text, drawn by vertical shear.
  double skew_deg = 0.0;
};

inline constexpr int kMinRowHeight = 12;

// Throws SpecTooTight or std::invalid_argument.
void validate(const SynthSpec& spec);

// Intended row of every component, and the glyph (word) it belongs to.
// Detached marks share their word's glyph.
struct GroundTruth {
  std::vector<int> component_row;    // index: label - 1
  std::vector<int> component_glyph;  // index: label - 1
  int glyph_count = 0;

  int component_count() const { return static_cast<int>(component_row.size()); }
};

struct SyntheticPage {
  BinaryImage image;
  ComponentLabeling labeling;
  GroundTruth truth;
  // Nominal geometry, in generated (unsheared) rows.
  std::vector<int> core_top;
  std::vector<int> core_bottom;
  std::vector<int> valley;
  int diacritics_below = 0;
  int diacritics_above = 0;
  int crossing_extensions = 0;
  int unresolvable_bars = 0;
};

SyntheticPage generate(const SynthSpec& spec);

// `component <id> row <k>` lines, ids in raster-scan discovery order.
std::string format_truth(const GroundTruth& truth);

// Components whose non-barrier ink lands in two or more rows. Throws
// SizeMismatch when the rasters differ.
int count_amputations(const ComponentLabeling& labeling, const Segmentation& seg);

// Same count over groups of components (group id per label - 1): a group is
// amputated when its ink lands in two or more rows.
int count_amputations(const ComponentLabeling& labeling, const Segmentation& seg,
                      std::span<const int> group_of, int group_count);

// Whole components that sit on a single row other than the intended one.
// Only meaningful when the segmentation has one row per generated row.
int count_misassigned(const ComponentLabeling& labeling, const Segmentation& seg,
                      const GroundTruth& truth);

struct MethodReport {
  Method method = Method::Flexible;
  int samples = 0;
  int components = 0;  // glyphs scored
  int amputations = 0;
  double error_rate = 0.0;
  double wall_time_s = 0.0;
  // Informational, excluded from error_rate.
  std::size_t events = 0;
  std::size_t amputated_events = 0;
  int misassigned = 0;
  std::size_t barrier_ink = 0;
};

// (1 - flex / base) * 100, undefined when the base error rate is zero.
std::optional<double> reduction_percent(double base_error, double flex_error);

struct Reduction {
  Method base = Method::Straight;
  std::optional<double> percent;
};

struct CompareOptions {
  PipelineConfig pipeline;
  // Each (sample, method) is timed this many times; the fastest run counts.
  int timing_repeats = 3;
};

struct Comparison {
  std::vector<MethodReport> reports;
  std::vector<Reduction> reductions;
  int skipped = 0;
  std::vector<std::string> skip_reasons;
};

// Sample i of a corpus uses the i-th splitmix64 output of base.seed.
std::vector<SynthSpec> corpus_specs(const SynthSpec& base, int samples);

Comparison compare(std::span<const SynthSpec> specs, std::span<const Method> methods,
                   const CompareOptions& options = {});

std::string format_table(const Comparison& comparison);
std::string format_csv(const Comparison& comparison);

}  // namespace flexrow
