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

#include "flexrow/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "flexrow/analysis.hpp"
#include "flexrow/errors.hpp"

namespace flexrow {

void validate(const SynthSpec& spec) {
  if (spec.rows < 2) throw std::invalid_argument("synth: rows must be >= 2");
  for (const double p : {spec.overlap_probability, spec.diacritic_probability,
                         spec.unresolvable_probability}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("synth: probabilities must lie in [0, 1]");
    }
  }
  if (!(std::abs(spec.skew_deg) <= 10.0)) {
    throw std::invalid_argument("synth: skew must lie within +-10 degrees");
  }
  if (spec.row_height < kMinRowHeight) {
    throw SpecTooTight("synth: row_height " + std::to_string(spec.row_height) +
                       " below minimum " + std::to_string(kMinRowHeight));
  }
  const int margin = std::max(3, spec.width / 40);
  if (spec.width < 2 * margin + 5 * 8) {
    throw SpecTooTight("synth: width " + std::to_string(spec.width) +
                       " cannot hold five words");
  }
}

namespace {

struct Word {
  int id = 0;
  int row = 0;
  int x0 = 0;
  int x1 = 0;
  bool ellipse = false;
};

struct Rect {
  int y0, y1, x0, x1;
  bool bar;
};

class Canvas {
public:
  Canvas(int width, int base_height, double skew_deg)
      : width_(width),
        frame_(SkewAngle::from_degrees(skew_deg), width, base_height) {
    const int last = frame_.line_offset(width - 1);
    lift_ = -std::min(0, last);
    height_ = base_height + std::abs(last);
    owner_.assign(static_cast<std::size_t>(width_) * height_, -1);
  }

  void paint(int y, int x, int word) {
    const int r = y + frame_.line_offset(x) + lift_;
    owner_[static_cast<std::size_t>(r) * width_ + x] = word;
  }
  void fill(int y0, int y1, int x0, int x1, int word) {
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) paint(y, x, word);
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<int>& owner() const { return owner_; }

private:
  int width_;
  int height_ = 0;
  int lift_ = 0;
  ScanlineFrame frame_;
  std::vector<int> owner_;
};

// Features placed in one inter-row gap. Bars keep a wide berth from each
// other so a detour around one never runs into the next.
class GapRegistry {
public:
  static constexpr int kBarClearance = 8;
  static constexpr int kMarkClearance = 2;

  bool free(const Rect& r) const {
    for (const auto& o : taken_) {
      const int h = (r.bar && o.bar) ? kBarClearance : kMarkClearance;
      const int v = (r.bar && o.bar) ? 0 : kMarkClearance;
      if (r.x0 <= o.x1 + h && o.x0 <= r.x1 + h && r.y0 <= o.y1 + v &&
          o.y0 <= r.y1 + v) {
        return false;
      }
    }
    return true;
  }
  void take(const Rect& r) { taken_.push_back(r); }

private:
  std::vector<Rect> taken_;
};

}  // namespace

SyntheticPage generate(const SynthSpec& spec) {
  validate(spec);
  SplitMix64 rng(spec.seed);
  const int R = spec.row_height;
  const int band_gap = static_cast<int>(std::lround(0.3 * R));
  const int top_margin = R / 2;
  const int base_height = spec.rows * R + 2 * top_margin;
  const int margin = std::max(3, spec.width / 40);
  // Extension length past the core edge: spans the whole inter-row gap
  // except a few rows above the other row's core.
  const int ext_max = std::max(band_gap + 1, 2 * band_gap - std::max(4, band_gap / 4));
  const int ext_min = std::max(band_gap + 1, ext_max - 2);

  SyntheticPage page;
  for (int i = 0; i < spec.rows; ++i) {
    const int y0 = top_margin + i * R;
    page.core_top.push_back(y0 + band_gap);
    page.core_bottom.push_back(y0 + R - band_gap - 1);
    if (i > 0) page.valley.push_back(y0);
  }

  Canvas canvas(spec.width, base_height, spec.skew_deg);
  std::vector<Word> words;
  std::vector<std::vector<Word>> by_row(spec.rows);
  for (int i = 0; i < spec.rows; ++i) {
    const int n = rng.uniform(5, 10);
    const int slot = (spec.width - 2 * margin) / n;
    for (int j = 0; j < n; ++j) {
      Word w;
      w.id = static_cast<int>(words.size());
      w.row = i;
      const int len = rng.uniform(std::max(4, slot * 6 / 10), slot - 3);
      w.x0 = margin + j * slot + rng.uniform(0, slot - 3 - len);
      w.x1 = w.x0 + len - 1;
      w.ellipse = rng.chance(0.3);
      words.push_back(w);
      by_row[i].push_back(w);
    }
  }

  std::vector<GapRegistry> gaps(spec.rows - 1);
  const auto in_word_of_row = [&](int row, int x0, int x1) {
    for (const auto& w : by_row[row]) {
      if (x0 <= w.x1 && w.x0 <= x1) return true;
    }
    return false;
  };

  for (const auto& w : words) {
    const int ct = page.core_top[w.row];
    const int cb = page.core_bottom[w.row];
    const int cy = (ct + cb) / 2;
    if (w.ellipse) {
      const double ry = (cb - ct + 1) / 2.0;
      const double rx = (w.x1 - w.x0 + 1) / 2.0;
      const double my = (ct + cb) / 2.0;
      const double mx = (w.x0 + w.x1) / 2.0;
      for (int y = ct; y <= cb; ++y) {
        for (int x = w.x0; x <= w.x1; ++x) {
          const double dy = (y - my) / ry;
          const double dx = (x - mx) / rx;
          if (dx * dx + dy * dy <= 1.0) canvas.paint(y, x, w.id);
        }
      }
    } else {
      canvas.fill(ct, cb, w.x0, w.x1, w.id);
    }

    const int len = w.x1 - w.x0 + 1;
    const int inner0 = w.x0 + len / 4;
    const int inner1 = w.x1 - len / 4;
    std::vector<std::pair<int, int>> bars;

    // A stem from the core center; extensions end in a short foot (or cap)
    // stroke at the tip, bars spanning into the other core do not.
    const auto place_bar = [&](bool down, int y0, int y1, bool spanning) {
      const int gap = down ? w.row : w.row - 1;
      const int bw = rng.uniform(2, 3);
      const int left = spanning ? 0 : rng.uniform(1, 3);
      const int right = spanning ? 0 : rng.uniform(1, 3);
      if (inner1 - bw + 1 < inner0) return false;
      for (int attempt = 0; attempt < 8; ++attempt) {
        const int x = rng.uniform(inner0, inner1 - bw + 1);
        const Rect rect{y0, y1, x - left, x + bw - 1 + right, true};
        if (!gaps[gap].free(rect)) continue;
        if (spanning) {
          const int other = down ? w.row + 1 : w.row - 1;
          if (in_word_of_row(other, x - 2, x + bw + 1)) continue;
        }
        gaps[gap].take(rect);
        canvas.fill(y0, y1, x, x + bw - 1, w.id);
        if (!spanning) {
          const int tip = down ? y1 - 1 : y0;
          canvas.fill(tip, tip + 1, rect.x0, rect.x1, w.id);
        }
        bars.emplace_back(rect.x0, rect.x1);
        return true;
      }
      return false;
    };

    if (rng.chance(spec.overlap_probability)) {
      bool down = w.row == 0 || (w.row < spec.rows - 1 && rng.chance(0.5));
      const int ext = rng.uniform(ext_min, ext_max);
      const bool placed = down ? place_bar(true, cy, cb + ext, false)
                               : place_bar(false, ct - ext, cy, false);
      page.crossing_extensions += placed;
    }
    if (rng.chance(spec.unresolvable_probability)) {
      const bool down = w.row < spec.rows - 1;
      const int other = down ? w.row + 1 : w.row - 1;
      const int other_cy = (page.core_top[other] + page.core_bottom[other]) / 2;
      const bool placed = down ? place_bar(true, cy, other_cy, true)
                               : place_bar(false, other_cy, cy, true);
      page.unresolvable_bars += placed;
    }
    if (rng.chance(spec.diacritic_probability)) {
      const int d = rng.uniform(2, 3);
      const bool below = rng.chance(0.5);
      const int y0 = below ? cb + 2 : ct - 1 - d;
      const int gap = below ? w.row : w.row - 1;
      for (int attempt = 0; attempt < 8 && inner1 - d + 1 >= inner0; ++attempt) {
        const int x = rng.uniform(inner0, inner1 - d + 1);
        const bool clear = std::none_of(bars.begin(), bars.end(), [&](auto b) {
          return x <= b.second + 2 && b.first <= x + d - 1 + 2;
        });
        if (!clear) continue;
        const Rect rect{y0, y0 + d - 1, x, x + d - 1, false};
        if (gap >= 0 && gap < spec.rows - 1) {
          if (!gaps[gap].free(rect)) continue;
          gaps[gap].take(rect);
        }
        canvas.fill(y0, y0 + d - 1, x, x + d - 1, w.id);
        (below ? page.diacritics_below : page.diacritics_above) += 1;
        break;
      }
    }
  }

  std::vector<std::uint8_t> bits(canvas.owner().size());
  std::transform(canvas.owner().begin(), canvas.owner().end(), bits.begin(),
                 [](int o) { return o >= 0 ? 1 : 0; });
  page.image = BinaryImage(canvas.width(), canvas.height(), std::move(bits));
  page.labeling = connected_components(page.image);

  auto& truth = page.truth;
  truth.component_row.assign(page.labeling.count, -1);
  truth.component_glyph.assign(page.labeling.count, -1);
  truth.glyph_count = static_cast<int>(words.size());
  for (std::size_t i = 0; i < canvas.owner().size(); ++i) {
    const int label = page.labeling.labels[i];
    if (label == 0) continue;
    const int word = canvas.owner()[i];
    auto& glyph = truth.component_glyph[label - 1];
    if (glyph < 0) {
      glyph = word;
      truth.component_row[label - 1] = words[word].row;
    } else if (glyph != word) {
      throw std::logic_error("synth: glyphs of different words touch");
    }
  }
  return page;
}

std::string format_truth(const GroundTruth& truth) {
  std::string out =
      "# component ids: 8-connected ink components numbered in raster-scan "
      "discovery order\n";
  for (int i = 0; i < truth.component_count(); ++i) {
    out += "component " + std::to_string(i + 1) + " row " +
           std::to_string(truth.component_row[i]) + "\n";
  }
  return out;
}

namespace {

void check_sizes(const ComponentLabeling& labeling, const Segmentation& seg) {
  if (labeling.width != seg.width || labeling.height != seg.height) {
    throw SizeMismatch("labeling and segmentation cover different rasters");
  }
}

}  // namespace

int count_amputations(const ComponentLabeling& labeling, const Segmentation& seg,
                      std::span<const int> group_of, int group_count) {
  check_sizes(labeling, seg);
  if (group_of.size() != static_cast<std::size_t>(labeling.count)) {
    throw SizeMismatch("group table does not match component count");
  }
  constexpr int kNone = -2;
  std::vector<int> row_of(group_count, kNone);
  std::vector<char> split(group_count, 0);
  for (std::size_t i = 0; i < labeling.labels.size(); ++i) {
    const int label = labeling.labels[i];
    const int row = seg.assignment[i];
    if (label == 0 || row == kBarrier) continue;
    const int g = group_of[label - 1];
    if (row_of[g] == kNone) {
      row_of[g] = row;
    } else if (row_of[g] != row) {
      split[g] = 1;
    }
  }
  return static_cast<int>(std::count(split.begin(), split.end(), 1));
}

int count_amputations(const ComponentLabeling& labeling, const Segmentation& seg) {
  std::vector<int> identity(labeling.count);
  for (int i = 0; i < labeling.count; ++i) identity[i] = i;
  return count_amputations(labeling, seg, identity, labeling.count);
}

int count_misassigned(const ComponentLabeling& labeling, const Segmentation& seg,
                      const GroundTruth& truth) {
  check_sizes(labeling, seg);
  constexpr int kNone = -2;
  constexpr int kSplit = -3;
  std::vector<int> row_of(labeling.count, kNone);
  for (std::size_t i = 0; i < labeling.labels.size(); ++i) {
    const int label = labeling.labels[i];
    const int row = seg.assignment[i];
    if (label == 0 || row == kBarrier) continue;
    auto& r = row_of[label - 1];
    if (r == kNone) {
      r = row;
    } else if (r != row) {
      r = kSplit;
    }
  }
  int n = 0;
  for (int i = 0; i < labeling.count; ++i) {
    if (row_of[i] >= 0 && row_of[i] != truth.component_row[i]) ++n;
  }
  return n;
}

std::optional<double> reduction_percent(double base_error, double flex_error) {
  if (!(base_error > 0.0)) return std::nullopt;
  return (1.0 - flex_error / base_error) * 100.0;
}

std::vector<SynthSpec> corpus_specs(const SynthSpec& base, int samples) {
  if (samples < 1) throw std::invalid_argument("corpus: samples must be >= 1");
  SplitMix64 seeds(base.seed);
  std::vector<SynthSpec> out(samples, base);
  for (auto& s : out) s.seed = seeds.next();
  return out;
}

namespace {

struct SampleRun {
  PageSegmentation result;
  double seconds = 0.0;
};

// Border construction, row cut and row extraction: everything a method
// does after the shared skew and band analysis.
SampleRun run_method(const BinaryImage& img, const PageLayout& layout,
                     Method method, const PipelineConfig& config, int repeats) {
  SampleRun best;
  best.seconds = -1.0;
  for (int i = 0; i < std::max(1, repeats); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = segment_page(img, layout, method, config);
    std::size_t sink = 0;
    for (int k = 0; k < result.segmentation.row_count; ++k) {
      sink += extract_row_image(img, result.segmentation, k).ink_count();
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double dt = std::chrono::duration<double>(t1 - t0).count();
    if (sink == static_cast<std::size_t>(-1)) throw std::logic_error("unreachable");
    if (best.seconds < 0.0 || dt < best.seconds) best.seconds = dt;
    if (i == 0) best.result = std::move(result);
  }
  return best;
}

}  // namespace

Comparison compare(std::span<const SynthSpec> specs, std::span<const Method> methods,
                   const CompareOptions& options) {
  if (specs.empty()) throw std::invalid_argument("compare: no samples");
  if (methods.empty()) throw std::invalid_argument("compare: no methods");

  Comparison out;
  for (const auto m : methods) out.reports.push_back(MethodReport{m});

  for (const auto& spec : specs) {
    const auto page = generate(spec);
    std::vector<SampleRun> runs;
    try {
      const auto layout = analyze_page(page.image, options.pipeline.analysis);
      for (const auto m : methods) {
        runs.push_back(run_method(page.image, layout, m, options.pipeline,
                                  options.timing_repeats));
      }
    } catch (const Error& e) {
      // A sample that fails for one method is dropped for all of them.
      ++out.skipped;
      out.skip_reasons.push_back("seed " + std::to_string(spec.seed) + ": " + e.what());
      continue;
    }
    for (std::size_t i = 0; i < methods.size(); ++i) {
      auto& report = out.reports[i];
      const auto& seg = runs[i].result.segmentation;
      report.samples += 1;
      report.components += page.truth.glyph_count;
      report.amputations += count_amputations(page.labeling, seg,
                                              page.truth.component_glyph,
                                              page.truth.glyph_count);
      report.wall_time_s += runs[i].seconds;
      report.events += runs[i].result.event_count();
      report.amputated_events += runs[i].result.amputated_events();
      report.barrier_ink += barrier_ink(page.image, seg);
      if (seg.row_count == spec.rows) {
        report.misassigned += count_misassigned(page.labeling, seg, page.truth);
      }
    }
  }
  for (auto& report : out.reports) {
    report.error_rate = report.components > 0
                            ? static_cast<double>(report.amputations) / report.components
                            : 0.0;
  }

  const auto flex = std::find_if(out.reports.begin(), out.reports.end(), [](const auto& r) {
    return r.method == Method::Flexible;
  });
  if (flex != out.reports.end()) {
    for (const auto& report : out.reports) {
      if (report.method == Method::Flexible) continue;
      out.reductions.push_back(
          {report.method, reduction_percent(report.error_rate, flex->error_rate)});
    }
  }
  return out;
}

std::string format_table(const Comparison& comparison) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %7s %10s %11s %10s %11s %7s %9s %11s\n",
                "method", "samples", "components", "amputations", "error_rate",
                "wall_time_s", "events", "amputated", "misassigned");
  out += line;
  for (const auto& r : comparison.reports) {
    std::snprintf(line, sizeof line,
                  "%-12s %7d %10d %11d %10.4f %11.6f %7zu %9zu %11d\n",
                  std::string(to_string(r.method)).c_str(), r.samples, r.components,
                  r.amputations, r.error_rate, r.wall_time_s, r.events,
                  r.amputated_events, r.misassigned);
    out += line;
  }
  for (const auto& red : comparison.reductions) {
    out += "reduction vs " + std::string(to_string(red.base)) + ": ";
    if (red.percent) {
      std::snprintf(line, sizeof line, "%.1f%%\n", *red.percent);
      out += line;
    } else {
      out += "undefined\n";
    }
  }
  if (comparison.skipped > 0) {
    out += "skipped samples: " + std::to_string(comparison.skipped) + "\n";
  }
  return out;
}

std::string format_csv(const Comparison& comparison) {
  std::string out = "method,samples,components,amputations,error_rate,wall_time_s\n";
  char line[256];
  for (const auto& r : comparison.reports) {
    std::snprintf(line, sizeof line, "%s,%d,%d,%d,%.6f,%.6f\n",
                  std::string(to_string(r.method)).c_str(), r.samples, r.components,
                  r.amputations, r.error_rate, r.wall_time_s);
    out += line;
  }
  return out;
}

}  // namespace flexrow
