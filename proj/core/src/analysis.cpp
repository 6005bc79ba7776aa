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

#include "flexrow/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "flexrow/errors.hpp"

namespace flexrow {

ScanlineFrame::ScanlineFrame(SkewAngle angle, int width, int height)
    : angle_(angle), slope_(std::tan(angle.radians())) {
  const int last = line_offset(width - 1);
  shift_ = std::max(0, last);
  scanline_count_ = height + shift_ - std::min(0, last);
}

Profile projection_profile(const BinaryImage& img, SkewAngle angle) {
  Profile profile{{}, angle, ScanlineFrame(angle, img.width(), img.height())};
  profile.counts.assign(profile.frame.scanline_count(), 0);
  for (int c = 0; c < img.width(); ++c) {
    const int base = profile.frame.shift() - profile.frame.line_offset(c);
    for (int r = 0; r < img.height(); ++r) {
      if (img.ink(r, c)) ++profile.counts[r + base];
    }
  }
  return profile;
}

namespace {

__extension__ using Wide = __int128;

// Variance of a profile kept as an exact fraction numerator / n^2.
struct Spread {
  Wide numerator = 0;
  Wide n = 1;

  bool greater_than(const Spread& other) const {
    return numerator * other.n * other.n > other.numerator * n * n;
  }
};

Spread profile_spread(const std::vector<Point>& ink, const ScanlineFrame& frame,
                      std::vector<int>& scratch) {
  scratch.assign(frame.scanline_count(), 0);
  for (const auto& p : ink) ++scratch[frame.scanline_of(p)];
  Wide sum = 0;
  Wide sum_sq = 0;
  for (const int v : scratch) {
    sum += v;
    sum_sq += static_cast<Wide>(v) * v;
  }
  const Wide n = static_cast<Wide>(scratch.size());
  return {n * sum_sq - sum * sum, n};
}

}  // namespace

SkewAngle estimate_skew(const BinaryImage& img, double range_rad,
                        double step_rad) {
  if (!(step_rad > 0.0)) {
    throw std::invalid_argument("estimate_skew: step must be positive");
  }
  if (range_rad < 0.0) {
    throw std::invalid_argument("estimate_skew: range must be non-negative");
  }
  std::vector<Point> ink;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (img.ink(r, c)) ink.push_back({r, c});
    }
  }
  if (ink.empty()) throw EmptyImage("estimate_skew: image has no ink");

  const int steps = static_cast<int>(std::floor(range_rad / step_rad + 1e-9));
  std::vector<int> scratch;
  // Visiting 0, -1, +1, -2, +2, ... and keeping only strict improvements
  // implements the tie-breaking order directly.
  SkewAngle best(0.0);
  Spread best_spread =
      profile_spread(ink, ScanlineFrame(best, img.width(), img.height()), scratch);
  for (int k = 1; k <= steps; ++k) {
    for (const int sign : {-1, 1}) {
      const SkewAngle angle(sign * k * step_rad);
      const auto spread = profile_spread(
          ink, ScanlineFrame(angle, img.width(), img.height()), scratch);
      if (spread.greater_than(best_spread)) {
        best = angle;
        best_spread = spread;
      }
    }
  }
  return best;
}

std::vector<double> smooth_profile(const std::vector<int>& counts, int window) {
  if (window < 1 || window % 2 == 0) {
    throw std::invalid_argument("smooth window must be odd and >= 1");
  }
  const int n = static_cast<int>(counts.size());
  const int half = window / 2;
  std::vector<double> out(counts.size(), 0.0);
  long running = 0;
  // Sliding sum over [i - half, i + half], clipped to the sequence.
  for (int i = 0; i < std::min(half, n); ++i) running += counts[i];
  for (int i = 0; i < n; ++i) {
    if (i + half < n) running += counts[i + half];
    if (i - half - 1 >= 0) running -= counts[i - half - 1];
    out[i] = static_cast<double>(running) / window;
  }
  return out;
}

BandLayout detect_row_bands(const std::vector<int>& counts,
                            const BandParams& params) {
  if (!(params.band_threshold > 0.0 && params.band_threshold < 1.0)) {
    throw std::invalid_argument("band threshold must lie in (0, 1)");
  }
  if (!(params.median_fraction > 0.0 && params.median_fraction <= 1.0)) {
    throw std::invalid_argument("median fraction must lie in (0, 1]");
  }
  const auto smooth = smooth_profile(counts, params.smooth_window);
  const int n = static_cast<int>(smooth.size());
  const double global_max =
      smooth.empty() ? 0.0 : *std::max_element(smooth.begin(), smooth.end());
  if (global_max <= 0.0) throw NoBands("profile contains no ink");
  const double cut = params.band_threshold * global_max;

  BandLayout layout;
  for (int i = 0; i < n;) {
    if (!(smooth[i] > cut)) {
      ++i;
      continue;
    }
    RowBand band;
    band.top = i;
    while (i < n && smooth[i] > cut) ++i;
    band.bottom = i - 1;

    int peak = band.top;
    for (int j = band.top; j <= band.bottom; ++j) {
      if (smooth[j] > smooth[peak]) peak = j;
    }
    const double core_cut = 0.5 * smooth[peak];
    band.core_top = peak;
    band.core_bottom = peak;
    while (band.core_top > band.top && smooth[band.core_top - 1] > core_cut) {
      --band.core_top;
    }
    while (band.core_bottom < band.bottom &&
           smooth[band.core_bottom + 1] > core_cut) {
      ++band.core_bottom;
    }

    const int height = band.core_bottom - band.core_top + 1;
    const int margin = static_cast<int>(
        std::ceil((1.0 - params.median_fraction) / 2.0 * height - 1e-9));
    band.median_top = band.core_top + margin;
    band.median_bottom = band.core_bottom - margin;
    if (band.median_top > band.median_bottom) {
      band.median_top = band.median_bottom = (band.core_top + band.core_bottom) / 2;
    }
    layout.bands.push_back(band);
  }
  if (layout.bands.empty()) throw NoBands("no scanline exceeds band threshold");

  for (std::size_t k = 0; k + 1 < layout.bands.size(); ++k) {
    const int lo = layout.bands[k].bottom + 1;
    const int hi = layout.bands[k + 1].top - 1;
    int best = lo;
    for (int s = lo + 1; s <= hi; ++s) {
      if (smooth[s] < smooth[best]) best = s;
    }
    layout.valleys.push_back({best});
  }
  return layout;
}

BandLayout detect_row_bands(const Profile& profile, const BandParams& params) {
  return detect_row_bands(profile.counts, params);
}

PageLayout analyze_page(const BinaryImage& img, const AnalysisParams& params) {
  PageLayout page;
  page.angle = estimate_skew(img, degrees_to_radians(params.skew_range_deg),
                             degrees_to_radians(params.skew_step_deg));
  auto profile = projection_profile(img, page.angle);
  auto layout = detect_row_bands(profile, params.bands);
  page.frame = profile.frame;
  page.counts = std::move(profile.counts);
  page.bands = std::move(layout.bands);
  page.valleys = std::move(layout.valleys);
  return page;
}

}  // namespace flexrow
