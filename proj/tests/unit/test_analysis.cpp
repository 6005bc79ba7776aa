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


#include <gtest/gtest.h>

#include <cmath>

#include "flexrow/analysis.hpp"
#include "flexrow/errors.hpp"
#include "flexrow/raster.hpp"
#include "oracles.hpp"

namespace flexrow {
namespace {

// Horizontal bars, optionally drawn along a line of the given angle.
BinaryImage bars(double degrees, int width = 200, int height = 120) {
  BinaryImage img(width, height);
  const double t = std::tan(degrees_to_radians(degrees));
  for (const int top : {20, 50, 80}) {
    for (int c = 10; c < width - 10; ++c) {
      const int shift = static_cast<int>(std::lround(c * t));
      for (int r = top; r < top + 8; ++r) img.set(r + shift, c, true);
    }
  }
  return img;
}

TEST(ScanlineFrame, AngleZeroIsIdentity) {
  const ScanlineFrame f(SkewAngle(0.0), 10, 7);
  EXPECT_EQ(f.scanline_count(), 7);
  EXPECT_EQ(f.scanline_of({3, 9}), 3);
  EXPECT_EQ(f.row_at(3, 9), 3);
}

TEST(ScanlineFrame, OffsetsMatchIntegerReference) {
  const ScanlineFrame f(SkewAngle(std::atan(0.1)), 100, 20);
  for (int c = 0; c < 100; ++c) EXPECT_EQ(f.line_offset(c), oracle::line_offset(c, 1, 10)) << c;
  EXPECT_EQ(f.scanline_count(), 20 + oracle::line_offset(99, 1, 10));
}

TEST(ScanlineFrame, NegativeAngleShiftsScanlines) {
  const ScanlineFrame f(SkewAngle(-std::atan(0.1)), 100, 20);
  EXPECT_EQ(f.shift(), 0);
  EXPECT_EQ(f.scanline_count(), 30);
  for (int c = 0; c < 100; ++c) {
    const int s = f.scanline_of({0, c});
    EXPECT_GE(s, 0);
    EXPECT_EQ(f.row_at(s, c), 0);
  }
}

TEST(ProjectionProfile, BlankImageIsAllZero) {
  const auto p = projection_profile(BinaryImage(30, 10), SkewAngle::from_degrees(3.0));
  for (const int v : p.counts) EXPECT_EQ(v, 0);
}

TEST(ProjectionProfile, HorizontalLine) {
  BinaryImage img(17, 9);
  for (int c = 0; c < 17; ++c) img.set(5, c, true);
  const auto p = projection_profile(img, SkewAngle(0.0));
  ASSERT_EQ(p.counts.size(), 9u);
  for (int s = 0; s < 9; ++s) EXPECT_EQ(p.counts[s], s == 5 ? 17 : 0);
}

TEST(ProjectionProfile, LineAtTheProfileAngleFillsOneBin) {
  const SkewAngle angle = SkewAngle::from_degrees(2.0);
  const int width = 300;
  BinaryImage img(width, 40);
  // Discrete line r = 10 + round(c tan 2deg).
  for (int c = 0; c < width; ++c) {
    img.set(10 + static_cast<int>(std::lround(c * std::tan(angle.radians()))), c, true);
  }
  const auto p = projection_profile(img, angle);
  int nonzero = 0;
  int total = 0;
  for (const int v : p.counts) {
    nonzero += v > 0;
    total += v;
  }
  EXPECT_EQ(nonzero, 1);
  EXPECT_EQ(total, static_cast<int>(img.ink_count()));
}

TEST(EstimateSkew, LevelBars) {
  const auto a = estimate_skew(bars(0.0), degrees_to_radians(5.0), degrees_to_radians(0.5));
  EXPECT_EQ(a.radians(), 0.0);
}

TEST(EstimateSkew, RotatedBarsWithinOneStep) {
  const auto a = estimate_skew(bars(2.0), degrees_to_radians(5.0), degrees_to_radians(0.5));
  EXPECT_NEAR(a.degrees(), 2.0, 0.5);
  const auto b = estimate_skew(bars(-3.0), degrees_to_radians(5.0), degrees_to_radians(0.5));
  EXPECT_NEAR(b.degrees(), -3.0, 0.5);
}

TEST(EstimateSkew, BlankImageThrows) {
  EXPECT_THROW(estimate_skew(BinaryImage(5, 5)), EmptyImage);
}

TEST(EstimateSkew, TieGoesToSmallestMagnitude) {
  // A single pixel has the same profile variance at every angle.
  BinaryImage img(5, 5);
  img.set(2, 0, true);
  EXPECT_EQ(estimate_skew(img).radians(), 0.0);
}

TEST(SmoothProfile, CenteredZeroPaddedMean) {
  const auto s = smooth_profile({0, 3, 0, 0, 6}, 3);
  ASSERT_EQ(s.size(), 5u);
  EXPECT_DOUBLE_EQ(s[0], 1.0);
  EXPECT_DOUBLE_EQ(s[1], 1.0);
  EXPECT_DOUBLE_EQ(s[2], 1.0);
  EXPECT_DOUBLE_EQ(s[3], 2.0);
  EXPECT_DOUBLE_EQ(s[4], 2.0);
  EXPECT_THROW(smooth_profile({1, 2}, 2), std::invalid_argument);
}

TEST(DetectRowBands, TwoBandsAndValley) {
  const std::vector<int> counts{0, 0, 9, 9, 9, 0, 0, 8, 8, 8, 0, 0};
  const auto layout = detect_row_bands(counts, {1, 0.3, 0.4});
  ASSERT_EQ(layout.bands.size(), 2u);
  EXPECT_EQ(layout.bands[0].top, 2);
  EXPECT_EQ(layout.bands[0].bottom, 4);
  EXPECT_EQ(layout.bands[1].top, 7);
  EXPECT_EQ(layout.bands[1].bottom, 9);
  ASSERT_EQ(layout.valleys.size(), 1u);
  EXPECT_EQ(layout.valleys[0].scanline, 5);
}

TEST(DetectRowBands, SingleBand) {
  const auto layout = detect_row_bands(std::vector<int>{0, 4, 5, 4, 0}, {1, 0.2, 0.4});
  EXPECT_EQ(layout.bands.size(), 1u);
  EXPECT_TRUE(layout.valleys.empty());
}

TEST(DetectRowBands, AllZeroThrows) {
  EXPECT_THROW(detect_row_bands(std::vector<int>(10, 0), {}), NoBands);
}

TEST(DetectRowBands, ZoneNesting) {
  // Core: counts above half the peak; median: central 40 % of the core.
  std::vector<int> counts(40, 0);
  for (int s = 5; s < 35; ++s) counts[s] = (s >= 10 && s < 30) ? 100 : 20;
  const auto layout = detect_row_bands(counts, {1, 0.1, 0.4});
  ASSERT_EQ(layout.bands.size(), 1u);
  const auto& b = layout.bands[0];
  EXPECT_EQ(b.top, 5);
  EXPECT_EQ(b.bottom, 34);
  EXPECT_EQ(b.core_top, 10);
  EXPECT_EQ(b.core_bottom, 29);
  EXPECT_EQ(b.median_top, 16);     // 10 + ceil(0.3 * 20)
  EXPECT_EQ(b.median_bottom, 23);  // 29 - ceil(0.3 * 20)
}

TEST(DetectRowBands, MedianNeverEmpty) {
  const auto layout = detect_row_bands(std::vector<int>{0, 5, 0}, {1, 0.2, 0.4});
  ASSERT_EQ(layout.bands.size(), 1u);
  EXPECT_EQ(layout.bands[0].median_top, 1);
  EXPECT_EQ(layout.bands[0].median_bottom, 1);
}

TEST(DetectRowBands, ValleyTieGoesToTopmost) {
  const std::vector<int> counts{5, 5, 0, 0, 0, 5, 5};
  const auto layout = detect_row_bands(counts, {1, 0.5, 0.4});
  ASSERT_EQ(layout.valleys.size(), 1u);
  EXPECT_EQ(layout.valleys[0].scanline, 2);
}

TEST(DetectRowBands, BadParametersThrow) {
  const std::vector<int> counts{1, 2, 3};
  EXPECT_THROW(detect_row_bands(counts, {2, 0.2, 0.4}), std::invalid_argument);
  EXPECT_THROW(detect_row_bands(counts, {1, 0.0, 0.4}), std::invalid_argument);
  EXPECT_THROW(detect_row_bands(counts, {1, 1.0, 0.4}), std::invalid_argument);
}

TEST(AnalyzePage, LevelBarsGiveThreeRows) {
  const auto layout = analyze_page(bars(0.0));
  EXPECT_EQ(layout.angle.radians(), 0.0);
  ASSERT_EQ(layout.bands.size(), 3u);
  ASSERT_EQ(layout.valleys.size(), 2u);
  EXPECT_GT(layout.valleys[0].scanline, 27);
  EXPECT_LT(layout.valleys[0].scanline, 50);
  EXPECT_GT(layout.valleys[1].scanline, 57);
  EXPECT_LT(layout.valleys[1].scanline, 80);
}

}  // namespace
}  // namespace flexrow
