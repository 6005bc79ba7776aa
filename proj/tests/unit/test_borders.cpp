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

#include <algorithm>
#include <cmath>

#include "flexrow/borders.hpp"
#include "flexrow/errors.hpp"
#include "flexrow/labeling.hpp"
#include "oracles.hpp"

namespace flexrow {
namespace {

ScanlineFrame level(int width, int height) { return {SkewAngle(0.0), width, height}; }

RowBand band(int top, int core_top, int median_top, int median_bottom, int core_bottom,
             int bottom) {
  return {top, bottom, core_top, core_bottom, median_top, median_bottom};
}

void expect_tiled(const BorderPolyline& b) {
  ASSERT_FALSE(b.segments.empty());
  EXPECT_EQ(b.segments.front().first, 0u);
  EXPECT_EQ(b.segments.back().last, b.points.size() - 1);
  for (std::size_t i = 1; i < b.segments.size(); ++i) {
    EXPECT_EQ(b.segments[i].first, b.segments[i - 1].last + 1);
  }
}

std::size_t ink_on(const BinaryImage& img, const BorderPolyline& b) {
  std::size_t n = 0;
  for (const auto& p : b.points) n += img.ink(p);
  return n;
}

TEST(StraightBorder, Level) {
  const auto b = straight_border({10}, level(20, 30), 20, 30);
  ASSERT_EQ(b.points.size(), 20u);
  for (int c = 0; c < 20; ++c) EXPECT_EQ(b.points[c], (Point{10, c}));
  ASSERT_EQ(b.segments.size(), 1u);
  EXPECT_EQ(b.segments[0].kind, SegmentKind::Straight);
}

TEST(StraightBorder, OneRowEveryTenColumns) {
  const ScanlineFrame f(SkewAngle(std::atan(0.1)), 20, 30);
  const auto b = straight_border({10}, f, 20, 30);
  ASSERT_EQ(b.points.size(), 20u);
  // Scanlines are numbered from the topmost line through the raster.
  EXPECT_EQ(b.points[0].r, 10 - f.shift());
  for (int c = 0; c < 20; ++c) {
    EXPECT_EQ(b.points[c].r - b.points[0].r, oracle::line_offset(c, 1, 10)) << c;
  }
}

TEST(StraightBorder, LeavingTheRasterThrows) {
  const ScanlineFrame f(SkewAngle(std::atan(0.1)), 200, 30);
  EXPECT_THROW(straight_border({f.scanline_count() - 1}, f, 200, 30), OutOfRaster);
}

TEST(StraightBorder, CutsThroughInk) {
  BinaryImage img(20, 20);
  for (int r = 8; r <= 12; ++r) img.set(r, 5, true);
  EXPECT_EQ(ink_on(img, straight_border({10}, level(20, 20), 20, 20)), 1u);
}

TEST(Bresenham, EndpointsAndConnectivity) {
  const auto line = bresenham({0, 0}, {3, 7});
  EXPECT_EQ(line.front(), (Point{0, 0}));
  EXPECT_EQ(line.back(), (Point{3, 7}));
  EXPECT_EQ(line.size(), 8u);
}

TEST(DouglasPeucker, CollinearKeepsEndpoints) {
  const std::vector<Point> path{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}};
  for (const double eps : {0.0, 0.5, 3.0}) {
    EXPECT_EQ(douglas_peucker(path, eps), (std::vector<Point>{{0, 0}, {4, 4}}));
  }
}

TEST(RelaxPolyline, ZeroEpsilonKeepsStraightRuns) {
  std::vector<Point> path;
  for (int c = 0; c < 10; ++c) path.push_back({4, c});
  for (int r = 5; r < 9; ++r) path.push_back({r, 9});
  EXPECT_EQ(relax_polyline(path, 0.0), path);
}

TEST(RelaxPolyline, ZigzagFlattens) {
  std::vector<Point> path;
  for (int c = 0; c < 30; ++c) path.push_back({5 + (c % 2), c});
  const auto out = relax_polyline(path, 2.0);
  EXPECT_EQ(douglas_peucker(path, 2.0).size(), 2u);
  for (const auto& p : path) {
    double best = 1e9;
    for (const auto& q : out) best = std::min(best, std::hypot(p.r - q.r, p.c - q.c));
    EXPECT_LE(best, 2.0);
  }
}

TEST(RelaxPolyline, GuardKeepsInkFree) {
  // A dip around a block: relaxing the corners would clip the block.
  BinaryImage img(12, 8);
  for (int r = 2; r <= 4; ++r) {
    for (int c = 4; c <= 7; ++c) img.set(r, c, true);
  }
  std::vector<Point> path;
  for (int c = 0; c <= 3; ++c) path.push_back({1, c});
  for (int r = 2; r <= 5; ++r) path.push_back({r, 3});
  for (int c = 4; c <= 8; ++c) path.push_back({5, c});
  for (int r = 4; r >= 1; --r) path.push_back({r, 8});
  for (int c = 9; c <= 11; ++c) path.push_back({1, c});
  const auto out = relax_polyline(path, 2.0, img);
  for (const auto& p : out) EXPECT_FALSE(img.ink(p)) << p.r << "," << p.c;
  EXPECT_EQ(out.front(), path.front());
  EXPECT_EQ(out.back(), path.back());
}

TEST(BottomEdgeBorder, SingleRectangle) {
  BinaryImage img(30, 20);
  for (int r = 5; r <= 10; ++r) {
    for (int c = 8; c <= 20; ++c) img.set(r, c, true);
  }
  const auto labeling = connected_components(img);
  const auto b = bottom_edge_border(img, band(4, 5, 7, 8, 10, 11), level(30, 20), labeling);
  ASSERT_EQ(b.points.size(), 30u);
  for (int c = 0; c < 30; ++c) EXPECT_EQ(b.points[c], (Point{11, c}));
  expect_tiled(b);
}

TEST(BottomEdgeBorder, LinkBetweenWords) {
  // Bottoms at rows 10 and 14; the link runs from (11, 9) to (15, 20).
  BinaryImage img(30, 20);
  for (int r = 5; r <= 10; ++r) {
    for (int c = 2; c <= 9; ++c) img.set(r, c, true);
  }
  for (int r = 5; r <= 14; ++r) {
    for (int c = 20; c <= 27; ++c) img.set(r, c, true);
  }
  const auto labeling = connected_components(img);
  BottomEdgeParams params;
  params.epsilon = 0.0;
  const auto b = bottom_edge_border(img, band(4, 5, 7, 8, 10, 15), level(30, 20), labeling, params);
  EXPECT_EQ(ink_on(img, b), 0u);
  // Vertical steps sit in the shallower column, so a column's level is its
  // topmost border point.
  auto row_at = [&](int c) {
    int r = 1 << 30;
    for (const auto& p : b.points) {
      if (p.c == c) r = std::min(r, p.r);
    }
    return r;
  };
  for (int c = 0; c <= 9; ++c) EXPECT_EQ(row_at(c), 11) << c;
  for (int c = 10; c < 20; ++c) {
    // round(11 + (c - 9) * 4 / 11)
    const int expected = 11 + ((c - 9) * 8 + 11) / 22;
    EXPECT_EQ(row_at(c), expected) << c;
  }
  for (int c = 20; c < 30; ++c) EXPECT_EQ(row_at(c), 15) << c;
}

TEST(BottomEdgeBorder, PassesAboveDetachedDot) {
  BinaryImage img(30, 24);
  for (int r = 5; r <= 10; ++r) {
    for (int c = 4; c <= 25; ++c) img.set(r, c, true);
  }
  img.set(13, 12, true);
  img.set(13, 13, true);
  const auto labeling = connected_components(img);
  const auto b = bottom_edge_border(img, band(4, 5, 7, 8, 10, 14), level(30, 24), labeling);
  for (const auto& p : b.points) {
    if (p.c == 12 || p.c == 13) EXPECT_LT(p.r, 13);
  }
}

TEST(BottomEdgeBorder, EmptyBandThrows) {
  BinaryImage img(10, 10);
  img.set(1, 1, true);
  const auto labeling = connected_components(img);
  EXPECT_THROW(bottom_edge_border(img, band(5, 6, 6, 6, 7, 8), level(10, 10), labeling),
               EmptyBand);
}

class FlexibleBorder : public ::testing::Test {
protected:
  // Rows of 40 columns; band above has its median zone at 3..5, band below
  // at 24..26, the valley at scanline 15.
  static constexpr int kWidth = 40;
  static constexpr int kHeight = 30;
  const RowBand above = band(0, 2, 3, 5, 6, 8);
  const RowBand below = band(21, 23, 24, 26, 27, 29);
  const ScanlineFrame frame = level(kWidth, kHeight);
};

TEST_F(FlexibleBorder, NoInkEqualsStraight) {
  const BinaryImage img(kWidth, kHeight);
  const auto flex = flexible_border(img, {15}, frame, above, below);
  EXPECT_TRUE(flex.events.empty());
  EXPECT_EQ(flex.border.points, straight_border({15}, frame, kWidth, kHeight).points);
}

TEST_F(FlexibleBorder, BlockOnTheValleyGoesAroundBelow) {
  BinaryImage img(kWidth, kHeight);
  for (int r = 14; r <= 16; ++r) {
    for (int c = 10; c <= 12; ++c) img.set(r, c, true);
  }
  const auto flex = flexible_border(img, {15}, frame, above, below);
  ASSERT_EQ(flex.events.size(), 1u);
  EXPECT_EQ(flex.events[0].resolution, Resolution::Exterior);
  EXPECT_EQ(flex.events[0].at, (Point{15, 9}));
  EXPECT_EQ(ink_on(img, flex.border), 0u);
  expect_tiled(flex.border);

  const auto ring = oracle::ring(img, oracle::component_of(img, {15, 10}));
  for (const auto& seg : flex.border.segments) {
    for (std::size_t i = seg.first; i <= seg.last; ++i) {
      const Point p = flex.border.points[i];
      if (seg.kind == SegmentKind::Traced) {
        EXPECT_TRUE(ring.count(p));
        EXPECT_GE(p.r, 15);
      } else {
        EXPECT_EQ(p.r, 15);
      }
    }
  }
  EXPECT_EQ(flex.border.points.front(), (Point{15, 0}));
  EXPECT_EQ(flex.border.points.back(), (Point{15, kWidth - 1}));
}

TEST_F(FlexibleBorder, StemJoiningBothMediansIsAmputated) {
  // Going below follows the lower word into its median zone; going above
  // climbs the stem into the upper median zone. Both walks abort.
  BinaryImage img(kWidth, kHeight);
  for (int r = 23; r <= 27; ++r) {
    for (int c = 5; c <= 30; ++c) img.set(r, c, true);
  }
  for (int r = 4; r < 23; ++r) {
    img.set(r, 18, true);
    img.set(r, 19, true);
  }
  const auto flex = flexible_border(img, {15}, frame, above, below);
  ASSERT_EQ(flex.events.size(), 1u);
  EXPECT_EQ(flex.events[0].resolution, Resolution::Amputated);
}

TEST_F(FlexibleBorder, AscenderBelowUpperMedianGoesInterior) {
  BinaryImage img(kWidth, kHeight);
  for (int r = 23; r <= 27; ++r) {
    for (int c = 5; c <= 30; ++c) img.set(r, c, true);
  }
  for (int r = 10; r < 23; ++r) {
    img.set(r, 18, true);
    img.set(r, 19, true);
  }
  const auto flex = flexible_border(img, {15}, frame, above, below);
  ASSERT_EQ(flex.events.size(), 1u);
  EXPECT_EQ(flex.events[0].resolution, Resolution::Interior);
  EXPECT_EQ(ink_on(img, flex.border), 0u);
  for (const auto& p : flex.border.points) EXPECT_LE(p.r, 15);
}

TEST_F(FlexibleBorder, DescenderGoesExterior) {
  BinaryImage img(kWidth, kHeight);
  for (int r = 2; r <= 6; ++r) {
    for (int c = 5; c <= 30; ++c) img.set(r, c, true);
  }
  for (int r = 7; r <= 19; ++r) {
    img.set(r, 18, true);
    img.set(r, 19, true);
  }
  const auto flex = flexible_border(img, {15}, frame, above, below);
  ASSERT_EQ(flex.events.size(), 1u);
  EXPECT_EQ(flex.events[0].resolution, Resolution::Exterior);
  EXPECT_EQ(ink_on(img, flex.border), 0u);
  int deepest = 0;
  for (const auto& p : flex.border.points) deepest = std::max(deepest, p.r);
  EXPECT_EQ(deepest, 20);
}

TEST_F(FlexibleBorder, FullHeightColumnIsAmputated) {
  BinaryImage img(kWidth, kHeight);
  for (int r = 0; r < kHeight; ++r) img.set(r, 20, true);
  const auto flex = flexible_border(img, {15}, frame, above, below);
  ASSERT_EQ(flex.events.size(), 1u);
  EXPECT_EQ(flex.events[0].resolution, Resolution::Amputated);
  EXPECT_EQ(flex.border.points, straight_border({15}, frame, kWidth, kHeight).points);
}

TEST_F(FlexibleBorder, InteriorFirstReversesTheOrder) {
  BinaryImage img(kWidth, kHeight);
  for (int r = 14; r <= 16; ++r) {
    for (int c = 10; c <= 12; ++c) img.set(r, c, true);
  }
  FlexParams params;
  params.exterior_first = false;
  const auto flex = flexible_border(img, {15}, frame, above, below, params);
  ASSERT_EQ(flex.events.size(), 1u);
  EXPECT_EQ(flex.events[0].resolution, Resolution::Interior);
  for (const auto& p : flex.border.points) EXPECT_LE(p.r, 15);
}

TEST_F(FlexibleBorder, ValleyInMedianZoneIsDegenerate) {
  const BinaryImage img(kWidth, kHeight);
  EXPECT_THROW(flexible_border(img, {4}, frame, above, below), DegenerateBands);
}

TEST_F(FlexibleBorder, SkewedStraightSegmentsFollowTheAngle) {
  const ScanlineFrame skewed(SkewAngle(std::atan(0.1)), kWidth, kHeight + 4);
  BinaryImage img(kWidth, kHeight + 4);
  const int s = 15;
  // Block astride the line at column 20.
  const int r0 = skewed.row_at(s, 20);
  for (int r = r0 - 1; r <= r0 + 1; ++r) {
    for (int c = 19; c <= 21; ++c) img.set(r, c, true);
  }
  const auto flex = flexible_border(img, {s}, skewed, above, below);
  ASSERT_EQ(flex.events.size(), 1u);
  EXPECT_EQ(ink_on(img, flex.border), 0u);
  for (const auto& seg : flex.border.segments) {
    if (seg.kind != SegmentKind::Straight) continue;
    for (std::size_t i = seg.first; i <= seg.last; ++i) {
      const Point p = flex.border.points[i];
      EXPECT_EQ(p.r, s - skewed.shift() + oracle::line_offset(p.c, 1, 10));
    }
  }
}


TEST_F(FlexibleBorder, DetourSteppingDiagonallyOverTheScanlineRejoinsIt) {
  // The line rises one row at column 16. Going over the block top at the
  // row above the line, the walk leaves the top corner diagonally downward
  // and lands one row below the line.
  const ScanlineFrame skewed(SkewAngle(std::atan(-0.1)), kWidth, kHeight);
  const int s = 15 + skewed.shift();
  const int r0 = skewed.row_at(s, 8);
  ASSERT_EQ(skewed.row_at(s, 15), r0);
  ASSERT_EQ(skewed.row_at(s, 16), r0 - 1);
  BinaryImage img(kWidth, kHeight);
  for (int r = r0; r <= r0 + 2; ++r) {
    for (int c = 8; c <= 15; ++c) img.set(r, c, true);
  }
  FlexParams params;
  params.exterior_first = false;
  const auto flex = flexible_border(img, {s}, skewed, above, below, params);
  ASSERT_EQ(flex.events.size(), 1u);
  EXPECT_EQ(flex.events[0].resolution, Resolution::Interior);
  EXPECT_EQ(ink_on(img, flex.border), 0u);
  expect_tiled(flex.border);
  const auto& pts = flex.border.points;
  const auto landing = std::find(pts.begin(), pts.end(), Point{r0, 16});
  ASSERT_NE(landing, pts.end());
  ASSERT_NE(landing + 1, pts.end());
  EXPECT_EQ(*(landing + 1), (Point{r0 - 1, 16}));
  for (const auto& seg : flex.border.segments) {
    for (std::size_t i = seg.first; i <= seg.last; ++i) {
      const Point p = pts[i];
      if (seg.kind == SegmentKind::Traced) {
        EXPECT_LE(p.r, r0);
      } else {
        EXPECT_EQ(skewed.scanline_of(p), s);
      }
    }
  }
}

}  // namespace
}  // namespace flexrow
