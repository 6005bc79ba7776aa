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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "flexrow/analysis.hpp"
#include "flexrow/contour.hpp"
#include "flexrow/labeling.hpp"
#include "flexrow/raster.hpp"

namespace flexrow {

enum class SegmentKind : std::uint8_t { Straight, Traced };

// Inclusive index range into BorderPolyline::points.
struct BorderSegment {
  std::size_t first = 0;
  std::size_t last = 0;
  SegmentKind kind = SegmentKind::Straight;

  friend bool operator==(const BorderSegment&, const BorderSegment&) = default;
};

// One inter-row frontier, running from column 0 to column width-1.
// Segments tile the point sequence in order.
struct BorderPolyline {
  std::vector<Point> points;
  std::vector<BorderSegment> segments;
  SkewAngle angle;

  friend bool operator==(const BorderPolyline&, const BorderPolyline&) = default;
};

enum class Resolution : std::uint8_t { Exterior, Interior, Amputated };

std::string_view to_string(SegmentKind kind);
std::string_view to_string(Resolution resolution);

struct IntersectionEvent {
  Point at;  // last background pixel before the straight advance met ink
  Resolution resolution = Resolution::Amputated;
  std::size_t detour_len = 0;  // traced points appended, 0 when amputated
};

struct FlexParams {
  int resume_lookahead = 3;
  // Per detour attempt; 0 selects 4 * (width + height).
  int max_detour_steps = 0;
  // Try the detour that moves away from the row above first.
  bool exterior_first = true;
};

struct FlexResult {
  BorderPolyline border;
  std::vector<IntersectionEvent> events;
};

// Discrete line through the valley scanline at the frame's angle.
// Throws OutOfRaster if any column maps outside the image rows.
BorderPolyline straight_border(const Valley& valley, const ScanlineFrame& frame,
                               int width, int height);

// Douglas-Peucker simplification with tolerance epsilon, redrawn as a
// connected pixel path by Bresenham lines between the kept vertices.
PixelPath relax_polyline(std::span<const Point> path, double epsilon);

// As above, but a span is only simplified when its redrawn line meets no
// ink of `guard` beyond the ink the original span already covers.
PixelPath relax_polyline(std::span<const Point> path, double epsilon,
                         const BinaryImage& guard);

// Kept vertices only, before redrawing.
std::vector<Point> douglas_peucker(std::span<const Point> path, double epsilon);

// 8-connected Bresenham line from a to b, both endpoints included.
std::vector<Point> bresenham(Point a, Point b);

struct BottomEdgeParams {
  double epsilon = 2.0;
  // When false, components below the core but inside the band extent also
  // shape the border (the classical method ignores them).
  bool ignore_detached = true;
};

// Border hugging the base of the words of `band`: one row below the lowest
// ink of every component touching the band's core zone, straight links
// across columns without such ink, then relaxed without crossing any ink
// the unrelaxed path avoids.
// Throws EmptyBand when no component touches the core zone.
BorderPolyline bottom_edge_border(const BinaryImage& img, const RowBand& band,
                                  const ScanlineFrame& frame,
                                  const ComponentLabeling& labeling,
                                  const BottomEdgeParams& params = {});

// Straight segments at the row angle, joined by wall-following detours
// around every stroke met on the way. Detours first go around the side away
// from band_above, falling back to the other side if the walk reaches a
// median zone, and cut straight through the obstacle when both sides fail.
// A detour ends back on the valley scanline, so every straight segment lies
// on it.
//
// Throws OutOfRaster, or DegenerateBands when a median zone reaches the
// valley scanline.
FlexResult flexible_border(const BinaryImage& img, const Valley& valley,
                           const ScanlineFrame& frame, const RowBand& band_above,
                           const RowBand& band_below,
                           const FlexParams& params = {});

std::vector<PixelPath> border_paths(std::span<const BorderPolyline> borders);

}  // namespace flexrow
