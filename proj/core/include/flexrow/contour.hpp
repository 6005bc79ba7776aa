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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "flexrow/labeling.hpp"
#include "flexrow/raster.hpp"

namespace flexrow {

// The eight unit steps, numbered clockwise on screen starting east.
enum class Heading : std::uint8_t { E, SE, S, SW, W, NW, N, NE };

inline constexpr std::array<Point, 8> kSteps{{
    {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}}};

constexpr Point step(Point p, Heading h) {
  const auto d = kSteps[static_cast<int>(h)];
  return {p.r + d.r, p.c + d.c};
}

constexpr Heading rotate(Heading h, int eighths) {
  return static_cast<Heading>(((static_cast<int>(h) + eighths) % 8 + 8) % 8);
}

// Heading from a to an 8-neighbor b.
Heading heading_between(Point a, Point b);

enum class WallSense : std::uint8_t { KeepInkOnLeft, KeepInkOnRight };

struct TraceRequest {
  Point start;
  Heading heading = Heading::E;
  WallSense sense = WallSense::KeepInkOnLeft;
  // Evaluated on every point after the start; the walk ends successfully on
  // the first point for which it returns true. Empty means "never".
  std::function<bool(Point)> stop;
  int max_steps = 0;
  // Ink pixel to put the hand on. When absent, the first ink neighbor found
  // rotating from the heading toward the hand side is used.
  std::optional<Point> wall;
  // Points already drawn by the caller. The walk never forms a diagonal
  // pair with them (or with itself) across two diagonal ink pixels.
  std::span<const Point> committed;
};

// Hand-on-the-wall walk over background pixels around one 8-connected ink
// component. Every emitted point is background and 8-adjacent to that
// component; the start is the first point of the returned path.
//
// Throws DetachedStart when the start is not a background pixel touching
// ink, and StepBudgetExceeded once the path holds max_steps points without
// the stop predicate firing (or when the walker is boxed in).
PixelPath trace_wall(const BinaryImage& img, const TraceRequest& request);

// True when a and b are diagonal neighbors whose two shared 4-neighbors are
// both ink. A barrier containing both a and b would cut that ink link.
bool pinches_ink(const BinaryImage& img, Point a, Point b);

// Background pixels 8-adjacent to component `label`, by exhaustive scan.
std::vector<Point> boundary_oracle(const BinaryImage& img, int label,
                                   const ComponentLabeling& labeling);

}  // namespace flexrow
