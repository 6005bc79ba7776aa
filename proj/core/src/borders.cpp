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

#include "flexrow/borders.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "flexrow/errors.hpp"

namespace flexrow {

std::string_view to_string(SegmentKind kind) {
  return kind == SegmentKind::Straight ? "STRAIGHT" : "TRACED";
}

std::string_view to_string(Resolution resolution) {
  switch (resolution) {
    case Resolution::Exterior: return "EXTERIOR";
    case Resolution::Interior: return "INTERIOR";
    case Resolution::Amputated: return "AMPUTATED";
  }
  return "?";
}

BorderPolyline straight_border(const Valley& valley, const ScanlineFrame& frame,
                               int width, int height) {
  BorderPolyline border;
  border.angle = frame.angle();
  border.points.reserve(width);
  for (int c = 0; c < width; ++c) {
    const int r = frame.row_at(valley.scanline, c);
    if (r < 0 || r >= height) {
      throw OutOfRaster("straight_border: scanline " +
                        std::to_string(valley.scanline) + " leaves the raster at column " +
                        std::to_string(c));
    }
    border.points.push_back({r, c});
  }
  border.segments.push_back({0, border.points.size() - 1, SegmentKind::Straight});
  return border;
}

std::vector<Point> bresenham(Point a, Point b) {
  std::vector<Point> out;
  const int dc = std::abs(b.c - a.c);
  const int dr = -std::abs(b.r - a.r);
  const int sc = a.c < b.c ? 1 : -1;
  const int sr = a.r < b.r ? 1 : -1;
  int err = dc + dr;
  Point p = a;
  for (;;) {
    out.push_back(p);
    if (p == b) break;
    const int e2 = 2 * err;
    if (e2 >= dr) {
      err += dr;
      p.c += sc;
    }
    if (e2 <= dc) {
      err += dc;
      p.r += sr;
    }
  }
  return out;
}

namespace {

double distance_to_segment(Point p, Point a, Point b) {
  const double vx = b.c - a.c;
  const double vy = b.r - a.r;
  const double wx = p.c - a.c;
  const double wy = p.r - a.r;
  const double len2 = vx * vx + vy * vy;
  if (len2 == 0.0) return std::hypot(wx, wy);
  const double t = std::clamp((wx * vx + wy * vy) / len2, 0.0, 1.0);
  return std::hypot(wx - t * vx, wy - t * vy);
}

}  // namespace

namespace {

using SpanCheck = std::function<bool(std::size_t, std::size_t)>;

std::vector<Point> simplify(std::span<const Point> path, double epsilon,
                            const SpanCheck& acceptable) {
  if (path.size() < 2) return {path.begin(), path.end()};
  std::vector<char> keep(path.size(), 0);
  keep.front() = keep.back() = 1;
  std::vector<std::pair<std::size_t, std::size_t>> todo{{0, path.size() - 1}};
  while (!todo.empty()) {
    const auto [lo, hi] = todo.back();
    todo.pop_back();
    if (hi - lo < 2) continue;
    double worst = -1.0;
    std::size_t split = lo + 1;
    for (std::size_t i = lo + 1; i < hi; ++i) {
      const double d = distance_to_segment(path[i], path[lo], path[hi]);
      if (d > worst) {
        worst = d;
        split = i;
      }
    }
    if (worst > epsilon || (acceptable && !acceptable(lo, hi))) {
      keep[split] = 1;
      todo.emplace_back(lo, split);
      todo.emplace_back(split, hi);
    }
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (keep[i]) out.push_back(path[i]);
  }
  return out;
}

PixelPath redraw(std::span<const Point> vertices) {
  PixelPath out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const auto piece = bresenham(vertices[i], vertices[i + 1]);
    out.insert(out.end(), piece.begin() + (i == 0 ? 0 : 1), piece.end());
  }
  if (vertices.size() == 1) out.push_back(vertices.front());
  return out;
}

}  // namespace

std::vector<Point> douglas_peucker(std::span<const Point> path, double epsilon) {
  if (path.size() < 2) {
    throw std::invalid_argument("douglas_peucker: need at least two points");
  }
  return simplify(path, epsilon, {});
}

PixelPath relax_polyline(std::span<const Point> path, double epsilon) {
  return redraw(douglas_peucker(path, epsilon));
}

PixelPath relax_polyline(std::span<const Point> path, double epsilon,
                         const BinaryImage& guard) {
  if (path.size() < 2) {
    throw std::invalid_argument("relax_polyline: need at least two points");
  }
  const auto acceptable = [&](std::size_t lo, std::size_t hi) {
    std::vector<Point> covered;
    for (std::size_t i = lo; i <= hi; ++i) {
      if (guard.ink_or_background(path[i])) covered.push_back(path[i]);
    }
    std::sort(covered.begin(), covered.end());
    for (const auto& q : bresenham(path[lo], path[hi])) {
      if (guard.ink_or_background(q) &&
          !std::binary_search(covered.begin(), covered.end(), q)) {
        return false;
      }
    }
    return true;
  };
  return redraw(simplify(path, epsilon, acceptable));
}

BorderPolyline bottom_edge_border(const BinaryImage& img, const RowBand& band,
                                  const ScanlineFrame& frame,
                                  const ComponentLabeling& labeling,
                                  const BottomEdgeParams& params) {
  if (labeling.width != img.width() || labeling.height != img.height()) {
    throw std::invalid_argument("bottom_edge_border: labeling size mismatch");
  }
  if (params.epsilon < 0.0) {
    throw std::invalid_argument("bottom_edge_border: epsilon must be >= 0");
  }
  const int width = img.width();
  const int height = img.height();

  std::vector<char> base(labeling.count + 1, 0);
  std::vector<int> lowest(labeling.count + 1, -1);
  std::vector<int> highest(labeling.count + 1, -1);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const int label = labeling.at(r, c);
      if (label == 0) continue;
      const int s = frame.scanline_of({r, c});
      if (band.in_core(s)) base[label] = 1;
      if (highest[label] < 0 || s < highest[label]) highest[label] = s;
      lowest[label] = std::max(lowest[label], s);
    }
  }
  if (!params.ignore_detached) {
    for (int label = 1; label <= labeling.count; ++label) {
      if (highest[label] > band.core_bottom && lowest[label] <= band.bottom) {
        base[label] = 1;
      }
    }
  }
  if (std::none_of(base.begin(), base.end(), [](char b) { return b != 0; })) {
    throw EmptyBand("bottom_edge_border: no component touches the core zone");
  }

  std::vector<int> level(width, -1);
  for (int c = 0; c < width; ++c) {
    for (int r = height - 1; r >= 0; --r) {
      const int label = labeling.at(r, c);
      if (label != 0 && base[label]) {
        level[c] = std::min(r + 1, height - 1);
        break;
      }
    }
  }

  // Straight links across columns without word ink; the image edges carry
  // the nearest level outward.
  std::vector<int> known;
  for (int c = 0; c < width; ++c) {
    if (level[c] >= 0) known.push_back(c);
  }
  for (int c = 0; c < known.front(); ++c) level[c] = level[known.front()];
  for (int c = known.back() + 1; c < width; ++c) level[c] = level[known.back()];
  for (std::size_t k = 0; k + 1 < known.size(); ++k) {
    const int a = known[k];
    const int b = known[k + 1];
    for (int c = a + 1; c < b; ++c) {
      const double t = static_cast<double>(c - a) / (b - a);
      level[c] = static_cast<int>(
          std::lround(level[a] + t * (level[b] - level[a])));
    }
  }

  // Vertical steps run down the shallower of the two columns, which is
  // background below its own base line.
  PixelPath raw;
  raw.push_back({level[0], 0});
  for (int c = 0; c + 1 < width; ++c) {
    if (level[c] < level[c + 1]) {
      for (int r = level[c] + 1; r <= level[c + 1]; ++r) raw.push_back({r, c});
      raw.push_back({level[c + 1], c + 1});
    } else {
      for (int r = level[c]; r >= level[c + 1]; --r) raw.push_back({r, c + 1});
    }
  }

  BorderPolyline border;
  border.angle = frame.angle();
  border.points = raw.size() >= 2 ? relax_polyline(raw, params.epsilon, img) : raw;
  border.segments.push_back({0, border.points.size() - 1, SegmentKind::Traced});
  return border;
}

namespace {

class FrontierBuilder {
public:
  FrontierBuilder(const BinaryImage& img, const ScanlineFrame& frame,
                  const RowBand& above, const RowBand& below,
                  const FlexParams& params)
      : img_(img), frame_(frame), above_(above), below_(below), params_(params),
        budget_(params.max_detour_steps > 0
                    ? params.max_detour_steps
                    : 4 * (img.width() + img.height())) {}

  FlexResult run(int valley_scanline) {
    level_ = valley_scanline;
    const Point start = on_line(level_, 0);
    points_.push_back(start);
    bool cutting = img_.ink(start);

    while (points_.back().c < img_.width() - 1) {
      const Point p = points_.back();
      const Point next = on_line(level_, p.c + 1);
      const bool blocked = img_.ink(next) || pinches_ink(img_, p, next);
      if (!blocked) {
        cutting = false;
        points_.push_back(next);
        continue;
      }
      if (cutting || img_.ink(p)) {
        points_.push_back(next);
        cutting = img_.ink(next);
        continue;
      }
      if (!detour(p, next)) {
        points_.push_back(next);
        cutting = img_.ink(next);
      }
    }
    close(straight_first_, points_.size() - 1, SegmentKind::Straight);

    FlexResult result;
    result.border.points = std::move(points_);
    result.border.segments = std::move(segments_);
    result.border.angle = frame_.angle();
    result.events = std::move(events_);
    return result;
  }

private:
  Point on_line(int scanline, int c) const {
    const Point p{frame_.row_at(scanline, c), c};
    if (p.r < 0 || p.r >= img_.height()) {
      throw OutOfRaster("flexible_border: scanline " + std::to_string(scanline) +
                        " leaves the raster at column " + std::to_string(c));
    }
    return p;
  }

  bool in_median_zone(Point p) const {
    const int s = frame_.scanline_of(p);
    return above_.in_median(s) || below_.in_median(s);
  }

  // A straight segment may start at q if the next few steps along the row
  // angle stay on background inside the raster.
  bool can_resume(Point q) const {
    const int scanline = frame_.scanline_of(q);
    const int steps = std::min(params_.resume_lookahead, img_.width() - 1 - q.c);
    Point prev = q;
    for (int j = 1; j <= steps; ++j) {
      const Point p{frame_.row_at(scanline, q.c + j), q.c + j};
      if (p.r < 0 || p.r >= img_.height() || img_.ink(p) ||
          pinches_ink(img_, prev, p)) {
        return false;
      }
      prev = p;
    }
    return true;
  }

  bool detour(Point at, Point blocked) {
    IntersectionEvent event{at, Resolution::Amputated, 0};
    // A pinch step has background ahead; its horizontal corner is the ink.
    const Point wall = img_.ink(blocked) ? blocked : Point{at.r, blocked.c};
    const Heading heading = heading_between(at, blocked);

    std::array<WallSense, 2> order{WallSense::KeepInkOnLeft,
                                   WallSense::KeepInkOnRight};
    if (!params_.exterior_first) std::swap(order[0], order[1]);

    for (const WallSense sense : order) {
      TraceRequest request;
      request.start = at;
      request.heading = heading;
      request.sense = sense;
      request.max_steps = budget_;
      request.wall = wall;
      request.committed = points_;
      std::optional<Point> snap;
      request.stop = [&](Point q) {
        if (in_median_zone(q)) return true;
        if (q.c <= at.c) return false;
        const int s = frame_.scanline_of(q);
        if (s == level_) return can_resume(q);
        // A diagonal step can jump over the scanline; accept a walk that
        // passes one row off it and step vertically onto it.
        if (std::abs(s - level_) != 1) return false;
        const Point l{frame_.row_at(level_, q.c), q.c};
        if (l.r < 0 || l.r >= img_.height() || img_.ink(l) || !can_resume(l)) {
          return false;
        }
        snap = l;
        return true;
      };
      PixelPath path;
      try {
        path = trace_wall(img_, request);
      } catch (const StepBudgetExceeded&) {
        continue;
      }
      if (in_median_zone(path.back())) continue;
      if (snap) path.push_back(*snap);

      close(straight_first_, points_.size() - 1, SegmentKind::Straight);
      const std::size_t first = points_.size();
      points_.insert(points_.end(), path.begin() + 1, path.end());
      close(first, points_.size() - 1, SegmentKind::Traced);
      straight_first_ = points_.size();

      event.resolution = sense == WallSense::KeepInkOnLeft ? Resolution::Exterior
                                                           : Resolution::Interior;
      event.detour_len = path.size() - 1;
      events_.push_back(event);
      return true;
    }
    events_.push_back(event);
    return false;
  }

  void close(std::size_t first, std::size_t last, SegmentKind kind) {
    if (first > last || last >= points_.size()) return;
    if (!segments_.empty() && segments_.back().kind == kind &&
        segments_.back().last + 1 == first) {
      segments_.back().last = last;
    } else {
      segments_.push_back({first, last, kind});
    }
  }

  const BinaryImage& img_;
  const ScanlineFrame& frame_;
  const RowBand& above_;
  const RowBand& below_;
  const FlexParams& params_;
  const int budget_;

  int level_ = 0;
  std::size_t straight_first_ = 0;
  std::vector<Point> points_;
  std::vector<BorderSegment> segments_;
  std::vector<IntersectionEvent> events_;
};

}  // namespace

FlexResult flexible_border(const BinaryImage& img, const Valley& valley,
                           const ScanlineFrame& frame, const RowBand& band_above,
                           const RowBand& band_below, const FlexParams& params) {
  if (params.resume_lookahead < 1) {
    throw std::invalid_argument("flexible_border: resume_lookahead must be >= 1");
  }
  const int s = valley.scanline;
  if (band_above.in_median(s) || band_below.in_median(s) ||
      band_above.median_bottom >= band_below.median_top) {
    throw DegenerateBands("flexible_border: median zones reach valley scanline " +
                          std::to_string(s));
  }
  return FrontierBuilder(img, frame, band_above, band_below, params).run(s);
}

std::vector<PixelPath> border_paths(std::span<const BorderPolyline> borders) {
  std::vector<PixelPath> out;
  out.reserve(borders.size());
  for (const auto& b : borders) out.push_back(b.points);
  return out;
}

}  // namespace flexrow
