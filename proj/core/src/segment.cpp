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

#include "flexrow/segment.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <string>

#include "flexrow/contour.hpp"
#include "flexrow/errors.hpp"

namespace flexrow {

ComponentLabeling connected_components(const BinaryImage& img) {
  ComponentLabeling out;
  out.width = img.width();
  out.height = img.height();
  out.labels.assign(img.bits().size(), 0);
  std::vector<Point> stack;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (!img.ink(r, c) || out.at(r, c) != 0) continue;
      const int label = ++out.count;
      out.labels[static_cast<std::size_t>(r) * out.width + c] = label;
      stack.push_back({r, c});
      while (!stack.empty()) {
        const Point p = stack.back();
        stack.pop_back();
        for (const auto& d : kSteps) {
          const Point q{p.r + d.r, p.c + d.c};
          if (!img.contains(q) || !img.ink(q)) continue;
          auto& slot = out.labels[static_cast<std::size_t>(q.r) * out.width + q.c];
          if (slot == 0) {
            slot = label;
            stack.push_back(q);
          }
        }
      }
    }
  }
  return out;
}

namespace {

enum Side : std::uint8_t { kUnreached = 0, kAbove = 1, kBelow = 2 };

constexpr std::array<Point, 4> kFour{{{0, 1}, {1, 0}, {0, -1}, {-1, 0}}};

class Grid {
public:
  Grid(int width, int height) : width_(width), height_(height) {}
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * width_ + c;
  }
  bool contains(int r, int c) const {
    return r >= 0 && c >= 0 && r < height_ && c < width_;
  }
  int width() const { return width_; }
  int height() const { return height_; }

private:
  int width_;
  int height_;
};

// Which side of one border every pixel lies on, by 4-connected fill from
// the image edges that border separates.
std::vector<std::uint8_t> border_sides(const Grid& grid,
                                       const BorderPolyline& border) {
  std::vector<std::uint8_t> wall(static_cast<std::size_t>(grid.width()) * grid.height(), 0);
  for (const auto& p : border.points) wall[grid.index(p.r, p.c)] = 1;

  std::vector<std::uint8_t> side(wall.size(), kUnreached);
  std::vector<Point> stack;
  const auto seed = [&](int r, int c, Side s) {
    const auto i = grid.index(r, c);
    if (!wall[i] && side[i] == kUnreached) {
      side[i] = s;
      stack.push_back({r, c});
    }
  };
  const auto flood = [&](Side s) {
    while (!stack.empty()) {
      const Point p = stack.back();
      stack.pop_back();
      for (const auto& d : kFour) {
        const int r = p.r + d.r;
        const int c = p.c + d.c;
        if (grid.contains(r, c)) seed(r, c, s);
      }
    }
  };

  const Point first = border.points.front();
  const Point last = border.points.back();
  for (int c = 0; c < grid.width(); ++c) seed(0, c, kAbove);
  for (int r = 0; r < first.r; ++r) seed(r, 0, kAbove);
  for (int r = 0; r < last.r; ++r) seed(r, grid.width() - 1, kAbove);
  flood(kAbove);
  for (int c = 0; c < grid.width(); ++c) seed(grid.height() - 1, c, kBelow);
  for (int r = first.r + 1; r < grid.height(); ++r) seed(r, 0, kBelow);
  for (int r = last.r + 1; r < grid.height(); ++r) seed(r, grid.width() - 1, kBelow);
  flood(kBelow);
  return side;
}

// Side of a sealed pocket: the nearest reached pixel straight up, else
// straight down.
Side pocket_side(const Grid& grid, const std::vector<std::uint8_t>& side, Point p) {
  for (int r = p.r - 1; r >= 0; --r) {
    const auto s = side[grid.index(r, p.c)];
    if (s != kUnreached) return static_cast<Side>(s);
  }
  for (int r = p.r + 1; r < grid.height(); ++r) {
    const auto s = side[grid.index(r, p.c)];
    if (s != kUnreached) return static_cast<Side>(s);
  }
  return kAbove;
}

bool is_endpoint(const BorderPolyline& b, Point p) {
  return p == b.points.front() || p == b.points.back();
}

void check_borders(const Grid& grid, std::span<const BorderPolyline> borders) {
  std::vector<int> owner(static_cast<std::size_t>(grid.width()) * grid.height(), -1);
  std::vector<std::vector<int>> top(borders.size(),
                                    std::vector<int>(grid.width(), std::numeric_limits<int>::max()));
  for (std::size_t k = 0; k < borders.size(); ++k) {
    const auto& border = borders[k];
    if (border.points.empty()) {
      throw std::invalid_argument("cut_rows: empty border");
    }
    for (const auto& p : border.points) {
      if (!grid.contains(p.r, p.c)) {
        throw OutOfBounds("cut_rows: border point outside raster");
      }
      top[k][p.c] = std::min(top[k][p.c], p.r);
      auto& o = owner[grid.index(p.r, p.c)];
      if (o < 0 || o == static_cast<int>(k)) {
        o = static_cast<int>(k);
      } else if (!is_endpoint(border, p) && !is_endpoint(borders[o], p)) {
        throw BordersCross("cut_rows: borders " + std::to_string(o) + " and " +
                           std::to_string(k) + " share pixel (" +
                           std::to_string(p.r) + "," + std::to_string(p.c) + ")");
      }
    }
  }
  for (std::size_t k = 0; k + 1 < borders.size(); ++k) {
    for (int c = 0; c < grid.width(); ++c) {
      const int a = top[k][c];
      const int b = top[k + 1][c];
      if (a != std::numeric_limits<int>::max() &&
          b != std::numeric_limits<int>::max() && a >= b) {
        throw BordersCross("cut_rows: borders " + std::to_string(k) + " and " +
                           std::to_string(k + 1) + " swap order at column " +
                           std::to_string(c));
      }
    }
  }
}

}  // namespace

Segmentation cut_rows(const BinaryImage& img,
                      std::span<const BorderPolyline> borders) {
  const Grid grid(img.width(), img.height());
  check_borders(grid, borders);

  Segmentation seg;
  seg.width = img.width();
  seg.height = img.height();
  seg.row_count = static_cast<int>(borders.size()) + 1;
  constexpr int kUnassigned = std::numeric_limits<int>::min();
  seg.assignment.assign(img.bits().size(), kUnassigned);
  for (const auto& border : borders) {
    for (const auto& p : border.points) seg.assignment[grid.index(p.r, p.c)] = kBarrier;
  }

  std::vector<std::vector<std::uint8_t>> sides;
  sides.reserve(borders.size());
  for (const auto& border : borders) sides.push_back(border_sides(grid, border));

  std::vector<Point> stack;
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      if (seg.assignment[grid.index(r, c)] != kUnassigned) continue;
      // Raster order reaches each region first at its topmost-leftmost pixel.
      int row = 0;
      for (std::size_t k = 0; k < borders.size(); ++k) {
        auto s = static_cast<Side>(sides[k][grid.index(r, c)]);
        if (s == kUnreached) s = pocket_side(grid, sides[k], {r, c});
        if (s == kBelow) ++row;
      }
      seg.assignment[grid.index(r, c)] = row;
      stack.push_back({r, c});
      while (!stack.empty()) {
        const Point p = stack.back();
        stack.pop_back();
        for (const auto& d : kFour) {
          const int rr = p.r + d.r;
          const int cc = p.c + d.c;
          if (!grid.contains(rr, cc)) continue;
          auto& slot = seg.assignment[grid.index(rr, cc)];
          if (slot == kUnassigned) {
            slot = row;
            stack.push_back({rr, cc});
          }
        }
      }
    }
  }
  return seg;
}

BinaryImage extract_row_image(const BinaryImage& img, const Segmentation& seg,
                              int k) {
  if (k < 0 || k >= seg.row_count) {
    throw BadRowIndex("extract_row_image: row " + std::to_string(k) +
                      " not in 0.." + std::to_string(seg.row_count - 1));
  }
  int top = img.height(), bottom = -1, left = img.width(), right = -1;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (img.ink(r, c) && seg.at(r, c) == k) {
        top = std::min(top, r);
        bottom = std::max(bottom, r);
        left = std::min(left, c);
        right = std::max(right, c);
      }
    }
  }
  if (bottom < 0) return BinaryImage(1, 1);
  BinaryImage crop(right - left + 1, bottom - top + 1);
  for (int r = top; r <= bottom; ++r) {
    for (int c = left; c <= right; ++c) {
      if (img.ink(r, c) && seg.at(r, c) == k) crop.set(r - top, c - left, true);
    }
  }
  return crop;
}

std::size_t barrier_ink(const BinaryImage& img, const Segmentation& seg) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < seg.assignment.size(); ++i) {
    if (seg.assignment[i] == kBarrier && img.bits()[i]) ++n;
  }
  return n;
}

}  // namespace flexrow
