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

#include "flexrow/contour.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "flexrow/errors.hpp"

namespace flexrow {

Heading heading_between(Point a, Point b) {
  const Point d{b.r - a.r, b.c - a.c};
  for (int i = 0; i < 8; ++i) {
    if (kSteps[i] == d) return static_cast<Heading>(i);
  }
  throw std::invalid_argument("heading_between: points are not 8-neighbors");
}

bool pinches_ink(const BinaryImage& img, Point a, Point b) {
  if (std::abs(a.r - b.r) != 1 || std::abs(a.c - b.c) != 1) return false;
  return img.ink_or_background({a.r, b.c}) && img.ink_or_background({b.r, a.c});
}

namespace {

std::uint64_t key(Point p) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.r)) << 32) |
         static_cast<std::uint32_t>(p.c);
}

std::string describe(Point p) {
  return "(" + std::to_string(p.r) + "," + std::to_string(p.c) + ")";
}

// Ink pixels 8-connected to seed.
std::vector<std::uint8_t> component_mask(const BinaryImage& img, Point seed) {
  std::vector<std::uint8_t> mask(img.bits().size(), 0);
  const auto idx = [&](Point p) {
    return static_cast<std::size_t>(p.r) * img.width() + p.c;
  };
  std::vector<Point> stack{seed};
  mask[idx(seed)] = 1;
  while (!stack.empty()) {
    const Point p = stack.back();
    stack.pop_back();
    for (const auto& d : kSteps) {
      const Point q{p.r + d.r, p.c + d.c};
      if (img.contains(q) && img.ink(q) && !mask[idx(q)]) {
        mask[idx(q)] = 1;
        stack.push_back(q);
      }
    }
  }
  return mask;
}

class Walker {
public:
  Walker(const BinaryImage& img, Point wall, std::span<const Point> committed)
      : img_(img), wall_(component_mask(img, wall)) {
    for (const auto& p : committed) occupied_.insert(key(p));
  }

  void occupy(Point p) { occupied_.insert(key(p)); }

  bool touches_wall(Point q) const {
    for (const auto& d : kSteps) {
      const Point n{q.r + d.r, q.c + d.c};
      if (img_.contains(n) &&
          wall_[static_cast<std::size_t>(n.r) * img_.width() + n.c]) {
        return true;
      }
    }
    return false;
  }

  bool walkable(Point from, Point q) const {
    if (!img_.contains(q) || img_.ink(q) || !touches_wall(q)) return false;
    for (const Heading h : {Heading::SE, Heading::SW, Heading::NW, Heading::NE}) {
      const Point partner = step(q, h);
      if ((partner == from || occupied_.contains(key(partner))) &&
          pinches_ink(img_, q, partner)) {
        return false;
      }
    }
    return true;
  }

private:
  const BinaryImage& img_;
  std::vector<std::uint8_t> wall_;
  std::unordered_set<std::uint64_t> occupied_;
};

}  // namespace

PixelPath trace_wall(const BinaryImage& img, const TraceRequest& request) {
  if (request.max_steps <= 0) {
    throw std::invalid_argument("trace_wall: max_steps must be positive");
  }
  const Point start = request.start;
  if (!img.contains(start) || img.ink(start)) {
    throw DetachedStart("trace_wall: start " + describe(start) +
                        " is not a background pixel");
  }
  // The scan rotates away from the wall: clockwise when ink is on the left.
  const int spin = request.sense == WallSense::KeepInkOnLeft ? 1 : -1;

  Point wall;
  if (request.wall) {
    wall = *request.wall;
    const bool neighbor = std::abs(wall.r - start.r) <= 1 &&
                          std::abs(wall.c - start.c) <= 1 && !(wall == start);
    if (!neighbor || !img.ink_or_background(wall)) {
      throw DetachedStart("trace_wall: wall " + describe(wall) +
                          " is not an ink neighbor of " + describe(start));
    }
  } else {
    bool found = false;
    for (int k = 0; k < 8 && !found; ++k) {
      const Point q = step(start, rotate(request.heading, -spin * k));
      if (img.ink_or_background(q)) {
        wall = q;
        found = true;
      }
    }
    if (!found) {
      throw DetachedStart("trace_wall: start " + describe(start) +
                          " does not touch ink");
    }
  }

  Walker walker(img, wall, request.committed);
  Heading wall_dir = heading_between(start, wall);
  PixelPath path{start};
  walker.occupy(start);
  Point p = start;
  for (;;) {
    if (static_cast<int>(path.size()) >= request.max_steps) {
      throw StepBudgetExceeded("trace_wall: step budget of " +
                                   std::to_string(request.max_steps) +
                                   " exhausted",
                               std::move(path));
    }
    bool moved = false;
    for (int k = 1; k < 8; ++k) {
      const Point q = step(p, rotate(wall_dir, spin * k));
      if (!walker.walkable(p, q)) continue;
      // The last blocked pixel of the sweep is a ring neighbor of q and
      // becomes the new hand position.
      const Point blocked = step(p, rotate(wall_dir, spin * (k - 1)));
      wall_dir = heading_between(q, blocked);
      p = q;
      moved = true;
      break;
    }
    if (!moved) {
      throw StepBudgetExceeded("trace_wall: walker boxed in at " + describe(p),
                               std::move(path));
    }
    path.push_back(p);
    walker.occupy(p);
    if (request.stop && request.stop(p)) return path;
  }
}

std::vector<Point> boundary_oracle(const BinaryImage& img, int label,
                                   const ComponentLabeling& labeling) {
  if (labeling.width != img.width() || labeling.height != img.height()) {
    throw std::invalid_argument("boundary_oracle: labeling size mismatch");
  }
  if (label < 1 || label > labeling.count) {
    throw UnknownLabel("boundary_oracle: no component " + std::to_string(label));
  }
  std::vector<Point> ring;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (img.ink(r, c)) continue;
      for (const auto& d : kSteps) {
        const Point n{r + d.r, c + d.c};
        if (img.contains(n) && labeling.at(n) == label) {
          ring.push_back({r, c});
          break;
        }
      }
    }
  }
  return ring;
}

}  // namespace flexrow
