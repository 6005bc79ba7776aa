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
#include <set>

#include "flexrow/contour.hpp"
#include "flexrow/errors.hpp"
#include "flexrow/labeling.hpp"
#include "oracles.hpp"

namespace flexrow {
namespace {

bool neighbors(Point a, Point b) {
  return a != b && std::abs(a.r - b.r) <= 1 && std::abs(a.c - b.c) <= 1;
}

TEST(Heading, StepsAndRotation) {
  EXPECT_EQ(step({2, 2}, Heading::E), (Point{2, 3}));
  EXPECT_EQ(step({2, 2}, Heading::N), (Point{1, 2}));
  EXPECT_EQ(rotate(Heading::E, 2), Heading::S);
  EXPECT_EQ(rotate(Heading::E, -1), Heading::NE);
  EXPECT_EQ(heading_between({2, 2}, {3, 1}), Heading::SW);
  EXPECT_THROW(heading_between({2, 2}, {4, 2}), std::invalid_argument);
}

TEST(TraceWall, DetourAroundSinglePixel) {
  const auto img = oracle::from_rows({".....", ".....", "..#..", ".....", "....."});
  const auto ring = oracle::ring(img, {{2, 2}});
  for (const auto sense : {WallSense::KeepInkOnLeft, WallSense::KeepInkOnRight}) {
    TraceRequest req;
    req.start = {2, 1};
    req.heading = Heading::E;
    req.sense = sense;
    req.max_steps = 50;
    req.stop = [](Point q) { return q == Point{2, 3}; };
    const auto path = trace_wall(img, req);
    ASSERT_GE(path.size(), 3u);
    EXPECT_EQ(path.front(), (Point{2, 1}));
    EXPECT_EQ(path.back(), (Point{2, 3}));
    for (std::size_t i = 0; i < path.size(); ++i) {
      EXPECT_TRUE(ring.count(path[i])) << path[i].r << "," << path[i].c;
      if (i > 0) EXPECT_TRUE(neighbors(path[i - 1], path[i]));
    }
    // Below the pixel when the ink is on the left, above it otherwise.
    const int side = sense == WallSense::KeepInkOnLeft ? 3 : 1;
    EXPECT_TRUE(std::any_of(path.begin(), path.end(), [&](Point p) { return p.r == side; }));
  }
}

TEST(TraceWall, DetachedStartThrows) {
  const auto img = oracle::from_rows({".....", ".....", "..#..", ".....", "....."});
  TraceRequest req;
  req.start = {0, 0};
  req.max_steps = 10;
  EXPECT_THROW(trace_wall(img, req), DetachedStart);
  req.start = {2, 2};  // on ink
  EXPECT_THROW(trace_wall(img, req), DetachedStart);
}

TEST(TraceWall, BudgetIsExact) {
  const auto img = oracle::from_rows({"......", "......", "..##..", "..##..", "......", "......"});
  for (const int budget : {1, 5, 12, 40}) {
    TraceRequest req;
    req.start = {2, 1};
    req.heading = Heading::E;
    req.max_steps = budget;
    try {
      trace_wall(img, req);
      FAIL() << "closed loop must exhaust the budget";
    } catch (const StepBudgetExceeded& e) {
      EXPECT_EQ(e.partial().size(), static_cast<std::size_t>(budget));
    }
  }
}

TEST(TraceWall, LoopHugsTheBlockSides) {
  const auto img = oracle::from_rows({"......", "......", "..##..", "..##..", "......", "......"});
  TraceRequest req;
  req.start = {2, 1};
  req.heading = Heading::E;
  req.max_steps = 24;
  try {
    trace_wall(img, req);
  } catch (const StepBudgetExceeded& e) {
    const std::set<Point> seen(e.partial().begin(), e.partial().end());
    // Corners are cut diagonally; every edge neighbor is visited.
    const std::set<Point> sides{{1, 2}, {1, 3}, {2, 1}, {2, 4}, {3, 1}, {3, 4}, {4, 2}, {4, 3}};
    EXPECT_EQ(seen, sides);
    const auto ring = oracle::ring(img, {{2, 2}, {2, 3}, {3, 2}, {3, 3}});
    for (const auto& p : seen) EXPECT_TRUE(ring.count(p));
  }
}

TEST(TraceWall, NeverSlipsBetweenDiagonalInk) {
  // Two pixels touching at a corner form one component; the gap between
  // their free corners must not be crossed.
  const auto img = oracle::from_rows({"......", "......", "..#...", "...#..", "......", "......"});
  TraceRequest req;
  req.start = {2, 1};
  req.heading = Heading::E;
  req.max_steps = 30;
  try {
    trace_wall(img, req);
  } catch (const StepBudgetExceeded& e) {
    const auto& p = e.partial();
    for (std::size_t i = 1; i < p.size(); ++i) {
      EXPECT_FALSE(pinches_ink(img, p[i - 1], p[i]));
    }
  }
  EXPECT_TRUE(pinches_ink(img, {2, 3}, {3, 2}));
  EXPECT_FALSE(pinches_ink(img, {2, 1}, {3, 1}));
}

TEST(BoundaryOracle, IsolatedPixelHasEightNeighbors) {
  const auto img = oracle::from_rows({"...", ".#.", "..."});
  const auto labeling = connected_components(img);
  EXPECT_EQ(boundary_oracle(img, 1, labeling).size(), 8u);
}

TEST(BoundaryOracle, BlockRing) {
  const auto img = oracle::from_rows({"....", ".##.", ".##.", "...."});
  const auto labeling = connected_components(img);
  const auto got = boundary_oracle(img, 1, labeling);
  EXPECT_EQ(got.size(), 12u);
  EXPECT_EQ(std::set<Point>(got.begin(), got.end()),
            oracle::ring(img, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
}

TEST(BoundaryOracle, ClippedAtImageEdge) {
  const auto img = oracle::from_rows({"#..", "...", "..."});
  const auto labeling = connected_components(img);
  const auto got = boundary_oracle(img, 1, labeling);
  EXPECT_EQ(got, (std::vector<Point>{{0, 1}, {1, 0}, {1, 1}}));
}

TEST(BoundaryOracle, UnknownLabelThrows) {
  const auto img = oracle::from_rows({"#.."});
  const auto labeling = connected_components(img);
  EXPECT_THROW(boundary_oracle(img, 2, labeling), UnknownLabel);
  EXPECT_THROW(boundary_oracle(img, 0, labeling), UnknownLabel);
}

}  // namespace
}  // namespace flexrow
