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

#include <span>
#include <vector>

#include "flexrow/borders.hpp"
#include "flexrow/labeling.hpp"
#include "flexrow/raster.hpp"

namespace flexrow {

inline constexpr int kBarrier = -1;

// Row index per pixel, or kBarrier for pixels on a border.
struct Segmentation {
  int width = 0;
  int height = 0;
  std::vector<int> assignment;
  int row_count = 0;

  int at(int r, int c) const noexcept {
    return assignment[static_cast<std::size_t>(r) * width + c];
  }
  int at(Point p) const noexcept { return at(p.r, p.c); }
};

// Marks border pixels as barriers and fills the rest in 4-connected
// regions. A region belongs to the gap holding its topmost-leftmost pixel:
// above border 0 is row 0, between borders k-1 and k is row k. Pockets a
// border seals off from both image edges take the row of what surrounds
// them. Borders must be ordered top to bottom.
//
// Throws BordersCross if two borders share a pixel that is not an endpoint
// of either, or if their top-to-bottom order flips in some column.
Segmentation cut_rows(const BinaryImage& img,
                      std::span<const BorderPolyline> borders);

// Tight crop of the ink assigned to row k; an empty row gives a 1x1
// background image. Throws BadRowIndex.
BinaryImage extract_row_image(const BinaryImage& img, const Segmentation& seg,
                              int k);

// Ink pixels that sit on a border.
std::size_t barrier_ink(const BinaryImage& img, const Segmentation& seg);

}  // namespace flexrow
