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

#include <vector>

#include "flexrow/raster.hpp"

namespace flexrow {

// 8-connected ink components. Label 0 is background; components are
// numbered 1..count in raster-scan discovery order.
struct ComponentLabeling {
  int width = 0;
  int height = 0;
  std::vector<int> labels;
  int count = 0;

  int at(int r, int c) const noexcept {
    return labels[static_cast<std::size_t>(r) * width + c];
  }
  int at(Point p) const noexcept { return at(p.r, p.c); }
};

ComponentLabeling connected_components(const BinaryImage& img);

}  // namespace flexrow
