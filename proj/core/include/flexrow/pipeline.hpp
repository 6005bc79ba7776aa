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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flexrow/analysis.hpp"
#include "flexrow/borders.hpp"
#include "flexrow/raster.hpp"
#include "flexrow/segment.hpp"

namespace flexrow {

enum class Method { Straight, BottomEdge, Flexible };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

struct PipelineConfig {
  AnalysisParams analysis;
  BottomEdgeParams bottom_edge;
  FlexParams flex;
};

struct PageSegmentation {
  std::vector<BorderPolyline> borders;
  // Events per border, same order as borders (empty for the baselines).
  std::vector<std::vector<IntersectionEvent>> events;
  Segmentation segmentation;

  std::size_t event_count() const;
  std::size_t amputated_events() const;
};

// Borders for every valley of `layout` by `method`. The labeling is only
// read by the bottom-edge method and is computed on demand when absent.
std::vector<BorderPolyline> build_borders(
    const BinaryImage& img, const PageLayout& layout, Method method,
    const PipelineConfig& config,
    std::vector<std::vector<IntersectionEvent>>* events = nullptr,
    const ComponentLabeling* labeling = nullptr);

// Borders plus the row cut.
PageSegmentation segment_page(const BinaryImage& img, const PageLayout& layout,
                              Method method, const PipelineConfig& config,
                              const ComponentLabeling* labeling = nullptr);

}  // namespace flexrow
