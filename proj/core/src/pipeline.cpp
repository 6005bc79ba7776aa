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

#include "flexrow/pipeline.hpp"

namespace flexrow {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Straight: return "straight";
    case Method::BottomEdge: return "bottom-edge";
    case Method::Flexible: return "flexible";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto m : {Method::Straight, Method::BottomEdge, Method::Flexible}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

std::size_t PageSegmentation::event_count() const {
  std::size_t n = 0;
  for (const auto& e : events) n += e.size();
  return n;
}

std::size_t PageSegmentation::amputated_events() const {
  std::size_t n = 0;
  for (const auto& list : events) {
    for (const auto& e : list) n += e.resolution == Resolution::Amputated;
  }
  return n;
}

std::vector<BorderPolyline> build_borders(
    const BinaryImage& img, const PageLayout& layout, Method method,
    const PipelineConfig& config,
    std::vector<std::vector<IntersectionEvent>>* events,
    const ComponentLabeling* labeling) {
  std::vector<BorderPolyline> borders;
  borders.reserve(layout.valleys.size());
  if (events) events->assign(layout.valleys.size(), {});

  std::optional<ComponentLabeling> own;
  if (method == Method::BottomEdge && labeling == nullptr) {
    own = connected_components(img);
    labeling = &*own;
  }
  for (std::size_t k = 0; k < layout.valleys.size(); ++k) {
    switch (method) {
      case Method::Straight:
        borders.push_back(straight_border(layout.valleys[k], layout.frame,
                                          img.width(), img.height()));
        break;
      case Method::BottomEdge:
        borders.push_back(bottom_edge_border(img, layout.bands[k], layout.frame,
                                             *labeling, config.bottom_edge));
        break;
      case Method::Flexible: {
        auto result = flexible_border(img, layout.valleys[k], layout.frame,
                                      layout.bands[k], layout.bands[k + 1],
                                      config.flex);
        borders.push_back(std::move(result.border));
        if (events) (*events)[k] = std::move(result.events);
        break;
      }
    }
  }
  return borders;
}

PageSegmentation segment_page(const BinaryImage& img, const PageLayout& layout,
                              Method method, const PipelineConfig& config,
                              const ComponentLabeling* labeling) {
  PageSegmentation out;
  out.borders = build_borders(img, layout, method, config, &out.events, labeling);
  out.segmentation = cut_rows(img, out.borders);
  return out;
}

}  // namespace flexrow
