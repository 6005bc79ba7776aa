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

#include <string>
#include <string_view>
#include <vector>

#include "flexrow/borders.hpp"

namespace flexrow::cli {

// One border of a borders.txt file.
struct BorderRecord {
  int index = 0;
  std::string method;
  std::size_t events = 0;
  BorderPolyline border;
};

// borders.txt grammar, one record per border:
//   border <index> method=<name> events=<n>
//   seg <STRAIGHT|TRACED> (r,c) (r,c) ...
// Segments list their points in order and tile the border's points.
std::string format_borders(const std::vector<BorderRecord>& records);

// Inverse of format_borders. Throws std::invalid_argument on bad input.
std::vector<BorderRecord> parse_borders(std::string_view text);

}  // namespace flexrow::cli
