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


#include "cli/border_io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace flexrow::cli {

std::string format_borders(const std::vector<BorderRecord>& records) {
  std::string out;
  for (const auto& rec : records) {
    out += "border " + std::to_string(rec.index) + " method=" + rec.method +
           " events=" + std::to_string(rec.events) + "\n";
    for (const auto& seg : rec.border.segments) {
      out += "seg ";
      out += to_string(seg.kind);
      for (std::size_t i = seg.first; i <= seg.last; ++i) {
        const Point p = rec.border.points[i];
        out += " (" + std::to_string(p.r) + "," + std::to_string(p.c) + ")";
      }
      out += "\n";
    }
  }
  return out;
}

namespace {

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  throw std::invalid_argument("borders.txt line " + std::to_string(line) + ": " + what);
}

template <typename T>
T number(std::string_view s, std::size_t line) {
  T v{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    bad(line, "bad number '" + std::string(s) + "'");
  }
  return v;
}

std::string_view after_prefix(std::string_view token, std::string_view prefix,
                              std::size_t line) {
  if (token.substr(0, prefix.size()) != prefix) {
    bad(line, "expected " + std::string(prefix));
  }
  return token.substr(prefix.size());
}

Point point(std::string_view token, std::size_t line) {
  const auto comma = token.find(',');
  if (token.size() < 5 || token.front() != '(' || token.back() != ')' ||
      comma == std::string_view::npos) {
    bad(line, "bad point '" + std::string(token) + "'");
  }
  return {number<int>(token.substr(1, comma - 1), line),
          number<int>(token.substr(comma + 1, token.size() - comma - 2), line)};
}

}  // namespace

std::vector<BorderRecord> parse_borders(std::string_view text) {
  std::vector<BorderRecord> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens[0] == "border") {
      if (tokens.size() != 4) bad(line, "border header needs 3 fields");
      BorderRecord rec;
      rec.index = number<int>(tokens[1], line);
      rec.method = std::string(after_prefix(tokens[2], "method=", line));
      rec.events = number<std::size_t>(after_prefix(tokens[3], "events=", line), line);
      out.push_back(std::move(rec));
    } else if (tokens[0] == "seg") {
      if (out.empty()) bad(line, "seg before any border");
      if (tokens.size() < 3) bad(line, "seg without points");
      SegmentKind kind;
      if (tokens[1] == "STRAIGHT") {
        kind = SegmentKind::Straight;
      } else if (tokens[1] == "TRACED") {
        kind = SegmentKind::Traced;
      } else {
        bad(line, "unknown segment kind '" + tokens[1] + "'");
      }
      auto& border = out.back().border;
      const std::size_t first = border.points.size();
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        border.points.push_back(point(tokens[i], line));
      }
      border.segments.push_back({first, border.points.size() - 1, kind});
    } else {
      bad(line, "unknown record '" + tokens[0] + "'");
    }
  }
  return out;
}

}  // namespace flexrow::cli
