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

#include <cmath>
#include <vector>

#include "flexrow/raster.hpp"

namespace flexrow {

inline constexpr double kPi = 3.14159265358979323846;

constexpr double degrees_to_radians(double deg) { return deg * kPi / 180.0; }
constexpr double radians_to_degrees(double rad) { return rad * 180.0 / kPi; }

// Medium row angle. Positive angles make rows descend to the right.
class SkewAngle {
public:
  static constexpr double kLimit = degrees_to_radians(10.0);

  constexpr SkewAngle() = default;
  constexpr explicit SkewAngle(double radians)
      : radians_(radians < -kLimit ? -kLimit
                                   : (radians > kLimit ? kLimit : radians)) {}

  static SkewAngle from_degrees(double deg) {
    return SkewAngle(degrees_to_radians(deg));
  }

  constexpr double radians() const noexcept { return radians_; }
  double degrees() const noexcept { return radians_to_degrees(radians_); }

  friend constexpr bool operator==(SkewAngle, SkewAngle) = default;

private:
  double radians_ = 0.0;
};

// Maps between image rows and skew-corrected scanline indices. The discrete
// line through scanline s is row(c) = s - shift + offset(c), with
// offset(c) = round(c * tan(angle)), so straight borders and profile
// binning agree pixel for pixel.
class ScanlineFrame {
public:
  ScanlineFrame() = default;
  ScanlineFrame(SkewAngle angle, int width, int height);

  SkewAngle angle() const noexcept { return angle_; }
  double slope() const noexcept { return slope_; }
  int shift() const noexcept { return shift_; }
  // Number of scanlines needed to cover the raster at this angle.
  int scanline_count() const noexcept { return scanline_count_; }

  int line_offset(int c) const noexcept {
    return static_cast<int>(std::floor(c * slope_ + 0.5 + 1e-9));
  }
  int scanline_of(Point p) const noexcept {
    return p.r - line_offset(p.c) + shift_;
  }
  int row_at(int scanline, int c) const noexcept {
    return scanline - shift_ + line_offset(c);
  }

private:
  SkewAngle angle_;
  double slope_ = 0.0;
  int shift_ = 0;
  int scanline_count_ = 0;
};

struct Profile {
  std::vector<int> counts;
  SkewAngle angle;
  ScanlineFrame frame;
};

// All indices are skew-corrected scanlines, inclusive.
struct RowBand {
  int top = 0;
  int bottom = 0;
  int core_top = 0;
  int core_bottom = 0;
  int median_top = 0;
  int median_bottom = 0;

  bool in_median(int scanline) const noexcept {
    return scanline >= median_top && scanline <= median_bottom;
  }
  bool in_core(int scanline) const noexcept {
    return scanline >= core_top && scanline <= core_bottom;
  }

  friend bool operator==(const RowBand&, const RowBand&) = default;
};

struct Valley {
  int scanline = 0;

  friend bool operator==(const Valley&, const Valley&) = default;
};

struct BandParams {
  int smooth_window = 9;
  double band_threshold = 0.2;
  // Fraction of the core height kept, centered, as the median zone.
  double median_fraction = 0.4;
};

struct BandLayout {
  std::vector<RowBand> bands;
  std::vector<Valley> valleys;
};

Profile projection_profile(const BinaryImage& img, SkewAngle angle);

// Exhaustive search over {-range, -range+step, ..., +range} for the angle
// whose profile has the largest variance. Ties go to the smallest |angle|,
// then to the negative one. Throws EmptyImage when there is no ink.
SkewAngle estimate_skew(const BinaryImage& img,
                        double range_rad = degrees_to_radians(10.0),
                        double step_rad = degrees_to_radians(0.25));

// Centered moving average, zero padded past both ends.
std::vector<double> smooth_profile(const std::vector<int>& counts, int window);

// Throws NoBands if no smoothed count exceeds the threshold.
BandLayout detect_row_bands(const Profile& profile,
                            const BandParams& params = {});

// Test hook: detection over a raw count sequence.
BandLayout detect_row_bands(const std::vector<int>& counts,
                            const BandParams& params);

// Row layout of one page: angle, frame, bands and valleys.
struct PageLayout {
  SkewAngle angle;
  ScanlineFrame frame;
  std::vector<int> counts;
  std::vector<RowBand> bands;
  std::vector<Valley> valleys;
};

struct AnalysisParams {
  double skew_range_deg = 10.0;
  double skew_step_deg = 0.25;
  BandParams bands;
};

PageLayout analyze_page(const BinaryImage& img, const AnalysisParams& params = {});

}  // namespace flexrow
