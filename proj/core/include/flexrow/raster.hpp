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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace flexrow {

// Pixel coordinate: r is the scanline (grows downward), c the column.
struct Point {
  int r = 0;
  int c = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

using PixelPath = std::vector<Point>;

// Rectangular bit raster, ink = 1 on background = 0. Storage is one byte per
// pixel; only the values 0 and 1 are ever stored.
class BinaryImage {
public:
  BinaryImage() = default;
  BinaryImage(int width, int height);
  BinaryImage(int width, int height, std::vector<std::uint8_t> bits);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return bits_.empty(); }

  bool contains(Point p) const noexcept {
    return p.r >= 0 && p.c >= 0 && p.r < height_ && p.c < width_;
  }
  bool ink(int r, int c) const noexcept {
    return bits_[static_cast<std::size_t>(r) * width_ + c] != 0;
  }
  bool ink(Point p) const noexcept { return ink(p.r, p.c); }
  // Out-of-raster points read as background.
  bool ink_or_background(Point p) const noexcept {
    return contains(p) && ink(p);
  }
  void set(int r, int c, bool value) noexcept {
    bits_[static_cast<std::size_t>(r) * width_ + c] = value ? 1 : 0;
  }
  void set(Point p, bool value) noexcept { set(p.r, p.c, value); }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::size_t ink_count() const noexcept;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

class GrayImage {
public:
  GrayImage() = default;
  GrayImage(int width, int height, std::vector<std::uint8_t> samples);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::uint8_t at(int r, int c) const noexcept {
    return samples_[static_cast<std::size_t>(r) * width_ + c];
  }
  std::span<const std::uint8_t> samples() const noexcept { return samples_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> samples_;
};

using AnyImage = std::variant<GrayImage, BinaryImage>;

// Decodes P1/P4 (BinaryImage) and P2/P5 (GrayImage). PGM samples with a
// maxval other than 255 are rescaled to 0..255.
AnyImage read_pnm(std::span<const std::uint8_t> bytes);

// Raw P4 with rows padded to whole bytes.
std::vector<std::uint8_t> write_pbm(const BinaryImage& img);

// Ink where sample < threshold.
BinaryImage binarize(const GrayImage& img, int threshold = 128);

// Accepts either kind of decoded image; binary input passes through.
BinaryImage to_binary(const AnyImage& img, int threshold = 128);

// P6 rendering: ink black, background white, path pixels red. Path paint
// is applied last so crossings through ink stay visible.
std::vector<std::uint8_t> render_overlay(const BinaryImage& img,
                                         std::span<const PixelPath> paths);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace flexrow
