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

#include "flexrow/raster.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "flexrow/errors.hpp"

namespace flexrow {

BinaryImage::BinaryImage(int width, int height)
    : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("BinaryImage: dimensions must be positive");
  }
  bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

BinaryImage::BinaryImage(int width, int height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("BinaryImage: dimensions must be positive");
  }
  if (bits_.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("BinaryImage: bit count != width * height");
  }
  for (auto& b : bits_) b = b ? 1 : 0;
}

std::size_t BinaryImage::ink_count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("GrayImage: dimensions must be positive");
  }
  if (samples_.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("GrayImage: sample count != width * height");
  }
}

namespace {

class PnmReader {
public:
  explicit PnmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto ch = bytes_[pos_];
      if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' &&
               bytes_[pos_] != '\r') {
          ++pos_;
        }
      } else if (std::isspace(ch)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Header integer; any failure is a header problem.
  long header_int(const char* what) {
    skip_space_and_comments();
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw MalformedHeader(std::string("PNM: ") + what + " too large");
      }
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      throw MalformedHeader(std::string("PNM: missing ") + what);
    }
    return value;
  }

  // The single whitespace byte separating header from raster data.
  void raster_separator() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw MalformedHeader("PNM: header not terminated by whitespace");
    }
    ++pos_;
  }

  // Plain-format sample: digits separated by whitespace or comments.
  long plain_int() {
    skip_space_and_comments();
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 65535) throw TruncatedPayload("PNM: sample out of range");
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw TruncatedPayload("PNM: too few samples");
    return value;
  }

  // P1 samples may be packed with no separators at all.
  int plain_bit() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) throw TruncatedPayload("PBM: too few samples");
    const auto ch = bytes_[pos_++];
    if (ch == '0') return 0;
    if (ch == '1') return 1;
    throw TruncatedPayload("PBM: invalid sample character");
  }

  std::span<const std::uint8_t> take(std::size_t n) {
    if (bytes_.size() - pos_ < n) {
      throw TruncatedPayload("PNM: raster payload shorter than header says");
    }
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::size_t pos() const noexcept { return pos_; }

private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::uint8_t scale_sample(long v, long maxval) {
  if (v > maxval) throw TruncatedPayload("PGM: sample exceeds maxval");
  if (maxval == 255) return static_cast<std::uint8_t>(v);
  return static_cast<std::uint8_t>((v * 255 + maxval / 2) / maxval);
}

}  // namespace

AnyImage read_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw MalformedHeader("PNM: missing magic number");
  }
  const char kind = static_cast<char>(bytes[1]);
  if (kind != '1' && kind != '2' && kind != '4' && kind != '5') {
    throw MalformedHeader("PNM: unsupported magic P" + std::string(1, kind));
  }
  PnmReader in(bytes.subspan(2));
  const long width = in.header_int("width");
  const long height = in.header_int("height");
  if (width <= 0 || height <= 0) {
    throw MalformedHeader("PNM: dimensions must be positive");
  }
  const auto count = static_cast<std::size_t>(width) * height;

  if (kind == '1' || kind == '4') {
    std::vector<std::uint8_t> bits(count, 0);
    if (kind == '1') {
      for (auto& b : bits) b = static_cast<std::uint8_t>(in.plain_bit());
    } else {
      in.raster_separator();
      const auto stride = static_cast<std::size_t>((width + 7) / 8);
      auto payload = in.take(stride * height);
      for (long r = 0; r < height; ++r) {
        for (long c = 0; c < width; ++c) {
          const auto byte = payload[r * stride + c / 8];
          bits[r * width + c] = (byte >> (7 - c % 8)) & 1;
        }
      }
    }
    return BinaryImage(static_cast<int>(width), static_cast<int>(height),
                       std::move(bits));
  }

  const long maxval = in.header_int("maxval");
  if (maxval <= 0 || maxval > 65535) {
    throw MalformedHeader("PGM: maxval must be in 1..65535");
  }
  std::vector<std::uint8_t> samples(count, 0);
  if (kind == '2') {
    for (auto& s : samples) s = scale_sample(in.plain_int(), maxval);
  } else {
    in.raster_separator();
    const std::size_t depth = maxval > 255 ? 2 : 1;
    auto payload = in.take(count * depth);
    for (std::size_t i = 0; i < count; ++i) {
      const long v = depth == 1 ? payload[i]
                                : (payload[2 * i] << 8) | payload[2 * i + 1];
      samples[i] = scale_sample(v, maxval);
    }
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::move(samples));
}

std::vector<std::uint8_t> write_pbm(const BinaryImage& img) {
  const std::string header = "P4\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n";
  const auto stride = static_cast<std::size_t>((img.width() + 7) / 8);
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto base = out.size();
  out.resize(base + stride * img.height(), 0);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (img.ink(r, c)) {
        out[base + r * stride + c / 8] |= static_cast<std::uint8_t>(0x80 >> (c % 8));
      }
    }
  }
  return out;
}

BinaryImage binarize(const GrayImage& img, int threshold) {
  std::vector<std::uint8_t> bits(img.samples().size());
  std::transform(img.samples().begin(), img.samples().end(), bits.begin(),
                 [threshold](std::uint8_t s) { return s < threshold ? 1 : 0; });
  return BinaryImage(img.width(), img.height(), std::move(bits));
}

BinaryImage to_binary(const AnyImage& img, int threshold) {
  if (const auto* bin = std::get_if<BinaryImage>(&img)) return *bin;
  return binarize(std::get<GrayImage>(img), threshold);
}

std::vector<std::uint8_t> render_overlay(const BinaryImage& img,
                                         std::span<const PixelPath> paths) {
  for (const auto& path : paths) {
    for (const auto& p : path) {
      if (!img.contains(p)) {
        throw OutOfBounds("render_overlay: border point (" +
                          std::to_string(p.r) + "," + std::to_string(p.c) +
                          ") outside raster");
      }
    }
  }
  const std::string header = "P6\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto base = out.size();
  out.resize(base + 3 * img.bits().size());
  for (std::size_t i = 0; i < img.bits().size(); ++i) {
    const std::uint8_t v = img.bits()[i] ? 0 : 255;
    out[base + 3 * i] = v;
    out[base + 3 * i + 1] = v;
    out[base + 3 * i + 2] = v;
  }
  for (const auto& path : paths) {
    for (const auto& p : path) {
      const auto i = base + 3 * (static_cast<std::size_t>(p.r) * img.width() + p.c);
      out[i] = 255;
      out[i + 1] = 0;
      out[i + 2] = 0;
    }
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace flexrow
