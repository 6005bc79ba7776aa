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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flexrow/raster.hpp"

namespace flexrow {

// Every failure raised by the library derives from Error, so callers that
// only care about "it failed" can catch one type.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// raster
class MalformedHeader : public Error { public: using Error::Error; };
class TruncatedPayload : public Error { public: using Error::Error; };
class OutOfBounds : public Error { public: using Error::Error; };

// analysis
class EmptyImage : public Error { public: using Error::Error; };
class NoBands : public Error { public: using Error::Error; };

// contour
class DetachedStart : public Error { public: using Error::Error; };
class UnknownLabel : public Error { public: using Error::Error; };

class StepBudgetExceeded : public Error {
public:
  StepBudgetExceeded(const std::string& what, std::vector<Point> partial)
      : Error(what), partial_(std::move(partial)) {}

  // Points walked before the budget ran out, start included.
  const std::vector<Point>& partial() const noexcept { return partial_; }

private:
  std::vector<Point> partial_;
};

// borders
class OutOfRaster : public Error { public: using Error::Error; };
class DegenerateBands : public Error { public: using Error::Error; };
class EmptyBand : public Error { public: using Error::Error; };

// segment
class BordersCross : public Error { public: using Error::Error; };
class BadRowIndex : public Error { public: using Error::Error; };

// corpus
class SpecTooTight : public Error { public: using Error::Error; };
class SizeMismatch : public Error { public: using Error::Error; };

}  // namespace flexrow
