// Copyright 2026 The evoms authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVOMS_GRID_HPP
#define EVOMS_GRID_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "evoms/errors.hpp"

namespace evoms
{

struct Geometry
{
  int width = 0;
  int height = 0;

  bool operator==(const Geometry &) const = default;
};

// Row-major boolean plane. All accessors take (y, x).
struct BoolGrid
{
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> cells;

  BoolGrid() = default;
  BoolGrid(int w, int h, bool value = false)
  : width(w), height(h), cells(static_cast<std::size_t>(w) * h, value ? 1 : 0)
  {
    if (w < 0 || h < 0) {
      throw ValidationError("grid dimensions must be non-negative");
    }
  }

  Geometry geometry() const { return {width, height}; }

  bool in_bounds(int y, int x) const { return y >= 0 && y < height && x >= 0 && x < width; }

  bool at(int y, int x) const
  {
    return cells[static_cast<std::size_t>(y) * width + x] != 0;
  }

  void set(int y, int x, bool value)
  {
    cells[static_cast<std::size_t>(y) * width + x] = value ? 1 : 0;
  }

  std::size_t active_count() const
  {
    std::size_t n = 0;
    for (auto c : cells) {
      n += c != 0;
    }
    return n;
  }

  bool operator==(const BoolGrid &) const = default;
};

struct RealGrid
{
  int width = 0;
  int height = 0;
  std::vector<double> cells;

  RealGrid() = default;
  RealGrid(int w, int h) : width(w), height(h), cells(static_cast<std::size_t>(w) * h, 0.0) {}

  double at(int y, int x) const { return cells[static_cast<std::size_t>(y) * width + x]; }
  void set(int y, int x, double v) { cells[static_cast<std::size_t>(y) * width + x] = v; }
};

}  // namespace evoms

#endif  // EVOMS_GRID_HPP
