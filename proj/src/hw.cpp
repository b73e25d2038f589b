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

#include "evoms/hw.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "evoms/errors.hpp"

namespace evoms
{

namespace
{

constexpr int kMinSetting = -10;
constexpr int kMaxSetting = 10;
constexpr double kTripLow = 0.48;
constexpr double kTripHigh = 0.90;

}  // namespace

double trip_fraction(int setting)
{
  if (setting < kMinSetting || setting > kMaxSetting) {
    throw ValidationError(
      "trip setting must lie in [-10, 10], got " + std::to_string(setting));
  }
  // Endpoint-exact linear interpolation.
  return (kTripLow * (kMaxSetting - setting) + kTripHigh * (setting - kMinSetting)) / 20.0;
}

QuantizedTau quantize_tau(double tau)
{
  if (!(tau > 0.0 && tau < 1.0)) {
    throw ValidationError("tau must lie strictly inside (0, 1)");
  }

  QuantizedTau q;
  q.setting = kMinSetting;
  q.error = std::abs(trip_fraction(kMinSetting) - tau);
  for (int s = kMinSetting + 1; s <= kMaxSetting; ++s) {
    const double err = std::abs(trip_fraction(s) - tau);
    if (err < q.error) {  // ties keep the lower setting
      q.error = err;
      q.setting = s;
    }
  }
  q.saturated = tau < trip_fraction(kMinSetting) || tau > trip_fraction(kMaxSetting);
  return q;
}

HwArrayConfig build_array_config(const OmsConfig & oms, Geometry geometry)
{
  oms.validate();

  std::vector<std::string> violations;
  if (oms.kernel_kind != KernelKind::uniform) {
    violations.push_back("kernel kind must be uniform");
  }
  if (oms.stride != oms.surround_side) {
    violations.push_back("stride must equal surround_side (non-overlapping tiles)");
  }
  if (oms.center_side % 2 != 0) {
    violations.push_back("center_side must be even (2x2 unit-cell resolution)");
  }
  if (oms.surround_side % 2 != 0) {
    violations.push_back("surround_side must be even (2x2 unit-cell resolution)");
  }
  if (oms.center_side % 2 == 0 && oms.surround_side % 2 == 0 &&
      ((oms.surround_side - oms.center_side) / 2) % 2 != 0) {
    violations.push_back(
      "center block cannot be centered on the 2x2 unit-cell grid "
      "((surround_side - center_side)/2 must be even)");
  }
  if (geometry.width <= 0 || geometry.height <= 0) {
    violations.push_back("geometry must be positive");
  } else if (oms.surround_side > 0 &&
             (geometry.width % oms.surround_side != 0 ||
              geometry.height % oms.surround_side != 0)) {
    violations.push_back("geometry must divide into whole tiles of side surround_side");
  }
  if (!violations.empty()) {
    throw FeasibilityError(std::move(violations));
  }

  HwArrayConfig hw;
  hw.width = geometry.width;
  hw.height = geometry.height;
  hw.tile_side = oms.surround_side;
  hw.center_side = oms.center_side;
  hw.center_offset = (oms.surround_side - oms.center_side) / 2;
  const double cen2 = static_cast<double>(oms.center_side) * oms.center_side;
  const double surr2 = static_cast<double>(oms.surround_side) * oms.surround_side;
  // Roles are exclusive (the surround region is the tile minus the center
  // block), so the center increment carries the -1/surr^2 term; one step then
  // accumulates exactly mean(center window) - mean(surround window).
  hw.alpha = 1.0 / cen2 - 1.0 / surr2;
  hw.beta = 1.0 / surr2;
  hw.leak_per_step = 0.0;
  hw.trip_setting = quantize_tau(oms.tau).setting;

  hw.roles = RoleGrid(hw.width, hw.height);
  for (int ty = 0; ty < hw.tiles_y(); ++ty) {
    for (int tx = 0; tx < hw.tiles_x(); ++tx) {
      const int y0 = ty * hw.tile_side;
      const int x0 = tx * hw.tile_side;
      for (int y = 0; y < hw.tile_side; ++y) {
        for (int x = 0; x < hw.tile_side; ++x) {
          const bool in_center = y >= hw.center_offset && y < hw.center_offset + hw.center_side &&
                                 x >= hw.center_offset && x < hw.center_offset + hw.center_side;
          hw.roles.set(y0 + y, x0 + x, in_center ? PixelRole::center : PixelRole::surround);
        }
      }
    }
  }
  return hw;
}

OmsFrame simulate_frame(
  const EventFrame & frame, const HwArrayConfig & hw, int steps, SimTrace * trace)
{
  if (frame.grid.width != hw.width || frame.grid.height != hw.height) {
    throw ValidationError("frame geometry does not match array geometry");
  }
  if (steps < 1) {
    throw ValidationError("steps must be >= 1");
  }
  if (hw.tile_side <= 0 || hw.width % hw.tile_side != 0 || hw.height % hw.tile_side != 0) {
    throw ValidationError("array geometry must divide into whole tiles");
  }
  if (!(hw.alpha > 0.0) || !(hw.beta > 0.0)) {
    throw ValidationError("charge coefficients must be positive");
  }
  if (hw.leak_per_step < 0.0 || hw.leak_per_step >= 1.0) {
    throw ValidationError("leak_per_step must lie in [0, 1)");
  }

  const double trip = trip_fraction(hw.trip_setting);
  const int tiles_x = hw.tiles_x();
  const int tiles_y = hw.tiles_y();

  OmsConfig equivalent;
  equivalent.center_side = hw.center_side;
  equivalent.surround_side = hw.tile_side;
  equivalent.stride = hw.tile_side;
  equivalent.tau = trip;
  equivalent.kernel_kind = KernelKind::uniform;

  OmsFrame out{BoolGrid(tiles_x, tiles_y), equivalent};

  for (int ty = 0; ty < tiles_y; ++ty) {
    for (int tx = 0; tx < tiles_x; ++tx) {
      int n_center = 0;
      int n_surround = 0;
      const int y0 = ty * hw.tile_side;
      const int x0 = tx * hw.tile_side;
      for (int y = y0; y < y0 + hw.tile_side; ++y) {
        for (int x = x0; x < x0 + hw.tile_side; ++x) {
          if (!frame.grid.at(y, x)) {
            continue;
          }
          switch (hw.roles.at(y, x)) {
            case PixelRole::center:
              ++n_center;
              break;
            case PixelRole::surround:
              ++n_surround;
              break;
            case PixelRole::off:
              break;
          }
        }
      }

      const double step_charge = hw.alpha * n_center - hw.beta * n_surround;
      const int tile_id = ty * tiles_x + tx;
      double v = 0.0;
      for (int s = 1; s <= steps; ++s) {
        v = std::clamp(v + step_charge - hw.leak_per_step, 0.0, 1.0);
        if (trace != nullptr) {
          trace->rows.push_back({tile_id, s, v});
        }
      }
      out.grid.set(ty, tx, v > trip);
    }
  }
  return out;
}

ProgrammingPlan make_programming_plan(const HwArrayConfig & hw)
{
  ProgrammingPlan plan;
  plan.width = hw.width;
  plan.height = hw.height;
  plan.tile_side = hw.tile_side;
  plan.center_side = hw.center_side;
  plan.center_offset = hw.center_offset;
  plan.alpha = hw.alpha;
  plan.beta = hw.beta;
  plan.leak_per_step = hw.leak_per_step;
  plan.trip_setting = hw.trip_setting;

  const int cells_x = hw.width / 2;
  const int cells_y = hw.height / 2;
  const int cells_per_tile = hw.tile_side / 2;
  plan.cells.reserve(static_cast<std::size_t>(cells_x) * cells_y);

  for (int cy = 0; cy < cells_y; ++cy) {
    for (int cx = 0; cx < cells_x; ++cx) {
      UnitCellProgram cell;
      cell.cell_id = cy * cells_x + cx;
      cell.row = cy;
      cell.col = cx;
      // Role is uniform inside a unit cell; read its top-left pixel.
      cell.role_bit = hw.roles.at(cy * 2, cx * 2) == PixelRole::center ? 0 : 1;
      cell.gate_east = (cx + 1) < cells_x && (cx + 1) / cells_per_tile == cx / cells_per_tile;
      cell.gate_south = (cy + 1) < cells_y && (cy + 1) / cells_per_tile == cy / cells_per_tile;
      plan.cells.push_back(cell);
    }
  }
  return plan;
}

HwArrayConfig config_from_plan(const ProgrammingPlan & plan)
{
  if (plan.width <= 0 || plan.height <= 0 || plan.width % 2 != 0 || plan.height % 2 != 0) {
    throw ValidationError("plan geometry must be positive and even");
  }
  const int cells_x = plan.width / 2;
  const int cells_y = plan.height / 2;
  if (plan.cells.size() != static_cast<std::size_t>(cells_x) * cells_y) {
    throw ValidationError("plan cell count does not match geometry");
  }

  HwArrayConfig hw;
  hw.width = plan.width;
  hw.height = plan.height;
  hw.tile_side = plan.tile_side;
  hw.center_side = plan.center_side;
  hw.center_offset = plan.center_offset;
  hw.alpha = plan.alpha;
  hw.beta = plan.beta;
  hw.leak_per_step = plan.leak_per_step;
  hw.trip_setting = plan.trip_setting;
  hw.roles = RoleGrid(plan.width, plan.height);

  const int cells_per_tile = plan.tile_side / 2;
  for (const auto & cell : plan.cells) {
    if (cell.cell_id != cell.row * cells_x + cell.col) {
      throw ValidationError("plan cells are not in row-major order");
    }
    // Gate pattern must describe disjoint square tiles of tile_side.
    const bool expect_east =
      (cell.col + 1) < cells_x && (cell.col + 1) / cells_per_tile == cell.col / cells_per_tile;
    const bool expect_south =
      (cell.row + 1) < cells_y && (cell.row + 1) / cells_per_tile == cell.row / cells_per_tile;
    if (cell.gate_east != expect_east || cell.gate_south != expect_south) {
      throw ValidationError(
        "plan gate enables do not tile the array at side " + std::to_string(plan.tile_side));
    }
    const PixelRole role = cell.role_bit == 0 ? PixelRole::center : PixelRole::surround;
    for (int dy = 0; dy < 2; ++dy) {
      for (int dx = 0; dx < 2; ++dx) {
        hw.roles.set(cell.row * 2 + dy, cell.col * 2 + dx, role);
      }
    }
  }
  return hw;
}

}  // namespace evoms
