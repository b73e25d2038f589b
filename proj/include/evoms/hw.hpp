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

#ifndef EVOMS_HW_HPP
#define EVOMS_HW_HPP

#include <cstdint>
#include <vector>

#include "evoms/events.hpp"
#include "evoms/grid.hpp"
#include "evoms/oms.hpp"

namespace evoms
{

// Discrete-time behavioral model of the reconfigurable compute array.
// Charge on a tile's shared node is a normalized scalar in [0, 1]; no
// capacitance, current or voltage units are modeled, only the decision
// function.

enum class PixelRole : std::uint8_t
{
  center,
  surround,
  off,
};

struct RoleGrid
{
  int width = 0;
  int height = 0;
  std::vector<PixelRole> roles;

  RoleGrid() = default;
  RoleGrid(int w, int h)
  : width(w), height(h), roles(static_cast<std::size_t>(w) * h, PixelRole::off)
  {
  }

  PixelRole at(int y, int x) const { return roles[static_cast<std::size_t>(y) * width + x]; }
  void set(int y, int x, PixelRole r) { roles[static_cast<std::size_t>(y) * width + x] = r; }

  bool operator==(const RoleGrid &) const = default;
};

struct HwArrayConfig
{
  int width = 0;
  int height = 0;
  int tile_side = 0;      // == surround side; tiles partition the plane
  int center_side = 0;
  int center_offset = 0;  // center block offset inside each tile, both axes
  RoleGrid roles;
  double alpha = 0.0;     // charge added per active center pixel per step
  double beta = 0.0;      // charge removed per active surround pixel per step
  double leak_per_step = 0.0;
  int trip_setting = 0;   // [-10, +10]

  int tiles_x() const { return width / tile_side; }
  int tiles_y() const { return height / tile_side; }

  bool operator==(const HwArrayConfig &) const = default;
};

// Threshold quantized onto the inverter's trip-point ladder.
struct QuantizedTau
{
  int setting = 0;
  double error = 0.0;
  bool saturated = false;
};

// Per-tile charge trace, one row per (tile, step).
struct TraceRow
{
  int tile_id = 0;
  int step = 0;
  double v = 0.0;
};

struct SimTrace
{
  std::vector<TraceRow> rows;
};

// Normalized trip point of the variable inverter. Linear over the 10 pull-up
// and 10 pull-down devices, pinned to f(-10) = 0.48 and f(+10) = 0.90.
double trip_fraction(int setting);

// Nearest trip setting to tau; ties break toward the lower setting; values
// outside [0.48, 0.90] clamp to the nearest endpoint and flag saturation.
QuantizedTau quantize_tau(double tau);

// Maps an OmsConfig onto the array. Feasibility requires: uniform kernel,
// stride == surround_side, even center/surround sides, a center block that
// can be centered on the 2x2 unit-cell grid ((surr-cen)/2 even), and a
// geometry that divides into whole tiles. Throws FeasibilityError listing
// every violated constraint. On success the center block sits at offset
// (surr-cen)/2 in each tile, alpha = 1/cen^2 - 1/surr^2 and beta = 1/surr^2
// so one accumulation step equals mean(center) - mean(surround), and
// trip_setting = quantize_tau(tau).setting.
HwArrayConfig build_array_config(const OmsConfig & oms, Geometry geometry);

// Runs `steps` accumulation steps of the activation plane against the array:
// v <- clamp(v + alpha*n_center - beta*n_surround - leak, 0, 1) per tile,
// starting from v = 0; a tile spikes when its final v exceeds the trip
// fraction. With steps = 1 and zero leak the spike map is bit-identical to
// oms_compute at tau = trip_fraction(trip_setting).
OmsFrame simulate_frame(
  const EventFrame & frame, const HwArrayConfig & hw, int steps = 1, SimTrace * trace = nullptr);

// NVM programming plan: one entry per 2x2 unit cell, row-major by unit cell.
// role_bit is the center/surround select (0 = center, 1 = surround); the gate
// enables short a cell's output node to its east/south neighbor when both lie
// in the same tile.
struct UnitCellProgram
{
  int cell_id = 0;
  int row = 0;  // unit-cell coordinates
  int col = 0;
  int role_bit = 1;
  bool gate_east = false;
  bool gate_south = false;

  bool operator==(const UnitCellProgram &) const = default;
};

struct ProgrammingPlan
{
  int width = 0;   // pixels
  int height = 0;
  int tile_side = 0;
  int center_side = 0;
  int center_offset = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double leak_per_step = 0.0;
  int trip_setting = 0;
  std::vector<UnitCellProgram> cells;

  bool operator==(const ProgrammingPlan &) const = default;
};

ProgrammingPlan make_programming_plan(const HwArrayConfig & hw);

// Reconstructs the array configuration a plan programs; used to check that
// plans round-trip exactly.
HwArrayConfig config_from_plan(const ProgrammingPlan & plan);

}  // namespace evoms

#endif  // EVOMS_HW_HPP
