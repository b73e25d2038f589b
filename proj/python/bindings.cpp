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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evoms/errors.hpp"
#include "evoms/eval.hpp"
#include "evoms/events.hpp"
#include "evoms/hw.hpp"
#include "evoms/io.hpp"
#include "evoms/oms.hpp"
#include "evoms/synth.hpp"
#include "evoms/version.hpp"

namespace py = pybind11;
using namespace evoms;

namespace
{

BoolGrid grid_from_rows(const std::vector<std::vector<bool>> & rows)
{
  const int h = static_cast<int>(rows.size());
  const int w = h > 0 ? static_cast<int>(rows[0].size()) : 0;
  BoolGrid grid(w, h);
  for (int y = 0; y < h; ++y) {
    if (static_cast<int>(rows[y].size()) != w) {
      throw ValidationError("grid rows must have equal length");
    }
    for (int x = 0; x < w; ++x) {
      grid.set(y, x, rows[y][x]);
    }
  }
  return grid;
}

std::vector<std::vector<bool>> grid_to_rows(const BoolGrid & grid)
{
  std::vector<std::vector<bool>> rows(grid.height, std::vector<bool>(grid.width));
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      rows[y][x] = grid.at(y, x);
    }
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_evoms, m)
{
  m.doc() = "event-camera object-motion segmentation core";
  m.attr("__version__") = kVersion;

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<FeasibilityError>(m, "FeasibilityError", PyExc_ValueError);

  py::class_<DvsEvent>(m, "DvsEvent")
    .def(py::init([](std::int64_t t_us, int x, int y, int polarity) {
           return DvsEvent{t_us, x, y, polarity};
         }),
         py::arg("t_us"), py::arg("x"), py::arg("y"), py::arg("polarity") = 1)
    .def_readonly("t_us", &DvsEvent::t_us)
    .def_readonly("x", &DvsEvent::x)
    .def_readonly("y", &DvsEvent::y)
    .def_readonly("polarity", &DvsEvent::polarity)
    .def("__repr__", [](const DvsEvent & e) {
      return "DvsEvent(t_us=" + std::to_string(e.t_us) + ", x=" + std::to_string(e.x) +
             ", y=" + std::to_string(e.y) + ", polarity=" + std::to_string(e.polarity) + ")";
    });

  py::class_<BoolGrid>(m, "BoolGrid")
    .def(py::init(&grid_from_rows), py::arg("rows"))
    .def_readonly("width", &BoolGrid::width)
    .def_readonly("height", &BoolGrid::height)
    .def("at", &BoolGrid::at, py::arg("y"), py::arg("x"))
    .def("active_count", &BoolGrid::active_count)
    .def("to_rows", &grid_to_rows)
    .def("__eq__", [](const BoolGrid & a, const BoolGrid & b) { return a == b; });

  py::class_<EventFrame>(m, "EventFrame")
    .def_readonly("grid", &EventFrame::grid)
    .def_readonly("t_center_us", &EventFrame::t_center_us)
    .def_readonly("window_ms", &EventFrame::window_ms);

  py::class_<GroundTruthMask>(m, "GroundTruthMask")
    .def(py::init([](const BoolGrid & grid, std::int64_t t) {
           return GroundTruthMask{grid, t};
         }),
         py::arg("grid"), py::arg("t_capture_us") = 0)
    .def_readonly("grid", &GroundTruthMask::grid)
    .def_readonly("t_capture_us", &GroundTruthMask::t_capture_us);

  py::class_<OmsConfig>(m, "OmsConfig")
    .def(py::init([](int center_side, int surround_side, int stride, double tau,
                     double window_ms, const std::string & kernel_kind,
                     double gaussian_sigma_ratio) {
           OmsConfig cfg;
           cfg.center_side = center_side;
           cfg.surround_side = surround_side;
           cfg.stride = stride;
           cfg.tau = tau;
           cfg.window_ms = window_ms;
           cfg.kernel_kind = kernel_kind_from_string(kernel_kind);
           cfg.gaussian_sigma_ratio = gaussian_sigma_ratio;
           cfg.validate();
           return cfg;
         }),
         py::arg("center_side") = 4, py::arg("surround_side") = 8, py::arg("stride") = 1,
         py::arg("tau") = 0.96, py::arg("window_ms") = 20.0,
         py::arg("kernel_kind") = "gaussian", py::arg("gaussian_sigma_ratio") = 0.5)
    .def_readonly("center_side", &OmsConfig::center_side)
    .def_readonly("surround_side", &OmsConfig::surround_side)
    .def_readonly("stride", &OmsConfig::stride)
    .def_readonly("tau", &OmsConfig::tau)
    .def_readonly("window_ms", &OmsConfig::window_ms);

  py::class_<OmsFrame>(m, "OmsFrame")
    .def_readonly("grid", &OmsFrame::grid)
    .def_readonly("config", &OmsFrame::config);

  py::class_<HwArrayConfig>(m, "HwArrayConfig")
    .def_readonly("width", &HwArrayConfig::width)
    .def_readonly("height", &HwArrayConfig::height)
    .def_readonly("tile_side", &HwArrayConfig::tile_side)
    .def_readonly("center_side", &HwArrayConfig::center_side)
    .def_readonly("center_offset", &HwArrayConfig::center_offset)
    .def_readonly("alpha", &HwArrayConfig::alpha)
    .def_readonly("beta", &HwArrayConfig::beta)
    .def_readwrite("leak_per_step", &HwArrayConfig::leak_per_step)
    .def_readwrite("trip_setting", &HwArrayConfig::trip_setting);

  m.def(
    "parse_event_stream",
    [](const std::string & text, int width, int height) {
      return parse_event_stream(text, {width, height});
    },
    py::arg("text"), py::arg("width"), py::arg("height"));

  m.def(
    "accumulate_frame",
    [](const std::vector<DvsEvent> & events, std::int64_t t_center_us, double window_ms,
       int width, int height) {
      return accumulate_frame(events, t_center_us, window_ms, {width, height});
    },
    py::arg("events"), py::arg("t_center_us"), py::arg("window_ms"), py::arg("width"),
    py::arg("height"));

  m.def("oms_compute", &oms_compute, py::arg("frame"), py::arg("config"));
  m.def("oms_reference", &oms_reference, py::arg("frame"), py::arg("config"));
  m.def(
    "upsample_to_input",
    [](const BoolGrid & strided, int stride, int width, int height) {
      return upsample_to_input(strided, stride, {width, height});
    },
    py::arg("grid"), py::arg("stride"), py::arg("width"), py::arg("height"));

  m.def(
    "iou",
    [](const BoolGrid & pred, const BoolGrid & gt) -> py::object {
      const auto v = iou(pred, gt);
      if (!v.has_value()) {
        return py::none();
      }
      return py::float_(*v);
    },
    py::arg("pred"), py::arg("gt"));

  m.def("trip_fraction", &trip_fraction, py::arg("setting"));
  m.def(
    "quantize_tau",
    [](double tau) {
      const auto q = quantize_tau(tau);
      return py::make_tuple(q.setting, q.error, q.saturated);
    },
    py::arg("tau"));

  m.def(
    "build_array_config",
    [](const OmsConfig & cfg, int width, int height) {
      return build_array_config(cfg, {width, height});
    },
    py::arg("config"), py::arg("width"), py::arg("height"));
  m.def(
    "simulate_frame",
    [](const EventFrame & frame, const HwArrayConfig & hw, int steps) {
      return simulate_frame(frame, hw, steps);
    },
    py::arg("frame"), py::arg("hw"), py::arg("steps") = 1);
  m.def(
    "programming_plan_json",
    [](const HwArrayConfig & hw) {
      return io::programming_plan_to_json(make_programming_plan(hw));
    },
    py::arg("hw"));

  m.def(
    "gen_scene",
    [](const std::string & spec_json, double mask_rate_hz) {
      const auto spec = io::scene_spec_from_json(spec_json);
      auto out = gen_scene(spec, mask_rate_hz);
      return py::make_tuple(out.events, out.masks, out.prng_id);
    },
    py::arg("spec_json"), py::arg("mask_rate_hz"));
}
