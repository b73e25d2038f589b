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

#include "evoms/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "evoms/errors.hpp"

namespace evoms::io
{

using nlohmann::json;

namespace
{

std::string read_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path & path, const std::string & data)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << data;
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

json parse_json(const std::string & text, const char * what)
{
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ValidationError(std::string("malformed JSON in ") + what);
  }
  return j;
}

void reject_unknown_keys(const json & j, std::initializer_list<const char *> known,
                         const char * what)
{
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find_if(known.begin(), known.end(), [&](const char * k) {
          return it.key() == k;
        }) == known.end()) {
      throw ValidationError(std::string("unknown key '") + it.key() + "' in " + what);
    }
  }
}

}  // namespace

std::vector<DvsEvent> load_events(const std::filesystem::path & path, Geometry geometry)
{
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  return parse_event_stream(in, geometry);
}

void save_events(const std::filesystem::path & path, std::span<const DvsEvent> events)
{
  std::ostringstream out;
  out << "# t_us x y polarity\n";
  for (const auto & e : events) {
    out << e.t_us << ' ' << e.x << ' ' << e.y << ' ' << (e.polarity > 0 ? 1 : 0) << '\n';
  }
  write_file(path, out.str());
}

BoolGrid load_bitmap(const std::filesystem::path & path)
{
  const std::string data = read_file(path);
  std::istringstream in(data);

  std::string magic;
  in >> magic;
  if (magic != "P1" && magic != "P2" && magic != "P5") {
    throw ValidationError(path.string() + ": unsupported bitmap magic '" + magic + "'");
  }

  auto next_token = [&in]() {
    std::string tok;
    while (in >> tok) {
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return tok;
    }
    throw ValidationError("truncated bitmap header");
  };

  const int width = std::stoi(next_token());
  const int height = std::stoi(next_token());
  if (width <= 0 || height <= 0) {
    throw ValidationError(path.string() + ": bad bitmap dimensions");
  }

  BoolGrid grid(width, height);
  if (magic == "P1") {
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        grid.set(y, x, std::stoi(next_token()) != 0);
      }
    }
  } else if (magic == "P2") {
    (void)next_token();  // maxval
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        grid.set(y, x, std::stoi(next_token()) != 0);
      }
    }
  } else {  // P5
    (void)next_token();  // maxval (assumed <= 255)
    in.get();            // single whitespace before raster
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const int ch = in.get();
        if (ch == EOF) {
          throw ValidationError(path.string() + ": truncated P5 raster");
        }
        grid.set(y, x, ch != 0);
      }
    }
  }
  return grid;
}

void save_bitmap(const std::filesystem::path & path, const BoolGrid & grid)
{
  std::ostringstream out;
  out << "P1\n" << grid.width << ' ' << grid.height << '\n';
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      out << (grid.at(y, x) ? '1' : '0');
      out << (x + 1 == grid.width ? '\n' : ' ');
    }
  }
  write_file(path, out.str());
}

MaskManifest load_mask_manifest(const std::filesystem::path & path)
{
  const json j = parse_json(read_file(path), "mask manifest");
  MaskManifest manifest;
  manifest.geometry.width = j.at("geometry").at("width").get<int>();
  manifest.geometry.height = j.at("geometry").at("height").get<int>();

  const auto base = path.parent_path();
  for (const auto & entry : j.at("masks")) {
    GroundTruthMask mask;
    mask.t_capture_us = entry.at("t_capture_us").get<std::int64_t>();
    mask.grid = load_bitmap(base / entry.at("path").get<std::string>());
    if (mask.grid.geometry() != manifest.geometry) {
      throw ValidationError("mask dimensions do not match manifest geometry");
    }
    manifest.masks.push_back(std::move(mask));
  }
  return manifest;
}

void save_masks(
  const std::filesystem::path & manifest_path, Geometry geometry,
  std::span<const GroundTruthMask> masks)
{
  const auto base = manifest_path.parent_path();
  json entries = json::array();
  int index = 0;
  for (const auto & mask : masks) {
    char name[32];
    std::snprintf(name, sizeof(name), "mask_%04d.pbm", index++);
    save_bitmap(base / name, mask.grid);
    entries.push_back({{"path", name}, {"t_capture_us", mask.t_capture_us}});
  }
  json j = {
    {"geometry", {{"width", geometry.width}, {"height", geometry.height}}},
    {"masks", entries},
  };
  write_file(manifest_path, j.dump(2) + "\n");
}

OmsConfig oms_config_from_json(const std::string & text)
{
  const json j = parse_json(text, "oms config");
  reject_unknown_keys(
    j,
    {"center_side", "surround_side", "stride", "tau", "window_ms", "kernel_kind",
     "gaussian_sigma_ratio"},
    "oms config");

  OmsConfig cfg;  // defaults apply when keys are omitted
  if (j.contains("center_side")) cfg.center_side = j.at("center_side").get<int>();
  if (j.contains("surround_side")) cfg.surround_side = j.at("surround_side").get<int>();
  if (j.contains("stride")) cfg.stride = j.at("stride").get<int>();
  if (j.contains("tau")) cfg.tau = j.at("tau").get<double>();
  if (j.contains("window_ms")) cfg.window_ms = j.at("window_ms").get<double>();
  if (j.contains("kernel_kind")) {
    cfg.kernel_kind = kernel_kind_from_string(j.at("kernel_kind").get<std::string>());
  }
  if (j.contains("gaussian_sigma_ratio")) {
    cfg.gaussian_sigma_ratio = j.at("gaussian_sigma_ratio").get<double>();
  }
  cfg.validate();
  return cfg;
}

std::string oms_config_to_json(const OmsConfig & config)
{
  const json j = {
    {"center_side", config.center_side},
    {"surround_side", config.surround_side},
    {"stride", config.stride},
    {"tau", config.tau},
    {"window_ms", config.window_ms},
    {"kernel_kind", to_string(config.kernel_kind)},
    {"gaussian_sigma_ratio", config.gaussian_sigma_ratio},
  };
  return j.dump(2) + "\n";
}

OmsConfig load_oms_config(const std::filesystem::path & path)
{
  return oms_config_from_json(read_file(path));
}

SceneSpec scene_spec_from_json(const std::string & text)
{
  const json j = parse_json(text, "scene spec");
  reject_unknown_keys(
    j,
    {"geometry", "duration_ms", "bg_texture_density", "ego_velocity", "objects",
     "event_rate_per_edge", "noise_rate", "seed"},
    "scene spec");

  SceneSpec spec;
  spec.geometry.width = j.at("geometry").at("width").get<int>();
  spec.geometry.height = j.at("geometry").at("height").get<int>();
  spec.duration_ms = j.at("duration_ms").get<double>();
  if (j.contains("bg_texture_density")) {
    spec.bg_texture_density = j.at("bg_texture_density").get<double>();
  }
  if (j.contains("ego_velocity")) {
    spec.ego_vx = j.at("ego_velocity").at(0).get<double>();
    spec.ego_vy = j.at("ego_velocity").at(1).get<double>();
  }
  if (j.contains("event_rate_per_edge")) {
    spec.event_rate_per_edge = j.at("event_rate_per_edge").get<double>();
  }
  if (j.contains("noise_rate")) {
    spec.noise_rate = j.at("noise_rate").get<double>();
  }
  if (j.contains("seed")) {
    spec.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("objects")) {
    for (const auto & o : j.at("objects")) {
      reject_unknown_keys(
        o, {"size", "start", "velocity", "border", "dot_side", "dot_pitch", "dot_fill"},
        "scene object");
      SceneObject obj;
      obj.width = o.at("size").at(0).get<int>();
      obj.height = o.at("size").at(1).get<int>();
      obj.start_x = o.at("start").at(0).get<double>();
      obj.start_y = o.at("start").at(1).get<double>();
      obj.vel_x = o.at("velocity").at(0).get<double>();
      obj.vel_y = o.at("velocity").at(1).get<double>();
      if (o.contains("border")) obj.border = o.at("border").get<bool>();
      if (o.contains("dot_side")) obj.dot_side = o.at("dot_side").get<int>();
      if (o.contains("dot_pitch")) obj.dot_pitch = o.at("dot_pitch").get<int>();
      if (o.contains("dot_fill")) obj.dot_fill = o.at("dot_fill").get<double>();
      spec.objects.push_back(obj);
    }
  }
  spec.validate();
  return spec;
}

std::string scene_spec_to_json(const SceneSpec & spec)
{
  json objects = json::array();
  for (const auto & o : spec.objects) {
    objects.push_back({
      {"size", {o.width, o.height}},
      {"start", {o.start_x, o.start_y}},
      {"velocity", {o.vel_x, o.vel_y}},
      {"border", o.border},
      {"dot_side", o.dot_side},
      {"dot_pitch", o.dot_pitch},
      {"dot_fill", o.dot_fill},
    });
  }
  const json j = {
    {"geometry", {{"width", spec.geometry.width}, {"height", spec.geometry.height}}},
    {"duration_ms", spec.duration_ms},
    {"bg_texture_density", spec.bg_texture_density},
    {"ego_velocity", {spec.ego_vx, spec.ego_vy}},
    {"objects", objects},
    {"event_rate_per_edge", spec.event_rate_per_edge},
    {"noise_rate", spec.noise_rate},
    {"seed", spec.seed},
  };
  return j.dump(2) + "\n";
}

SceneSpec load_scene_spec(const std::filesystem::path & path)
{
  return scene_spec_from_json(read_file(path));
}

std::string iou_report_to_json(const IouReport & report)
{
  json j = {
    {"per_frame", report.per_frame},
    {"frames_evaluated", report.frames_evaluated},
    {"empty_frame_policy", to_string(report.policy)},
    {"mean_defined", report.mean_defined},
  };
  if (report.mean_defined) {
    j["mean_iou"] = report.mean_iou;
  } else {
    j["mean_iou"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string iou_report_to_table(const IouReport & report, const std::string & title)
{
  std::ostringstream out;
  out << title << '\n';
  out << "frame    IoU(%)\n";
  char line[64];
  for (std::size_t i = 0; i < report.per_frame.size(); ++i) {
    std::snprintf(line, sizeof(line), "%-8zu %6.2f\n", i, report.per_frame[i] * 100.0);
    out << line;
  }
  if (report.mean_defined) {
    std::snprintf(line, sizeof(line), "mean     %6.2f\n", report.mean_iou * 100.0);
    out << line;
  } else {
    out << "mean     undefined (no evaluable frames)\n";
  }
  return out.str();
}

std::string programming_plan_to_json(const ProgrammingPlan & plan)
{
  json cells = json::array();
  for (const auto & cell : plan.cells) {
    cells.push_back({
      {"cell_id", cell.cell_id},
      {"row", cell.row},
      {"col", cell.col},
      {"role_bits", cell.role_bit},
      {"gate_enables", {{"east", cell.gate_east}, {"south", cell.gate_south}}},
    });
  }
  const json j = {
    {"width", plan.width},
    {"height", plan.height},
    {"tile_side", plan.tile_side},
    {"center_side", plan.center_side},
    {"center_offset", plan.center_offset},
    {"alpha", plan.alpha},
    {"beta", plan.beta},
    {"leak_per_step", plan.leak_per_step},
    {"trip_setting", plan.trip_setting},
    {"cell_order", "row-major by unit cell"},
    {"cells", cells},
  };
  return j.dump(2) + "\n";
}

ProgrammingPlan programming_plan_from_json(const std::string & text)
{
  const json j = parse_json(text, "programming plan");
  ProgrammingPlan plan;
  plan.width = j.at("width").get<int>();
  plan.height = j.at("height").get<int>();
  plan.tile_side = j.at("tile_side").get<int>();
  plan.center_side = j.at("center_side").get<int>();
  plan.center_offset = j.at("center_offset").get<int>();
  plan.alpha = j.at("alpha").get<double>();
  plan.beta = j.at("beta").get<double>();
  plan.leak_per_step = j.at("leak_per_step").get<double>();
  plan.trip_setting = j.at("trip_setting").get<int>();
  for (const auto & c : j.at("cells")) {
    UnitCellProgram cell;
    cell.cell_id = c.at("cell_id").get<int>();
    cell.row = c.at("row").get<int>();
    cell.col = c.at("col").get<int>();
    cell.role_bit = c.at("role_bits").get<int>();
    cell.gate_east = c.at("gate_enables").at("east").get<bool>();
    cell.gate_south = c.at("gate_enables").at("south").get<bool>();
    plan.cells.push_back(cell);
  }
  return plan;
}

void save_trace_csv(const std::filesystem::path & path, const SimTrace & trace)
{
  std::ostringstream out;
  out << "tile_id,step,v\n";
  char line[80];
  for (const auto & row : trace.rows) {
    std::snprintf(line, sizeof(line), "%d,%d,%.17g\n", row.tile_id, row.step, row.v);
    out << line;
  }
  write_file(path, out.str());
}

std::string file_digest(const std::filesystem::path & path)
{
  const std::string data = read_file(path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace evoms::io
