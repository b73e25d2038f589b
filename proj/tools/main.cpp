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

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "evoms/errors.hpp"
#include "evoms/eval.hpp"
#include "evoms/events.hpp"
#include "evoms/hw.hpp"
#include "evoms/io.hpp"
#include "evoms/oms.hpp"
#include "evoms/synth.hpp"
#include "evoms/version.hpp"
#include "parallel.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace evoms;

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

std::string timestamp_utc()
{
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text(const fs::path & path, const std::string & text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << text;
}

// Every artifact directory gets a manifest sufficient to re-run the command.
void write_manifest(
  const fs::path & out_dir, const std::string & command, const json & parameters,
  const std::vector<fs::path> & inputs)
{
  json input_list = json::array();
  for (const auto & path : inputs) {
    input_list.push_back({{"path", path.string()}, {"fnv1a64", io::file_digest(path)}});
  }
  const json manifest = {
    {"command", command},
    {"parameters", parameters},
    {"inputs", input_list},
    {"tool_version", kVersion},
    {"generated_at", timestamp_utc()},
  };
  write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

Geometry parse_geometry(const std::string & text)
{
  const auto x = text.find('x');
  if (x == std::string::npos) {
    throw ValidationError("geometry must look like WIDTHxHEIGHT, got '" + text + "'");
  }
  try {
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception &) {
    throw ValidationError("geometry must look like WIDTHxHEIGHT, got '" + text + "'");
  }
}

struct OmsInputs
{
  std::vector<DvsEvent> events;
  io::MaskManifest masks;
};

OmsInputs load_inputs(const fs::path & events_path, const fs::path & masks_path)
{
  OmsInputs in;
  in.masks = io::load_mask_manifest(masks_path);
  in.events = io::load_events(events_path, in.masks.geometry);
  return in;
}

struct EngineRun
{
  std::vector<OmsFrame> frames;
  IouReport report;
  std::optional<SimTrace> trace;
};

EngineRun run_engine(
  const OmsInputs & in, const OmsConfig & cfg, const std::string & engine,
  EmptyFramePolicy policy, int jobs, int steps, double leak, int trace_frame)
{
  const auto pairs = align_frames_to_masks(in.events, in.masks.masks, cfg.window_ms);
  EngineRun run;
  run.frames.resize(pairs.size());

  if (engine == "algo") {
    tools::parallel_for(pairs.size(), jobs, [&](std::size_t i) {
      run.frames[i] = oms_compute(pairs[i].frame, cfg);
    });
  } else if (engine == "hw") {
    const auto hw_base = build_array_config(cfg, in.masks.geometry);
    tools::parallel_for(pairs.size(), jobs, [&](std::size_t i) {
      auto hw = hw_base;
      hw.leak_per_step = leak;
      run.frames[i] = simulate_frame(pairs[i].frame, hw, steps);
    });
    if (trace_frame >= 0 && static_cast<std::size_t>(trace_frame) < pairs.size()) {
      auto hw = hw_base;
      hw.leak_per_step = leak;
      SimTrace trace;
      simulate_frame(pairs[trace_frame].frame, hw, steps, &trace);
      run.trace = std::move(trace);
    }
  } else {
    throw ValidationError("unknown engine '" + engine + "' (expected algo or hw)");
  }

  std::vector<EvalPair> eval_pairs;
  eval_pairs.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    eval_pairs.push_back({run.frames[i], pairs[i].mask});
  }
  run.report = mean_iou(eval_pairs, policy);
  return run;
}

double upsampled_spike_density(const OmsFrame & frame, Geometry full)
{
  if (frame.config.stride > 1) {
    const auto up = upsample_to_input(frame.grid, frame.config.stride, full);
    return static_cast<double>(up.active_count()) / up.cells.size();
  }
  return static_cast<double>(frame.grid.active_count()) / frame.grid.cells.size();
}

// --- synth ---

int cmd_synth(const fs::path & spec_path, const fs::path & out_dir,
              std::optional<std::uint64_t> seed, double mask_rate)
{
  auto spec = io::load_scene_spec(spec_path);
  if (seed.has_value()) {
    spec.seed = *seed;
  }
  const auto scene = gen_scene(spec, mask_rate);

  fs::create_directories(out_dir);
  io::save_events(out_dir / "events.txt", scene.events);
  io::save_masks(out_dir / "masks.json", spec.geometry, scene.masks);

  write_manifest(
    out_dir, "synth",
    {
      {"spec", spec_path.string()},
      {"seed", spec.seed},
      {"mask_rate_hz", mask_rate},
      {"prng", scene.prng_id},
      {"events", scene.events.size()},
      {"masks", scene.masks.size()},
    },
    {spec_path});

  std::printf(
    "synth: %zu events, %zu masks -> %s\n", scene.events.size(), scene.masks.size(),
    out_dir.string().c_str());
  return kExitOk;
}

// --- oms ---

int cmd_oms(
  const fs::path & events_path, const fs::path & masks_path, const fs::path & config_path,
  const fs::path & out_dir, const std::string & engine, const std::string & policy_name,
  int jobs, int steps, double leak, const std::string & trace_path, int trace_frame)
{
  const auto cfg =
    config_path.empty() ? OmsConfig{} : io::load_oms_config(config_path);
  const auto policy = empty_frame_policy_from_string(policy_name);
  const auto in = load_inputs(events_path, masks_path);

  const auto run = run_engine(in, cfg, engine, policy, jobs, steps, leak,
                              trace_path.empty() ? -1 : trace_frame);

  fs::create_directories(out_dir);
  json frame_list = json::array();
  for (std::size_t i = 0; i < run.frames.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "oms_%04zu.pbm", i);
    io::save_bitmap(out_dir / name, run.frames[i].grid);
    frame_list.push_back({{"path", name}, {"t_center_us", in.masks.masks[i].t_capture_us}});
  }

  const json predictions = {
    {"geometry", {{"width", in.masks.geometry.width}, {"height", in.masks.geometry.height}}},
    {"engine", engine},
    {"config", json::parse(io::oms_config_to_json(cfg))},
    {"frames", frame_list},
  };
  write_text(out_dir / "predictions.json", predictions.dump(2) + "\n");
  write_text(out_dir / "report.json", io::iou_report_to_json(run.report));
  write_text(
    out_dir / "report.txt",
    io::iou_report_to_table(run.report, "engine=" + engine));
  if (run.trace.has_value()) {
    io::save_trace_csv(out_dir / trace_path, *run.trace);
  }

  write_manifest(
    out_dir, "oms",
    {
      {"events", events_path.string()},
      {"masks", masks_path.string()},
      {"config", json::parse(io::oms_config_to_json(cfg))},
      {"engine", engine},
      {"policy", policy_name},
      {"steps", steps},
      {"leak", leak},
    },
    {events_path, masks_path});

  if (run.report.mean_defined) {
    std::printf(
      "oms[%s]: mIoU %.2f%% over %d frames -> %s\n", engine.c_str(),
      run.report.mean_iou * 100.0, run.report.frames_evaluated, out_dir.string().c_str());
  } else {
    std::printf("oms[%s]: no evaluable frames -> %s\n", engine.c_str(),
                out_dir.string().c_str());
  }
  return kExitOk;
}

// --- sweep ---

struct SweepRow
{
  std::string label;
  bool feasible = true;
  std::string error;
  double miou = 0.0;
  bool miou_defined = false;
  double miou_small = 0.0;
  bool small_defined = false;
  double miou_large = 0.0;
  bool large_defined = false;
  double spike_density = 0.0;
  int frames = 0;
};

int cmd_sweep(
  const fs::path & events_path, const fs::path & masks_path, const fs::path & config_path,
  const fs::path & out_dir, const std::string & vary, const std::vector<std::string> & values,
  const std::string & engine, int jobs)
{
  if (values.empty()) {
    throw ValidationError("sweep needs a non-empty value list");
  }
  const auto base =
    config_path.empty() ? OmsConfig{} : io::load_oms_config(config_path);
  const auto in = load_inputs(events_path, masks_path);
  const bool per_class = vary == "kernel";

  std::vector<SweepRow> rows;
  for (const auto & value : values) {
    SweepRow row;
    OmsConfig cfg = base;
    try {
      if (vary == "stride") {
        cfg.stride = std::stoi(value);
        row.label = value;
      } else if (vary == "tau") {
        cfg.tau = std::stod(value);
        row.label = value;
      } else if (vary == "window") {
        cfg.window_ms = std::stod(value);
        row.label = value;
      } else if (vary == "kernel") {
        const auto g = parse_geometry(value);  // CENxSURR
        cfg.center_side = std::min(g.width, g.height);
        cfg.surround_side = std::max(g.width, g.height);
        if (cfg.stride > cfg.surround_side) {
          cfg.stride = cfg.surround_side;
        }
        char label[32];
        std::snprintf(label, sizeof(label), "%dx%d/%dx%d", cfg.center_side, cfg.center_side,
                      cfg.surround_side, cfg.surround_side);
        row.label = label;
      } else {
        throw ValidationError("unknown sweep dimension '" + vary + "'");
      }

      const auto run =
        run_engine(in, cfg, engine, EmptyFramePolicy::skip, jobs, 1, 0.0, -1);
      row.miou_defined = run.report.mean_defined;
      row.miou = run.report.mean_iou;
      row.frames = run.report.frames_evaluated;

      double density = 0.0;
      for (const auto & frame : run.frames) {
        density += upsampled_spike_density(frame, in.masks.geometry);
      }
      row.spike_density = run.frames.empty() ? 0.0 : density / run.frames.size();

      if (per_class) {
        const auto pairs = align_frames_to_masks(in.events, in.masks.masks, cfg.window_ms);
        std::vector<EvalPair> small_pairs;
        std::vector<EvalPair> large_pairs;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          if (object_size_class(pairs[i].mask) == SizeClass::small) {
            small_pairs.push_back({run.frames[i], pairs[i].mask});
          } else {
            large_pairs.push_back({run.frames[i], pairs[i].mask});
          }
        }
        const auto small_report = mean_iou(small_pairs, EmptyFramePolicy::skip);
        const auto large_report = mean_iou(large_pairs, EmptyFramePolicy::skip);
        row.small_defined = small_report.mean_defined;
        row.miou_small = small_report.mean_iou;
        row.large_defined = large_report.mean_defined;
        row.miou_large = large_report.mean_iou;
      }
    } catch (const FeasibilityError & e) {
      row.feasible = false;
      row.error = e.violations().empty() ? e.what() : e.violations().front();
    } catch (const ValidationError & e) {
      row.feasible = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }

  // CSV + aligned text table.
  std::string csv;
  std::string table;
  csv += "# kernel pairs are normalized to (center, surround); larger-first input is swapped\n";
  if (per_class) {
    csv += vary + ",miou_percent,miou_large_percent,miou_small_percent,spike_density,frames,status\n";
    table = "value        mIoU(%)  large(%)  small(%)\n";
  } else {
    csv += vary + ",miou_percent,spike_density,frames,status\n";
    table = "value        mIoU(%)\n";
  }
  char line[256];
  for (const auto & row : rows) {
    if (!row.feasible) {
      csv += row.label + (per_class ? ",,,,,," : ",,,,") + "infeasible: " + row.error + "\n";
      std::snprintf(line, sizeof(line), "%-12s infeasible: %s\n", row.label.c_str(),
                    row.error.c_str());
      table += line;
      continue;
    }
    if (per_class) {
      std::snprintf(
        line, sizeof(line), "%s,%.2f,%s,%s,%.6f,%d,ok\n", row.label.c_str(),
        row.miou_defined ? row.miou * 100.0 : 0.0,
        row.large_defined ? (std::to_string(row.miou_large * 100.0)).c_str() : "",
        row.small_defined ? (std::to_string(row.miou_small * 100.0)).c_str() : "",
        row.spike_density, row.frames);
      csv += line;
      std::snprintf(
        line, sizeof(line), "%-12s %7.2f  %8.2f  %8.2f\n", row.label.c_str(),
        row.miou_defined ? row.miou * 100.0 : 0.0, row.large_defined ? row.miou_large * 100.0 : 0.0,
        row.small_defined ? row.miou_small * 100.0 : 0.0);
      table += line;
    } else {
      std::snprintf(
        line, sizeof(line), "%s,%.2f,%.6f,%d,ok\n", row.label.c_str(),
        row.miou_defined ? row.miou * 100.0 : 0.0, row.spike_density, row.frames);
      csv += line;
      std::snprintf(line, sizeof(line), "%-12s %7.2f\n", row.label.c_str(),
                    row.miou_defined ? row.miou * 100.0 : 0.0);
      table += line;
    }
  }

  fs::create_directories(out_dir);
  write_text(out_dir / "sweep.csv", csv);
  write_text(out_dir / "sweep.txt", table);

  json value_list = json::array();
  for (const auto & v : values) {
    value_list.push_back(v);
  }
  write_manifest(
    out_dir, "sweep",
    {
      {"events", events_path.string()},
      {"masks", masks_path.string()},
      {"base_config", json::parse(io::oms_config_to_json(base))},
      {"vary", vary},
      {"values", value_list},
      {"engine", engine},
      {"notes", "kernel pairs are (center, surround); larger-first pairs are normalized"},
    },
    {events_path, masks_path});

  std::fputs(table.c_str(), stdout);
  return kExitOk;
}

// --- hwplan ---

int cmd_hwplan(const fs::path & config_path, const std::string & geometry_text,
               const fs::path & out_path)
{
  const auto cfg =
    config_path.empty() ? OmsConfig{} : io::load_oms_config(config_path);
  const auto geometry = parse_geometry(geometry_text);
  const auto hw = build_array_config(cfg, geometry);
  const auto plan = make_programming_plan(hw);
  if (!(config_from_plan(plan) == hw)) {
    throw Error("programming plan failed its round-trip audit");
  }
  if (!out_path.parent_path().empty()) {
    fs::create_directories(out_path.parent_path());
  }
  write_text(out_path, io::programming_plan_to_json(plan));
  std::printf(
    "hwplan: %d unit cells, tile %dx%d, trip %+d -> %s\n",
    static_cast<int>(plan.cells.size()), plan.tile_side, plan.tile_side, plan.trip_setting,
    out_path.string().c_str());
  return kExitOk;
}

// --- eval ---

int cmd_eval(
  const fs::path & pred_path, const fs::path & masks_path, const std::string & policy_name,
  const fs::path & out_dir)
{
  const auto policy = empty_frame_policy_from_string(policy_name);
  const auto manifest = io::load_mask_manifest(masks_path);

  std::ifstream pred_file(pred_path);
  if (!pred_file) {
    throw IoError("cannot open " + pred_path.string());
  }
  json predictions = json::parse(pred_file, nullptr, false);
  if (predictions.is_discarded()) {
    throw ValidationError("malformed predictions JSON");
  }

  const auto cfg = io::oms_config_from_json(predictions.at("config").dump());
  const auto base = pred_path.parent_path();
  std::vector<EvalPair> pairs;
  const auto & frames = predictions.at("frames");
  if (frames.size() != manifest.masks.size()) {
    throw ValidationError("prediction and mask counts differ");
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    OmsFrame frame{io::load_bitmap(base / frames[i].at("path").get<std::string>()), cfg};
    pairs.push_back({std::move(frame), manifest.masks[i]});
  }

  const auto report = mean_iou(pairs, policy);
  fs::create_directories(out_dir);
  write_text(out_dir / "report.json", io::iou_report_to_json(report));
  write_text(out_dir / "report.txt", io::iou_report_to_table(report, "eval"));
  write_manifest(
    out_dir, "eval",
    {
      {"predictions", pred_path.string()},
      {"masks", masks_path.string()},
      {"policy", policy_name},
    },
    {pred_path, masks_path});

  if (report.mean_defined) {
    std::printf("eval: mIoU %.2f%% over %d frames\n", report.mean_iou * 100.0,
                report.frames_evaluated);
  } else {
    std::printf("eval: no evaluable frames\n");
  }
  return kExitOk;
}

// --- evimo import ---

int cmd_evimo_import(
  const fs::path & events_path, const fs::path & masks_list_path,
  const std::string & geometry_text, const fs::path & out_dir)
{
  const auto geometry = parse_geometry(geometry_text);
  const auto events = io::load_events(events_path, geometry);

  // masks list: one `t_seconds path` per line, paths relative to the list.
  std::ifstream list(masks_list_path);
  if (!list) {
    throw IoError("cannot open " + masks_list_path.string());
  }
  std::vector<GroundTruthMask> masks;
  std::string line;
  std::size_t line_no = 0;
  const auto base = masks_list_path.parent_path();
  while (std::getline(list, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    double t_seconds = 0.0;
    std::string rel;
    if (!(fields >> t_seconds >> rel)) {
      throw ParseError(line_no, "expected `t_seconds path`");
    }
    GroundTruthMask mask;
    mask.t_capture_us = std::llround(t_seconds * 1e6);
    mask.grid = io::load_bitmap(base / rel);
    if (mask.grid.geometry() != geometry) {
      throw ValidationError(
        "mask " + rel + " does not match geometry " + geometry_text);
    }
    masks.push_back(std::move(mask));
  }
  std::sort(masks.begin(), masks.end(), [](const auto & a, const auto & b) {
    return a.t_capture_us < b.t_capture_us;
  });

  fs::create_directories(out_dir);
  io::save_events(out_dir / "events.txt", events);
  io::save_masks(out_dir / "masks.json", geometry, masks);
  write_manifest(
    out_dir, "evimo import",
    {
      {"events", events_path.string()},
      {"masks_list", masks_list_path.string()},
      {"geometry", geometry_text},
    },
    {events_path, masks_list_path});

  std::printf(
    "evimo import: %zu events, %zu masks -> %s\n", events.size(), masks.size(),
    out_dir.string().c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"event-camera object-motion segmentation with a compute-array model"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // synth
  auto * synth = app.add_subcommand("synth", "generate a synthetic scene");
  std::string synth_spec;
  std::string synth_out;
  double synth_mask_rate = 40.0;
  std::optional<std::uint64_t> synth_seed;
  synth->add_option("--spec", synth_spec, "scene spec JSON")->required();
  synth->add_option("--out", synth_out, "output directory")->required();
  synth->add_option("--mask-rate", synth_mask_rate, "mask sample rate in Hz");
  synth->add_option("--seed", synth_seed, "override the spec's seed");

  // oms
  auto * oms = app.add_subcommand("oms", "compute spike frames and score them");
  std::string oms_events;
  std::string oms_masks;
  std::string oms_config;
  std::string oms_out;
  std::string oms_engine = "algo";
  std::string oms_policy = "skip";
  std::string oms_trace;
  int oms_jobs = 1;
  int oms_steps = 1;
  int oms_trace_frame = 0;
  double oms_leak = 0.0;
  oms->add_option("--events", oms_events, "event text file")->required();
  oms->add_option("--masks", oms_masks, "mask manifest JSON")->required();
  oms->add_option("--config", oms_config, "config JSON (defaults apply when omitted)");
  oms->add_option("--out", oms_out, "output directory")->required();
  oms->add_option("--engine", oms_engine, "algo | hw");
  oms->add_option("--policy", oms_policy, "both-empty frame policy: skip | count_as_one");
  oms->add_option("--jobs", oms_jobs, "worker threads");
  oms->add_option("--steps", oms_steps, "hw engine accumulation steps");
  oms->add_option("--leak", oms_leak, "hw engine leak per step");
  oms->add_option("--trace", oms_trace, "hw engine: write a charge trace CSV (relative to --out)");
  oms->add_option("--trace-frame", oms_trace_frame, "frame index to trace");

  // sweep
  auto * sweep = app.add_subcommand("sweep", "parameter sweep with table output");
  std::string sweep_events;
  std::string sweep_masks;
  std::string sweep_config;
  std::string sweep_out;
  std::string sweep_vary;
  std::string sweep_engine = "algo";
  std::vector<std::string> sweep_values;
  int sweep_jobs = 1;
  sweep->add_option("--events", sweep_events)->required();
  sweep->add_option("--masks", sweep_masks)->required();
  sweep->add_option("--config", sweep_config, "base config JSON");
  sweep->add_option("--out", sweep_out)->required();
  sweep->add_option("--vary", sweep_vary, "stride | kernel | tau | window")->required();
  sweep->add_option("--values", sweep_values, "sweep values (kernel: CENxSURR)")
    ->required()
    ->expected(-1);
  sweep->add_option("--engine", sweep_engine, "algo | hw");
  sweep->add_option("--jobs", sweep_jobs, "worker threads");

  // hwplan
  auto * hwplan = app.add_subcommand("hwplan", "emit the array programming plan");
  std::string hwplan_config;
  std::string hwplan_geometry;
  std::string hwplan_out;
  hwplan->add_option("--config", hwplan_config, "config JSON");
  hwplan->add_option("--geometry", hwplan_geometry, "array geometry WIDTHxHEIGHT")->required();
  hwplan->add_option("--out", hwplan_out, "plan JSON path")->required();

  // eval
  auto * eval = app.add_subcommand("eval", "score stored predictions against masks");
  std::string eval_pred;
  std::string eval_masks;
  std::string eval_policy = "skip";
  std::string eval_out;
  eval->add_option("--pred", eval_pred, "predictions.json from `oms`")->required();
  eval->add_option("--masks", eval_masks, "mask manifest JSON")->required();
  eval->add_option("--policy", eval_policy, "skip | count_as_one");
  eval->add_option("--out", eval_out, "output directory")->required();

  // evimo import
  auto * evimo = app.add_subcommand("evimo", "external dataset helpers");
  auto * evimo_import = evimo->add_subcommand("import", "convert text events + mask images");
  std::string evimo_events;
  std::string evimo_list;
  std::string evimo_geometry;
  std::string evimo_out;
  evimo_import->add_option("--events", evimo_events, "text events (seconds or us)")->required();
  evimo_import->add_option("--masks-list", evimo_list, "lines of `t_seconds mask_path`")
    ->required();
  evimo_import->add_option("--geometry", evimo_geometry, "sensor geometry WIDTHxHEIGHT")
    ->required();
  evimo_import->add_option("--out", evimo_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (synth->parsed()) {
      return cmd_synth(synth_spec, synth_out, synth_seed, synth_mask_rate);
    }
    if (oms->parsed()) {
      return cmd_oms(
        oms_events, oms_masks, oms_config, oms_out, oms_engine, oms_policy, oms_jobs, oms_steps,
        oms_leak, oms_trace, oms_trace_frame);
    }
    if (sweep->parsed()) {
      return cmd_sweep(
        sweep_events, sweep_masks, sweep_config, sweep_out, sweep_vary, sweep_values,
        sweep_engine, sweep_jobs);
    }
    if (hwplan->parsed()) {
      return cmd_hwplan(hwplan_config, hwplan_geometry, hwplan_out);
    }
    if (eval->parsed()) {
      return cmd_eval(eval_pred, eval_masks, eval_policy, eval_out);
    }
    if (evimo->parsed()) {
      return cmd_evimo_import(evimo_events, evimo_list, evimo_geometry, evimo_out);
    }
  } catch (const IoError & e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error & e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
