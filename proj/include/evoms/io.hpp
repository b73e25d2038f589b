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

#ifndef EVOMS_IO_HPP
#define EVOMS_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "evoms/eval.hpp"
#include "evoms/events.hpp"
#include "evoms/hw.hpp"
#include "evoms/oms.hpp"
#include "evoms/synth.hpp"

namespace evoms::io
{

// --- event text files: one `t x y polarity` per line, '#' comments ---

std::vector<DvsEvent> load_events(const std::filesystem::path & path, Geometry geometry);
void save_events(const std::filesystem::path & path, std::span<const DvsEvent> events);

// --- bitmaps: P1 written, P1/P2/P5 read; any nonzero sample is active ---

BoolGrid load_bitmap(const std::filesystem::path & path);
void save_bitmap(const std::filesystem::path & path, const BoolGrid & grid);

// --- mask manifest: JSON listing {path, t_capture_us} + geometry ---

struct MaskManifest
{
  Geometry geometry;
  std::vector<GroundTruthMask> masks;
};

MaskManifest load_mask_manifest(const std::filesystem::path & path);
void save_masks(
  const std::filesystem::path & manifest_path, Geometry geometry,
  std::span<const GroundTruthMask> masks);

// --- configs / reports / plans as JSON ---

OmsConfig oms_config_from_json(const std::string & text);
std::string oms_config_to_json(const OmsConfig & config);
OmsConfig load_oms_config(const std::filesystem::path & path);

SceneSpec scene_spec_from_json(const std::string & text);
std::string scene_spec_to_json(const SceneSpec & spec);
SceneSpec load_scene_spec(const std::filesystem::path & path);

std::string iou_report_to_json(const IouReport & report);
std::string iou_report_to_table(const IouReport & report, const std::string & title);

std::string programming_plan_to_json(const ProgrammingPlan & plan);
ProgrammingPlan programming_plan_from_json(const std::string & text);

void save_trace_csv(const std::filesystem::path & path, const SimTrace & trace);

// FNV-1a 64-bit digest of a file's bytes, hex encoded; used in run manifests.
std::string file_digest(const std::filesystem::path & path);

}  // namespace evoms::io

#endif  // EVOMS_IO_HPP
