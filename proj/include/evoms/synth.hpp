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

#ifndef EVOMS_SYNTH_HPP
#define EVOMS_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "evoms/events.hpp"
#include "evoms/grid.hpp"

namespace evoms
{

// Desk-scale synthetic scene generator.
//
// Event model: the scene is a set of moving textured elements — background
// specks hashed from the seed, per-object border strips and interior dot
// patches, all opaque-object-occluded. While an element moves, every screen
// cell it covers by at least half (per axis) emits one event per texture tick;
// ticks fire every 1/event_rate_per_edge seconds. Static elements emit
// nothing. Output is deterministic in the spec and seed.

struct SceneObject
{
  int width = 0;
  int height = 0;
  double start_x = 0.0;
  double start_y = 0.0;
  double vel_x = 0.0;  // world velocity, px/s; screen motion is vel - ego
  double vel_y = 0.0;
  bool border = true;
  int dot_side = 4;    // interior texture: dot_side x dot_side patches
  int dot_pitch = 8;   // on a dot_pitch lattice anchored to the object
  double dot_fill = -1.0;  // patch keep probability; < 0 means bg_texture_density
};

struct SceneSpec
{
  Geometry geometry;
  double duration_ms = 0.0;
  double bg_texture_density = 0.0;  // fraction of background cells carrying a speck
  double ego_vx = 0.0;              // camera velocity, px/s
  double ego_vy = 0.0;
  std::vector<SceneObject> objects;
  double event_rate_per_edge = 62.5;  // texture ticks per second while moving
  double noise_rate = 0.0;            // uniform events/s/pixel
  std::uint64_t seed = 1;

  void validate() const;
};

struct SceneOutput
{
  std::vector<DvsEvent> events;
  std::vector<GroundTruthMask> masks;
  std::string prng_id;  // recorded in manifests for reproducibility
};

// Masks are sampled at mask_rate_hz and contain exactly the object footprints
// at mask time (clipped to the frame).
SceneOutput gen_scene(const SceneSpec & spec, double mask_rate_hz);

}  // namespace evoms

#endif  // EVOMS_SYNTH_HPP
