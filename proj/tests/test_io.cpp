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

#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "evoms/errors.hpp"
#include "evoms/io.hpp"

using namespace evoms;
namespace fs = std::filesystem;

namespace
{

fs::path temp_dir(const char * tag)
{
  auto dir = fs::temp_directory_path() / (std::string("evoms_io_") + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("events file round trip")
{
  const auto dir = temp_dir("events");
  std::vector<DvsEvent> events = {
    {0, 1, 2, -1},
    {1500, 3, 4, 1},
    {2500, 0, 0, 1},
  };
  io::save_events(dir / "events.txt", events);
  const auto loaded = io::load_events(dir / "events.txt", {8, 8});
  CHECK(loaded == events);

  CHECK_THROWS_AS(io::load_events(dir / "missing.txt", {8, 8}), IoError);
}

TEST_CASE("bitmap round trip and foreign formats")
{
  const auto dir = temp_dir("bitmap");
  BoolGrid grid(5, 3);
  grid.set(0, 0, true);
  grid.set(2, 4, true);
  grid.set(1, 2, true);
  io::save_bitmap(dir / "g.pbm", grid);
  CHECK(io::load_bitmap(dir / "g.pbm") == grid);

  {
    std::ofstream p2(dir / "g.pgm");
    p2 << "P2\n# comment\n3 2\n255\n0 200 0\n7 0 0\n";
  }
  const auto pgm = io::load_bitmap(dir / "g.pgm");
  CHECK(pgm.at(0, 1));
  CHECK(pgm.at(1, 0));
  CHECK(pgm.active_count() == 2);

  {
    std::ofstream p5(dir / "g5.pgm", std::ios::binary);
    p5 << "P5\n2 2\n255\n";
    const unsigned char raster[4] = {0, 255, 1, 0};
    p5.write(reinterpret_cast<const char *>(raster), 4);
  }
  const auto p5 = io::load_bitmap(dir / "g5.pgm");
  CHECK(p5.at(0, 1));
  CHECK(p5.at(1, 0));
  CHECK(p5.active_count() == 2);
}

TEST_CASE("mask manifest round trip")
{
  const auto dir = temp_dir("masks");
  std::vector<GroundTruthMask> masks;
  BoolGrid g(6, 4);
  g.set(1, 1, true);
  masks.push_back({g, 0});
  masks.push_back({BoolGrid(6, 4), 25000});

  io::save_masks(dir / "masks.json", {6, 4}, masks);
  const auto manifest = io::load_mask_manifest(dir / "masks.json");
  CHECK(manifest.geometry == Geometry{6, 4});
  REQUIRE(manifest.masks.size() == 2);
  CHECK(manifest.masks[0].grid == g);
  CHECK(manifest.masks[0].t_capture_us == 0);
  CHECK(manifest.masks[1].t_capture_us == 25000);
}

TEST_CASE("oms config json: defaults, round trip, rejects unknown keys")
{
  const auto defaults = io::oms_config_from_json("{}");
  CHECK(defaults.center_side == 4);
  CHECK(defaults.surround_side == 8);
  CHECK(defaults.stride == 1);
  CHECK(defaults.tau == 0.96);
  CHECK(defaults.window_ms == 20.0);
  CHECK(defaults.kernel_kind == KernelKind::gaussian);

  OmsConfig cfg;
  cfg.center_side = 6;
  cfg.surround_side = 10;
  cfg.stride = 10;
  cfg.tau = 0.69;
  cfg.window_ms = 10.0;
  cfg.kernel_kind = KernelKind::uniform;
  const auto back = io::oms_config_from_json(io::oms_config_to_json(cfg));
  CHECK(back == cfg);

  CHECK_THROWS_AS(io::oms_config_from_json("{\"centre_side\": 4}"), ValidationError);
  CHECK_THROWS_AS(io::oms_config_from_json("{\"tau\": 1.5}"), ValidationError);
  CHECK_THROWS_AS(io::oms_config_from_json("not json"), ValidationError);
}

TEST_CASE("scene spec json round trip")
{
  SceneSpec spec;
  spec.geometry = {128, 96};
  spec.duration_ms = 1500.0;
  spec.bg_texture_density = 0.1;
  spec.ego_vx = 12.0;
  spec.seed = 7;
  SceneObject obj;
  obj.width = 40;
  obj.height = 40;
  obj.start_x = 8;
  obj.start_y = 24;
  obj.vel_x = 37.0;
  obj.border = false;
  obj.dot_fill = 1.0;
  spec.objects.push_back(obj);

  const auto back = io::scene_spec_from_json(io::scene_spec_to_json(spec));
  CHECK(back.geometry == spec.geometry);
  CHECK(back.objects.size() == 1);
  CHECK(back.objects[0].vel_x == 37.0);
  CHECK(back.objects[0].border == false);
  CHECK(back.seed == 7);
}

TEST_CASE("file digest is stable and content-sensitive")
{
  const auto dir = temp_dir("digest");
  {
    std::ofstream f(dir / "a.txt");
    f << "abc";
  }
  {
    std::ofstream f(dir / "b.txt");
    f << "abd";
  }
  CHECK(io::file_digest(dir / "a.txt") == io::file_digest(dir / "a.txt"));
  CHECK(io::file_digest(dir / "a.txt") != io::file_digest(dir / "b.txt"));
  CHECK(io::file_digest(dir / "a.txt").size() == 16);
}
