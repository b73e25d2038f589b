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

#include "evoms/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "evoms/errors.hpp"

namespace evoms
{

namespace
{

std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_cell(std::uint64_t seed, std::int64_t a, std::int64_t b, std::uint64_t salt)
{
  std::uint64_t h = splitmix64(seed ^ salt);
  h = splitmix64(h ^ static_cast<std::uint64_t>(a) * 0x9e3779b97f4a7c15ULL);
  h = splitmix64(h ^ static_cast<std::uint64_t>(b));
  return h;
}

double hash_unit(std::uint64_t h)
{
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// A unit cell at continuous offset f covers screen cell floor(f + 0.5) by at
// least half along that axis (the 0.5 tie goes to the lower cell).
int covered_cell(double f)
{
  return static_cast<int>(std::floor(f + 0.5));
}

struct FootprintRect
{
  int x0 = 0;
  int y0 = 0;
  int w = 0;
  int h = 0;

  bool contains(int x, int y) const
  {
    return x >= x0 && x < x0 + w && y >= y0 && y < y0 + h;
  }
};

// Object-local texture cells, precomputed once per object.
struct ObjectTexture
{
  std::vector<std::pair<int, int>> cells;  // (ly, lx)
};

ObjectTexture build_object_texture(
  const SceneObject & obj, double bg_density, std::uint64_t seed, std::size_t index)
{
  ObjectTexture tex;
  if (obj.border) {
    for (int x = 0; x < obj.width; ++x) {
      tex.cells.emplace_back(0, x);
      if (obj.height > 1) {
        tex.cells.emplace_back(obj.height - 1, x);
      }
    }
    for (int y = 1; y + 1 < obj.height; ++y) {
      tex.cells.emplace_back(y, 0);
      if (obj.width > 1) {
        tex.cells.emplace_back(y, obj.width - 1);
      }
    }
  }

  const double fill = obj.dot_fill < 0.0 ? bg_density : obj.dot_fill;
  if (obj.dot_side > 0 && obj.dot_pitch > 0 && fill > 0.0) {
    const int off = std::max(0, (obj.dot_pitch - obj.dot_side) / 2);
    for (int ty = 0; ty * obj.dot_pitch + off + obj.dot_side <= obj.height; ++ty) {
      for (int tx = 0; tx * obj.dot_pitch + off + obj.dot_side <= obj.width; ++tx) {
        const std::uint64_t h =
          hash_cell(seed, ty, tx, 0xd07u + static_cast<std::uint64_t>(index));
        if (fill < 1.0 && hash_unit(h) >= fill) {
          continue;
        }
        for (int dy = 0; dy < obj.dot_side; ++dy) {
          for (int dx = 0; dx < obj.dot_side; ++dx) {
            tex.cells.emplace_back(ty * obj.dot_pitch + off + dy, tx * obj.dot_pitch + off + dx);
          }
        }
      }
    }
  }
  return tex;
}

}  // namespace

void SceneSpec::validate() const
{
  if (geometry.width <= 0 || geometry.height <= 0) {
    throw ValidationError("scene geometry must be positive");
  }
  if (!(duration_ms > 0.0)) {
    throw ValidationError("duration_ms must be positive");
  }
  if (bg_texture_density < 0.0 || bg_texture_density > 1.0) {
    throw ValidationError("bg_texture_density must lie in [0, 1]");
  }
  if (event_rate_per_edge < 0.0 || noise_rate < 0.0) {
    throw ValidationError("rates must be non-negative");
  }
  for (const auto & obj : objects) {
    if (obj.width <= 0 || obj.height <= 0) {
      throw ValidationError("object size must be positive");
    }
    if (obj.start_x < 0.0 || obj.start_y < 0.0 ||
        obj.start_x + obj.width > geometry.width || obj.start_y + obj.height > geometry.height) {
      throw ValidationError("objects must start inside the geometry");
    }
    if (obj.dot_side < 0 || obj.dot_pitch < 0 || obj.dot_fill > 1.0) {
      throw ValidationError("bad object texture parameters");
    }
    if (obj.dot_side > 0 && obj.dot_pitch > 0 && obj.dot_side > obj.dot_pitch) {
      throw ValidationError("dot_side must not exceed dot_pitch");
    }
  }
}

SceneOutput gen_scene(const SceneSpec & spec, double mask_rate_hz)
{
  spec.validate();
  if (!(mask_rate_hz > 0.0)) {
    throw ValidationError("mask_rate_hz must be positive");
  }

  SceneOutput out;
  out.prng_id = "splitmix64+mt19937_64/v1";

  const auto duration_us = static_cast<std::int64_t>(std::llround(spec.duration_ms * 1000.0));
  const int width = spec.geometry.width;
  const int height = spec.geometry.height;

  std::vector<ObjectTexture> textures;
  textures.reserve(spec.objects.size());
  for (std::size_t i = 0; i < spec.objects.size(); ++i) {
    textures.push_back(
      build_object_texture(spec.objects[i], spec.bg_texture_density, spec.seed, i));
  }

  const bool bg_moving = spec.ego_vx != 0.0 || spec.ego_vy != 0.0;

  auto object_pos = [&](const SceneObject & obj, double t_s) {
    return std::pair<double, double>{
      obj.start_x + (obj.vel_x - spec.ego_vx) * t_s,
      obj.start_y + (obj.vel_y - spec.ego_vy) * t_s};
  };

  auto footprints_at = [&](double t_s) {
    std::vector<FootprintRect> rects;
    rects.reserve(spec.objects.size());
    for (const auto & obj : spec.objects) {
      const auto [px, py] = object_pos(obj, t_s);
      rects.push_back({covered_cell(px), covered_cell(py), obj.width, obj.height});
    }
    return rects;
  };

  // Texture ticks.
  if (spec.event_rate_per_edge > 0.0) {
    const auto tick_dt_us =
      static_cast<std::int64_t>(std::llround(1e6 / spec.event_rate_per_edge));
    if (tick_dt_us > 0) {
      for (std::int64_t t_us = tick_dt_us; t_us <= duration_us; t_us += tick_dt_us) {
        const double t_s = static_cast<double>(t_us) * 1e-6;
        const auto rects = footprints_at(t_s);

        if (bg_moving && spec.bg_texture_density > 0.0) {
          const double cam_x = spec.ego_vx * t_s;
          const double cam_y = spec.ego_vy * t_s;
          const auto wy_lo = static_cast<std::int64_t>(std::floor(cam_y)) - 1;
          const auto wy_hi = static_cast<std::int64_t>(std::floor(cam_y)) + height + 1;
          const auto wx_lo = static_cast<std::int64_t>(std::floor(cam_x)) - 1;
          const auto wx_hi = static_cast<std::int64_t>(std::floor(cam_x)) + width + 1;
          for (std::int64_t wy = wy_lo; wy <= wy_hi; ++wy) {
            for (std::int64_t wx = wx_lo; wx <= wx_hi; ++wx) {
              if (hash_unit(hash_cell(spec.seed, wx, wy, 0xb61u)) >= spec.bg_texture_density) {
                continue;
              }
              const int sx = covered_cell(static_cast<double>(wx) - cam_x);
              const int sy = covered_cell(static_cast<double>(wy) - cam_y);
              if (sx < 0 || sx >= width || sy < 0 || sy >= height) {
                continue;
              }
              bool occluded = false;
              for (const auto & r : rects) {
                if (r.contains(sx, sy)) {
                  occluded = true;
                  break;
                }
              }
              if (occluded) {
                continue;
              }
              const int pol = (hash_cell(spec.seed, sx * 7919 + wy, t_us, 0x90au) & 1) ? 1 : -1;
              out.events.push_back({t_us, sx, sy, pol});
            }
          }
        }

        for (std::size_t i = 0; i < spec.objects.size(); ++i) {
          const auto & obj = spec.objects[i];
          const bool moving = obj.vel_x != spec.ego_vx || obj.vel_y != spec.ego_vy;
          if (!moving) {
            continue;
          }
          const auto [px, py] = object_pos(obj, t_s);
          for (const auto & [ly, lx] : textures[i].cells) {
            const int sx = covered_cell(px + lx);
            const int sy = covered_cell(py + ly);
            if (sx < 0 || sx >= width || sy < 0 || sy >= height) {
              continue;
            }
            const int pol =
              (hash_cell(spec.seed, sy * 7919 + sx, t_us, 0x0b9u + i) & 1) ? 1 : -1;
            out.events.push_back({t_us, sx, sy, pol});
          }
        }
      }
    }
  }

  // Uniform background noise.
  if (spec.noise_rate > 0.0) {
    const double expected = spec.noise_rate * static_cast<double>(duration_us) * 1e-6;
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        std::mt19937_64 rng(hash_cell(spec.seed, x, y, 0x4015u));
        std::poisson_distribution<int> count(expected);
        const int n = count(rng);
        std::uniform_int_distribution<std::int64_t> when(0, duration_us - 1);
        for (int k = 0; k < n; ++k) {
          out.events.push_back({when(rng), x, y, (rng() & 1) ? 1 : -1});
        }
      }
    }
  }

  std::stable_sort(
    out.events.begin(), out.events.end(),
    [](const DvsEvent & a, const DvsEvent & b) { return a.t_us < b.t_us; });

  // Masks: object footprints at each sample time.
  const auto period_us = static_cast<std::int64_t>(std::llround(1e6 / mask_rate_hz));
  if (period_us <= 0) {
    throw ValidationError("mask_rate_hz too high for microsecond timestamps");
  }
  for (std::int64_t t_us = 0; t_us <= duration_us; t_us += period_us) {
    const double t_s = static_cast<double>(t_us) * 1e-6;
    GroundTruthMask mask{BoolGrid(width, height), t_us};
    for (const auto & rect : footprints_at(t_s)) {
      const int y_lo = std::max(0, rect.y0);
      const int y_hi = std::min(height, rect.y0 + rect.h);
      const int x_lo = std::max(0, rect.x0);
      const int x_hi = std::min(width, rect.x0 + rect.w);
      for (int y = y_lo; y < y_hi; ++y) {
        for (int x = x_lo; x < x_hi; ++x) {
          mask.grid.set(y, x, true);
        }
      }
    }
    out.masks.push_back(std::move(mask));
  }

  return out;
}

}  // namespace evoms
