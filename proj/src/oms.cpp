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

#include "evoms/oms.hpp"

#include <cmath>

#include "evoms/errors.hpp"

namespace evoms
{

std::string to_string(KernelKind kind)
{
  return kind == KernelKind::gaussian ? "gaussian" : "uniform";
}

KernelKind kernel_kind_from_string(const std::string & name)
{
  if (name == "gaussian") {
    return KernelKind::gaussian;
  }
  if (name == "uniform") {
    return KernelKind::uniform;
  }
  throw ValidationError("unknown kernel kind '" + name + "' (expected gaussian or uniform)");
}

void OmsConfig::validate() const
{
  if (center_side < 1) {
    throw ValidationError("center_side must be >= 1");
  }
  if (surround_side <= center_side) {
    throw ValidationError("surround_side must exceed center_side");
  }
  if (stride < 1 || stride > surround_side) {
    throw ValidationError("stride must lie in [1, surround_side]");
  }
  if (!(tau > 0.0 && tau < 1.0)) {
    throw ValidationError("tau must lie strictly inside (0, 1)");
  }
  if (!(window_ms > 0.0)) {
    throw ValidationError("window_ms must be positive");
  }
  if (kernel_kind == KernelKind::gaussian && !(gaussian_sigma_ratio > 0.0)) {
    throw ValidationError("gaussian_sigma_ratio must be positive");
  }
}

Kernel make_kernel(KernelKind kind, int side, double sigma_ratio)
{
  if (side < 1) {
    throw ValidationError("kernel side must be >= 1");
  }

  Kernel k;
  k.side = side;
  k.kind = kind;
  k.weights.resize(static_cast<std::size_t>(side) * side);

  if (kind == KernelKind::uniform) {
    const double w = 1.0 / (static_cast<double>(side) * side);
    for (auto & cell : k.weights) {
      cell = w;
    }
    return k;
  }

  if (!(sigma_ratio > 0.0)) {
    throw ValidationError("sigma_ratio must be positive for gaussian kernels");
  }
  const double sigma = sigma_ratio * (static_cast<double>(side) / 2.0);
  const double center = (side - 1) / 2.0;
  double sum = 0.0;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const double di = i - center;
      const double dj = j - center;
      const double w = std::exp(-(di * di + dj * dj) / (2.0 * sigma * sigma));
      k.weights[static_cast<std::size_t>(i) * side + j] = w;
      sum += w;
    }
  }
  for (auto & cell : k.weights) {
    cell /= sum;
  }
  return k;
}

RealGrid convolve_mean(const BoolGrid & input, const Kernel & kernel, int stride)
{
  if (stride < 1) {
    throw ValidationError("stride must be >= 1");
  }
  if (kernel.side < 1) {
    throw ValidationError("kernel side must be >= 1");
  }

  const int out_w = (input.width + stride - 1) / stride;
  const int out_h = (input.height + stride - 1) / stride;
  const int lattice = (stride - 1) / 2;
  const int anchor = (kernel.side - 1) / 2;

  RealGrid out(out_w, out_h);
  for (int r = 0; r < out_h; ++r) {
    const int yc = r * stride + lattice;
    for (int c = 0; c < out_w; ++c) {
      const int xc = c * stride + lattice;
      double acc = 0.0;
      for (int i = 0; i < kernel.side; ++i) {
        const int y = yc + i - anchor;
        if (y < 0 || y >= input.height) {
          continue;  // zero padding
        }
        for (int j = 0; j < kernel.side; ++j) {
          const int x = xc + j - anchor;
          if (x < 0 || x >= input.width) {
            continue;
          }
          if (input.at(y, x)) {
            acc += kernel.at(i, j);
          }
        }
      }
      out.set(r, c, acc);
    }
  }
  return out;
}

OmsFrame oms_compute(const EventFrame & frame, const OmsConfig & config)
{
  config.validate();
  if (frame.grid.width < config.surround_side || frame.grid.height < config.surround_side) {
    throw ValidationError("frame dimensions must be at least the surround kernel side");
  }

  const Kernel center =
    make_kernel(config.kernel_kind, config.center_side, config.gaussian_sigma_ratio);
  const Kernel surround =
    make_kernel(config.kernel_kind, config.surround_side, config.gaussian_sigma_ratio);

  const RealGrid center_mean = convolve_mean(frame.grid, center, config.stride);
  const RealGrid surround_mean = convolve_mean(frame.grid, surround, config.stride);

  OmsFrame out{BoolGrid(center_mean.width, center_mean.height), config};
  for (int r = 0; r < center_mean.height; ++r) {
    for (int c = 0; c < center_mean.width; ++c) {
      out.grid.set(r, c, center_mean.at(r, c) - surround_mean.at(r, c) > config.tau);
    }
  }
  return out;
}

BoolGrid upsample_to_input(const BoolGrid & strided, int stride, Geometry full)
{
  if (stride < 1) {
    throw ValidationError("stride must be >= 1");
  }
  if ((full.width + stride - 1) / stride != strided.width ||
      (full.height + stride - 1) / stride != strided.height) {
    throw ValidationError("strided grid does not match target geometry at this stride");
  }

  BoolGrid out(full.width, full.height);
  for (int r = 0; r < strided.height; ++r) {
    for (int c = 0; c < strided.width; ++c) {
      if (!strided.at(r, c)) {
        continue;
      }
      const int y_end = std::min((r + 1) * stride, full.height);
      const int x_end = std::min((c + 1) * stride, full.width);
      for (int y = r * stride; y < y_end; ++y) {
        for (int x = c * stride; x < x_end; ++x) {
          out.set(y, x, true);
        }
      }
    }
  }
  return out;
}

}  // namespace evoms
