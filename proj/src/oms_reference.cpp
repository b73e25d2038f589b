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

#include "evoms/errors.hpp"
#include "evoms/oms.hpp"

namespace evoms
{

// Naive per-output-cell evaluation. Deliberately builds no convolution grids
// and shares no helpers with oms_compute beyond the public kernel
// constructor; kernel cells are visited in the same row-major order so the
// floating-point sums match oms_compute bit for bit.
OmsFrame oms_reference(const EventFrame & frame, const OmsConfig & config)
{
  config.validate();
  if (frame.grid.width < config.surround_side || frame.grid.height < config.surround_side) {
    throw ValidationError("frame dimensions must be at least the surround kernel side");
  }

  const Kernel center =
    make_kernel(config.kernel_kind, config.center_side, config.gaussian_sigma_ratio);
  const Kernel surround =
    make_kernel(config.kernel_kind, config.surround_side, config.gaussian_sigma_ratio);

  const int stride = config.stride;
  const int out_w = (frame.grid.width + stride - 1) / stride;
  const int out_h = (frame.grid.height + stride - 1) / stride;
  const int lattice = (stride - 1) / 2;

  OmsFrame out{BoolGrid(out_w, out_h), config};

  for (int r = 0; r < out_h; ++r) {
    for (int c = 0; c < out_w; ++c) {
      const int yc = r * stride + lattice;
      const int xc = c * stride + lattice;

      double center_sum = 0.0;
      {
        const int a = (center.side - 1) / 2;
        for (int i = 0; i < center.side; ++i) {
          for (int j = 0; j < center.side; ++j) {
            const int y = yc + i - a;
            const int x = xc + j - a;
            if (y >= 0 && y < frame.grid.height && x >= 0 && x < frame.grid.width &&
                frame.grid.at(y, x)) {
              center_sum += center.at(i, j);
            }
          }
        }
      }

      double surround_sum = 0.0;
      {
        const int a = (surround.side - 1) / 2;
        for (int i = 0; i < surround.side; ++i) {
          for (int j = 0; j < surround.side; ++j) {
            const int y = yc + i - a;
            const int x = xc + j - a;
            if (y >= 0 && y < frame.grid.height && x >= 0 && x < frame.grid.width &&
                frame.grid.at(y, x)) {
              surround_sum += surround.at(i, j);
            }
          }
        }
      }

      out.grid.set(r, c, center_sum - surround_sum > config.tau);
    }
  }
  return out;
}

}  // namespace evoms
