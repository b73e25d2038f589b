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

#ifndef EVOMS_OMS_HPP
#define EVOMS_OMS_HPP

#include <string>

#include "evoms/events.hpp"
#include "evoms/grid.hpp"

namespace evoms
{

enum class KernelKind
{
  gaussian,
  uniform,
};

std::string to_string(KernelKind kind);
KernelKind kernel_kind_from_string(const std::string & name);

// Square averaging kernel; weights are non-negative and sum to 1, so
// convolving a binary plane yields values in [0, 1].
struct Kernel
{
  int side = 0;
  KernelKind kind = KernelKind::uniform;
  std::vector<double> weights;

  double at(int i, int j) const { return weights[static_cast<std::size_t>(i) * side + j]; }
};

// Full tunable parameter set.
struct OmsConfig
{
  int center_side = 4;
  int surround_side = 8;
  int stride = 1;
  double tau = 0.96;
  double window_ms = 20.0;
  KernelKind kernel_kind = KernelKind::gaussian;
  double gaussian_sigma_ratio = 0.5;  // sigma = ratio * (side / 2)

  void validate() const;
  bool operator==(const OmsConfig &) const = default;
};

// Boolean spike map, possibly subsampled when stride > 1.
struct OmsFrame
{
  BoolGrid grid;
  OmsConfig config;
};

// uniform: every weight 1/side^2.
// gaussian: weight(i,j) ∝ exp(-(di^2+dj^2) / (2 sigma^2)) with
// sigma = sigma_ratio * side / 2 and di, dj measured from the continuous
// grid center (side-1)/2, normalized to sum 1.
Kernel make_kernel(KernelKind kind, int side, double sigma_ratio = 0.5);

// Strided weighted mean with zero padding.
//
// Placement convention used throughout: output cell (r,c) samples the input
// pixel (r*stride + (stride-1)/2, c*stride + (stride-1)/2), and a kernel of
// side s covers rows [y - (s-1)/2, y - (s-1)/2 + s). For even s the sampled
// pixel is the top-left cell of the kernel's central 2x2 block; for
// stride == s the kernel windows exactly tile the plane from (0,0).
// Output dimensions are ceil(input/stride).
RealGrid convolve_mean(const BoolGrid & input, const Kernel & kernel, int stride);

// Center-minus-surround mean contrast, spike where the difference exceeds tau
// strictly. Both kernels run at the same stride on the same sample lattice.
OmsFrame oms_compute(const EventFrame & frame, const OmsConfig & config);

// Same contract as oms_compute, written as direct per-output-cell loops with
// no shared intermediate grids. Exists for equivalence testing only.
OmsFrame oms_reference(const EventFrame & frame, const OmsConfig & config);

// Nearest-neighbor block fill back to full resolution; output cell (r,c)
// paints the block [r*stride, (r+1)*stride) x [c*stride, (c+1)*stride),
// clipped to the target geometry.
BoolGrid upsample_to_input(const BoolGrid & strided, int stride, Geometry full);

}  // namespace evoms

#endif  // EVOMS_OMS_HPP
