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

#ifndef EVOMS_EVAL_HPP
#define EVOMS_EVAL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evoms/events.hpp"
#include "evoms/grid.hpp"
#include "evoms/oms.hpp"

namespace evoms
{

enum class EmptyFramePolicy
{
  skip,          // both-empty frames are dropped from the mean
  count_as_one,  // both-empty frames score 1.0
};

std::string to_string(EmptyFramePolicy policy);
EmptyFramePolicy empty_frame_policy_from_string(const std::string & name);

struct IouReport
{
  std::vector<double> per_frame;
  double mean_iou = 0.0;
  bool mean_defined = false;
  int frames_evaluated = 0;
  EmptyFramePolicy policy = EmptyFramePolicy::skip;
};

struct EvalPair
{
  OmsFrame pred;
  GroundTruthMask gt;
};

enum class SizeClass
{
  small,
  large,
};

std::string to_string(SizeClass c);

// |a ∧ b| / |a ∨ b|; nullopt when both grids are empty (0/0).
std::optional<double> iou(const BoolGrid & pred, const BoolGrid & gt);

// Per-frame IoU at full input resolution: predictions with stride > 1 are
// block-upsampled to the mask geometry first.
IouReport mean_iou(std::span<const EvalPair> pairs, EmptyFramePolicy policy);

// small iff active/total < 0.20, strictly.
SizeClass object_size_class(const GroundTruthMask & gt);

}  // namespace evoms

#endif  // EVOMS_EVAL_HPP
