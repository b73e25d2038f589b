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

#include "evoms/eval.hpp"

#include "evoms/errors.hpp"

namespace evoms
{

std::string to_string(EmptyFramePolicy policy)
{
  return policy == EmptyFramePolicy::skip ? "skip" : "count_as_one";
}

EmptyFramePolicy empty_frame_policy_from_string(const std::string & name)
{
  if (name == "skip") {
    return EmptyFramePolicy::skip;
  }
  if (name == "count_as_one") {
    return EmptyFramePolicy::count_as_one;
  }
  throw ValidationError("unknown empty-frame policy '" + name + "'");
}

std::string to_string(SizeClass c)
{
  return c == SizeClass::small ? "small" : "large";
}

std::optional<double> iou(const BoolGrid & pred, const BoolGrid & gt)
{
  if (pred.width != gt.width || pred.height != gt.height) {
    throw ValidationError("iou: dimension mismatch");
  }

  std::size_t inter = 0;
  std::size_t uni = 0;
  for (std::size_t i = 0; i < pred.cells.size(); ++i) {
    const bool a = pred.cells[i] != 0;
    const bool b = gt.cells[i] != 0;
    inter += a && b;
    uni += a || b;
  }
  if (uni == 0) {
    return std::nullopt;
  }
  return static_cast<double>(inter) / static_cast<double>(uni);
}

IouReport mean_iou(std::span<const EvalPair> pairs, EmptyFramePolicy policy)
{
  IouReport report;
  report.policy = policy;

  double sum = 0.0;
  for (const auto & pair : pairs) {
    const BoolGrid * pred = &pair.pred.grid;
    BoolGrid upsampled;
    if (pred->width != pair.gt.grid.width || pred->height != pair.gt.grid.height) {
      if (pair.pred.config.stride <= 1) {
        throw ValidationError("mean_iou: prediction/mask dimension mismatch at stride 1");
      }
      upsampled =
        upsample_to_input(*pred, pair.pred.config.stride, pair.gt.grid.geometry());
      pred = &upsampled;
    }

    const auto value = iou(*pred, pair.gt.grid);
    if (!value.has_value()) {
      if (policy == EmptyFramePolicy::skip) {
        continue;
      }
      report.per_frame.push_back(1.0);
      sum += 1.0;
      ++report.frames_evaluated;
      continue;
    }
    report.per_frame.push_back(*value);
    sum += *value;
    ++report.frames_evaluated;
  }

  if (report.frames_evaluated > 0) {
    report.mean_iou = sum / report.frames_evaluated;
    report.mean_defined = true;
  }
  return report;
}

SizeClass object_size_class(const GroundTruthMask & gt)
{
  const auto total = static_cast<double>(gt.grid.cells.size());
  if (total == 0.0) {
    return SizeClass::small;
  }
  const double ratio = static_cast<double>(gt.grid.active_count()) / total;
  return ratio < 0.20 ? SizeClass::small : SizeClass::large;
}

}  // namespace evoms
