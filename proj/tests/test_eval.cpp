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

#include <random>

#include "doctest.h"

#include "evoms/errors.hpp"
#include "evoms/eval.hpp"

using namespace evoms;

namespace
{

BoolGrid grid_from(std::initializer_list<std::pair<int, int>> active, int w, int h)
{
  BoolGrid g(w, h);
  for (auto [y, x] : active) {
    g.set(y, x, true);
  }
  return g;
}

OmsFrame pred_frame(BoolGrid grid, int stride = 1)
{
  OmsConfig cfg;
  cfg.stride = stride;
  cfg.tau = 0.5;
  cfg.kernel_kind = KernelKind::uniform;
  return OmsFrame{std::move(grid), cfg};
}

}  // namespace

TEST_CASE("iou: identical, disjoint and the 1/3 case")
{
  const auto a = grid_from({{0, 0}, {1, 1}}, 4, 4);
  CHECK(iou(a, a).value() == 1.0);

  const auto b = grid_from({{2, 2}, {3, 3}}, 4, 4);
  CHECK(iou(a, b).value() == 0.0);

  // pred = {a, b}, gt = {b, c}: one intersection over a three-cell union.
  const auto pred = grid_from({{0, 0}, {0, 1}}, 4, 4);
  const auto gt = grid_from({{0, 1}, {0, 2}}, 4, 4);
  CHECK(iou(pred, gt).value() == doctest::Approx(1.0 / 3.0));

  CHECK_FALSE(iou(BoolGrid(4, 4), BoolGrid(4, 4)).has_value());
  CHECK_THROWS_AS(iou(BoolGrid(4, 4), BoolGrid(5, 4)), ValidationError);
}

TEST_CASE("iou properties: symmetry and containment monotonicity")
{
  std::mt19937 rng(31);
  std::bernoulli_distribution bit(0.4);
  for (int trial = 0; trial < 50; ++trial) {
    BoolGrid a(10, 8);
    BoolGrid b(10, 8);
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
      a.cells[i] = bit(rng);
      b.cells[i] = bit(rng);
    }
    const auto ab = iou(a, b);
    const auto ba = iou(b, a);
    CHECK(ab.has_value() == ba.has_value());
    if (ab.has_value()) {
      CHECK(*ab == *ba);
      CHECK(*ab >= 0.0);
      CHECK(*ab <= 1.0);
    }

    // pred1 ⊆ pred2 ⊆ gt implies iou(pred1, gt) <= iou(pred2, gt).
    BoolGrid gt = a;
    BoolGrid pred2 = gt;
    BoolGrid pred1 = gt;
    bool phase = false;
    for (std::size_t i = 0; i < gt.cells.size(); ++i) {
      if (gt.cells[i] && bit(rng)) {
        pred2.cells[i] = 0;
        pred1.cells[i] = 0;
      } else if (gt.cells[i] && phase) {
        pred1.cells[i] = 0;
      }
      phase = !phase;
    }
    const auto i1 = iou(pred1, gt);
    const auto i2 = iou(pred2, gt);
    if (i1.has_value() && i2.has_value()) {
      CHECK(*i1 <= *i2 + 1e-15);
    }
  }
}

TEST_CASE("mean_iou: arithmetic mean over evaluated frames")
{
  const auto gt1 = grid_from({{0, 0}, {0, 1}}, 4, 4);
  std::vector<EvalPair> pairs;
  pairs.push_back({pred_frame(gt1), {gt1, 0}});                                   // IoU 1.0
  pairs.push_back({pred_frame(grid_from({{0, 0}}, 4, 4)), {gt1, 25000}});          // IoU 0.5
  const auto report = mean_iou(pairs, EmptyFramePolicy::skip);
  CHECK(report.frames_evaluated == 2);
  CHECK(report.mean_defined);
  CHECK(report.mean_iou == doctest::Approx(0.75));
}

TEST_CASE("mean_iou: both-empty frames follow the policy")
{
  std::vector<EvalPair> pairs;
  pairs.push_back({pred_frame(BoolGrid(4, 4)), {BoolGrid(4, 4), 0}});

  const auto skipped = mean_iou(pairs, EmptyFramePolicy::skip);
  CHECK(skipped.frames_evaluated == 0);
  CHECK_FALSE(skipped.mean_defined);

  const auto counted = mean_iou(pairs, EmptyFramePolicy::count_as_one);
  CHECK(counted.frames_evaluated == 1);
  CHECK(counted.mean_iou == 1.0);

  CHECK_FALSE(mean_iou({}, EmptyFramePolicy::skip).mean_defined);
}

TEST_CASE("mean_iou: strided predictions are upsampled to the mask")
{
  BoolGrid strided(2, 2);
  strided.set(0, 0, true);
  BoolGrid gt(8, 8);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) {
      gt.set(y, x, true);
    }
  }
  std::vector<EvalPair> pairs;
  pairs.push_back({pred_frame(std::move(strided), 4), {gt, 0}});
  const auto report = mean_iou(pairs, EmptyFramePolicy::skip);
  CHECK(report.mean_iou == 1.0);

  // Stride-1 mismatches are an error, not an implicit resample.
  std::vector<EvalPair> bad;
  bad.push_back({pred_frame(BoolGrid(2, 2)), {gt, 0}});
  CHECK_THROWS_AS(mean_iou(bad, EmptyFramePolicy::skip), ValidationError);
}

TEST_CASE("object_size_class: strict 20% boundary")
{
  CHECK(object_size_class({BoolGrid(10, 10), 0}) == SizeClass::small);

  // Exactly 20% active is large.
  BoolGrid exact(10, 10);
  for (int i = 0; i < 20; ++i) {
    exact.cells[i] = 1;
  }
  CHECK(object_size_class({std::move(exact), 0}) == SizeClass::large);

  // 100x100 object on a 346x260 sensor: 10000/89960, about 11%.
  BoolGrid sensor(346, 260);
  for (int y = 0; y < 100; ++y) {
    for (int x = 0; x < 100; ++x) {
      sensor.set(y, x, true);
    }
  }
  CHECK(object_size_class({std::move(sensor), 0}) == SizeClass::small);
}
