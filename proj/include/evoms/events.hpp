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

#ifndef EVOMS_EVENTS_HPP
#define EVOMS_EVENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "evoms/grid.hpp"

namespace evoms
{

// One sensor event. Polarity is normalized to -1 / +1.
struct DvsEvent
{
  std::int64_t t_us = 0;
  int x = 0;
  int y = 0;
  int polarity = 1;

  bool operator==(const DvsEvent &) const = default;
};

// Binary activation plane built by accumulating events in a time window.
// The window is half-open: [t_center - window/2, t_center + window/2).
struct EventFrame
{
  BoolGrid grid;
  std::int64_t t_center_us = 0;
  double window_ms = 0.0;
};

struct GroundTruthMask
{
  BoolGrid grid;
  std::int64_t t_capture_us = 0;
};

struct AlignedPair
{
  EventFrame frame;
  GroundTruthMask mask;
};

// Parses line-oriented event text: `t x y polarity`, '#' starts a comment.
// Timestamp unit is auto-detected on the first data line: a value below 1e6
// that contains a decimal point is taken as seconds (converted to microseconds);
// otherwise timestamps must be non-negative integer microseconds.
// Polarity 0 and -1 map to -1, 1 maps to +1. Events are returned sorted by time.
std::vector<DvsEvent> parse_event_stream(std::istream & in, Geometry geometry);
std::vector<DvsEvent> parse_event_stream(const std::string & text, Geometry geometry);

// Cell (y,x) is active iff at least one event of either polarity landed there
// inside the window; polarity is discarded.
EventFrame accumulate_frame(
  std::span<const DvsEvent> events, std::int64_t t_center_us, double window_ms,
  Geometry geometry);

// One frame per mask, centered on the mask's capture time; masks must be
// ordered by t_capture.
std::vector<AlignedPair> align_frames_to_masks(
  std::span<const DvsEvent> events, std::span<const GroundTruthMask> masks, double window_ms);

}  // namespace evoms

#endif  // EVOMS_EVENTS_HPP
