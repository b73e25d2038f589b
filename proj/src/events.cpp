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

#include "evoms/events.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "evoms/errors.hpp"

namespace evoms
{

namespace
{

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view s)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    }
    if (i > start) {
      out.push_back(s.substr(start, i - start));
    }
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line, const char * what)
{
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

double parse_real(std::string_view tok, std::size_t line, const char * what)
{
  try {
    std::size_t pos = 0;
    double value = std::stod(std::string(tok), &pos);
    if (pos != tok.size()) {
      throw std::invalid_argument("");
    }
    return value;
  } catch (const std::exception &) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
}

}  // namespace

std::vector<DvsEvent> parse_event_stream(std::istream & in, Geometry geometry)
{
  if (geometry.width <= 0 || geometry.height <= 0) {
    throw ValidationError("sensor geometry must be positive");
  }

  std::vector<DvsEvent> events;
  std::string raw;
  std::size_t line_no = 0;
  bool unit_decided = false;
  bool seconds_mode = false;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    auto fields = split_fields(line);
    if (fields.size() != 4) {
      throw ParseError(
        line_no,
        "expected 4 fields `t x y polarity`, got " + std::to_string(fields.size()));
    }

    if (!unit_decided) {
      const bool has_point = fields[0].find('.') != std::string_view::npos;
      if (has_point) {
        double v = parse_real(fields[0], line_no, "timestamp");
        seconds_mode = v < 1e6;
      }
      unit_decided = true;
    }

    std::int64_t t_us = 0;
    if (seconds_mode) {
      double seconds = parse_real(fields[0], line_no, "timestamp");
      if (seconds < 0.0) {
        throw ParseError(line_no, "negative timestamp");
      }
      t_us = std::llround(seconds * 1e6);
    } else {
      long long v = parse_int(fields[0], line_no, "timestamp");
      if (v < 0) {
        throw ParseError(line_no, "negative timestamp");
      }
      t_us = v;
    }

    const long long x = parse_int(fields[1], line_no, "x");
    const long long y = parse_int(fields[2], line_no, "y");
    const long long p = parse_int(fields[3], line_no, "polarity");

    if (x < 0 || x >= geometry.width || y < 0 || y >= geometry.height) {
      throw ValidationError(
        "line " + std::to_string(line_no) + ": coordinate (" + std::to_string(x) + "," +
        std::to_string(y) + ") outside geometry " + std::to_string(geometry.width) + "x" +
        std::to_string(geometry.height));
    }

    int polarity = 0;
    if (p == 1) {
      polarity = 1;
    } else if (p == 0 || p == -1) {
      polarity = -1;
    } else {
      throw ParseError(line_no, "polarity must be one of {-1, 0, 1}, got " + std::to_string(p));
    }

    events.push_back({t_us, static_cast<int>(x), static_cast<int>(y), polarity});
  }

  std::stable_sort(
    events.begin(), events.end(),
    [](const DvsEvent & a, const DvsEvent & b) { return a.t_us < b.t_us; });
  return events;
}

std::vector<DvsEvent> parse_event_stream(const std::string & text, Geometry geometry)
{
  std::istringstream in(text);
  return parse_event_stream(in, geometry);
}

EventFrame accumulate_frame(
  std::span<const DvsEvent> events, std::int64_t t_center_us, double window_ms, Geometry geometry)
{
  if (!(window_ms > 0.0)) {
    throw ValidationError("window_ms must be positive");
  }
  if (geometry.width <= 0 || geometry.height <= 0) {
    throw ValidationError("frame geometry must be positive");
  }

  const double half_us = window_ms * 500.0;
  const double lo = static_cast<double>(t_center_us) - half_us;
  const double hi = static_cast<double>(t_center_us) + half_us;

  EventFrame frame{BoolGrid(geometry.width, geometry.height), t_center_us, window_ms};
  for (const auto & e : events) {
    const double t = static_cast<double>(e.t_us);
    if (t >= lo && t < hi) {
      frame.grid.set(e.y, e.x, true);
    }
  }
  return frame;
}

std::vector<AlignedPair> align_frames_to_masks(
  std::span<const DvsEvent> events, std::span<const GroundTruthMask> masks, double window_ms)
{
  for (std::size_t i = 1; i < masks.size(); ++i) {
    if (masks[i].t_capture_us < masks[i - 1].t_capture_us) {
      throw ValidationError("masks must be ordered by t_capture");
    }
  }

  std::vector<AlignedPair> pairs;
  pairs.reserve(masks.size());
  for (const auto & mask : masks) {
    pairs.push_back(
      {accumulate_frame(events, mask.t_capture_us, window_ms, mask.grid.geometry()), mask});
  }
  return pairs;
}

}  // namespace evoms
