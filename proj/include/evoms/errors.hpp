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

#ifndef EVOMS_ERRORS_HPP
#define EVOMS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace evoms
{

class Error : public std::runtime_error
{
public:
  explicit Error(const std::string & what) : std::runtime_error(what) {}
};

// Bad argument values, broken invariants, dimension mismatches.
class ValidationError : public Error
{
public:
  explicit ValidationError(const std::string & what) : Error(what) {}
};

// Malformed input text; message carries the 1-based line number.
class ParseError : public Error
{
public:
  ParseError(std::size_t line, const std::string & what)
  : Error("line " + std::to_string(line) + ": " + what), line_(line)
  {
  }
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

class IoError : public Error
{
public:
  explicit IoError(const std::string & what) : Error(what) {}
};

// Raised when an OmsConfig cannot be mapped onto the compute array.
// Carries every violated constraint, not just the first.
class FeasibilityError : public Error
{
public:
  explicit FeasibilityError(std::vector<std::string> violations)
  : Error(join(violations)), violations_(std::move(violations))
  {
  }
  const std::vector<std::string> & violations() const { return violations_; }

private:
  static std::string join(const std::vector<std::string> & v)
  {
    std::string out = "config not hardware-feasible:";
    for (const auto & s : v) {
      out += "\n  - " + s;
    }
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace evoms

#endif  // EVOMS_ERRORS_HPP
