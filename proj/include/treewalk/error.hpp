// Copyright 2026 The treewalk Authors
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

#ifndef TREEWALK_ERROR_HPP_
#define TREEWALK_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treewalk {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. The message names the offending line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A precondition on graph or tree arguments does not hold.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotBiconnected : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class InvalidMove : public Error {
 public:
  using Error::Error;
};

// A vertex detached by the gap algorithm was not a leaf. This can only
// happen on a bug or on a numbering that is not an st-numbering.
class LeafClaimViolation : public Error {
 public:
  LeafClaimViolation(int vertex, const std::string& tree)
      : Error("leaf claim violated: vertex " + std::to_string(vertex) +
              " has children in tree " + tree),
        vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

// An exhaustive search would visit more states than allowed.
class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t count, std::uint64_t cap)
      : Error("instance too large: " + std::to_string(count) +
              " states exceed cap " + std::to_string(cap)),
        count_(count) {}
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_;
};

}  // namespace treewalk

#endif  // TREEWALK_ERROR_HPP_
