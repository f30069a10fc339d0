// Copyright 2026 The cfgkit Authors
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

#ifndef CFGKIT_ERRORS_HPP
#define CFGKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfgkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input is well-formed but does not satisfy a mathematical precondition
/// (cycle, not a lattice, not ULD, unknown vertex, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A caller broke an API precondition (e.g. strict constraint handed to the
/// solver, firing a non-firable vertex).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An invariant that the theory guarantees was violated. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Configuration-space exploration exceeded its cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

#define CFGKIT_ENSURE(cond, msg)                                        \
  do {                                                                  \
    if (!(cond)) throw ::cfgkit::InternalError(std::string("invariant " \
                                                           "violated: ") + \
                                               (msg));                  \
  } while (0)

}  // namespace cfgkit

#endif  // CFGKIT_ERRORS_HPP
