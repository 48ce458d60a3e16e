// Copyright 2026 The msr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSR_ERRORS_HPP
#define MSR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msr {

// Base class for every error thrown by this library.  Catching msr::Error is
// sufficient to intercept all failure modes; the subclasses exist so callers
// can map them to distinct exit codes or user messages.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input data: empty series, non-finite values,
// non-increasing timestamps, invalid scenario parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

// A benchmark or forecast could not produce a value at a requested timestamp.
// The message always names the timestamp.
class EvalError : public Error {
 public:
  using Error::Error;
};

// Failure while reading an external file format (CSV trace, JSON document).
// The message carries a location: a line number or a JSON path.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structural misuse of a goal model: unknown ids, wrong node kinds for an
// operation, attribute mismatches between goals and measurements.
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace msr

#endif  // MSR_ERRORS_HPP
