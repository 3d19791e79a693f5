// Copyright 2026 The Authors.
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

#ifndef SSG_ERRORS_H_
#define SSG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ssg {

// Base class for every error raised by the library. The CLI maps the
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed game files, payoff tables that violate the model inequalities,
// out-of-range indices.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A mixed strategy that is not a distribution over feasible joint schedules.
class InvalidStrategyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A configured size or digit budget was exceeded (enumeration cap, grid
// guard, reduction digit budget, subset-closure blowup).
class LimitError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Structurally malformed linear program.
class LpStructureError : public Error {
 public:
  using Error::Error;
};

// Something that must hold by construction did not.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace ssg

#endif  // SSG_ERRORS_H_
