// Copyright 2026 The CCSM Authors.
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

#ifndef CCSM_ERRORS_HPP_
#define CCSM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ccsm {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or contradictory input: unknown labels, overlapping restrictions,
// residues out of range, bad JSON.
class InputError : public Error {
 public:
  using Error::Error;
};

// The requested optimization domain is empty.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// The instance exceeds a hard cap (brute-force size, bitset width).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A state that the underlying theory rules out was observed. Either a checker
// is wrong or the input encoding is broken.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccsm

#endif  // CCSM_ERRORS_HPP_
