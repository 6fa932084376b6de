// Copyright 2026 The qecsplit Authors
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

#ifndef QECSPLIT_ERRORS_HPP_
#define QECSPLIT_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qecsplit {

// Raised for out-of-domain arguments (even distance, p outside (0,1), ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An Event that cannot live on the circuit it is applied to.
class InvalidEvent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Decoding graph construction or matching could not produce a result.
class DecodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Monte Carlo ran out of shots before reaching the requested failure count.
class PartialResultError : public std::runtime_error {
 public:
  PartialResultError(const std::string& what, std::uint64_t shots,
                     std::uint64_t failures)
      : std::runtime_error(what), shots_(shots), failures_(failures) {}

  std::uint64_t shots() const noexcept { return shots_; }
  std::uint64_t failures() const noexcept { return failures_; }

 private:
  std::uint64_t shots_;
  std::uint64_t failures_;
};

// Splitting could not seed its chains from the setup run.
class SetupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical procedure without a defined answer (no root, zero variance).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qecsplit

#endif  // QECSPLIT_ERRORS_HPP_
