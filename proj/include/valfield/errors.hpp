// Copyright 2026 The valfield Authors
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

#ifndef VALFIELD_ERRORS_HPP
#define VALFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace valfield {

// Raised when a result would need more known digits than the operands carry.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A nonzero element with zero norm was hit while inverting.
class ZeroDivisorError : public std::domain_error {
 public:
  ZeroDivisorError(const std::string& what, std::string witness)
      : std::domain_error(what), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace valfield

#endif  // VALFIELD_ERRORS_HPP
