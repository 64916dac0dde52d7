// Copyright 2026 The Cascade Authors
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

#ifndef CASCADE_ERROR_HPP_
#define CASCADE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cascade {

// Mirrors cas_status in the C header; values must stay in sync.
enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kOutOfRange = 3,
  kDegreeMismatch = 4,
  kGroupTooLarge = 5,
  kOverflow = 6,
  kNotFound = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cascade

#endif  // CASCADE_ERROR_HPP_
