// Copyright 2026 The ising2q Authors
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

#ifndef ISING2Q_ERROR_H_
#define ISING2Q_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ising2q {

enum class ErrorCode {
  kInvalidArgument,
  kDegenerateParameters,
  kNumericFailure,
  kNoEntanglementGeneration,
  kNotAttainable,
  kInvalidLoopIndices,
};

std::string_view to_string(ErrorCode code);

/// Single exception type thrown by the library; `code()` tells callers which
/// precondition or numeric step failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ising2q

#endif  // ISING2Q_ERROR_H_
