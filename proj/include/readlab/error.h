// Copyright 2026 The readlab Authors.
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

#ifndef READLAB_ERROR_H_
#define READLAB_ERROR_H_

#include <stdexcept>
#include <string>

namespace readlab {

enum class ErrorCode {
  kInvalidArgument,  // caller or input-file contract violated
  kDegenerateInput,  // well-formed input on which a metric is undefined
  kIo,
  kBackendRequest,      // backend rejected one request; other requests may succeed
  kBackendUnavailable,  // backend unreachable or unhealthy; fatal for a run
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

  bool is_backend() const {
    return code_ == ErrorCode::kBackendRequest ||
           code_ == ErrorCode::kBackendUnavailable;
  }

 private:
  ErrorCode code_;
};

}  // namespace readlab

#endif  // READLAB_ERROR_H_
