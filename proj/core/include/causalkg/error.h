// Copyright 2026 The causalkg Authors.
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

#ifndef CAUSALKG_ERROR_H_
#define CAUSALKG_ERROR_H_

#include <stdexcept>
#include <string>

namespace causalkg {

// Broad failure classes. The command line tool maps each to an exit code.
enum class ErrorCategory {
  kInvalidInput,   // malformed or inconsistent data
  kMissingInput,   // a required file or stage output does not exist
  kIo,             // read/write failure
  kExternal,       // sidecar service failure
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string &message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

inline Error InputError(const std::string &message) {
  return Error(ErrorCategory::kInvalidInput, message);
}
inline Error MissingInputError(const std::string &message) {
  return Error(ErrorCategory::kMissingInput, message);
}
inline Error IoError(const std::string &message) {
  return Error(ErrorCategory::kIo, message);
}
inline Error ExternalError(const std::string &message) {
  return Error(ErrorCategory::kExternal, message);
}

const char *CategoryName(ErrorCategory category);

}  // namespace causalkg

#endif  // CAUSALKG_ERROR_H_
