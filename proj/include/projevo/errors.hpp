// Copyright 2026 The projevo Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace projevo {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's contract (bad size, non-Hermitian term,
/// t outside the supported branch, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A planner would need more steps than its configured cap.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  IoError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}

  [[nodiscard]] const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

inline void require(bool cond, const std::string& message) {
  if (!cond) throw ValidationError(message);
}

}  // namespace projevo
