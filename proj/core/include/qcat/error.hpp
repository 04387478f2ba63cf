// Copyright 2026 The qcat Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad file contents, invalid descriptors, ill-formed data.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size guard or truncation depth was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A simplicial set is not stored deep enough for the requested operation.
class DepthError : public GuardError {
 public:
  using GuardError::GuardError;
};

/// pi_1 was requested on a disconnected simplicial set.
class DisconnectedError : public Error {
 public:
  DisconnectedError(const std::string& what, int components)
      : Error(what), components_(components) {}
  int components() const { return components_; }

 private:
  int components_;
};

}  // namespace qcat
