// Copyright 2026 The MMSLab Authors.
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

#ifndef MMSLAB_ERRORS_H_
#define MMSLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mmslab {

enum class ErrorKind {
  kInput,               // malformed arguments or files
  kRepresentation,      // valuation storage does not cover a query
  kResource,            // a search or enumeration cap would be exceeded
  kPrecondition,        // an operation was called outside its domain
  kInvariantViolation,  // a proved guarantee failed; indicates a bug
};

const char* ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& message)
      : Error(ErrorKind::kInput, message) {}
};

class RepresentationError : public Error {
 public:
  explicit RepresentationError(const std::string& message)
      : Error(ErrorKind::kRepresentation, message) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message)
      : Error(ErrorKind::kResource, message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error(ErrorKind::kPrecondition, message) {}
};

class InvariantViolationError : public Error {
 public:
  explicit InvariantViolationError(const std::string& message)
      : Error(ErrorKind::kInvariantViolation, message) {}
};

}  // namespace mmslab

#endif  // MMSLAB_ERRORS_H_
