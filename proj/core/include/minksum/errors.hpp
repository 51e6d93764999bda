// Copyright 2026 The Minksum Authors
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

#ifndef MINKSUM_ERRORS_HPP
#define MINKSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minksum {

enum class ErrorKind {
  TooFewVertices,
  SelfIntersection,
  HoleOutsideOuter,
  HolesOverlap,
  NonConvexInput,
  InconsistentWinding,
  GenerationFailed,
  ParseError,
  DivisionByZero,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::SelfIntersection: return "SelfIntersection";
    case ErrorKind::HoleOutsideOuter: return "HoleOutsideOuter";
    case ErrorKind::HolesOverlap: return "HolesOverlap";
    case ErrorKind::NonConvexInput: return "NonConvexInput";
    case ErrorKind::InconsistentWinding: return "InconsistentWinding";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace minksum

#endif  // MINKSUM_ERRORS_HPP
