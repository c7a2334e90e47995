// Copyright 2026 The Noncross Authors.
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

namespace noncross {

// Every failure the library can signal. The CLI maps these onto process
// exit codes: claim failures -> 1, bad input -> 2, resource caps -> 3.
enum class Errc {
  // Bad input (exit code 2).
  ParseError,
  TooFewVertices,
  DuplicateVertex,
  CoordinateOverflow,
  NotSimple,
  HoleNotInterior,
  HolesIntersect,
  NotADiagonal,
  NoDiagonals,
  NoMouth,
  IndexOutOfRange,
  // Claim failures (exit code 1).
  InvariantViolation,
  NotPure,
  NoCandidate,
  NotAMatching,
  NotAcyclic,
  StuckCollapse,
  // Resource caps (exit code 3).
  TooManyDiagonals,
  FaceLimitExceeded,
  MatrixTooLarge,
};

const char* errc_name(Errc code);

// Single exception type for the whole library. `code` is the machine-readable
// part; `what()` carries human-readable context.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& context)
      : std::runtime_error(std::string(errc_name(code)) + ": " + context),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Exit-code group: 1 claim failure, 2 bad input, 3 resource cap.
inline int exit_code(Errc code) {
  switch (code) {
    case Errc::InvariantViolation:
    case Errc::NotPure:
    case Errc::NoCandidate:
    case Errc::NotAMatching:
    case Errc::NotAcyclic:
    case Errc::StuckCollapse:
      return 1;
    case Errc::TooManyDiagonals:
    case Errc::FaceLimitExceeded:
    case Errc::MatrixTooLarge:
      return 3;
    default:
      return 2;
  }
}

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::CoordinateOverflow: return "CoordinateOverflow";
    case Errc::NotSimple: return "NotSimple";
    case Errc::HoleNotInterior: return "HoleNotInterior";
    case Errc::HolesIntersect: return "HolesIntersect";
    case Errc::NotADiagonal: return "NotADiagonal";
    case Errc::NoDiagonals: return "NoDiagonals";
    case Errc::NoMouth: return "NoMouth";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::NotPure: return "NotPure";
    case Errc::NoCandidate: return "NoCandidate";
    case Errc::NotAMatching: return "NotAMatching";
    case Errc::NotAcyclic: return "NotAcyclic";
    case Errc::StuckCollapse: return "StuckCollapse";
    case Errc::TooManyDiagonals: return "TooManyDiagonals";
    case Errc::FaceLimitExceeded: return "FaceLimitExceeded";
    case Errc::MatrixTooLarge: return "MatrixTooLarge";
  }
  return "UnknownError";
}

}  // namespace noncross
