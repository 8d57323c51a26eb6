// Copyright 2026 The ddlab Authors
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

#include "ddlab/error.hpp"

namespace ddlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kInvalidCount: return "InvalidCount";
    case ErrorCode::kEmptyResult: return "EmptyResult";
    case ErrorCode::kGenerationExhausted: return "GenerationExhausted";
    case ErrorCode::kDegenerateHyperbola: return "DegenerateHyperbola";
    case ErrorCode::kDuplicateCurve: return "DuplicateCurve";
    case ErrorCode::kBijectionViolation: return "BijectionViolation";
    case ErrorCode::kNotIncident: return "NotIncident";
    case ErrorCode::kWrongSign: return "WrongSign";
    case ErrorCode::kIdenticalCurves: return "IdenticalCurves";
    case ErrorCode::kTooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace ddlab
