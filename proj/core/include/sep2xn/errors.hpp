// Copyright 2026 The sep2xn Authors
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
#include <string_view>

namespace sep2xn {

enum class ErrorCode {
    InvalidArgument,
    NotHermitian,
    NotPsd,
    NonFinite,
    DecompositionFailure,
    DegenerateElimination,
    NonGenericInput,
    VectorOutsideRange,
    SupportViolation,
    DependentProjectors,
    PreconditionViolation,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code lets
/// callers branch without string matching.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotPsd: return "NotPsd";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::DecompositionFailure: return "DecompositionFailure";
        case ErrorCode::DegenerateElimination: return "DegenerateElimination";
        case ErrorCode::NonGenericInput: return "NonGenericInput";
        case ErrorCode::VectorOutsideRange: return "VectorOutsideRange";
        case ErrorCode::SupportViolation: return "SupportViolation";
        case ErrorCode::DependentProjectors: return "DependentProjectors";
        case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    }
    return "Unknown";
}

}  // namespace sep2xn
