/*
 * Copyright 2026 The cotlap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cotlap {

/// Failure categories shared by every module. The numeric values are part of
/// the C ABI (see cotlap.h) and must not be reordered.
enum class ErrorCode : int {
    Ok = 0,
    TooFewArcs = 1,
    NonPositiveAngle = 2,
    SumMismatch = 3,
    IndexOutOfRange = 4,
    IdentityViolation = 5,
    NegativeDiscriminant = 6,
    DegenerateFace = 7,
    NonManifoldEdge = 8,
    EdgeNotFound = 9,
    LengthMismatch = 10,
    NotSymmetric = 11,
    NoConvergence = 12,
    ArityMismatch = 13,
    Unsupported = 14,
    StartNotInterior = 15,
    NotConverged = 16,
    InvalidTarget = 17,
    UnknownTheorem = 18,
    InvalidArgument = 19,
    Internal = 20,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cotlap
