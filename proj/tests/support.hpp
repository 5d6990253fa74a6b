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

#include <cotlap/error.hpp>

#include <doctest.h>

#include <optional>
#include <utility>

namespace support {

/// Runs fn and returns the library error code it threw, if any.
template <class F>
std::optional<cotlap::ErrorCode> thrown_code(F&& fn)
{
    try {
        std::forward<F>(fn)();
    } catch (const cotlap::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace support

#define CHECK_ERROR(expr, expected)                                                  \
    do {                                                                             \
        const auto code_ = support::thrown_code([&] { (void)(expr); });              \
        CHECK_MESSAGE(code_ == std::optional<cotlap::ErrorCode>(expected), #expr);   \
    } while (0)
