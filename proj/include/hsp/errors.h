// Copyright 2026 The hsp-elimination Authors
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

#ifndef HSP_ERRORS_H
#define HSP_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsp {

/// Default bound on Hilbert-space dimension (and group order).
inline constexpr std::size_t kDefaultDimensionCap = 4096;

/// Raised when an input is outside an operation's domain (not a subgroup,
/// mismatched dimensions, unknown label, malformed group string, ...).
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a construction would exceed the configured dimension cap or a
/// combinatorial enumeration limit.
class SizeError : public std::length_error {
   public:
    using std::length_error::length_error;
};

}  // namespace hsp

#endif  // HSP_ERRORS_H
