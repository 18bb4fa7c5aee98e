// Copyright 2026 The talex Authors
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

#ifndef TALEX_ERROR_HPP
#define TALEX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace talex {

enum class ErrorKind {
    NotSymmetric,
    ZeroPolynomial,
    NonUnitLeading,
    NonzeroRemainder,
    DivisionByZero,
    NonConvergence,
    InvalidParams,
    NotAKnot,
    Unknot,
    OddSpan,
    NotOnVariety,
    FiberedOrExcluded,
    Parse,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonUnitLeading: return "NonUnitLeading";
    case ErrorKind::NonzeroRemainder: return "NonzeroRemainder";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::Unknot: return "Unknot";
    case ErrorKind::OddSpan: return "OddSpan";
    case ErrorKind::NotOnVariety: return "NotOnVariety";
    case ErrorKind::FiberedOrExcluded: return "FiberedOrExcluded";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can branch on it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace talex

#endif
