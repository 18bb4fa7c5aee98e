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

#ifndef TALEX_ROOTS_HPP
#define TALEX_ROOTS_HPP

#include <span>
#include <vector>

#include "talex/error.hpp"
#include "talex/polyring.hpp"

namespace talex {

inline constexpr double default_tol = 1e-9;

struct ComplexRoot {
    Complex value;
    int multiplicity = 1;
};

/// Raised when refinement exhausts its iteration budget. The roots found so
/// far are kept and flagged unreliable.
class RootFindingError : public Error {
public:
    RootFindingError(const std::string &message, std::vector<ComplexRoot> partial)
        : Error(ErrorKind::NonConvergence, message), partial_(std::move(partial))
    {
    }
    const std::vector<ComplexRoot> &partial() const noexcept { return partial_; }

private:
    std::vector<ComplexRoot> partial_;
};

/// All complex roots of an integer polynomial. Multiplicities come from an
/// exact squarefree decomposition; each squarefree factor is solved by
/// companion-matrix eigenvalues polished with Aberth-Ehrlich iterations.
/// Roots are ordered by real part, then imaginary part.
std::vector<ComplexRoot> complex_roots(const UPoly &p, double tol = default_tol);

/// Roots of a polynomial with complex coefficients (low to high). Each root is
/// reported once per multiplicity.
std::vector<Complex> complex_roots(std::span<const Complex> coeffs, double tol = default_tol);

/// Deterministic ordering used for every root list in the library.
bool root_less(Complex a, Complex b);

} // namespace talex

#endif
