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

#ifndef TALEX_MAT2_HPP
#define TALEX_MAT2_HPP

#include "talex/polyring.hpp"

namespace talex {

/// 2x2 matrix over Z[s^+-1, y, t^+-1].
struct Mat2 {
    MPoly a11, a12, a21, a22;

    static Mat2 identity() { return {MPoly(1), MPoly(), MPoly(), MPoly(1)}; }

    MPoly det() const { return a11 * a22 - a12 * a21; }
    MPoly trace() const { return a11 + a22; }
    /// Adjugate; the inverse whenever det = 1.
    Mat2 adjugate() const { return {a22, -a12, -a21, a11}; }

    Mat2 scaled(const MPoly &c) const { return {a11 * c, a12 * c, a21 * c, a22 * c}; }
    Mat2 reduced(const SyModulus &m) const { return {m.reduce(a11), m.reduce(a12), m.reduce(a21), m.reduce(a22)}; }

    friend Mat2 operator*(const Mat2 &x, const Mat2 &y)
    {
        return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22, x.a21 * y.a11 + x.a22 * y.a21,
                x.a21 * y.a12 + x.a22 * y.a22};
    }
    friend Mat2 operator+(const Mat2 &x, const Mat2 &y)
    {
        return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
    }
    friend Mat2 operator-(const Mat2 &x, const Mat2 &y)
    {
        return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
    }
    friend bool operator==(const Mat2 &, const Mat2 &) = default;
};

} // namespace talex

#endif
