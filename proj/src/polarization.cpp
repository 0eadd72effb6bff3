/**********
 *   Copyright 2026 The gnpvlc authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
\**********/
#include "gnpvlc/polarization.hpp"

#include <cmath>
#include <stdexcept>

namespace gnpvlc {

namespace {

const cplx kJ(0.0, 1.0);

void require_basis(PolBasis got, PolBasis want, const char* who) {
    if (got != want) throw std::invalid_argument(std::string(who) + ": wrong polarization basis");
}

// Kronecker product of a 2x2 matrix with the conjugate of another.
Mat4c kron_conj(const Mat2c& a, const Mat2c& b) {
    Mat4c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * std::conj(b(k, l));
    return r;
}

Mat4c jones_to_mueller_transform() {
    Mat4c t;
    t(0, 0) = 1; t(0, 3) = 1;
    t(1, 0) = 1; t(1, 3) = -1;
    t(2, 1) = 1; t(2, 2) = 1;
    t(3, 1) = kJ; t(3, 2) = -kJ;
    return t;
}

Mat4c jones_to_mueller_transform_inv() {
    Mat4c t;
    t(0, 0) = 0.5; t(0, 1) = 0.5;
    t(1, 2) = 0.5; t(1, 3) = -0.5 * kJ;
    t(2, 2) = 0.5; t(2, 3) = 0.5 * kJ;
    t(3, 0) = 0.5; t(3, 1) = -0.5;
    return t;
}

}  // namespace

Mat2c linear_to_circular_matrix() {
    const double r = 1.0 / std::sqrt(2.0);
    Mat2c t;
    t(0, 0) = r; t(0, 1) = -r * kJ;
    t(1, 0) = r; t(1, 1) = r * kJ;
    return t;
}

StokesVector stokes_from_jones(const JonesVector& j) {
    require_basis(j.basis, PolBasis::Linear, "stokes_from_jones");
    const cplx cross = j.a * std::conj(j.b);
    return {std::norm(j.a) + std::norm(j.b), std::norm(j.a) - std::norm(j.b),
            2.0 * cross.real(), -2.0 * cross.imag()};
}

JonesVector jones_from_stokes(const StokesVector& s) {
    if (s.s0 < 0) throw std::domain_error("jones_from_stokes: negative intensity");
    if (s.s0 == 0) return {0.0, 0.0, PolBasis::Linear};
    const double pol = s.polarized_intensity();
    if (std::abs(pol - s.s0) > 1e-9 * s.s0)
        throw std::domain_error("jones_from_stokes: input is not fully polarized");

    const double ex2 = std::max(0.5 * (s.s0 + s.s1), 0.0);
    const double ey2 = std::max(0.5 * (s.s0 - s.s1), 0.0);
    const double ex = std::sqrt(ex2);
    if (ex < 1e-12 * std::sqrt(s.s0)) {
        return {0.0, std::sqrt(ey2), PolBasis::Linear};
    }
    // s2 = 2 Re(Ex Ey*), s3 = -2 Im(Ex Ey*); with Ex real positive,
    // Ey = conj(Ex Ey*) / Ex.
    const cplx ey = cplx(0.5 * s.s2, 0.5 * s.s3) / ex;
    return {ex, ey, PolBasis::Linear};
}

JonesVector linear_to_circular(const JonesVector& j) {
    require_basis(j.basis, PolBasis::Linear, "linear_to_circular");
    auto v = linear_to_circular_matrix() * std::array<cplx, 2>{j.a, j.b};
    return {v[0], v[1], PolBasis::Circular};
}

JonesVector circular_to_linear(const JonesVector& j) {
    require_basis(j.basis, PolBasis::Circular, "circular_to_linear");
    // T is unitary, so the inverse is the conjugate transpose.
    const double r = 1.0 / std::sqrt(2.0);
    return {r * (j.a + j.b), r * kJ * (j.a - j.b), PolBasis::Linear};
}

JonesMatrix polarizer_jones(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("polarizer_jones: non-finite angle");
    const double c = std::cos(theta), s = std::sin(theta);
    Mat2c m;
    m(0, 0) = c * c; m(0, 1) = c * s;
    m(1, 0) = c * s; m(1, 1) = s * s;
    return {m, PolBasis::Linear};
}

JonesMatrix polarizer_circular(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("polarizer_circular: non-finite angle");
    Mat2c m;
    m(0, 0) = 0.5;
    m(0, 1) = 0.5 * std::exp(-2.0 * theta * kJ);
    m(1, 0) = 0.5 * std::exp(2.0 * theta * kJ);
    m(1, 1) = 0.5;
    return {m, PolBasis::Circular};
}

MuellerMatrix mueller_from_jones(const JonesMatrix& j) {
    require_basis(j.basis, PolBasis::Linear, "mueller_from_jones");
    const Mat4c prod =
        jones_to_mueller_transform() * kron_conj(j.m, j.m) * jones_to_mueller_transform_inv();

    double scale = 0.0;
    for (const auto& e : prod.m) scale = std::max(scale, std::abs(e));
    const double tol = 1e-12 * std::max(scale, 1.0);

    MuellerMatrix out;
    for (int i = 0; i < 16; ++i) {
        const cplx e = prod.m[static_cast<size_t>(i)];
        if (std::abs(e.imag()) > tol)
            throw std::runtime_error("mueller_from_jones: imaginary residue above tolerance");
        out.m.m[static_cast<size_t>(i)] = e.real();
    }
    return out;
}

MuellerMatrix polarizer_mueller(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("polarizer_mueller: non-finite angle");
    const double c = std::cos(2.0 * theta), s = std::sin(2.0 * theta);
    MuellerMatrix out;
    out.m(0, 0) = 0.5;         out.m(0, 1) = 0.5 * c;     out.m(0, 2) = 0.5 * s;
    out.m(1, 0) = 0.5 * c;     out.m(1, 1) = 0.5 * c * c; out.m(1, 2) = 0.5 * s * c;
    out.m(2, 0) = 0.5 * s;     out.m(2, 1) = 0.5 * s * c; out.m(2, 2) = 0.5 * s * s;
    // Last row/column are zero: a linear polarizer maps any s3 to 0.
    return out;
}

}  // namespace gnpvlc
