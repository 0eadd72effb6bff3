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
#ifndef GNPVLC_POLARIZATION_HPP
#define GNPVLC_POLARIZATION_HPP

#include "gnpvlc/linalg.hpp"

namespace gnpvlc {

/// Basis for Jones vectors/matrices. Circular ordering is (LCP, RCP), fixed by
/// the linear-to-circular transform below.
enum class PolBasis { Linear, Circular };

/// Complex field amplitudes of fully polarized light. Components are
/// (E_x, E_y) in the linear basis and (E_L, E_R) in the circular one.
struct JonesVector {
    cplx a{};
    cplx b{};
    PolBasis basis = PolBasis::Linear;

    double intensity() const { return std::norm(a) + std::norm(b); }
};

/// Stokes parameters (s0, s1, s2, s3) in intensity units. Covers unpolarized
/// and partially polarized states; s1^2 + s2^2 + s3^2 <= s0^2.
struct StokesVector {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0;

    static StokesVector unpolarized(double intensity) { return {intensity, 0, 0, 0}; }

    double polarized_intensity() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }

    /// Degree of polarization p in [0, 1]; 0 for dark states.
    double degree_of_polarization() const { return s0 > 0 ? polarized_intensity() / s0 : 0.0; }

    std::array<double, 4> as_array() const { return {s0, s1, s2, s3}; }
};

struct JonesMatrix {
    Mat2c m;
    PolBasis basis = PolBasis::Linear;
};

/// 4x4 real Mueller matrix acting on linear-domain Stokes vectors.
struct MuellerMatrix {
    Mat4d m;

    StokesVector operator*(const StokesVector& s) const {
        auto r = m * s.as_array();
        return {r[0], r[1], r[2], r[3]};
    }
};

/// Linear -> circular basis change, rows ordered (LCP, RCP):
/// (1/sqrt(2)) [[1, -j], [1, j]]. Unitary.
Mat2c linear_to_circular_matrix();

/// Stokes vector of a (linear-basis) Jones vector:
/// [|E_x|^2 + |E_y|^2, |E_x|^2 - |E_y|^2, 2 Re(E_x E_y*), -2 Im(E_x E_y*)].
/// The result is fully polarized.
StokesVector stokes_from_jones(const JonesVector& j);

/// Inverse of stokes_from_jones for fully polarized input (p = 1 within 1e-9
/// relative). Global phase convention: E_x real >= 0; if E_x vanishes, E_y
/// real >= 0. Throws std::domain_error for partially polarized input, which
/// has no Jones representation.
JonesVector jones_from_stokes(const StokesVector& s);

/// Basis change of a Jones vector from linear to circular components.
JonesVector linear_to_circular(const JonesVector& j);

/// Inverse basis change, circular to linear.
JonesVector circular_to_linear(const JonesVector& j);

/// Jones matrix of an ideal linear polarizer at angle theta (linear basis):
/// [[cos^2, cos sin], [cos sin, sin^2]]. Idempotent, rank 1.
JonesMatrix polarizer_jones(double theta);

/// Linear polarizer in the circular basis: (1/2) [[1, e^{-j2theta}],
/// [e^{j2theta}, 1]]. Retards the RCP component by 2*theta relative to LCP.
JonesMatrix polarizer_circular(double theta);

/// Mueller matrix of an arbitrary (linear-basis) Jones matrix via
/// M = T (J (x) J*) T^{-1}. The imaginary residue of the product must stay
/// below 1e-12 of the matrix scale; a larger residue throws.
MuellerMatrix mueller_from_jones(const JonesMatrix& j);

/// Closed-form Mueller matrix of a linear polarizer at angle theta.
MuellerMatrix polarizer_mueller(double theta);

}  // namespace gnpvlc

#endif
