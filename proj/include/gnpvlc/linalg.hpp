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
#ifndef GNPVLC_LINALG_HPP
#define GNPVLC_LINALG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gnpvlc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// 3D point/direction in meters.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// 2x2 complex matrix, row-major.
struct Mat2c {
    std::array<cplx, 4> m{};

    cplx& operator()(int r, int c) { return m[static_cast<size_t>(2 * r + c)]; }
    const cplx& operator()(int r, int c) const { return m[static_cast<size_t>(2 * r + c)]; }

    static Mat2c identity() { return {{cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0)}}; }
};

inline Mat2c operator*(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

inline std::array<cplx, 2> operator*(const Mat2c& a, const std::array<cplx, 2>& v) {
    return {a(0, 0) * v[0] + a(0, 1) * v[1], a(1, 0) * v[0] + a(1, 1) * v[1]};
}

/// 4x4 complex matrix, row-major. Used for the Jones->Mueller conversion.
struct Mat4c {
    std::array<cplx, 16> m{};

    cplx& operator()(int r, int c) { return m[static_cast<size_t>(4 * r + c)]; }
    const cplx& operator()(int r, int c) const { return m[static_cast<size_t>(4 * r + c)]; }
};

inline Mat4c operator*(const Mat4c& a, const Mat4c& b) {
    Mat4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

/// 4x4 real matrix, row-major.
struct Mat4d {
    std::array<double, 16> m{};

    double& operator()(int r, int c) { return m[static_cast<size_t>(4 * r + c)]; }
    const double& operator()(int r, int c) const { return m[static_cast<size_t>(4 * r + c)]; }

    static Mat4d identity() {
        Mat4d r;
        for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
        return r;
    }
};

inline Mat4d operator*(const Mat4d& a, const Mat4d& b) {
    Mat4d r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline std::array<double, 4> operator*(const Mat4d& a, const std::array<double, 4>& v) {
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) r[static_cast<size_t>(i)] += a(i, k) * v[static_cast<size_t>(k)];
    return r;
}

// Dynamic real vectors (length = number of transmitters).

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

/// y = M x for a row-major n x n matrix stored flat.
inline std::vector<double> matvec(const std::vector<double>& mat, const std::vector<double>& x) {
    const size_t n = x.size();
    if (mat.size() != n * n) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<double> y(n, 0.0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) y[i] += mat[i * n + j] * x[j];
    return y;
}

/// Wrap an angle into (-pi, pi].
inline double wrap_pm_pi(double a) {
    double w = std::remainder(a, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

/// Wrap a polarizer angle into [-pi/2, pi/2] (polarizers are pi-periodic).
inline double wrap_half_pi(double a) {
    double w = std::remainder(a, kPi);
    if (w < -kPi / 2) w += kPi;
    if (w > kPi / 2) w -= kPi;
    return w;
}

}  // namespace gnpvlc

#endif
