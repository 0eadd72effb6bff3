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
#include "gnpvlc/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gnpvlc {

namespace {

double coeff_scale(const std::vector<cplx>& c) {
    double s = 0.0;
    for (const auto& e : c) s = std::max(s, std::abs(e));
    return s;
}

std::vector<cplx> derivative(const std::vector<cplx>& c) {
    const size_t deg = c.size() - 1;
    std::vector<cplx> d(deg);
    for (size_t i = 0; i < deg; ++i) d[i] = c[i] * static_cast<double>(deg - i);
    return d;
}

void newton_polish(const std::vector<cplx>& c, cplx& t) {
    const auto d = derivative(c);
    for (int it = 0; it < 12; ++it) {
        const cplx f = polyval(c, t);
        const cplx fp = polyval(d, t);
        if (std::abs(fp) == 0.0) return;
        const cplx step = f / fp;
        t -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(t))) return;
    }
}

// sum_i |c_i| |t|^(deg - i), the natural magnitude of the evaluation.
double residual_scale(const std::vector<cplx>& c, cplx t) {
    const double at = std::abs(t);
    double s = 0.0, power = 1.0;
    for (size_t i = c.size(); i-- > 0;) {
        s += std::abs(c[i]) * power;
        power *= at;
    }
    return std::max(s, 1e-300);
}

// Weierstrass simultaneous iteration; used when the closed form is
// ill-conditioned (e.g. nearly multiple roots).
std::vector<cplx> durand_kerner(const std::vector<cplx>& c) {
    const size_t deg = c.size() - 1;
    std::vector<cplx> monic(c.size());
    for (size_t i = 0; i < c.size(); ++i) monic[i] = c[i] / c[0];
    double radius = 0.0;
    for (size_t i = 1; i < monic.size(); ++i) radius = std::max(radius, std::abs(monic[i]));
    radius = 1.0 + radius;

    std::vector<cplx> x(deg);
    const cplx seed(0.4, 0.9);
    cplx acc = 1.0;
    for (size_t k = 0; k < deg; ++k) {
        acc *= seed;
        x[k] = acc * radius;
    }
    for (int it = 0; it < 500; ++it) {
        double worst = 0.0;
        for (size_t k = 0; k < deg; ++k) {
            cplx denom = 1.0;
            for (size_t j = 0; j < deg; ++j)
                if (j != k) denom *= (x[k] - x[j]);
            if (std::abs(denom) == 0.0) {
                x[k] += cplx(1e-8, 1e-8) * radius;
                continue;
            }
            const cplx w = polyval(monic, x[k]) / denom;
            x[k] -= w;
            worst = std::max(worst, std::abs(w));
        }
        if (worst < 1e-15 * radius) break;
    }
    return x;
}

bool residuals_ok(const std::vector<cplx>& c, const std::vector<cplx>& roots, double rel_tol) {
    for (const auto& t : roots)
        if (std::abs(polyval(c, t)) > rel_tol * residual_scale(c, t)) return false;
    return true;
}

}  // namespace

cplx polyval(const std::vector<cplx>& coeffs, cplx t) {
    cplx acc = 0.0;
    for (const auto& c : coeffs) acc = acc * t + c;
    return acc;
}

std::vector<cplx> quadratic_roots(const std::array<cplx, 3>& c) {
    const double scale = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
    if (scale == 0.0) throw std::invalid_argument("quadratic_roots: zero polynomial");
    if (std::abs(c[0]) <= 1e-14 * scale) {
        if (std::abs(c[1]) <= 1e-14 * scale)
            throw std::invalid_argument("quadratic_roots: degree 0 polynomial");
        return {-c[2] / c[1]};
    }
    const cplx disc = std::sqrt(c[1] * c[1] - 4.0 * c[0] * c[2]);
    // Pick the branch that avoids cancellation in the numerator.
    const cplx q = (std::real(std::conj(c[1]) * disc) >= 0.0) ? -0.5 * (c[1] + disc)
                                                              : -0.5 * (c[1] - disc);
    std::vector<cplx> roots;
    roots.push_back(q / c[0]);
    if (std::abs(q) > 0.0)
        roots.push_back(c[2] / q);
    else
        roots.push_back(-roots[0]);
    return roots;
}

std::vector<cplx> cubic_roots(const std::array<cplx, 4>& c) {
    const double scale = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), std::abs(c[3])});
    if (scale == 0.0) throw std::invalid_argument("cubic_roots: zero polynomial");
    if (std::abs(c[0]) <= 1e-14 * scale)
        return quadratic_roots({c[1], c[2], c[3]});

    const cplx b = c[1] / c[0], cc = c[2] / c[0], d = c[3] / c[0];
    // Depressed cubic z^3 + p z + q with t = z - b/3.
    const cplx p = cc - b * b / 3.0;
    const cplx q = d - b * cc / 3.0 + 2.0 * b * b * b / 27.0;

    const cplx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    cplx u = std::pow(-q / 2.0 + disc, 1.0 / 3.0);
    if (std::abs(u) < 1e-30) u = std::pow(-q / 2.0 - disc, 1.0 / 3.0);

    std::vector<cplx> roots;
    const std::vector<cplx> full{c[0], c[1], c[2], c[3]};
    if (std::abs(u) < 1e-30) {
        roots.assign(3, -b / 3.0);
    } else {
        const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
        cplx uk = u;
        for (int k = 0; k < 3; ++k) {
            roots.push_back(uk - p / (3.0 * uk) - b / 3.0);
            uk *= omega;
        }
    }
    for (auto& t : roots) newton_polish(full, t);
    return roots;
}

std::vector<cplx> quartic_roots(const std::array<cplx, 5>& c) {
    double scale = 0.0;
    for (const auto& e : c) scale = std::max(scale, std::abs(e));
    if (scale == 0.0) throw std::invalid_argument("quartic_roots: zero polynomial");
    if (std::abs(c[0]) <= 1e-14 * scale)
        return cubic_roots({c[1], c[2], c[3], c[4]});

    const cplx a = c[1] / c[0], b = c[2] / c[0], cc = c[3] / c[0], d = c[4] / c[0];
    // Depressed quartic y^4 + p y^2 + q y + r with t = y - a/4.
    const cplx p = b - 3.0 * a * a / 8.0;
    const cplx q = cc - a * b / 2.0 + a * a * a / 8.0;
    const cplx r = d - a * cc / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;

    const std::vector<cplx> full{c[0], c[1], c[2], c[3], c[4]};
    const double dscale = std::max({std::abs(p), std::abs(q), std::abs(r), 1.0});

    std::vector<cplx> ys;
    if (std::abs(q) <= 1e-14 * dscale) {
        // Biquadratic: y^2 solves z^2 + p z + r.
        for (const cplx& z : quadratic_roots({cplx(1.0), p, r})) {
            const cplx y = std::sqrt(z);
            ys.push_back(y);
            ys.push_back(-y);
        }
    } else {
        // Ferrari resolvent 8 m^3 + 8 p m^2 + (2 p^2 - 8 r) m - q^2 = 0.
        const auto ms = cubic_roots({cplx(8.0), 8.0 * p, 2.0 * p * p - 8.0 * r, -q * q});
        cplx m = ms[0];
        for (const auto& cand : ms)
            if (std::abs(cand) > std::abs(m)) m = cand;
        const cplx s = std::sqrt(2.0 * m);
        const cplx half = p / 2.0 + m;
        const cplx shift = q / (2.0 * s);
        for (const cplx& y : quadratic_roots({cplx(1.0), -s, half + shift})) ys.push_back(y);
        for (const cplx& y : quadratic_roots({cplx(1.0), s, half - shift})) ys.push_back(y);
    }

    std::vector<cplx> roots;
    roots.reserve(4);
    for (const cplx& y : ys) {
        cplx t = y - a / 4.0;
        newton_polish(full, t);
        roots.push_back(t);
    }

    if (!residuals_ok(full, roots, 1e-10)) {
        roots = durand_kerner(full);
        for (auto& t : roots) newton_polish(full, t);
    }
    if (!residuals_ok(full, roots, 1e-8))
        throw std::runtime_error("quartic_roots: root residuals above tolerance");
    return roots;
}

}  // namespace gnpvlc
