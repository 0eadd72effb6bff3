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
#include "gnpvlc/precoding.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gnpvlc {

namespace {

std::vector<double> unit_direction(const std::vector<double>& v, const char* who) {
    const double n = norm(v);
    if (!(n > 0.0)) throw std::invalid_argument(std::string(who) + ": zero channel");
    std::vector<double> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] / n;
    return w;
}

std::vector<double> projector_orthogonal_to(const std::vector<double>& v, const char* who) {
    const std::vector<double> u = unit_direction(v, who);
    const size_t n = u.size();
    std::vector<double> p(n * n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) p[i * n + j] = -u[i] * u[j];
        p[i * n + i] += 1.0;
    }
    return p;
}

}  // namespace

Constellation Constellation::pam4() {
    const double s = 1.0 / std::sqrt(5.0);
    return {{-3.0 * s, -1.0 * s, 1.0 * s, 3.0 * s}};
}

std::vector<double> mrt_precoder(const EffectiveChannel& h) {
    return unit_direction(h.h, "mrt_precoder");
}

std::vector<double> an_projector(const EffectiveChannel& h) {
    return projector_orthogonal_to(h.h, "an_projector");
}

PrecoderPair make_precoders(const EffectiveChannel& h) {
    return {mrt_precoder(h), an_projector(h)};
}

std::vector<double> sample_artificial_noise(size_t intended_index, const Constellation& c,
                                            size_t n, Rng& rng) {
    if (c.size() < 2) throw std::invalid_argument("sample_artificial_noise: constellation too small");
    if (intended_index >= c.size())
        throw std::invalid_argument("sample_artificial_noise: intended index out of range");
    std::vector<double> an(n);
    for (size_t i = 0; i < n; ++i) {
        const size_t offset = 1 + rng.uniform_int(c.size() - 1);
        an[i] = c.points[(intended_index + offset) % c.size()];
    }
    return an;
}

TransmitFrame compose_transmit(const PrecoderPair& p, double s_symbol,
                               const std::vector<double>& an, double i_dc, double zeta,
                               double p_tx) {
    const size_t n = p.dim();
    if (an.size() != n) throw std::invalid_argument("compose_transmit: noise dimension mismatch");
    if (!(i_dc > 0.0)) throw std::invalid_argument("compose_transmit: DC bias must be positive");
    if (!(zeta > 0.0 && p_tx > 0.0))
        throw std::invalid_argument("compose_transmit: conversion constants must be positive");

    TransmitFrame f;
    f.s_symbol = s_symbol;
    f.an = an;
    f.i_dc = i_dc;
    const std::vector<double> an_proj = matvec(p.w_a, an);
    f.s.resize(n);
    for (size_t i = 0; i < n; ++i) {
        f.s[i] = p.w[i] * s_symbol + an_proj[i] / static_cast<double>(n);
        if (std::abs(f.s[i]) > i_dc)
            throw std::domain_error("compose_transmit: DC bias violated at component " +
                                    std::to_string(i) + " (|s| = " + std::to_string(std::abs(f.s[i])) +
                                    ", I_dc = " + std::to_string(i_dc) + ")");
    }
    f.x.resize(n);
    for (size_t i = 0; i < n; ++i) f.x[i] = zeta * p_tx * (i_dc + f.s[i]);
    return f;
}

PrecoderPair baseline_precoder(const std::vector<double>& geometric_gains) {
    for (double g : geometric_gains)
        if (g < 0.0) throw std::invalid_argument("baseline_precoder: negative gain");
    return {unit_direction(geometric_gains, "baseline_precoder"),
            projector_orthogonal_to(geometric_gains, "baseline_precoder")};
}

}  // namespace gnpvlc
