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
#include "gnpvlc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace gnpvlc {

void PolarizerConfig::validate() const {
    if (tx_angles.empty()) throw std::invalid_argument("PolarizerConfig: no transmitter angles");
    for (double a : tx_angles)
        if (!(a >= -kPi / 2 && a <= kPi / 2))
            throw std::invalid_argument("PolarizerConfig: tx angle outside [-pi/2, pi/2]");
    if (!(rx_angle >= -kPi / 2 && rx_angle <= kPi / 2))
        throw std::invalid_argument("PolarizerConfig: rx angle outside [-pi/2, pi/2]");
}

void ReceiverChannel::validate() const {
    if (per_tx.empty()) throw std::invalid_argument("ReceiverChannel: no transmitters");
    const size_t n_paths = per_tx.front().size();
    for (const auto& paths : per_tx) {
        if (paths.size() != n_paths)
            throw std::invalid_argument("ReceiverChannel: path counts differ across transmitters");
        for (const auto& term : paths) {
            if (term.path.gain < 0.0)
                throw std::invalid_argument("ReceiverChannel: negative path gain");
            term.gnp.validate();
        }
    }
}

JonesVector transmit_cp_amplitudes(double x, double theta) {
    if (x < 0.0) throw std::invalid_argument("transmit_cp_amplitudes: negative intensity");
    const double amp = 0.5 * std::sqrt(x);
    return {amp * std::exp(cplx(0.0, -theta)), amp * std::exp(cplx(0.0, theta)),
            PolBasis::Circular};
}

CpAmplitudes received_cp_amplitudes(const ReceiverChannel& rc, const PolarizerConfig& pc,
                                    const std::vector<double>& x) {
    if (x.size() != rc.num_tx() || pc.tx_angles.size() != rc.num_tx())
        throw std::invalid_argument("received_cp_amplitudes: dimension mismatch");
    const double theta_c = pc.rx_angle;

    CpAmplitudes out(rc.num_tx());
    for (size_t m = 0; m < rc.num_tx(); ++m) {
        if (x[m] < 0.0) throw std::invalid_argument("received_cp_amplitudes: negative intensity");
        const double theta_m = pc.tx_angles[m];
        out[m].reserve(rc.per_tx[m].size());
        for (const auto& term : rc.per_tx[m]) {
            const double amp = 0.25 * std::sqrt(term.path.gain * x[m]);
            const double sl = std::sqrt(term.gnp.a_bar_l);
            const double sr = std::sqrt(term.gnp.a_bar_r);
            const double vth = term.path.delay_phase;
            const double dphi = term.gnp.delta_phi;
            CpPathAmplitudes a;
            a.r_l = amp * (sl * std::exp(cplx(0.0, vth - theta_m)) +
                           sr * std::exp(cplx(0.0, vth - 2.0 * theta_c + theta_m + dphi)));
            a.r_r = amp * (sl * std::exp(cplx(0.0, vth + 2.0 * theta_c - theta_m)) +
                           sr * std::exp(cplx(0.0, vth + theta_m + dphi)));
            out[m].push_back(a);
        }
    }
    return out;
}

double pd_intensity(const CpAmplitudes& cp, double eta, double noise) {
    if (!(eta > 0.0)) throw std::invalid_argument("pd_intensity: responsivity must be positive");
    double sum = 0.0;
    for (const auto& per_path : cp)
        for (const auto& a : per_path) sum += std::norm(a.r_l) + std::norm(a.r_r);
    return eta * sum + noise;
}

EffectiveChannel effective_channel(const ReceiverChannel& rc, const PolarizerConfig& pc) {
    if (pc.tx_angles.size() != rc.num_tx())
        throw std::invalid_argument("effective_channel: dimension mismatch");
    EffectiveChannel ec;
    ec.h.resize(rc.num_tx(), 0.0);
    for (size_t m = 0; m < rc.num_tx(); ++m) {
        double hm = 0.0;
        for (const auto& term : rc.per_tx[m]) {
            const double al = term.gnp.a_bar_l, ar = term.gnp.a_bar_r;
            const double w = 2.0 * pc.rx_angle - 2.0 * pc.tx_angles[m] - term.gnp.delta_phi;
            hm += term.path.gain * (al + ar + 2.0 * std::sqrt(al * ar) * std::cos(w));
        }
        ec.h[m] = hm;
    }
    return ec;
}

double received_symbol_signal(const EffectiveChannel& h, double rho,
                              const std::vector<double>& s, double noise) {
    if (!(rho > 0.0)) throw std::invalid_argument("received_symbol_signal: rho must be positive");
    return rho * dot(h.h, s) + noise;
}

double symbol_gain(double eta, double zeta, double p_tx) {
    if (!(eta > 0.0 && zeta > 0.0 && p_tx > 0.0))
        throw std::invalid_argument("symbol_gain: constants must be positive");
    return eta * zeta * p_tx / 8.0;
}

std::vector<double> geometric_gains(const ReceiverChannel& rc) {
    std::vector<double> g(rc.num_tx(), 0.0);
    for (size_t m = 0; m < rc.num_tx(); ++m)
        for (const auto& term : rc.per_tx[m]) g[m] += term.path.gain;
    return g;
}

}  // namespace gnpvlc
