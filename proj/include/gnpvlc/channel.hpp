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
#ifndef GNPVLC_CHANNEL_HPP
#define GNPVLC_CHANNEL_HPP

#include <string>
#include <vector>

#include "gnpvlc/geometry.hpp"
#include "gnpvlc/gnp.hpp"
#include "gnpvlc/polarization.hpp"

namespace gnpvlc {

/// Polarizer angles, radians: one per transmitter plus the receiver's.
struct PolarizerConfig {
    std::vector<double> tx_angles;
    double rx_angle = 0.0;

    void validate() const;
};

/// One propagation path together with the plate response it passes through.
struct PathTerm {
    ChannelPath path;
    GnpPathResponse gnp;
};

/// Everything between one receiver and all transmitters: per-transmitter
/// lists of (geometry, plate response) path terms. Path counts must match
/// across transmitters.
struct ReceiverChannel {
    std::string label;                          ///< "bob", "eve0", ...
    std::vector<std::vector<PathTerm>> per_tx;  ///< [tx][path]

    size_t num_tx() const { return per_tx.size(); }
    void validate() const;
};

/// Real nonnegative per-transmitter channel after the photodiode collapses
/// polarization: h_m = sum_n g (aL + aR + 2 sqrt(aL aR) cos(2 rx - 2 tx_m - dphi)).
struct EffectiveChannel {
    std::vector<double> h;

    double norm() const { return gnpvlc::norm(h); }
};

/// Circular amplitudes of one path just before the PD.
struct CpPathAmplitudes {
    cplx r_l{};
    cplx r_r{};
};

/// Per-transmitter, per-path circular amplitudes. Paths are kept separate:
/// LED light is incoherent across paths, so the PD adds path intensities,
/// not amplitudes.
using CpAmplitudes = std::vector<std::vector<CpPathAmplitudes>>;

/// Circular amplitudes of unpolarized intensity x through a linear polarizer
/// at angle theta: (sqrt(x)/2) [e^{-j theta}, e^{j theta}].
JonesVector transmit_cp_amplitudes(double x, double theta);

/// Full circular-polarization-domain chain per transmitter and path:
/// path loss, delay phase, plate response, and receiver polarizer retardation.
/// x holds the per-transmitter radiated intensities.
CpAmplitudes received_cp_amplitudes(const ReceiverChannel& rc, const PolarizerConfig& pc,
                                    const std::vector<double>& x);

/// Photodiode output current: eta times the summed path intensities plus an
/// optional additive noise sample.
double pd_intensity(const CpAmplitudes& cp, double eta, double noise = 0.0);

/// Closed-form effective channel equivalent to the full chain:
/// (eta/8) h^T x reproduces pd_intensity of received_cp_amplitudes exactly.
EffectiveChannel effective_channel(const ReceiverChannel& rc, const PolarizerConfig& pc);

/// Received symbol observation after DC removal:
/// y = rho h^T s + noise, with s the precoded symbol vector.
double received_symbol_signal(const EffectiveChannel& h, double rho,
                              const std::vector<double>& s, double noise = 0.0);

/// rho = eta zeta P_tx / 8, the scalar in front of the symbol-domain model.
double symbol_gain(double eta, double zeta, double p_tx);

/// Sum of path gains per transmitter (the plain geometric channel, used by
/// the reference scheme without plates or polarizers).
std::vector<double> geometric_gains(const ReceiverChannel& rc);

}  // namespace gnpvlc

#endif
