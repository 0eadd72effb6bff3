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
#ifndef GNPVLC_PRECODING_HPP
#define GNPVLC_PRECODING_HPP

#include <cstddef>
#include <vector>

#include "gnpvlc/channel.hpp"
#include "gnpvlc/rng.hpp"

namespace gnpvlc {

/// Matched-filter vector for the intended symbol plus the orthogonal
/// projector carrying the artificial noise. w is unit norm; w_a is the
/// symmetric idempotent projector onto the nullspace of the channel,
/// stored row-major n x n.
struct PrecoderPair {
    std::vector<double> w;
    std::vector<double> w_a;

    size_t dim() const { return w.size(); }
};

/// Real symbol alphabet. The default 4-PAM uses levels {-3,-1,1,3}/sqrt(5),
/// normalized to unit average power over equiprobable symbols.
struct Constellation {
    std::vector<double> points;

    static Constellation pam4();
    size_t size() const { return points.size(); }
};

/// One composed transmit frame: symbol, artificial noise, precoded vector,
/// and the DC-biased intensity vector.
struct TransmitFrame {
    double s_symbol = 0.0;
    std::vector<double> an;
    std::vector<double> s;  ///< w s + (1/n) W_a s_a
    std::vector<double> x;  ///< zeta P_tx (I_dc 1 + s)
    double i_dc = 0.0;
};

/// Maximum-ratio transmission: w = h / ||h||. Zero channels are rejected.
std::vector<double> mrt_precoder(const EffectiveChannel& h);

/// Artificial-noise projector W_a = I - h h^dagger with h^dagger = h^T/||h||^2.
/// Symmetric, idempotent, annihilates h. Zero channels are rejected.
std::vector<double> an_projector(const EffectiveChannel& h);

/// Both precoders from one channel.
PrecoderPair make_precoders(const EffectiveChannel& h);

/// Artificial-noise vector: each of n components drawn uniformly from the
/// constellation minus the intended symbol (given by index).
std::vector<double> sample_artificial_noise(size_t intended_index, const Constellation& c,
                                            size_t n, Rng& rng);

/// Compose the biased transmit vector of one frame. Throws (naming the
/// offending component) if any |s_m| exceeds the DC bias; clipping would
/// silently change the signal model.
TransmitFrame compose_transmit(const PrecoderPair& p, double s_symbol,
                               const std::vector<double>& an, double i_dc, double zeta,
                               double p_tx);

/// Reference-scheme precoders built from the plain geometric channel
/// (per-transmitter path-gain sums) instead of the effective channel.
PrecoderPair baseline_precoder(const std::vector<double>& geometric_gains);

}  // namespace gnpvlc

#endif
