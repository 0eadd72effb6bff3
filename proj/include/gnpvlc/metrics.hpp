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
#ifndef GNPVLC_METRICS_HPP
#define GNPVLC_METRICS_HPP

#include <cstdint>
#include <vector>

#include "gnpvlc/channel.hpp"
#include "gnpvlc/precoding.hpp"

namespace gnpvlc {

struct SinrReport {
    double bob = 0.0;
    double eve = 0.0;
};

struct SerResult {
    double ser_bob = 0.0;
    double ser_eve = 0.0;
    long long trials = 0;
    uint64_t seed = 0;
};

/// How the eavesdropper treats the artificial noise when detecting.
/// Joint: maximum likelihood over (symbol, noise vector) — the strongest
/// standard eavesdropper given full channel and precoder knowledge.
/// Blind: nearest symbol hypothesis, artificial noise treated as noise.
enum class EveDetector { Joint, Blind };

/// SINRs under matched-filter symbol precoding and nullspace artificial
/// noise: bob = rho^2 ||h_B||^2 / sigma^2;
/// eve = rho^2 (h_E^T w)^2 / ((rho^2/n^2) ||W_a h_E||^2 + sigma^2).
SinrReport sinr_pair(const EffectiveChannel& h_bob, const EffectiveChannel& h_eve,
                     const PrecoderPair& p, double rho, double sigma2);

/// Algebraically rearranged eavesdropper SINR, n^2 / (1/f - 1) with
/// f = (h_E^T h_B h_B^dagger h_E) / (h_E^T (I + (n^2 sigma^2/rho^2)/||h_E||^2 I) h_E).
/// Must agree with the direct form; kept as an independent route for checks.
double sinr_eve_f_form(const EffectiveChannel& h_bob, const EffectiveChannel& h_eve, double rho,
                       double sigma2);

/// Achievable-rate lower bound R = (1/2) log2(1 + (e/2pi) sinr), bits/s/Hz.
double achievable_rate(double sinr);

/// Secrecy rate max(r_bob - max_k r_eves[k], 0). The eavesdropper list must
/// be non-empty.
double secrecy_rate(double r_bob, const std::vector<double>& r_eves);

/// Maximum-likelihood symbol detector with hypothesis tables precomputed
/// from one channel/precoder pair.
class MlDetector {
  public:
    enum class Mode { Bob, EveJoint, EveBlind };

    MlDetector(const EffectiveChannel& h, const PrecoderPair& p, double rho,
               const Constellation& c, Mode mode);

    /// Detected constellation index; ties break toward the smallest index.
    size_t detect(double y) const;

  private:
    Mode mode_;
    size_t n_points_;
    std::vector<double> symbol_means_;  ///< per-symbol noiseless observation
    std::vector<double> an_offsets_;    ///< all artificial-noise observations (joint mode)
};

/// One-shot ML detection. mode Bob assumes the artificial noise is nulled;
/// the eavesdropper modes search the full hypothesis set.
size_t ml_detect(double y, const EffectiveChannel& h, const PrecoderPair& p, double rho,
                 const Constellation& c, MlDetector::Mode mode);

struct SerParams {
    EffectiveChannel h_bob;
    EffectiveChannel h_eve;
    PrecoderPair precoders;
    double rho = 0.0;
    double sigma2 = 0.0;
    Constellation constellation = Constellation::pam4();
    EveDetector eve_mode = EveDetector::Joint;
    long long trials = 100000;
    uint64_t seed = 0;
    int threads = 1;
};

/// Monte Carlo symbol error rates for Bob and one eavesdropper on a shared
/// trial stream. Every trial derives its own random substream from
/// (seed, trial index), so results are bit-identical for any thread count.
SerResult ser_monte_carlo(const SerParams& params);

}  // namespace gnpvlc

#endif
