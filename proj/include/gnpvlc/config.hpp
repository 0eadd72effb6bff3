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
#ifndef GNPVLC_CONFIG_HPP
#define GNPVLC_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gnpvlc/geometry.hpp"
#include "gnpvlc/gnp.hpp"
#include "gnpvlc/metrics.hpp"

namespace gnpvlc {

double dbm_to_watts(double dbm);

/// Full experiment description. Defaults reproduce the reference indoor
/// setup: 20 m x 20 m x 4 m room, four ceiling LEDs at (+-2.2, +-2.2, 4),
/// the intended receiver at (0, 0, 1), and the published physical constants.
struct ExperimentConfig {
    enum class Scheme { Gnp, Baseline };
    enum class TxAnglePolicy { Suboptimal, Iterative, Fixed };
    enum class EveAnglePolicy { Zero, MatchBob };

    Scene scene;
    Vec3 bob_position{0.0, 0.0, 1.0};

    GnpPropertyRanges bob_gnp{{0.10, 0.11}, {0.25, 0.26}, 0.6144, 0.8308};
    GnpPropertyRanges eve_gnp{{0.10, 0.40}, {0.25, 0.75}, 0.6144, 0.8308};

    double zeta = 0.44;        ///< current-to-light conversion, W/A
    double eta = 0.54;         ///< PD responsivity, A/W
    double i_dc = 3.0;         ///< DC bias, A
    double noise_dbm = -133.8; ///< thermal noise variance, dBm
    double p_tx_dbm = 10.0;    ///< optical power, dBm

    Scheme scheme = Scheme::Gnp;
    TxAnglePolicy tx_policy = TxAnglePolicy::Suboptimal;
    double fixed_tx_angle = 4.0 * kPi / 9.0;
    EveAnglePolicy eve_policy = EveAnglePolicy::Zero;

    // Eavesdropper sweep grid at height grid_z.
    double grid_min = -10.0;
    double grid_max = 10.0;
    double grid_step = 0.5;
    double grid_z = 1.0;

    long long trials = 100000;
    EveDetector eve_detector = EveDetector::Joint;
    std::vector<double> ser_p_tx_dbm = {10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30,
                                        32, 34, 36, 38, 40};
    std::vector<Vec3> ser_eve_positions = {
        {1.0, 1.0, 1.0}, {2.5, 2.5, 1.0}, {5.0, 5.0, 1.0}, {7.5, 7.5, 1.0}};

    struct FixedEve {
        Vec3 position;
        bool theta_matches_bob = false;  ///< otherwise holds angle zero
    };
    std::vector<FixedEve> multi_eve_fixed = {{{-2.0, 0.0, 1.0}, false}, {{3.0, 4.0, 1.0}, true}};

    double bob_sweep_min = -9.5;
    double bob_sweep_max = 9.5;
    double bob_sweep_step = 0.5;
    Vec3 bob_sweep_eve{-5.0, -5.0, 1.0};

    int gap_placements = 500;
    int gap_bins = 40;

    uint64_t seed = 1;
    int threads = 1;

    double sigma2() const { return dbm_to_watts(noise_dbm); }
    double p_tx() const { return dbm_to_watts(p_tx_dbm); }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig load(const std::string& path);
    std::string to_json_text(int indent = 2) const;
};

const char* to_string(ExperimentConfig::Scheme s);
const char* to_string(ExperimentConfig::TxAnglePolicy p);
const char* to_string(ExperimentConfig::EveAnglePolicy p);

}  // namespace gnpvlc

#endif
