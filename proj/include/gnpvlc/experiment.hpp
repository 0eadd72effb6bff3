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
#ifndef GNPVLC_EXPERIMENT_HPP
#define GNPVLC_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "gnpvlc/angles.hpp"
#include "gnpvlc/config.hpp"
#include "gnpvlc/metrics.hpp"

namespace gnpvlc {

/// One evaluated eavesdropper position.
struct CellRecord {
    double x = 0, y = 0;
    double sinr_bob = 0, sinr_eve = 0;
    double rate_bob = 0, rate_eve = 0;
    double secrecy = 0;
};

struct HeatmapResult {
    std::vector<CellRecord> cells;  ///< row-major, y outer, x inner
    int nx = 0, ny = 0;
};

struct GapSample {
    double x = 0, y = 0;
    double angle_diff_rad = 0;  ///< mean_m |theta*_sub - theta*_opt,m|
    double rs_suboptimal = 0;
    double rs_iterative = 0;
    double gap = 0;  ///< rs_iterative - rs_suboptimal
};

struct GapHistogram {
    std::vector<GapSample> samples;
    std::vector<long long> bin_counts;  ///< histogram over gap
    double bin_lo = 0, bin_width = 0;
    double max_angle_diff_rad = 0;
    double gap_abs_p95 = 0;  ///< 95th percentile of |gap|
};

struct BobSweepRow {
    double x = 0;
    double rs_sub_eve_zero = 0;  ///< suboptimal tx angles, eavesdropper at 0
    double rs_sub_eve_bob = 0;   ///< suboptimal tx angles, eavesdropper matches Bob
    double rs_opt_eve_zero = 0;
    double rs_opt_eve_bob = 0;
};

struct BobSweepResult {
    std::vector<BobSweepRow> rows;
};

struct SerRow {
    Vec3 eve;
    double p_tx_dbm = 0;
    double ser_bob = 0, ser_eve = 0;
};

struct SerSweepResult {
    std::vector<SerRow> rows;
};

struct MultiEveResult {
    std::vector<CellRecord> cells;  ///< rate_eve holds the max over all eavesdroppers
    int nx = 0, ny = 0;
};

/// Secrecy-rate map over the eavesdropper grid for the configured scheme and
/// angle policies. Each cell draws its own plate responses from a seed
/// derived from (config seed, cell index).
HeatmapResult run_heatmap(const ExperimentConfig& cfg);

/// Suboptimal-vs-iterative transmitter-angle comparison over random
/// eavesdropper placements, evaluating both the secrecy-rate gap and the
/// mean absolute angle difference.
GapHistogram run_gap_histogram(const ExperimentConfig& cfg);

/// Secrecy rate versus intended-receiver position on the (x, 0, grid_z) line
/// for a fixed eavesdropper, in the four angle scenarios.
BobSweepResult run_bob_sweep(const ExperimentConfig& cfg);

/// Monte Carlo SER versus transmit power for each configured eavesdropper
/// position, under the configured scheme.
SerSweepResult run_ser(const ExperimentConfig& cfg);

/// Secrecy-rate map with the configured fixed eavesdroppers plus one grid
/// eavesdropper; the rate of the strongest eavesdropper counts.
MultiEveResult run_multi_eve(const ExperimentConfig& cfg);

// Building blocks shared by the runners (also used by the test suites).

/// Sample a receiver channel: geometry paths from the scene plus one plate
/// response per (transmitter, path) drawn from the given ranges.
ReceiverChannel build_receiver_channel(const Scene& scene, const Vec3& rx_pos,
                                       const GnpPropertyRanges& ranges, Rng& rng,
                                       const std::string& label);

/// Same, with measured plate responses (e.g. from load_gnp_table) instead of
/// sampled ones. The table is indexed [tx][path] and must cover every path
/// the scene produces.
ReceiverChannel build_receiver_channel(const Scene& scene, const Vec3& rx_pos,
                                       const std::vector<std::vector<GnpPathResponse>>& table,
                                       const std::string& label);

/// Resolved angle set for one scenario.
struct AngleSet {
    std::vector<double> tx;
    double bob = 0.0;
};

/// Transmitter angles per policy (iterative needs the eavesdropper channel)
/// plus the matching receiver angle from the quartic closed form.
AngleSet resolve_angles(const ExperimentConfig& cfg, const ReceiverChannel& bob_rc,
                        const ReceiverChannel* eve_rc);

}  // namespace gnpvlc

#endif
