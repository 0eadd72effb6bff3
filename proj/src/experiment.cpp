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
#include "gnpvlc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "gnpvlc/precoding.hpp"

namespace gnpvlc {

namespace {

// Seed stream tags; cells, rows, and trials derive independent substreams so
// sweeps parallelize without changing results.
constexpr uint64_t kBobStream = 1;
constexpr uint64_t kCellStream = 2;
constexpr uint64_t kFixedEveStream = 3;
constexpr uint64_t kPlacementStream = 4;
constexpr uint64_t kBobRowStream = 5;
constexpr uint64_t kSerLocationStream = 6;

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn);

struct GridSpec {
    double min, step, z;
    int n;

    Vec3 cell_position(size_t idx) const {
        const int iy = static_cast<int>(idx) / n;
        const int ix = static_cast<int>(idx) % n;
        return {min + ix * step, min + iy * step, z};
    }
};

GridSpec grid_spec(const ExperimentConfig& cfg) {
    const int n = static_cast<int>(std::floor((cfg.grid_max - cfg.grid_min) / cfg.grid_step + 0.5)) + 1;
    return {cfg.grid_min, cfg.grid_step, cfg.grid_z, n};
}

double mid_delta_phi(const GnpPropertyRanges& r) { return 0.5 * (r.delta_phi_lo + r.delta_phi_hi); }

// Rates for one (bob, eve-list) instance under the configured scheme.
struct SchemeRates {
    double sinr_bob = 0, sinr_eve = 0;
    double rate_bob = 0, rate_eve = 0;  // rate_eve = max over eavesdroppers
    double secrecy = 0;
};

struct EveInstance {
    const ReceiverChannel* rc;
    double theta_e;
};

SchemeRates evaluate_rates(const ExperimentConfig& cfg, const ReceiverChannel& bob_rc,
                           const std::vector<EveInstance>& eves, const AngleSet& angles) {
    SchemeRates out;
    EffectiveChannel h_bob;
    PrecoderPair precoders;
    double rho;
    if (cfg.scheme == ExperimentConfig::Scheme::Gnp) {
        h_bob = effective_channel(bob_rc, {angles.tx, angles.bob});
        precoders = make_precoders(h_bob);
        rho = symbol_gain(cfg.eta, cfg.zeta, cfg.p_tx());
    } else {
        h_bob.h = geometric_gains(bob_rc);
        precoders = baseline_precoder(h_bob.h);
        rho = cfg.eta * cfg.zeta * cfg.p_tx();
    }
    const double sigma2 = cfg.sigma2();

    std::vector<double> eve_rates;
    eve_rates.reserve(eves.size());
    bool first = true;
    for (const auto& eve : eves) {
        EffectiveChannel h_eve;
        if (cfg.scheme == ExperimentConfig::Scheme::Gnp)
            h_eve = effective_channel(*eve.rc, {angles.tx, eve.theta_e});
        else
            h_eve.h = geometric_gains(*eve.rc);
        const SinrReport sinr = sinr_pair(h_bob, h_eve, precoders, rho, sigma2);
        if (first) {
            out.sinr_bob = sinr.bob;
            out.rate_bob = achievable_rate(sinr.bob);
            first = false;
        }
        if (sinr.eve >= out.sinr_eve) out.sinr_eve = sinr.eve;
        eve_rates.push_back(achievable_rate(sinr.eve));
    }
    out.rate_eve = *std::max_element(eve_rates.begin(), eve_rates.end());
    out.secrecy = secrecy_rate(out.rate_bob, eve_rates);
    return out;
}

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
    threads = std::max(threads, 1);
    if (threads == 1 || count < 2) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const size_t chunk = (count + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
    for (int t = 0; t < threads; ++t) {
        const size_t lo = static_cast<size_t>(t) * chunk;
        const size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

ReceiverChannel build_receiver_channel(const Scene& scene, const Vec3& rx_pos,
                                       const GnpPropertyRanges& ranges, Rng& rng,
                                       const std::string& label) {
    ReceiverChannel rc;
    rc.label = label;
    rc.per_tx.resize(scene.num_tx());
    for (size_t m = 0; m < scene.num_tx(); ++m) {
        const auto paths = build_paths(scene, static_cast<int>(m), rx_pos);
        rc.per_tx[m].reserve(paths.size());
        for (const auto& p : paths)
            rc.per_tx[m].push_back({p, sample_path_response(ranges, rng)});
    }
    rc.validate();
    return rc;
}

ReceiverChannel build_receiver_channel(const Scene& scene, const Vec3& rx_pos,
                                       const std::vector<std::vector<GnpPathResponse>>& table,
                                       const std::string& label) {
    if (table.size() < scene.num_tx())
        throw std::invalid_argument("build_receiver_channel: table misses transmitters");
    ReceiverChannel rc;
    rc.label = label;
    rc.per_tx.resize(scene.num_tx());
    for (size_t m = 0; m < scene.num_tx(); ++m) {
        const auto paths = build_paths(scene, static_cast<int>(m), rx_pos);
        if (table[m].size() < paths.size())
            throw std::invalid_argument("build_receiver_channel: table misses paths for tx " +
                                        std::to_string(m));
        rc.per_tx[m].reserve(paths.size());
        for (const auto& p : paths)
            rc.per_tx[m].push_back({p, table[m][static_cast<size_t>(p.path_index)]});
    }
    rc.validate();
    return rc;
}

AngleSet resolve_angles(const ExperimentConfig& cfg, const ReceiverChannel& bob_rc,
                        const ReceiverChannel* eve_rc) {
    AngleSet out;
    switch (cfg.tx_policy) {
        case ExperimentConfig::TxAnglePolicy::Suboptimal: {
            const double mid = mid_delta_phi(cfg.eve_gnp);
            out.tx = tx_angles_suboptimal(cfg.eve_gnp.delta_phi_lo, cfg.eve_gnp.delta_phi_hi,
                                          bob_rc.num_tx())
                         .thetas;
            out.bob = bob_angle(bob_rc, out.tx.front(), mid).theta_b;
            break;
        }
        case ExperimentConfig::TxAnglePolicy::Fixed: {
            out.tx.assign(bob_rc.num_tx(), cfg.fixed_tx_angle);
            out.bob = bob_angle(bob_rc, cfg.fixed_tx_angle, kPi - 2.0 * cfg.fixed_tx_angle).theta_b;
            break;
        }
        case ExperimentConfig::TxAnglePolicy::Iterative: {
            if (!eve_rc)
                throw std::invalid_argument(
                    "resolve_angles: iterative policy needs an eavesdropper channel");
            out.tx = tx_angles_iterative(*eve_rc).thetas;
            out.bob = bob_angle_general(bob_rc, out.tx).theta_b;
            break;
        }
    }
    return out;
}

HeatmapResult run_heatmap(const ExperimentConfig& cfg) {
    cfg.validate();
    const GridSpec grid = grid_spec(cfg);

    Rng bob_rng(derive_seed(cfg.seed, kBobStream));
    const ReceiverChannel bob_rc =
        build_receiver_channel(cfg.scene, cfg.bob_position, cfg.bob_gnp, bob_rng, "bob");

    // With the suboptimal or fixed policy the angles do not depend on the
    // eavesdropper; resolve them once.
    const bool per_cell_angles = cfg.tx_policy == ExperimentConfig::TxAnglePolicy::Iterative;
    AngleSet shared_angles;
    if (!per_cell_angles) shared_angles = resolve_angles(cfg, bob_rc, nullptr);

    HeatmapResult result;
    result.nx = result.ny = grid.n;
    const size_t count = static_cast<size_t>(grid.n) * static_cast<size_t>(grid.n);
    result.cells.resize(count);

    parallel_for(count, cfg.threads, [&](size_t idx) {
        const Vec3 pos = grid.cell_position(idx);
        Rng cell_rng(derive_seed(cfg.seed, kCellStream, idx));
        const ReceiverChannel eve_rc =
            build_receiver_channel(cfg.scene, pos, cfg.eve_gnp, cell_rng, "eve");
        const AngleSet angles =
            per_cell_angles ? resolve_angles(cfg, bob_rc, &eve_rc) : shared_angles;
        const double theta_e =
            cfg.eve_policy == ExperimentConfig::EveAnglePolicy::Zero ? 0.0 : angles.bob;
        const SchemeRates rates = evaluate_rates(cfg, bob_rc, {{&eve_rc, theta_e}}, angles);
        result.cells[idx] = {pos.x,           pos.y,          rates.sinr_bob, rates.sinr_eve,
                             rates.rate_bob,  rates.rate_eve, rates.secrecy};
    });
    return result;
}

GapHistogram run_gap_histogram(const ExperimentConfig& cfg) {
    cfg.validate();

    Rng bob_rng(derive_seed(cfg.seed, kBobStream));
    const ReceiverChannel bob_rc =
        build_receiver_channel(cfg.scene, cfg.bob_position, cfg.bob_gnp, bob_rng, "bob");

    const double mid = mid_delta_phi(cfg.eve_gnp);
    const auto sub =
        tx_angles_suboptimal(cfg.eve_gnp.delta_phi_lo, cfg.eve_gnp.delta_phi_hi, bob_rc.num_tx());
    const double theta_b_sub = bob_angle(bob_rc, sub.thetas.front(), mid).theta_b;

    GapHistogram out;
    out.samples.resize(static_cast<size_t>(cfg.gap_placements));

    parallel_for(out.samples.size(), cfg.threads, [&](size_t i) {
        Rng rng(derive_seed(cfg.seed, kPlacementStream, i));
        const Vec3 pos{rng.uniform(cfg.scene.room_min.x, cfg.scene.room_max.x),
                       rng.uniform(cfg.scene.room_min.y, cfg.scene.room_max.y), cfg.grid_z};
        const ReceiverChannel eve_rc =
            build_receiver_channel(cfg.scene, pos, cfg.eve_gnp, rng, "eve");

        const auto opt = tx_angles_iterative(eve_rc);
        const double theta_b_opt = bob_angle_general(bob_rc, opt.thetas).theta_b;

        ExperimentConfig gnp_cfg = cfg;
        gnp_cfg.scheme = ExperimentConfig::Scheme::Gnp;
        const SchemeRates r_sub = evaluate_rates(gnp_cfg, bob_rc, {{&eve_rc, 0.0}},
                                                 {sub.thetas, theta_b_sub});
        const SchemeRates r_opt = evaluate_rates(gnp_cfg, bob_rc, {{&eve_rc, 0.0}},
                                                 {opt.thetas, theta_b_opt});

        double diff = 0.0;
        for (size_t m = 0; m < opt.thetas.size(); ++m)
            diff += std::abs(wrap_half_pi(sub.thetas[m] - opt.thetas[m]));
        diff /= static_cast<double>(opt.thetas.size());

        out.samples[i] = {pos.x,        pos.y,         diff,
                          r_sub.secrecy, r_opt.secrecy, r_opt.secrecy - r_sub.secrecy};
    });

    double lo = 0.0, hi = 0.0;
    for (const auto& s : out.samples) {
        lo = std::min(lo, s.gap);
        hi = std::max(hi, s.gap);
        out.max_angle_diff_rad = std::max(out.max_angle_diff_rad, s.angle_diff_rad);
    }
    if (hi <= lo) hi = lo + 1e-12;
    out.bin_lo = lo;
    out.bin_width = (hi - lo) / cfg.gap_bins;
    out.bin_counts.assign(static_cast<size_t>(cfg.gap_bins), 0);
    std::vector<double> abs_gaps;
    abs_gaps.reserve(out.samples.size());
    for (const auto& s : out.samples) {
        auto bin = static_cast<long long>((s.gap - lo) / out.bin_width);
        bin = std::clamp<long long>(bin, 0, cfg.gap_bins - 1);
        ++out.bin_counts[static_cast<size_t>(bin)];
        abs_gaps.push_back(std::abs(s.gap));
    }
    std::sort(abs_gaps.begin(), abs_gaps.end());
    const size_t p95 = static_cast<size_t>(std::ceil(0.95 * abs_gaps.size()));
    out.gap_abs_p95 = abs_gaps[std::min(p95 == 0 ? 0 : p95 - 1, abs_gaps.size() - 1)];
    return out;
}

BobSweepResult run_bob_sweep(const ExperimentConfig& cfg) {
    cfg.validate();

    Rng eve_rng(derive_seed(cfg.seed, kFixedEveStream));
    const ReceiverChannel eve_rc =
        build_receiver_channel(cfg.scene, cfg.bob_sweep_eve, cfg.eve_gnp, eve_rng, "eve");

    const double mid = mid_delta_phi(cfg.eve_gnp);
    const auto sub = tx_angles_suboptimal(cfg.eve_gnp.delta_phi_lo, cfg.eve_gnp.delta_phi_hi,
                                          cfg.scene.num_tx());
    // The iterative angles depend on the (fixed) eavesdropper only.
    const auto opt = tx_angles_iterative(eve_rc);

    const int n_rows =
        static_cast<int>(std::floor((cfg.bob_sweep_max - cfg.bob_sweep_min) / cfg.bob_sweep_step + 0.5)) + 1;
    BobSweepResult out;
    out.rows.resize(static_cast<size_t>(n_rows));

    ExperimentConfig gnp_cfg = cfg;
    gnp_cfg.scheme = ExperimentConfig::Scheme::Gnp;

    parallel_for(out.rows.size(), cfg.threads, [&](size_t i) {
        const double x = cfg.bob_sweep_min + static_cast<double>(i) * cfg.bob_sweep_step;
        Rng rng(derive_seed(cfg.seed, kBobRowStream, i));
        const ReceiverChannel bob_rc =
            build_receiver_channel(cfg.scene, {x, 0.0, cfg.grid_z}, cfg.bob_gnp, rng, "bob");

        const double theta_b_sub = bob_angle(bob_rc, sub.thetas.front(), mid).theta_b;
        const double theta_b_opt = bob_angle_general(bob_rc, opt.thetas).theta_b;

        const AngleSet a_sub{sub.thetas, theta_b_sub};
        const AngleSet a_opt{opt.thetas, theta_b_opt};
        BobSweepRow row;
        row.x = x;
        row.rs_sub_eve_zero = evaluate_rates(gnp_cfg, bob_rc, {{&eve_rc, 0.0}}, a_sub).secrecy;
        row.rs_sub_eve_bob =
            evaluate_rates(gnp_cfg, bob_rc, {{&eve_rc, theta_b_sub}}, a_sub).secrecy;
        row.rs_opt_eve_zero = evaluate_rates(gnp_cfg, bob_rc, {{&eve_rc, 0.0}}, a_opt).secrecy;
        row.rs_opt_eve_bob =
            evaluate_rates(gnp_cfg, bob_rc, {{&eve_rc, theta_b_opt}}, a_opt).secrecy;
        out.rows[i] = row;
    });
    return out;
}

SerSweepResult run_ser(const ExperimentConfig& cfg) {
    cfg.validate();

    Rng bob_rng(derive_seed(cfg.seed, kBobStream));
    const ReceiverChannel bob_rc =
        build_receiver_channel(cfg.scene, cfg.bob_position, cfg.bob_gnp, bob_rng, "bob");
    const AngleSet angles = resolve_angles(cfg, bob_rc, nullptr);

    EffectiveChannel h_bob;
    PrecoderPair precoders;
    if (cfg.scheme == ExperimentConfig::Scheme::Gnp) {
        h_bob = effective_channel(bob_rc, {angles.tx, angles.bob});
        precoders = make_precoders(h_bob);
    } else {
        h_bob.h = geometric_gains(bob_rc);
        precoders = baseline_precoder(h_bob.h);
    }

    SerSweepResult out;
    out.rows.resize(cfg.ser_eve_positions.size() * cfg.ser_p_tx_dbm.size());
    for (size_t e = 0; e < cfg.ser_eve_positions.size(); ++e) {
        Rng eve_rng(derive_seed(cfg.seed, kSerLocationStream, e));
        const ReceiverChannel eve_rc = build_receiver_channel(
            cfg.scene, cfg.ser_eve_positions[e], cfg.eve_gnp, eve_rng, "eve");
        EffectiveChannel h_eve;
        if (cfg.scheme == ExperimentConfig::Scheme::Gnp)
            h_eve = effective_channel(eve_rc, {angles.tx, 0.0});
        else
            h_eve.h = geometric_gains(eve_rc);

        for (size_t p = 0; p < cfg.ser_p_tx_dbm.size(); ++p) {
            const double p_tx = dbm_to_watts(cfg.ser_p_tx_dbm[p]);
            SerParams params;
            params.h_bob = h_bob;
            params.h_eve = h_eve;
            params.precoders = precoders;
            params.rho = cfg.scheme == ExperimentConfig::Scheme::Gnp
                             ? symbol_gain(cfg.eta, cfg.zeta, p_tx)
                             : cfg.eta * cfg.zeta * p_tx;
            params.sigma2 = cfg.sigma2();
            params.eve_mode = cfg.eve_detector;
            params.trials = cfg.trials;
            params.seed = derive_seed(cfg.seed, kSerLocationStream + 16, e * 1024 + p);
            params.threads = cfg.threads;
            const SerResult r = ser_monte_carlo(params);
            out.rows[e * cfg.ser_p_tx_dbm.size() + p] =
                {cfg.ser_eve_positions[e], cfg.ser_p_tx_dbm[p], r.ser_bob, r.ser_eve};
        }
    }
    return out;
}

MultiEveResult run_multi_eve(const ExperimentConfig& cfg) {
    cfg.validate();
    const GridSpec grid = grid_spec(cfg);

    Rng bob_rng(derive_seed(cfg.seed, kBobStream));
    const ReceiverChannel bob_rc =
        build_receiver_channel(cfg.scene, cfg.bob_position, cfg.bob_gnp, bob_rng, "bob");
    const AngleSet angles = resolve_angles(cfg, bob_rc, nullptr);

    std::vector<ReceiverChannel> fixed_rcs;
    std::vector<double> fixed_thetas;
    for (size_t k = 0; k < cfg.multi_eve_fixed.size(); ++k) {
        Rng rng(derive_seed(cfg.seed, kFixedEveStream, k));
        fixed_rcs.push_back(build_receiver_channel(cfg.scene, cfg.multi_eve_fixed[k].position,
                                                   cfg.eve_gnp, rng, "eve_fixed"));
        fixed_thetas.push_back(cfg.multi_eve_fixed[k].theta_matches_bob ? angles.bob : 0.0);
    }

    MultiEveResult result;
    result.nx = result.ny = grid.n;
    const size_t count = static_cast<size_t>(grid.n) * static_cast<size_t>(grid.n);
    result.cells.resize(count);

    parallel_for(count, cfg.threads, [&](size_t idx) {
        const Vec3 pos = grid.cell_position(idx);
        Rng cell_rng(derive_seed(cfg.seed, kCellStream, idx));
        const ReceiverChannel eve_rc =
            build_receiver_channel(cfg.scene, pos, cfg.eve_gnp, cell_rng, "eve");
        std::vector<EveInstance> eves;
        for (size_t k = 0; k < fixed_rcs.size(); ++k) eves.push_back({&fixed_rcs[k], fixed_thetas[k]});
        eves.push_back({&eve_rc, 0.0});
        const SchemeRates rates = evaluate_rates(cfg, bob_rc, eves, angles);
        result.cells[idx] = {pos.x,          pos.y,          rates.sinr_bob, rates.sinr_eve,
                             rates.rate_bob, rates.rate_eve, rates.secrecy};
    });
    return result;
}

}  // namespace gnpvlc
