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
#include <cstdio>
#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "gnpvlc/experiment.hpp"
#include "gnpvlc/report.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_dir = "out";
    uint64_t seed = 0;
    bool seed_set = false;
    std::string scheme;
    int threads = 0;
    std::string tx_policy;
    std::string eve_policy;
    std::string eve_detector;
    long long trials = 0;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file (defaults used when absent)");
    cmd->add_option("--out", f.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--seed", f.seed, "master seed")->each([&](const std::string&) {
        f.seed_set = true;
    });
    cmd->add_option("--scheme", f.scheme, "gnp|baseline");
    cmd->add_option("--threads", f.threads, "worker threads");
    cmd->add_option("--tx-policy", f.tx_policy, "suboptimal|iterative|fixed");
    cmd->add_option("--eve-angle", f.eve_policy, "zero|match_bob");
    cmd->add_option("--eve-detector", f.eve_detector, "joint|blind");
    cmd->add_option("--trials", f.trials, "Monte Carlo trials per SER point");
}

gnpvlc::ExperimentConfig resolve_config(const CommonFlags& f) {
    using gnpvlc::ExperimentConfig;
    ExperimentConfig cfg;
    if (!f.config_path.empty()) cfg = ExperimentConfig::load(f.config_path);
    if (f.seed_set) cfg.seed = f.seed;
    if (f.threads > 0) cfg.threads = f.threads;
    if (f.trials > 0) cfg.trials = f.trials;
    if (!f.scheme.empty()) {
        if (f.scheme == "gnp") cfg.scheme = ExperimentConfig::Scheme::Gnp;
        else if (f.scheme == "baseline") cfg.scheme = ExperimentConfig::Scheme::Baseline;
        else throw CLI::ValidationError("--scheme", "must be gnp or baseline");
    }
    if (!f.tx_policy.empty()) {
        if (f.tx_policy == "suboptimal") cfg.tx_policy = ExperimentConfig::TxAnglePolicy::Suboptimal;
        else if (f.tx_policy == "iterative") cfg.tx_policy = ExperimentConfig::TxAnglePolicy::Iterative;
        else if (f.tx_policy == "fixed") cfg.tx_policy = ExperimentConfig::TxAnglePolicy::Fixed;
        else throw CLI::ValidationError("--tx-policy", "must be suboptimal, iterative, or fixed");
    }
    if (!f.eve_policy.empty()) {
        if (f.eve_policy == "zero") cfg.eve_policy = ExperimentConfig::EveAnglePolicy::Zero;
        else if (f.eve_policy == "match_bob") cfg.eve_policy = ExperimentConfig::EveAnglePolicy::MatchBob;
        else throw CLI::ValidationError("--eve-angle", "must be zero or match_bob");
    }
    if (!f.eve_detector.empty()) {
        if (f.eve_detector == "joint") cfg.eve_detector = gnpvlc::EveDetector::Joint;
        else if (f.eve_detector == "blind") cfg.eve_detector = gnpvlc::EveDetector::Blind;
        else throw CLI::ValidationError("--eve-detector", "must be joint or blind");
    }
    cfg.validate();
    return cfg;
}

void emit(const CommonFlags& f, const gnpvlc::ExperimentConfig& cfg, const std::string& name,
          const std::string& csv, size_t rows) {
    std::filesystem::create_directories(f.out_dir);
    const std::string csv_name = name + ".csv";
    const std::string csv_path = f.out_dir + "/" + csv_name;
    const std::string hash = gnpvlc::sha1_hex(csv);
    gnpvlc::write_text_file(csv_path, csv);
    gnpvlc::write_text_file(f.out_dir + "/" + name + ".manifest.json",
                            gnpvlc::run_manifest(name, cfg, csv_name, hash, rows));
    std::printf("%s: %zu rows, sha1 %s -> %s\n", name.c_str(), rows, hash.c_str(),
                csv_path.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secure visible-light-communication simulator with chiral-plate channels"};
    app.require_subcommand(1);

    CommonFlags heatmap_f, gap_f, sweep_f, ser_f, multi_f;
    auto* heatmap = app.add_subcommand("heatmap", "secrecy rate over the eavesdropper grid");
    add_common(heatmap, heatmap_f);
    auto* gap = app.add_subcommand("gap-hist",
                                   "suboptimal-vs-iterative transmitter angle comparison");
    add_common(gap, gap_f);
    auto* sweep = app.add_subcommand("bob-sweep", "secrecy rate along the receiver position line");
    add_common(sweep, sweep_f);
    auto* ser = app.add_subcommand("ser", "symbol error rates over the transmit-power sweep");
    add_common(ser, ser_f);
    auto* multi = app.add_subcommand("multi-eve", "secrecy rate with several eavesdroppers");
    add_common(multi, multi_f);

    CLI11_PARSE(app, argc, argv);

    try {
        if (heatmap->parsed()) {
            const auto cfg = resolve_config(heatmap_f);
            const auto result = gnpvlc::run_heatmap(cfg);
            emit(heatmap_f, cfg, "heatmap", gnpvlc::to_csv(result), result.cells.size());
        } else if (gap->parsed()) {
            const auto cfg = resolve_config(gap_f);
            const auto result = gnpvlc::run_gap_histogram(cfg);
            emit(gap_f, cfg, "gap_hist", gnpvlc::to_csv(result), result.bin_counts.size());
            emit(gap_f, cfg, "gap_samples", gnpvlc::gap_samples_csv(result), result.samples.size());
            std::printf("max angle difference: %.4f deg, |gap| p95: %.6f bit/s/Hz\n",
                        result.max_angle_diff_rad * 180.0 / gnpvlc::kPi, result.gap_abs_p95);
        } else if (sweep->parsed()) {
            const auto cfg = resolve_config(sweep_f);
            const auto result = gnpvlc::run_bob_sweep(cfg);
            emit(sweep_f, cfg, "bob_sweep", gnpvlc::to_csv(result), result.rows.size());
        } else if (ser->parsed()) {
            const auto cfg = resolve_config(ser_f);
            const auto result = gnpvlc::run_ser(cfg);
            emit(ser_f, cfg, "ser", gnpvlc::to_csv(result), result.rows.size());
        } else if (multi->parsed()) {
            const auto cfg = resolve_config(multi_f);
            const auto result = gnpvlc::run_multi_eve(cfg);
            emit(multi_f, cfg, "multi_eve", gnpvlc::to_csv(result), result.cells.size());
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
