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
#include "gnpvlc/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "gnpvlc/rng.hpp"

namespace gnpvlc {

namespace {

constexpr uint64_t kSerStream = 0x5E2C01A7u;

double projector_quadratic_form(const PrecoderPair& p, const std::vector<double>& v) {
    // v^T W_a v; W_a is symmetric idempotent so this equals ||W_a v||^2.
    return dot(v, matvec(p.w_a, v));
}

}  // namespace

SinrReport sinr_pair(const EffectiveChannel& h_bob, const EffectiveChannel& h_eve,
                     const PrecoderPair& p, double rho, double sigma2) {
    if (!(sigma2 > 0.0)) throw std::invalid_argument("sinr_pair: noise variance must be positive");
    if (!(rho > 0.0)) throw std::invalid_argument("sinr_pair: rho must be positive");
    const double n = static_cast<double>(p.dim());

    SinrReport r;
    const double hb2 = dot(h_bob.h, h_bob.h);
    r.bob = rho * rho * hb2 / sigma2;

    const double sig = dot(h_eve.h, p.w);
    const double an = projector_quadratic_form(p, h_eve.h);
    r.eve = rho * rho * sig * sig / (rho * rho / (n * n) * an + sigma2);
    return r;
}

double sinr_eve_f_form(const EffectiveChannel& h_bob, const EffectiveChannel& h_eve, double rho,
                       double sigma2) {
    const double n = static_cast<double>(h_bob.h.size());
    const double hb2 = dot(h_bob.h, h_bob.h);
    if (!(hb2 > 0.0)) throw std::invalid_argument("sinr_eve_f_form: zero channel");
    const double cross = dot(h_eve.h, h_bob.h);
    const double he2 = dot(h_eve.h, h_eve.h);
    // h_B h_B^dagger in the numerator carries the pseudo-inverse 1/||h_B||^2.
    const double f = (cross * cross / hb2) / (he2 + n * n * sigma2 / (rho * rho));
    if (f <= 0.0) return 0.0;
    return n * n * f / (1.0 - f);
}

double achievable_rate(double sinr) {
    if (sinr < 0.0) throw std::invalid_argument("achievable_rate: negative SINR");
    const double e_over_2pi = std::exp(1.0) / (2.0 * kPi);
    return 0.5 * std::log2(1.0 + e_over_2pi * sinr);
}

double secrecy_rate(double r_bob, const std::vector<double>& r_eves) {
    if (r_eves.empty()) throw std::invalid_argument("secrecy_rate: no eavesdropper rates");
    double worst = r_eves.front();
    for (double r : r_eves) worst = std::max(worst, r);
    return std::max(r_bob - worst, 0.0);
}

MlDetector::MlDetector(const EffectiveChannel& h, const PrecoderPair& p, double rho,
                       const Constellation& c, Mode mode)
    : mode_(mode), n_points_(c.size()) {
    if (c.size() < 2) throw std::invalid_argument("MlDetector: constellation too small");
    const size_t n = p.dim();
    if (h.h.size() != n) throw std::invalid_argument("MlDetector: dimension mismatch");

    symbol_means_.resize(n_points_);
    if (mode == Mode::Bob) {
        // The artificial noise lives in the nullspace of the intended channel;
        // the intended receiver sees rho ||h|| s exactly.
        const double gain = rho * norm(h.h);
        for (size_t i = 0; i < n_points_; ++i) symbol_means_[i] = gain * c.points[i];
        return;
    }
    const double gain = rho * dot(h.h, p.w);
    for (size_t i = 0; i < n_points_; ++i) symbol_means_[i] = gain * c.points[i];
    if (mode == Mode::EveJoint) {
        // Enumerate every artificial-noise vector's contribution
        // (rho/n) h^T W_a s_a once; detection scans symbol x noise hypotheses.
        const std::vector<double> v = matvec(p.w_a, h.h);  // W_a symmetric
        size_t combos = 1;
        for (size_t i = 0; i < n; ++i) combos *= n_points_;
        an_offsets_.resize(combos);
        for (size_t k = 0; k < combos; ++k) {
            size_t rem = k;
            double acc = 0.0;
            for (size_t i = 0; i < n; ++i) {
                acc += v[i] * c.points[rem % n_points_];
                rem /= n_points_;
            }
            an_offsets_[k] = rho / static_cast<double>(n) * acc;
        }
    }
}

size_t MlDetector::detect(double y) const {
    size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    if (mode_ == Mode::EveJoint) {
        for (size_t i = 0; i < n_points_; ++i) {
            const double base = y - symbol_means_[i];
            for (const double off : an_offsets_) {
                const double d = std::abs(base - off);
                if (d < best_d) {
                    best_d = d;
                    best = i;
                }
            }
        }
        return best;
    }
    for (size_t i = 0; i < n_points_; ++i) {
        const double d = std::abs(y - symbol_means_[i]);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

size_t ml_detect(double y, const EffectiveChannel& h, const PrecoderPair& p, double rho,
                 const Constellation& c, MlDetector::Mode mode) {
    return MlDetector(h, p, rho, c, mode).detect(y);
}

SerResult ser_monte_carlo(const SerParams& params) {
    if (params.trials < 1) throw std::invalid_argument("ser_monte_carlo: trials must be >= 1");
    if (!(params.sigma2 >= 0.0)) throw std::invalid_argument("ser_monte_carlo: bad noise variance");
    const size_t n = params.precoders.dim();
    const Constellation& c = params.constellation;
    const double sigma = std::sqrt(params.sigma2);

    const MlDetector det_bob(params.h_bob, params.precoders, params.rho, c, MlDetector::Mode::Bob);
    const MlDetector det_eve(params.h_eve, params.precoders, params.rho, c,
                             params.eve_mode == EveDetector::Joint ? MlDetector::Mode::EveJoint
                                                                   : MlDetector::Mode::EveBlind);

    auto run_range = [&](long long lo, long long hi, long long& err_b, long long& err_e) {
        std::vector<double> s_vec(n);
        for (long long i = lo; i < hi; ++i) {
            Rng rng(derive_seed(params.seed, kSerStream, static_cast<uint64_t>(i)));
            const size_t s_idx = static_cast<size_t>(rng.uniform_int(c.size()));
            const auto an = sample_artificial_noise(s_idx, c, n, rng);
            const double z_bob = rng.normal(sigma);
            const double z_eve = rng.normal(sigma);

            const auto an_proj = matvec(params.precoders.w_a, an);
            for (size_t k = 0; k < n; ++k)
                s_vec[k] = params.precoders.w[k] * c.points[s_idx] +
                           an_proj[k] / static_cast<double>(n);

            const double y_bob = params.rho * dot(params.h_bob.h, s_vec) + z_bob;
            const double y_eve = params.rho * dot(params.h_eve.h, s_vec) + z_eve;
            if (det_bob.detect(y_bob) != s_idx) ++err_b;
            if (det_eve.detect(y_eve) != s_idx) ++err_e;
        }
    };

    const int threads = std::max(params.threads, 1);
    long long total_b = 0, total_e = 0;
    if (threads == 1) {
        run_range(0, params.trials, total_b, total_e);
    } else {
        std::vector<long long> errs_b(static_cast<size_t>(threads), 0);
        std::vector<long long> errs_e(static_cast<size_t>(threads), 0);
        std::vector<std::thread> pool;
        const long long chunk = (params.trials + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const long long lo = t * chunk;
            const long long hi = std::min<long long>(params.trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, t, lo, hi] {
                run_range(lo, hi, errs_b[static_cast<size_t>(t)], errs_e[static_cast<size_t>(t)]);
            });
        }
        for (auto& th : pool) th.join();
        for (int t = 0; t < threads; ++t) {
            total_b += errs_b[static_cast<size_t>(t)];
            total_e += errs_e[static_cast<size_t>(t)];
        }
    }

    SerResult r;
    r.trials = params.trials;
    r.seed = params.seed;
    r.ser_bob = static_cast<double>(total_b) / static_cast<double>(params.trials);
    r.ser_eve = static_cast<double>(total_e) / static_cast<double>(params.trials);
    return r;
}

}  // namespace gnpvlc
