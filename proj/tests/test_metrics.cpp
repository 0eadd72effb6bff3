#include <cmath>

#include "doctest.h"
#include "gnpvlc/metrics.hpp"
#include "test_util.hpp"

using namespace gnpvlc;

namespace {

EffectiveChannel random_positive_channel(Rng& rng, size_t n) {
    std::vector<double> h(n);
    for (auto& v : h) v = rng.uniform(0.1, 2.0);
    return {h};
}

// Independent joint-ML reference: direct enumeration over (symbol, noise)
// hypotheses from the raw vectors, no precomputed tables.
size_t brute_force_joint(double y, const EffectiveChannel& h, const PrecoderPair& p, double rho,
                         const Constellation& c) {
    const size_t n = p.dim();
    size_t best = 0;
    double best_d = 1e300;
    size_t combos = 1;
    for (size_t i = 0; i < n; ++i) combos *= c.size();
    for (size_t s = 0; s < c.size(); ++s) {
        for (size_t k = 0; k < combos; ++k) {
            std::vector<double> an(n);
            size_t rem = k;
            for (size_t i = 0; i < n; ++i) {
                an[i] = c.points[rem % c.size()];
                rem /= c.size();
            }
            const auto proj = matvec(p.w_a, an);
            std::vector<double> sv(n);
            for (size_t i = 0; i < n; ++i)
                sv[i] = p.w[i] * c.points[s] + proj[i] / static_cast<double>(n);
            const double mu = rho * dot(h.h, sv);
            const double d = std::abs(y - mu);
            if (d < best_d) {
                best_d = d;
                best = s;
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("sinr_pair reference cases") {
    const double rho = 1e-3, sigma2 = 1e-9;
    const EffectiveChannel hb{{1.0, 0.0}};
    const PrecoderPair p = make_precoders(hb);

    // Orthogonal eavesdropper: numerator vanishes.
    const EffectiveChannel he_perp{{0.0, 1.0}};
    const SinrReport perp = sinr_pair(hb, he_perp, p, rho, sigma2);
    CHECK(std::abs(perp.eve) <= 1e-30);
    CHECK(perp.bob == doctest::Approx(rho * rho / sigma2));

    // Identical channels: artificial noise vanishes, SINRs match.
    const SinrReport same = sinr_pair(hb, hb, p, rho, sigma2);
    CHECK(same.eve == doctest::Approx(same.bob).epsilon(1e-12));
}

TEST_CASE("direct and rearranged eavesdropper SINR agree") {
    Rng rng(701);
    for (int i = 0; i < 1000; ++i) {
        const size_t n = 2 + rng.uniform_int(4);
        const EffectiveChannel hb = random_positive_channel(rng, n);
        const EffectiveChannel he = random_positive_channel(rng, n);
        const PrecoderPair p = make_precoders(hb);
        const double rho = rng.uniform(1e-5, 1e-2);
        const double sigma2 = rng.uniform(1e-18, 1e-10);
        const double direct = sinr_pair(hb, he, p, rho, sigma2).eve;
        const double f_form = sinr_eve_f_form(hb, he, rho, sigma2);
        CHECK(testutil::rel_err(direct, f_form) < 1e-9);
    }
}

TEST_CASE("achievable_rate closed form") {
    CHECK(achievable_rate(0.0) == 0.0);
    CHECK(achievable_rate(2.0 * kPi / std::exp(1.0)) == doctest::Approx(0.5));
    double prev = -1.0;
    for (double s = 0.0; s < 100.0; s += 0.5) {
        const double r = achievable_rate(s);
        CHECK(r > prev);
        prev = r;
    }
    CHECK_THROWS_AS((void)achievable_rate(-1.0), std::invalid_argument);
}

TEST_CASE("secrecy_rate clamps and takes the strongest eavesdropper") {
    CHECK(secrecy_rate(3.0, {1.0, 2.0}) == doctest::Approx(1.0));
    CHECK(secrecy_rate(1.0, {2.0}) == 0.0);
    CHECK(secrecy_rate(3.0, {1.0}) == doctest::Approx(2.0));
    CHECK_THROWS_AS((void)secrecy_rate(1.0, {}), std::invalid_argument);

    // Monotone non-increasing as eavesdroppers accumulate.
    Rng rng(702);
    for (int i = 0; i < 100; ++i) {
        std::vector<double> eves;
        double prev = 10.0;
        for (int k = 0; k < 5; ++k) {
            eves.push_back(rng.uniform(0.0, 5.0));
            const double rs = secrecy_rate(4.0, eves);
            CHECK(rs <= prev);
            prev = rs;
        }
    }
}

TEST_CASE("ml_detect for the intended receiver") {
    Rng rng(703);
    const Constellation c = Constellation::pam4();
    const EffectiveChannel h = random_positive_channel(rng, 4);
    const PrecoderPair p = make_precoders(h);
    const double rho = 1e-3;

    for (size_t s = 0; s < 4; ++s) {
        const double y = rho * norm(h.h) * c.points[s];
        CHECK(ml_detect(y, h, p, rho, c, MlDetector::Mode::Bob) == s);
    }

    // Midpoint between hypotheses 1 and 2 resolves to the smaller index.
    const double mid = rho * norm(h.h) * 0.5 * (c.points[1] + c.points[2]);
    CHECK(ml_detect(mid, h, p, rho, c, MlDetector::Mode::Bob) == 1);
}

TEST_CASE("joint eavesdropper detection equals direct enumeration") {
    Rng rng(704);
    const Constellation c = Constellation::pam4();
    for (int i = 0; i < 50; ++i) {
        const EffectiveChannel hb = random_positive_channel(rng, 4);
        const EffectiveChannel he = random_positive_channel(rng, 4);
        const PrecoderPair p = make_precoders(hb);
        const double rho = rng.uniform(1e-4, 1e-2);
        const MlDetector det(he, p, rho, c, MlDetector::Mode::EveJoint);
        for (int k = 0; k < 20; ++k) {
            const double y = rng.uniform(-3e-3, 3e-3);
            CHECK(det.detect(y) == brute_force_joint(y, he, p, rho, c));
        }
    }
}

TEST_CASE("blind eavesdropper mode ignores the artificial-noise hypotheses") {
    Rng rng(708);
    const Constellation c = Constellation::pam4();
    const EffectiveChannel hb = random_positive_channel(rng, 4);
    const EffectiveChannel he = random_positive_channel(rng, 4);
    const PrecoderPair p = make_precoders(hb);
    const double rho = 1e-3;
    const MlDetector blind(he, p, rho, c, MlDetector::Mode::EveBlind);

    // Blind detection is nearest-symbol on the w-aligned mean only.
    const double gain = rho * dot(he.h, p.w);
    for (size_t s = 0; s < 4; ++s) CHECK(blind.detect(gain * c.points[s]) == s);

    // The two modes genuinely differ once artificial noise is present.
    SerParams params;
    params.h_bob = hb;
    params.h_eve = he;
    params.precoders = p;
    params.rho = rho;
    params.sigma2 = std::pow(rho * norm(hb.h) * 0.05, 2);
    params.trials = 5000;
    params.seed = 21;
    params.eve_mode = EveDetector::Joint;
    const SerResult joint = ser_monte_carlo(params);
    params.eve_mode = EveDetector::Blind;
    const SerResult blind_r = ser_monte_carlo(params);
    CHECK(joint.ser_bob == blind_r.ser_bob);  // Bob's stream is unaffected
    CHECK(joint.ser_eve != blind_r.ser_eve);
}

TEST_CASE("ser_monte_carlo goes error-free as noise vanishes") {
    Rng rng(705);
    SerParams params;
    params.h_bob = random_positive_channel(rng, 4);
    params.h_eve = random_positive_channel(rng, 4);
    params.precoders = make_precoders(params.h_bob);
    params.rho = 1e-3;
    params.sigma2 = 1e-30;
    params.trials = 2000;
    params.seed = 99;
    const SerResult r = ser_monte_carlo(params);
    CHECK(r.ser_bob == 0.0);
    CHECK(r.trials == 2000);
}

TEST_CASE("ser_monte_carlo is reproducible and thread-invariant") {
    Rng rng(706);
    SerParams params;
    params.h_bob = random_positive_channel(rng, 4);
    params.h_eve = random_positive_channel(rng, 4);
    params.precoders = make_precoders(params.h_bob);
    params.rho = 1e-4;
    // Noise at the symbol scale keeps both error rates in mid-range.
    params.sigma2 = std::pow(params.rho * norm(params.h_bob.h) * 0.3, 2);
    params.trials = 20000;
    params.seed = 1234;
    params.threads = 1;
    const SerResult a = ser_monte_carlo(params);
    const SerResult b = ser_monte_carlo(params);
    CHECK(a.ser_bob == b.ser_bob);
    CHECK(a.ser_eve == b.ser_eve);

    params.threads = 8;
    const SerResult c = ser_monte_carlo(params);
    CHECK(a.ser_bob == c.ser_bob);
    CHECK(a.ser_eve == c.ser_eve);

    CHECK(a.ser_bob > 0.0);
    CHECK(a.ser_bob < 1.0);
}

TEST_CASE("ser estimates from disjoint seeds agree within binomial error") {
    Rng rng(707);
    SerParams params;
    params.h_bob = random_positive_channel(rng, 4);
    params.h_eve = random_positive_channel(rng, 4);
    params.precoders = make_precoders(params.h_bob);
    params.rho = 1e-4;
    params.sigma2 = std::pow(params.rho * norm(params.h_bob.h) * 0.25, 2);
    params.trials = 40000;
    params.threads = 2;

    params.seed = 1;
    const SerResult a = ser_monte_carlo(params);
    params.seed = 2;
    const SerResult b = ser_monte_carlo(params);

    auto within_3sigma = [&](double p1, double p2) {
        const double pbar = 0.5 * (p1 + p2);
        const double sd = std::sqrt(std::max(pbar * (1.0 - pbar), 1e-12) * 2.0 /
                                    static_cast<double>(params.trials));
        return std::abs(p1 - p2) <= 3.0 * sd;
    };
    CHECK(within_3sigma(a.ser_bob, b.ser_bob));
    CHECK(within_3sigma(a.ser_eve, b.ser_eve));
}
