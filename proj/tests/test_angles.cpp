#include <cmath>

#include "doctest.h"
#include "gnpvlc/angles.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gnpvlc;
using testutil::random_channel;

namespace {

// Single-path channel with chosen plate response.
ReceiverChannel one_path(double gain, double a_l, double a_r, double dphi) {
    ReceiverChannel rc;
    rc.label = "t";
    rc.per_tx = {{{{gain, 0.0, 0, 0}, {a_l, a_r, dphi}}}};
    return rc;
}

// LOS-dominant synthetic channel drawn from the reference plate ranges.
ReceiverChannel reference_like_channel(Rng& rng, size_t n_tx = 4, size_t n_nlos = 6) {
    const GnpPropertyRanges eve{{0.10, 0.40}, {0.25, 0.75}, 0.6144, 0.8308};
    ReceiverChannel rc;
    rc.label = "eve";
    rc.per_tx.resize(n_tx);
    for (size_t m = 0; m < n_tx; ++m) {
        for (size_t n = 0; n <= n_nlos; ++n) {
            ChannelPath p;
            p.gain = n == 0 ? rng.uniform(0.5, 1.0) : rng.uniform(0.0, 0.01);
            p.delay_phase = rng.uniform(0.0, 2.0 * kPi);
            p.path_index = static_cast<int>(n);
            p.tx_index = static_cast<int>(m);
            rc.per_tx[m].push_back({p, sample_path_response(eve, rng)});
        }
    }
    return rc;
}

double grid_min_theta(const ReceiverChannel& rc, size_t m, double step) {
    double best_f = 1e300, best_t = 0.0;
    for (double t = -kPi / 2; t < kPi / 2; t += step) {
        std::vector<double> thetas(rc.num_tx(), 0.0);
        thetas[m] = t;
        double f = 0.0;
        for (const auto& term : rc.per_tx[m]) {
            const double cv = std::cos(2.0 * t + term.gnp.delta_phi);
            f += term.path.gain * cv * (cv + term.gnp.asymmetry());
        }
        if (f < best_f) {
            best_f = f;
            best_t = t;
        }
    }
    return best_t;
}

}  // namespace

TEST_CASE("objective_eve signs and structure") {
    // dphi = 0 and theta = pi/2: every path contributes g (1 - u) < 0.
    ReceiverChannel rc = one_path(2.0, 0.8, 0.2, 0.0);
    const double u = rc.per_tx[0][0].gnp.asymmetry();
    CHECK(u == doctest::Approx(2.5));
    CHECK(objective_eve({kPi / 2}, rc) == doctest::Approx(2.0 * (1.0 - u)));
}

TEST_CASE("objective_eve equals the per-path normalized channel squares") {
    // Per path: h = g(aL + aR + 2 sqrt(aL aR) cos v) at receiver angle zero,
    // and g cos(v)(cos(v) + u) = (h^2/g - g (aL + aR)^2) / (4 aL aR).
    Rng rng(601);
    for (int i = 0; i < 300; ++i) {
        const ReceiverChannel rc = random_channel(rng, 3, 4);
        const auto thetas = testutil::random_angles(rng, 3);
        const double f = objective_eve(thetas, rc);

        double f_from_h = 0.0;
        for (size_t m = 0; m < 3; ++m) {
            for (const auto& term : rc.per_tx[m]) {
                const double g = term.path.gain;
                const double al = term.gnp.a_bar_l, ar = term.gnp.a_bar_r;
                const double w = -2.0 * thetas[m] - term.gnp.delta_phi;
                const double hmn = g * (al + ar + 2.0 * std::sqrt(al * ar) * std::cos(w));
                f_from_h += (hmn * hmn / g - g * (al + ar) * (al + ar)) / (4.0 * al * ar);
            }
        }
        CHECK(std::abs(f - f_from_h) <= 1e-9 * (1.0 + std::abs(f)));
    }
}

TEST_CASE("minimizing f_E tracks the effective-channel minimum") {
    Rng rng(602);
    for (int i = 0; i < 50; ++i) {
        const ReceiverChannel rc = reference_like_channel(rng);
        for (size_t m = 0; m < rc.num_tx(); ++m) {
            double h_min = 1e300, h_max = -1e300, h_at_f = 0.0;
            double f_min = 1e300;
            for (double t = -kPi / 2; t < kPi / 2; t += 1e-3) {
                double f = 0.0, hm = 0.0;
                for (const auto& term : rc.per_tx[m]) {
                    const double al = term.gnp.a_bar_l, ar = term.gnp.a_bar_r;
                    const double cv = std::cos(2.0 * t + term.gnp.delta_phi);
                    f += term.path.gain * cv * (cv + term.gnp.asymmetry());
                    hm += term.path.gain * (al + ar + 2.0 * std::sqrt(al * ar) * cv);
                }
                h_min = std::min(h_min, hm);
                h_max = std::max(h_max, hm);
                if (f < f_min) {
                    f_min = f;
                    h_at_f = hm;
                }
            }
            // The f_E minimizer sits essentially at the channel minimum.
            CHECK(h_at_f - h_min <= 0.02 * (h_max - h_min));
        }
    }
}

TEST_CASE("tx_angles_suboptimal closed form") {
    const auto sol = tx_angles_suboptimal(0.6144, 0.8308, 4);
    REQUIRE(sol.thetas.size() == 4);
    for (double t : sol.thetas) CHECK(std::abs(t - (kPi / 2 - 0.3613)) < 1e-12);
    CHECK(sol.branch == 1);

    const auto degen = tx_angles_suboptimal(0.0, 0.0, 2);
    for (double t : degen.thetas) CHECK(std::abs(t - kPi / 2) < 1e-12);
}

TEST_CASE("suboptimal angle sits in a positive-curvature region of f_E") {
    Rng rng(603);
    const auto sol = tx_angles_suboptimal(0.6144, 0.8308, 4);
    for (int i = 0; i < 100; ++i) {
        const ReceiverChannel rc = reference_like_channel(rng);
        for (size_t m = 0; m < rc.num_tx(); ++m)
            CHECK(eve_second_partial(rc, m, sol.thetas[m]) > 0.0);
    }
}

TEST_CASE("tx_angles_iterative on a pure line-of-sight channel") {
    Rng rng(604);
    for (int i = 0; i < 100; ++i) {
        const double dphi = rng.uniform(0.6144, 0.8308);
        const ReceiverChannel rc = one_path(rng.uniform(0.1, 2.0), 0.9, 0.3, dphi);
        const auto sol = tx_angles_iterative(rc);
        CHECK(sol.converged);
        CHECK(sol.iterations <= 2);
        CHECK(std::abs(sol.thetas[0] - (kPi / 2 - dphi / 2)) < 1e-9);
    }
}

TEST_CASE("tx_angles_iterative reaches the grid minimizer of f_E") {
    Rng rng(605);
    for (int i = 0; i < 25; ++i) {
        const ReceiverChannel rc = reference_like_channel(rng);
        const auto sol = tx_angles_iterative(rc, 1e-10);
        CHECK(sol.converged);
        for (size_t m = 0; m < rc.num_tx(); ++m) {
            const double scale = eve_derivative_scale(rc, m);
            CHECK(std::abs(eve_partial(rc, m, sol.thetas[m])) <= 1e-6 * scale);
            CHECK(eve_second_partial(rc, m, sol.thetas[m]) > 0.0);

            const double t_grid = grid_min_theta(rc, m, 1e-5);
            // Compare objective values; the angles may differ by grid resolution.
            std::vector<double> th_it(rc.num_tx(), 0.0), th_gr(rc.num_tx(), 0.0);
            th_it[m] = sol.thetas[m];
            th_gr[m] = t_grid;
            CHECK(objective_eve(th_it, rc) <= objective_eve(th_gr, rc) + 1e-9 * scale);
        }
    }
}

TEST_CASE("iterative angles stay near the suboptimal rule for dominant LOS") {
    Rng rng(606);
    const auto sub = tx_angles_suboptimal(0.6144, 0.8308, 4);
    for (int i = 0; i < 50; ++i) {
        const ReceiverChannel rc = reference_like_channel(rng);
        const auto opt = tx_angles_iterative(rc);
        for (size_t m = 0; m < 4; ++m)
            CHECK(std::abs(wrap_half_pi(sub.thetas[m] - opt.thetas[m])) < 0.062);  // ~3.5 deg
    }
}

TEST_CASE("quartic_coefficients reference values") {
    // All dphi = 0.
    ReceiverChannel rc;
    rc.label = "t";
    rc.per_tx = {{{{0.5, 0.0, 0, 0}, {0.8, 0.2, 0.0}}, {{1.5, 0.0, 1, 0}, {0.9, 0.45, 0.0}}}};
    const double u0 = rc.per_tx[0][0].gnp.asymmetry();
    const double u1 = rc.per_tx[0][1].gnp.asymmetry();
    auto q = quartic_coefficients(rc);
    CHECK(std::abs(q.a2) <= 1e-12);
    CHECK(std::abs(q.a4) <= 1e-12);
    CHECK(q.a1 == doctest::Approx(2.0 * (0.5 + 1.5)));
    CHECK(q.a3 == doctest::Approx(0.5 * u0 + 1.5 * u1));

    // Single path, g = 1, dphi = pi/4, u = 2.5.
    q = quartic_coefficients(one_path(1.0, 0.8, 0.2, kPi / 4));
    CHECK(std::abs(q.a1) <= 1e-12);
    CHECK(q.a2 == doctest::Approx(1.0));
    CHECK(q.a3 == doctest::Approx(2.5 / std::sqrt(2.0)));
    CHECK(q.a4 == doctest::Approx(-2.5 / std::sqrt(2.0)));
}

TEST_CASE("quartic coefficients reproduce the objective derivative") {
    Rng rng(607);
    for (int i = 0; i < 200; ++i) {
        const ReceiverChannel rc = random_channel(rng, 3, 4);
        const QuarticProblem q = quartic_coefficients(rc);
        const double tilde = rng.uniform(-kPi, kPi);

        const double st = std::sin(tilde), ct = std::cos(tilde);
        const double e_form = q.a1 * st * ct + q.a2 * (st * st - ct * ct) + q.a3 * st + q.a4 * ct;

        // Map back to theta_b with a convenient common transmitter angle.
        const double mid = 0.7226;
        const double theta_star = kPi / 2 - mid / 2;
        const std::vector<double> tx(3, theta_star);
        const double theta_b = (kPi - mid + tilde) / 2.0;
        const double deriv = bob_objective_derivative(rc, tx, theta_b);
        // d f_B / d theta_b = -2 E(tilde).
        CHECK(std::abs(deriv + 2.0 * e_form) <= 1e-9 * (1.0 + std::abs(deriv)));
    }
}

TEST_CASE("solve_quartic produces residual-clean roots with a unit-circle root") {
    Rng rng(608);
    for (int i = 0; i < 200; ++i) {
        const ReceiverChannel rc = reference_like_channel(rng);
        const QuarticProblem q = quartic_coefficients(rc);
        const auto roots = solve_quartic(q);
        REQUIRE(roots.size() == 4);
        const auto c = q.coefficients();
        const std::vector<cplx> coeffs(c.begin(), c.end());
        double best = 1e300;
        for (const auto& t : roots) {
            best = std::min(best, std::abs(std::abs(t) - 1.0));
            double scale = 0.0, pw = 1.0;
            for (size_t k = c.size(); k-- > 0;) {
                scale += std::abs(c[k]) * pw;
                pw *= std::abs(t);
            }
            CHECK(std::abs(polyval(coeffs, t)) <= 1e-8 * scale);
        }
        // A real stationary point exists, so some root sits on the unit circle.
        CHECK(best < 1e-6);
    }
}

TEST_CASE("bob_angle on a single line-of-sight path") {
    Rng rng(609);
    for (int i = 0; i < 100; ++i) {
        const double dphi = rng.uniform(0.6144, 0.8308);
        const double g = rng.uniform(0.5, 2.0);
        const ReceiverChannel rc = one_path(g, 0.9, 0.3, dphi);
        const double mid = 0.7226;
        const double theta_star = kPi / 2 - mid / 2;
        const auto sol = bob_angle(rc, theta_star, mid);

        CHECK(!sol.used_grid_fallback);
        CHECK(sol.theta_b >= -kPi / 2);
        CHECK(sol.theta_b <= kPi / 2);
        CHECK(sol.curvature < 0.0);

        // Maximal channel: cos(w) = 1 exactly at the optimum.
        const EffectiveChannel h =
            effective_channel(rc, {std::vector<double>(1, theta_star), sol.theta_b});
        const double splus = std::sqrt(0.9) + std::sqrt(0.3);
        CHECK(h.h[0] == doctest::Approx(g * splus * splus).epsilon(1e-9));
    }
}

TEST_CASE("bob_angle matches a fine grid search") {
    Rng rng(610);
    for (int i = 0; i < 20; ++i) {
        const ReceiverChannel rc = reference_like_channel(rng);
        const double mid = 0.7226;
        const double theta_star = kPi / 2 - mid / 2;
        const std::vector<double> tx(4, theta_star);
        const auto sol = bob_angle(rc, theta_star, mid);

        CHECK(std::abs(bob_objective_derivative(rc, tx, sol.theta_b)) <=
              1e-6 * bob_derivative_scale(rc));
        CHECK(bob_objective_second(rc, tx, sol.theta_b) < 0.0);
        CHECK(sol.objective == doctest::Approx(bob_objective(rc, tx, sol.theta_b)));

        double best = -1e300;
        for (double t = -kPi / 2; t < kPi / 2; t += 1e-4) best = std::max(best, bob_objective(rc, tx, t));
        CHECK(sol.objective + 1e-9 * bob_derivative_scale(rc) >= best);
    }
}

TEST_CASE("bob_angle_general agrees with the common-angle form") {
    Rng rng(611);
    for (int i = 0; i < 100; ++i) {
        const ReceiverChannel rc = random_channel(rng, 4, 3);
        const double mid = rng.uniform(0.2, 1.0);
        const double theta_star = kPi / 2 - mid / 2;
        const auto common = bob_angle(rc, theta_star, mid);
        const auto general = bob_angle_general(rc, std::vector<double>(4, theta_star));
        CHECK(std::abs(wrap_half_pi(common.theta_b - general.theta_b)) < 1e-9);
        CHECK(common.objective == doctest::Approx(general.objective).epsilon(1e-9));
    }
}

TEST_CASE("bob_angle falls back to grid search on degenerate channels") {
    // All-zero gains make the stationary condition vanish identically; the
    // quartic has no roots to offer and the fallback must be flagged.
    ReceiverChannel rc;
    rc.label = "dark";
    rc.per_tx = {{{{0.0, 0.0, 0, 0}, {0.9, 0.3, 0.7}}}};
    const auto sol = bob_angle(rc, kPi / 2 - 0.7226 / 2, 0.7226);
    CHECK(sol.used_grid_fallback);
    CHECK(sol.theta_b >= -kPi / 2);
    CHECK(sol.theta_b <= kPi / 2);
    CHECK(std::abs(sol.objective) <= 1e-12);
}

TEST_CASE("bob_angle rejects inconsistent inputs") {
    Rng rng(612);
    const ReceiverChannel rc = random_channel(rng, 2, 2);
    CHECK_THROWS_AS((void)bob_angle(rc, 0.3, 0.7226), std::invalid_argument);
}

TEST_CASE("bob_angle_general maximizes under per-transmitter angles") {
    Rng rng(613);
    for (int i = 0; i < 20; ++i) {
        const ReceiverChannel rc = random_channel(rng, 4, 3);
        const auto tx = testutil::random_angles(rng, 4);
        const auto sol = bob_angle_general(rc, tx);
        CHECK(std::abs(bob_objective_derivative(rc, tx, sol.theta_b)) <=
              1e-6 * bob_derivative_scale(rc));
        CHECK(bob_objective_second(rc, tx, sol.theta_b) < 0.0);
        double best = -1e300;
        for (double t = -kPi / 2; t < kPi / 2; t += 1e-4) best = std::max(best, bob_objective(rc, tx, t));
        CHECK(sol.objective + 1e-9 * bob_derivative_scale(rc) >= best);
    }
}
