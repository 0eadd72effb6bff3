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
#include "gnpvlc/angles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gnpvlc {

namespace {

// Flattened path term for the scalar stationary-point machinery: gain,
// effective phase offset, and plate asymmetry factor.
struct PathCoef {
    double g, phase, u;
};

// The receiver-angle objective in the substituted variable theta_tilde, where
// each path contributes g cos(v)(cos(v) + u) with v = theta_tilde - phase.
double tilde_objective(const std::vector<PathCoef>& paths, double tilde) {
    double f = 0.0;
    for (const auto& p : paths) {
        const double cv = std::cos(tilde - p.phase);
        f += p.g * cv * (cv + p.u);
    }
    return f;
}

double tilde_derivative(const std::vector<PathCoef>& paths, double tilde) {
    double f = 0.0;
    for (const auto& p : paths) {
        const double v = tilde - p.phase;
        f -= p.g * std::sin(v) * (2.0 * std::cos(v) + p.u);
    }
    return f;
}

double tilde_second(const std::vector<PathCoef>& paths, double tilde) {
    double f = 0.0;
    for (const auto& p : paths) {
        const double v = tilde - p.phase;
        f -= p.g * (2.0 * std::cos(2.0 * v) + p.u * std::cos(v));
    }
    return f;
}

QuarticProblem coefficients_for(const std::vector<PathCoef>& paths) {
    QuarticProblem q;
    for (const auto& p : paths) {
        const double c = std::cos(p.phase), s = std::sin(p.phase);
        q.a1 += p.g * (2.0 * c * c - 2.0 * s * s);
        q.a2 += 2.0 * p.g * s * c;
        q.a3 += p.g * c * p.u;
        q.a4 -= p.g * s * p.u;
    }
    return q;
}

std::vector<PathCoef> tilde_paths(const ReceiverChannel& rc, const std::vector<double>* tx_thetas) {
    rc.validate();
    if (tx_thetas && tx_thetas->size() != rc.num_tx())
        throw std::invalid_argument("angles: transmitter angle count mismatch");
    std::vector<PathCoef> out;
    for (size_t m = 0; m < rc.num_tx(); ++m) {
        const double shift = tx_thetas ? 2.0 * (*tx_thetas)[m] : 0.0;
        for (const auto& term : rc.per_tx[m])
            out.push_back({term.path.gain, term.gnp.delta_phi + shift, term.gnp.asymmetry()});
    }
    return out;
}

// Shared stationary-point solve in the tilde domain. Maps every admissible
// unit-circle quartic root to an angle, polishes it on the real derivative,
// and keeps the best local maximum.
struct TildeSolution {
    double tilde = 0.0;
    cplx t{};
    double objective = 0.0;
    double second = 0.0;
    bool used_grid_fallback = false;
};

TildeSolution solve_tilde_maximum(const std::vector<PathCoef>& paths) {
    const QuarticProblem q = coefficients_for(paths);

    TildeSolution best;
    bool found = false;
    std::vector<cplx> roots;
    try {
        roots = quartic_roots(q.coefficients());
    } catch (const std::exception&) {
        roots.clear();  // degenerate channel; grid fallback below
    }
    for (const cplx& t : roots) {
        if (std::abs(std::abs(t) - 1.0) > 1e-6) continue;  // theta_tilde must be real
        double tilde = std::arg(t);
        // A couple of Newton steps on the real stationary condition tighten
        // the closed-form root against the 1e-6-scaled stationarity check.
        for (int it = 0; it < 3; ++it) {
            const double d2 = tilde_second(paths, tilde);
            if (d2 == 0.0) break;
            tilde -= tilde_derivative(paths, tilde) / d2;
        }
        const double d2 = tilde_second(paths, tilde);
        if (d2 >= 0.0) continue;
        const double f = tilde_objective(paths, tilde);
        if (!found || f > best.objective) {
            best = {tilde, t, f, d2, false};
            found = true;
        }
    }
    if (found) return best;

    // No admissible quartic root: scan the period directly.
    const int n = 628319;  // ~1e-5 rad steps over (-pi, pi]
    double best_f = -1e300, best_tilde = 0.0;
    for (int i = 0; i < n; ++i) {
        const double tilde = -kPi + 2.0 * kPi * (i + 0.5) / n;
        const double f = tilde_objective(paths, tilde);
        if (f > best_f) {
            best_f = f;
            best_tilde = tilde;
        }
    }
    for (int it = 0; it < 5; ++it) {
        const double d2 = tilde_second(paths, best_tilde);
        if (d2 == 0.0) break;
        best_tilde -= tilde_derivative(paths, best_tilde) / d2;
    }
    return {best_tilde, std::exp(cplx(0.0, best_tilde)), tilde_objective(paths, best_tilde),
            tilde_second(paths, best_tilde), true};
}

}  // namespace

std::array<cplx, 5> QuarticProblem::coefficients() const {
    const cplx j(0.0, 1.0);
    return {-j * a1 - 2.0 * a2, -2.0 * j * a3 + 2.0 * a4, cplx(0.0),
            2.0 * j * a3 + 2.0 * a4, j * a1 - 2.0 * a2};
}

double objective_eve(const std::vector<double>& thetas, const ReceiverChannel& eve) {
    eve.validate();
    if (thetas.size() != eve.num_tx())
        throw std::invalid_argument("objective_eve: angle count mismatch");
    double f = 0.0;
    for (size_t m = 0; m < eve.num_tx(); ++m) {
        for (const auto& term : eve.per_tx[m]) {
            const double cv = std::cos(2.0 * thetas[m] + term.gnp.delta_phi);
            f += term.path.gain * cv * (cv + term.gnp.asymmetry());
        }
    }
    return f;
}

double eve_partial(const ReceiverChannel& eve, size_t m, double theta) {
    double f = 0.0;
    for (const auto& term : eve.per_tx.at(m)) {
        const double v = 2.0 * theta + term.gnp.delta_phi;
        f -= 2.0 * term.path.gain * std::sin(v) * (2.0 * std::cos(v) + term.gnp.asymmetry());
    }
    return f;
}

double eve_second_partial(const ReceiverChannel& eve, size_t m, double theta) {
    double f = 0.0;
    for (const auto& term : eve.per_tx.at(m)) {
        const double v = 2.0 * theta + term.gnp.delta_phi;
        f -= 4.0 * term.path.gain *
             (2.0 * std::cos(2.0 * v) + term.gnp.asymmetry() * std::cos(v));
    }
    return f;
}

double eve_derivative_scale(const ReceiverChannel& eve, size_t m) {
    double s = 0.0;
    for (const auto& term : eve.per_tx.at(m))
        s += 2.0 * term.path.gain * (2.0 + term.gnp.asymmetry());
    return s;
}

TxAngleSolution tx_angles_suboptimal(double delta_phi_lo, double delta_phi_hi, size_t num_tx) {
    if (!(delta_phi_lo <= delta_phi_hi))
        throw std::invalid_argument("tx_angles_suboptimal: bad retardation bounds");
    if (num_tx == 0) throw std::invalid_argument("tx_angles_suboptimal: no transmitters");
    TxAngleSolution sol;
    sol.method = TxAngleSolution::Method::Suboptimal;
    sol.branch = 1;
    const double theta = wrap_half_pi(kPi / 2 - (delta_phi_lo + delta_phi_hi) / 4.0);
    sol.thetas.assign(num_tx, theta);
    return sol;
}

TxAngleSolution tx_angles_iterative(const ReceiverChannel& eve, double eps, int max_iter) {
    eve.validate();
    if (!(eps > 0.0)) throw std::invalid_argument("tx_angles_iterative: eps must be positive");

    TxAngleSolution sol;
    sol.method = TxAngleSolution::Method::Iterative;
    sol.branch = 1;
    sol.thetas.resize(eve.num_tx());
    for (size_t m = 0; m < eve.num_tx(); ++m) {
        const auto& terms = eve.per_tx[m];
        // Start from the gain-weighted mean retardation (the LOS-dominant
        // one-step value).
        double g_sum = 0.0, dphi_mean = 0.0;
        for (const auto& term : terms) {
            g_sum += term.path.gain;
            dphi_mean += term.path.gain * term.gnp.delta_phi;
        }
        if (!(g_sum > 0.0)) throw std::invalid_argument("tx_angles_iterative: all-zero gains");
        dphi_mean /= g_sum;

        double theta = kPi / 2 - dphi_mean / 2.0;
        bool converged = false;
        int it = 0;
        for (; it < max_iter; ++it) {
            cplx s = 0.0;
            for (const auto& term : terms) {
                const double gt = term.path.gain *
                                  (2.0 * std::cos(2.0 * theta + term.gnp.delta_phi) +
                                   term.gnp.asymmetry());
                s += gt * std::exp(cplx(0.0, term.gnp.delta_phi));
            }
            const double next =
                kPi / 2 + 0.5 * std::arg(std::sqrt(std::conj(s) / s));
            const double delta = std::abs(next - theta);
            theta = next;
            if (delta < eps) {
                converged = true;
                ++it;
                break;
            }
        }
        // The phase-ratio map loses precision when the summed weights nearly
        // cancel (plates with a_bar_l ~ a_bar_r make u - 2 ~ 0 at the
        // stationary point). A guarded Newton polish on f'_E keeps the
        // returned angle stationary in that regime too.
        for (int k = 0; k < 8; ++k) {
            const double d2 = eve_second_partial(eve, m, theta);
            if (d2 <= 0.0) break;
            const double step = eve_partial(eve, m, theta) / d2;
            theta -= std::clamp(step, -0.1, 0.1);
            if (std::abs(step) < 1e-15) break;
        }
        if (std::abs(eve_partial(eve, m, theta)) <= 1e-9 * eve_derivative_scale(eve, m) &&
            eve_second_partial(eve, m, theta) > 0.0)
            converged = true;
        sol.thetas[m] = wrap_half_pi(theta);
        sol.converged = sol.converged && converged;
        sol.iterations = std::max(sol.iterations, it);
    }
    return sol;
}

QuarticProblem quartic_coefficients(const ReceiverChannel& bob) {
    return coefficients_for(tilde_paths(bob, nullptr));
}

std::vector<cplx> solve_quartic(const QuarticProblem& q) { return quartic_roots(q.coefficients()); }

double bob_objective(const ReceiverChannel& bob, const std::vector<double>& tx_thetas,
                     double theta_b) {
    const auto paths = tilde_paths(bob, &tx_thetas);
    return tilde_objective(paths, 2.0 * theta_b);
}

double bob_objective_derivative(const ReceiverChannel& bob, const std::vector<double>& tx_thetas,
                                double theta_b) {
    const auto paths = tilde_paths(bob, &tx_thetas);
    return 2.0 * tilde_derivative(paths, 2.0 * theta_b);
}

double bob_objective_second(const ReceiverChannel& bob, const std::vector<double>& tx_thetas,
                            double theta_b) {
    const auto paths = tilde_paths(bob, &tx_thetas);
    return 4.0 * tilde_second(paths, 2.0 * theta_b);
}

double bob_derivative_scale(const ReceiverChannel& bob) {
    double s = 0.0;
    for (const auto& per_tx : bob.per_tx)
        for (const auto& term : per_tx)
            s += 2.0 * term.path.gain * (2.0 + term.gnp.asymmetry());
    return s;
}

BobAngleSolution bob_angle(const ReceiverChannel& bob, double theta_star, double delta_phi_mid) {
    if (std::abs(wrap_half_pi(kPi / 2 - delta_phi_mid / 2.0) - wrap_half_pi(theta_star)) > 1e-9)
        throw std::invalid_argument(
            "bob_angle: theta_star and delta_phi_mid are inconsistent "
            "(expect theta_star = pi/2 - delta_phi_mid/2)");
    // Common transmitter angle folds into theta_tilde = 2 theta_b - pi +
    // delta_phi_mid, so the quartic only sees the plate phases.
    const auto paths = tilde_paths(bob, nullptr);
    const TildeSolution ts = solve_tilde_maximum(paths);
    BobAngleSolution sol;
    sol.theta_b = wrap_half_pi((kPi - delta_phi_mid + ts.tilde) / 2.0);
    sol.t = ts.t;
    sol.objective = ts.objective;
    sol.curvature = 4.0 * ts.second;
    sol.used_grid_fallback = ts.used_grid_fallback;
    return sol;
}

BobAngleSolution bob_angle_general(const ReceiverChannel& bob,
                                   const std::vector<double>& tx_thetas) {
    const auto paths = tilde_paths(bob, &tx_thetas);
    const TildeSolution ts = solve_tilde_maximum(paths);
    BobAngleSolution sol;
    sol.theta_b = wrap_half_pi(ts.tilde / 2.0);
    sol.t = ts.t;
    sol.objective = ts.objective;
    sol.curvature = 4.0 * ts.second;
    sol.used_grid_fallback = ts.used_grid_fallback;
    return sol;
}

}  // namespace gnpvlc
