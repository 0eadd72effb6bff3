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
#ifndef GNPVLC_ANGLES_HPP
#define GNPVLC_ANGLES_HPP

#include <vector>

#include "gnpvlc/channel.hpp"
#include "gnpvlc/quartic.hpp"

namespace gnpvlc {

// Transmitter-side polarizer angles are chosen to suppress an eavesdropper
// channel whose plate retardation is only known by its bounds. The
// eavesdropper is assumed to hold its own polarizer at angle zero.

/// Transmitter polarizer angles, one per transmitter, wrapped into
/// [-pi/2, pi/2].
struct TxAngleSolution {
    enum class Method { Suboptimal, Iterative };

    std::vector<double> thetas;
    int branch = 1;  ///< integer k in the stationary-point family k pi/2
    Method method = Method::Suboptimal;
    bool converged = true;
    int iterations = 0;
};

/// Quartic stationary-point problem for the receiver angle. The stationary
/// condition in t = e^{j theta_tilde} reads
/// (-jA1 - 2A2) t^4 + (-2jA3 + 2A4) t^3 + (2jA3 + 2A4) t + (jA1 - 2A2) = 0
/// (the t^2 coefficient vanishes identically).
struct QuarticProblem {
    double a1 = 0, a2 = 0, a3 = 0, a4 = 0;

    std::array<cplx, 5> coefficients() const;
};

/// Optimized receiver polarizer angle.
struct BobAngleSolution {
    double theta_b = 0.0;       ///< in [-pi/2, pi/2]
    cplx t{};                   ///< selected unit-circle root
    double objective = 0.0;     ///< f_B at the solution
    double curvature = 0.0;     ///< d^2 f_B / d theta_B^2, negative at a max
    bool used_grid_fallback = false;
};

/// Eavesdropper-channel objective
/// f_E(theta) = sum_{m,n} g cos(2 theta_m + dphi) (cos(2 theta_m + dphi) + u)
/// with u the plate asymmetry factor; the receiver angle is fixed at zero.
double objective_eve(const std::vector<double>& thetas, const ReceiverChannel& eve);

/// Partial derivative of f_E with respect to theta_m.
double eve_partial(const ReceiverChannel& eve, size_t m, double theta);

/// Second partial derivative of f_E with respect to theta_m.
double eve_second_partial(const ReceiverChannel& eve, size_t m, double theta);

/// Upper bound on |df_E/dtheta_m|; used to scale stationarity tolerances.
double eve_derivative_scale(const ReceiverChannel& eve, size_t m);

/// Closed-form angle theta* = pi/2 - (dphi_lo + dphi_hi)/4, replicated for
/// all transmitters: the k = 1 stationary point with the retardation replaced
/// by the midpoint of its bounds. Needs no eavesdropper channel knowledge.
TxAngleSolution tx_angles_suboptimal(double delta_phi_lo, double delta_phi_hi, size_t num_tx);

/// Fixed-point iteration for the exact minimizer of f_E given a concrete
/// eavesdropper channel. Stops when the per-transmitter update falls below
/// eps; non-convergence is reported through the returned flags with the last
/// iterate kept.
TxAngleSolution tx_angles_iterative(const ReceiverChannel& eve, double eps = 1e-9,
                                    int max_iter = 100);

/// Quartic coefficients of the receiver-angle stationary condition:
/// A1 = sum g (2cos^2 - 2sin^2)(dphi), A2 = sum 2 g sin dphi cos dphi,
/// A3 = sum g u cos dphi, A4 = -sum g u sin dphi.
QuarticProblem quartic_coefficients(const ReceiverChannel& bob);

/// All roots of the stationary-condition quartic.
std::vector<cplx> solve_quartic(const QuarticProblem& q);

/// Intended-receiver objective f_B(theta_b) for given transmitter angles:
/// sum_{m,n} g cos(w)(cos(w) + u) with w = 2 theta_b - 2 theta_m - dphi.
double bob_objective(const ReceiverChannel& bob, const std::vector<double>& tx_thetas,
                     double theta_b);

/// d f_B / d theta_b.
double bob_objective_derivative(const ReceiverChannel& bob, const std::vector<double>& tx_thetas,
                                double theta_b);

/// d^2 f_B / d theta_b^2.
double bob_objective_second(const ReceiverChannel& bob, const std::vector<double>& tx_thetas,
                            double theta_b);

/// Upper bound on |df_B/dtheta_b| for tolerance scaling.
double bob_derivative_scale(const ReceiverChannel& bob);

/// Receiver angle maximizing f_B when all transmitters share the angle
/// theta_star = pi/2 - delta_phi_mid/2. Solves the quartic, keeps unit-circle
/// roots with negative curvature, picks the best, and maps back through
/// theta_b = (pi - delta_phi_mid + theta_tilde)/2 wrapped into [-pi/2, pi/2].
/// If no admissible root survives, a fine grid search is used and flagged.
BobAngleSolution bob_angle(const ReceiverChannel& bob, double theta_star, double delta_phi_mid);

/// Same optimization for arbitrary per-transmitter angles: the transmitter
/// angle folds into the per-path phase, the quartic machinery is unchanged.
BobAngleSolution bob_angle_general(const ReceiverChannel& bob,
                                   const std::vector<double>& tx_thetas);

}  // namespace gnpvlc

#endif
