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
#ifndef GNPVLC_GEOMETRY_HPP
#define GNPVLC_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "gnpvlc/linalg.hpp"

namespace gnpvlc {

/// Indoor scene: a rectangular room with ceiling LEDs facing straight down
/// and photodiode receivers facing straight up. Walls reflect diffusely and
/// are discretized into square patches for single-bounce paths.
struct Scene {
    Vec3 room_min{-10.0, -10.0, 0.0};
    Vec3 room_max{10.0, 10.0, 4.0};
    std::vector<Vec3> led_positions{
        {2.2, 2.2, 4.0}, {2.2, -2.2, 4.0}, {-2.2, 2.2, 4.0}, {-2.2, -2.2, 4.0}};
    double fov = kPi / 2;              ///< PD field-of-view half-angle, rad
    double pd_area = 1e-4;             ///< m^2
    double lambertian_order = 1.0;     ///< LED Lambertian mode number
    double wall_reflectivity = 0.8;    ///< in [0, 1]
    double wall_patch_size = 1.0;      ///< m; calibrated so the §-scale room
                                       ///< yields a single-bounce path count
                                       ///< inside the reference band
    double wavelength = 550e-9;        ///< m, for propagation-delay phases

    size_t num_tx() const { return led_positions.size(); }

    void validate() const;
};

/// One propagation path between a transmitter and a receiver position.
/// path_index 0 is the LOS path; higher indices are wall-bounce paths.
struct ChannelPath {
    double gain = 0.0;        ///< dimensionless power ratio, >= 0
    double delay_phase = 0.0; ///< rad in [0, 2pi)
    int path_index = 0;
    int tx_index = 0;
};

/// Line-of-sight Lambertian gain
/// g = (m+1) A_pd cos^m(phi) cos(psi) / (2 pi d^2), zero beyond the PD
/// field of view. Coincident points are rejected.
double los_gain(const Scene& scene, const Vec3& led, const Vec3& rx);

/// Single-bounce paths via wall patches:
/// g = (m+1) A_pd rho dA cos^m(phi1) cos(psi1) cos(phi2) cos(psi2)
///     / (2 pi^2 d1^2 d2^2),
/// with the PD field-of-view cutoff applied at the receiver. Zero-gain
/// patches are dropped. Path indices start at 1 in deterministic patch order.
std::vector<ChannelPath> nlos_paths(const Scene& scene, const Vec3& led, const Vec3& rx,
                                    int tx_index = 0);

/// Propagation-delay phase 2 pi L / lambda wrapped to [0, 2pi), where L is
/// the (optionally reflected) path length.
double delay_phase(const Vec3& led, const std::optional<Vec3>& via, const Vec3& rx,
                   double wavelength);

/// All paths from one LED to a receiver; element 0 is the LOS path, the rest
/// are the nonzero single-bounce paths.
std::vector<ChannelPath> build_paths(const Scene& scene, int tx_index, const Vec3& rx);

}  // namespace gnpvlc

#endif
