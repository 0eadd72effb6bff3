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
#include "gnpvlc/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace gnpvlc {

namespace {

bool inside_room(const Scene& s, const Vec3& p) {
    return p.x >= s.room_min.x && p.x <= s.room_max.x && p.y >= s.room_min.y &&
           p.y <= s.room_max.y && p.z >= s.room_min.z && p.z <= s.room_max.z;
}

struct WallPatch {
    Vec3 center;
    Vec3 normal;  // inward
    double area;
};

// Deterministic patch order: walls x=min, x=max, y=min, y=max; within a wall,
// horizontal-major then vertical.
template <typename Fn>
void for_each_wall_patch(const Scene& s, Fn&& fn) {
    const double h_lo = s.room_min.z, h_hi = s.room_max.z;
    const double height = h_hi - h_lo;
    struct WallSpec {
        bool along_y;     // horizontal axis of the wall
        double fixed;     // wall-plane coordinate
        Vec3 normal;
        double lo, hi;    // horizontal extent
    };
    const WallSpec walls[4] = {
        {true, s.room_min.x, {1, 0, 0}, s.room_min.y, s.room_max.y},
        {true, s.room_max.x, {-1, 0, 0}, s.room_min.y, s.room_max.y},
        {false, s.room_min.y, {0, 1, 0}, s.room_min.x, s.room_max.x},
        {false, s.room_max.y, {0, -1, 0}, s.room_min.x, s.room_max.x},
    };
    for (const auto& w : walls) {
        const double width = w.hi - w.lo;
        const int nu = std::max(1, static_cast<int>(std::lround(width / s.wall_patch_size)));
        const int nv = std::max(1, static_cast<int>(std::lround(height / s.wall_patch_size)));
        const double du = width / nu, dv = height / nv;
        for (int iu = 0; iu < nu; ++iu) {
            for (int iv = 0; iv < nv; ++iv) {
                const double u = w.lo + (iu + 0.5) * du;
                const double v = h_lo + (iv + 0.5) * dv;
                WallPatch p;
                p.center = w.along_y ? Vec3{w.fixed, u, v} : Vec3{u, w.fixed, v};
                p.normal = w.normal;
                p.area = du * dv;
                fn(p);
            }
        }
    }
}

}  // namespace

void Scene::validate() const {
    if (!(room_min.x < room_max.x && room_min.y < room_max.y && room_min.z < room_max.z))
        throw std::invalid_argument("Scene: degenerate room extents");
    if (led_positions.empty()) throw std::invalid_argument("Scene: no LEDs");
    for (const auto& led : led_positions)
        if (!inside_room(*this, led)) throw std::invalid_argument("Scene: LED outside room");
    if (!(fov > 0.0 && fov <= kPi / 2)) throw std::invalid_argument("Scene: fov outside (0, pi/2]");
    if (!(pd_area > 0.0)) throw std::invalid_argument("Scene: pd_area must be positive");
    if (lambertian_order < 0.0) throw std::invalid_argument("Scene: negative Lambertian order");
    if (!(wall_reflectivity >= 0.0 && wall_reflectivity <= 1.0))
        throw std::invalid_argument("Scene: wall_reflectivity outside [0, 1]");
    if (!(wall_patch_size > 0.0)) throw std::invalid_argument("Scene: wall_patch_size must be positive");
    if (!(wavelength > 0.0)) throw std::invalid_argument("Scene: wavelength must be positive");
}

double los_gain(const Scene& scene, const Vec3& led, const Vec3& rx) {
    const Vec3 d = rx - led;
    const double dist = norm(d);
    if (dist <= 0.0) throw std::invalid_argument("los_gain: coincident LED and receiver");

    const double cos_irr = -d.z / dist;  // LED normal points down
    const double cos_inc = -d.z / dist;  // PD normal points up
    if (cos_irr <= 0.0 || cos_inc <= 0.0) return 0.0;
    if (std::acos(std::min(cos_inc, 1.0)) > scene.fov) return 0.0;

    const double m = scene.lambertian_order;
    return (m + 1.0) * scene.pd_area * std::pow(cos_irr, m) * cos_inc /
           (2.0 * kPi * dist * dist);
}

std::vector<ChannelPath> nlos_paths(const Scene& scene, const Vec3& led, const Vec3& rx,
                                    int tx_index) {
    std::vector<ChannelPath> out;
    if (scene.wall_reflectivity <= 0.0) return out;

    const double m = scene.lambertian_order;
    const double pref = (m + 1.0) * scene.pd_area * scene.wall_reflectivity /
                        (2.0 * kPi * kPi);
    int next_index = 1;
    for_each_wall_patch(scene, [&](const WallPatch& p) {
        const Vec3 d1 = p.center - led;
        const Vec3 d2 = rx - p.center;
        const double l1 = norm(d1), l2 = norm(d2);
        if (l1 <= 0.0 || l2 <= 0.0) return;

        const double cos_irr = -d1.z / l1;              // emission at the LED (down normal)
        const double cos_in = -dot(p.normal, d1) / l1;  // incidence on the patch
        const double cos_out = dot(p.normal, d2) / l2;  // emission from the patch
        const double cos_inc = -d2.z / l2;              // incidence at the PD (up normal)
        if (cos_irr <= 0.0 || cos_in <= 0.0 || cos_out <= 0.0 || cos_inc <= 0.0) return;
        if (std::acos(std::min(cos_inc, 1.0)) > scene.fov) return;

        ChannelPath path;
        path.gain = pref * p.area * std::pow(cos_irr, m) * cos_in * cos_out * cos_inc /
                    (l1 * l1 * l2 * l2);
        if (path.gain <= 0.0) return;
        path.delay_phase = delay_phase(led, p.center, rx, scene.wavelength);
        path.path_index = next_index++;
        path.tx_index = tx_index;
        out.push_back(path);
    });
    return out;
}

double delay_phase(const Vec3& led, const std::optional<Vec3>& via, const Vec3& rx,
                   double wavelength) {
    if (!(wavelength > 0.0)) throw std::invalid_argument("delay_phase: wavelength must be positive");
    const double length = via ? norm(*via - led) + norm(rx - *via) : norm(rx - led);
    if (length <= 0.0) throw std::invalid_argument("delay_phase: degenerate path");
    const double cycles = length / wavelength;
    double phase = 2.0 * kPi * (cycles - std::floor(cycles));
    if (phase >= 2.0 * kPi) phase = 0.0;
    return phase;
}

std::vector<ChannelPath> build_paths(const Scene& scene, int tx_index, const Vec3& rx) {
    const Vec3& led = scene.led_positions.at(static_cast<size_t>(tx_index));
    std::vector<ChannelPath> paths;
    ChannelPath los;
    los.gain = los_gain(scene, led, rx);
    los.delay_phase = delay_phase(led, std::nullopt, rx, scene.wavelength);
    los.path_index = 0;
    los.tx_index = tx_index;
    paths.push_back(los);
    auto bounce = nlos_paths(scene, led, rx, tx_index);
    paths.insert(paths.end(), bounce.begin(), bounce.end());
    return paths;
}

}  // namespace gnpvlc
