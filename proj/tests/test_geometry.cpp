#include <cmath>

#include "doctest.h"
#include "gnpvlc/geometry.hpp"
#include "gnpvlc/rng.hpp"

using namespace gnpvlc;

namespace {

Scene paper_scene() { return Scene{}; }  // defaults are the reference layout

}  // namespace

TEST_CASE("los_gain direct arithmetic") {
    Scene s = paper_scene();
    const Vec3 led{0, 0, 4}, rx{0, 0, 1};
    // d = 3 m, both cosines 1: g = 2e-4 / (2 pi 9).
    const double want = 2.0 * 1e-4 / (2.0 * kPi * 9.0);
    CHECK(los_gain(s, led, rx) == doctest::Approx(want).epsilon(1e-12));
    CHECK(want == doctest::Approx(3.537e-6).epsilon(1e-3));

    CHECK_THROWS_AS((void)los_gain(s, led, led), std::invalid_argument);
}

TEST_CASE("los_gain field-of-view cutoff and inverse square") {
    Scene s = paper_scene();
    s.fov = kPi / 6;
    // Incidence ~54 deg from vertical exceeds the 30 deg FOV.
    CHECK(los_gain(s, {0, 0, 4}, {4.0, 0, 1}) == 0.0);
    // Inside the FOV the gain is unchanged by the cutoff.
    CHECK(los_gain(s, {0, 0, 4}, {0.5, 0, 1}) > 0.0);

    Scene wide = paper_scene();
    const double g1 = los_gain(wide, {0, 0, 4}, {0, 0, 1});
    Scene tall = wide;
    tall.room_max.z = 7.0;
    tall.led_positions[0] = {0, 0, 7};
    const double g2 = los_gain(tall, {0, 0, 7}, {0, 0, 1});
    CHECK(g2 == doctest::Approx(g1 / 4.0));
}

TEST_CASE("nlos_paths reflectivity and count calibration") {
    Scene s = paper_scene();

    Scene dark = s;
    dark.wall_reflectivity = 0.0;
    CHECK(nlos_paths(dark, s.led_positions[0], {0, 0, 1}).empty());

    // Calibrated wall discretization keeps the single-bounce path count in
    // the reference band [204, 295] for receivers inside the room.
    const Vec3 positions[] = {{0, 0, 1}, {5, 5, 1}, {-7.5, 3, 1}, {9.5, -9.5, 1}, {-2, 0, 1}};
    for (const auto& rx : positions) {
        for (size_t m = 0; m < s.num_tx(); ++m) {
            const auto paths = nlos_paths(s, s.led_positions[m], rx, static_cast<int>(m));
            CHECK(paths.size() >= 204);
            CHECK(paths.size() <= 295);
            for (const auto& p : paths) CHECK(p.gain > 0.0);
        }
    }
}

TEST_CASE("every single-bounce gain is below the unblocked LOS gain") {
    Scene s = paper_scene();
    const Vec3 positions[] = {{0, 0, 1}, {5, 5, 1}, {-3, 7, 1}};
    for (const auto& rx : positions) {
        for (size_t m = 0; m < s.num_tx(); ++m) {
            const double los = los_gain(s, s.led_positions[m], rx);
            REQUIRE(los > 0.0);
            for (const auto& p : nlos_paths(s, s.led_positions[m], rx, static_cast<int>(m)))
                CHECK(p.gain < los);
        }
    }
}

TEST_CASE("reference layout is symmetric at the room center") {
    Scene s = paper_scene();
    const Vec3 bob{0, 0, 1};
    const double g0 = los_gain(s, s.led_positions[0], bob);
    for (size_t m = 1; m < s.num_tx(); ++m) {
        const double gm = los_gain(s, s.led_positions[m], bob);
        CHECK(std::abs(gm - g0) <= 1e-12 * g0);
    }
}

TEST_CASE("gain is continuous in receiver position away from the FOV edge") {
    Scene s = paper_scene();
    Rng rng(901);
    for (int i = 0; i < 200; ++i) {
        const Vec3 rx{rng.uniform(-9.0, 9.0), rng.uniform(-9.0, 9.0), 1.0};
        const Vec3 nudged{rx.x + 1e-7, rx.y - 1e-7, rx.z};
        for (size_t m = 0; m < s.num_tx(); ++m) {
            const double a = los_gain(s, s.led_positions[m], rx);
            const double b = los_gain(s, s.led_positions[m], nudged);
            CHECK(std::abs(a - b) <= 1e-5 * std::max(a, 1e-12));
        }
    }
}

TEST_CASE("geometric gains are mirror-symmetric about the room center") {
    Scene s = paper_scene();
    for (double x : {0.5, 2.0, 5.5, 9.0}) {
        for (size_t m = 0; m < s.num_tx(); ++m) {
            const Vec3 led = s.led_positions[m];
            const Vec3 mirrored_led{-led.x, led.y, led.z};
            size_t mm = s.num_tx();
            for (size_t k = 0; k < s.num_tx(); ++k) {
                const Vec3& c = s.led_positions[k];
                if (c.x == mirrored_led.x && c.y == mirrored_led.y) mm = k;
            }
            REQUIRE(mm < s.num_tx());
            const double a = los_gain(s, led, {x, 0, 1});
            const double b = los_gain(s, s.led_positions[mm], {-x, 0, 1});
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
        }
    }
}

TEST_CASE("delay_phase wraps path length to [0, 2pi)") {
    const double lambda = 550e-9;
    // Direct path of exactly one wavelength.
    CHECK(std::abs(wrap_pm_pi(delay_phase({0, 0, 0}, std::nullopt, {lambda, 0, 0}, lambda))) <=
          1e-6);
    CHECK(delay_phase({0, 0, 0}, std::nullopt, {lambda / 4, 0, 0}, lambda) ==
          doctest::Approx(kPi / 2));

    // Reflected path uses d1 + d2.
    const Vec3 a{0, 0, 0}, via{3, 0, 0}, b{3, 4, 0};
    const double len = 3.0 + 4.0;
    const double want = 2.0 * kPi * (len / lambda - std::floor(len / lambda));
    CHECK(delay_phase(a, via, b, lambda) == doctest::Approx(want).epsilon(1e-6));
}

TEST_CASE("build_paths puts the LOS path first") {
    Scene s = paper_scene();
    const auto paths = build_paths(s, 0, {1, 2, 1});
    REQUIRE(!paths.empty());
    CHECK(paths[0].path_index == 0);
    CHECK(paths[0].gain == los_gain(s, s.led_positions[0], {1, 2, 1}));
    for (size_t i = 1; i < paths.size(); ++i) CHECK(paths[i].path_index == static_cast<int>(i));
}

TEST_CASE("scene validation rejects bad fields") {
    Scene s = paper_scene();
    s.fov = 2.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = paper_scene();
    s.led_positions.push_back({50, 0, 4});
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = paper_scene();
    s.pd_area = 0.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}
