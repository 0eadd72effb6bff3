#include <cmath>
#include <sstream>

#include "doctest.h"
#include "gnpvlc/gnp.hpp"
#include "test_util.hpp"

using namespace gnpvlc;

TEST_CASE("plate_matrix reference values") {
    const JonesMatrix ident = plate_matrix({1.0, 1.0, 0.0});
    CHECK(ident.basis == PolBasis::Circular);
    CHECK(std::abs(ident.m(0, 0) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(ident.m(1, 1) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(ident.m(0, 1)) == 0.0);
    CHECK(std::abs(ident.m(1, 0)) == 0.0);

    const JonesMatrix m = plate_matrix({0.9, 0.75, 0.7226});
    CHECK(std::abs(m.m(0, 0)) == doctest::Approx(std::sqrt(0.9)));
    CHECK(std::abs(m.m(1, 1)) == doctest::Approx(std::sqrt(0.75)));
    CHECK(std::arg(m.m(1, 1)) == doctest::Approx(0.7226));
    CHECK(std::abs(m.m(0, 0)) == doctest::Approx(0.948683).epsilon(1e-5));
    CHECK(std::abs(m.m(1, 1)) == doctest::Approx(0.866025).epsilon(1e-5));

    // Diagonal with entry magnitudes <= 1.
    CHECK(std::abs(m.m(0, 0)) <= 1.0);
    CHECK(std::abs(m.m(1, 1)) <= 1.0);
}

TEST_CASE("extract_properties reference values") {
    GnpPathResponse r = extract_properties(1.0, 1.0);
    CHECK(r.a_bar_l == doctest::Approx(1.0));
    CHECK(r.a_bar_r == doctest::Approx(1.0));
    CHECK(r.delta_phi == doctest::Approx(0.0));

    r = extract_properties(0.5, cplx(0.0, 0.5));
    CHECK(r.a_bar_l == doctest::Approx(0.25));
    CHECK(r.a_bar_r == doctest::Approx(0.25));
    CHECK(r.delta_phi == doctest::Approx(kPi / 2));

    CHECK_THROWS_AS((void)extract_properties(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS((void)extract_properties(0.5, 0.0), std::domain_error);
}

TEST_CASE("extraction round trip over random responses") {
    Rng rng(201);
    for (int i = 0; i < 1000; ++i) {
        GnpPathResponse want;
        want.a_bar_l = rng.uniform(0.05, 1.0);
        want.a_bar_r = rng.uniform(0.05, 1.0);
        want.delta_phi = rng.uniform(-kPi + 1e-6, kPi);
        const JonesMatrix n = plate_matrix(want);
        const auto probe = n.m * std::array<cplx, 2>{1.0, 1.0};
        const GnpPathResponse got = extract_properties(probe[0], probe[1]);
        CHECK(testutil::rel_err(got.a_bar_l, want.a_bar_l) < 1e-12);
        CHECK(testutil::rel_err(got.a_bar_r, want.a_bar_r) < 1e-12);
        CHECK(std::abs(wrap_pm_pi(got.delta_phi - want.delta_phi)) < 1e-12);
    }
}

TEST_CASE("sample_path_response stays in range and is seeded") {
    const GnpPropertyRanges bob{{0.10, 0.11}, {0.25, 0.26}, 0.6144, 0.8308};
    Rng rng(202);
    for (int i = 0; i < 1000; ++i) {
        const GnpPathResponse r = sample_path_response(bob, rng);
        CHECK(r.a_bar_l >= 0.89);
        CHECK(r.a_bar_l <= 0.90);
        CHECK(r.a_bar_r >= 0.74);
        CHECK(r.a_bar_r <= 0.75);
        CHECK(r.delta_phi >= 0.6144);
        CHECK(r.delta_phi <= 0.8308);
        // Disjoint ranges keep the plate strictly chiroptical.
        CHECK(r.is_chiroptical());
        CHECK(r.asymmetry() > 2.0);
    }

    const GnpPropertyRanges eve{{0.10, 0.40}, {0.25, 0.75}, 0.6144, 0.8308};
    Rng r1(7), r2(7);
    for (int i = 0; i < 100; ++i) {
        const GnpPathResponse a = sample_path_response(eve, r1);
        const GnpPathResponse b = sample_path_response(eve, r2);
        CHECK(a.a_bar_l == b.a_bar_l);
        CHECK(a.a_bar_r == b.a_bar_r);
        CHECK(a.delta_phi == b.delta_phi);
        CHECK(a.a_bar_l >= 0.60);
        CHECK(a.a_bar_l <= 0.90);
        CHECK(a.a_bar_r >= 0.25);
        CHECK(a.a_bar_r <= 0.75);
    }
}

TEST_CASE("plate_cost reproduces the cent-scale estimate") {
    PlateGeometry g;  // defaults: 1 cm^2 plate, documented gold price
    const double usd = plate_cost(g);
    CHECK(usd * 100.0 == doctest::Approx(1.17).epsilon(0.05));  // cents

    PlateGeometry none = g;
    none.gnps_per_hexagon = 0.0;
    CHECK(plate_cost(none) == 0.0);

    PlateGeometry twice = g;
    twice.plate_area *= 2.0;
    CHECK(plate_cost(twice) == doctest::Approx(2.0 * usd));
}

TEST_CASE("gnp table CSV loader") {
    std::istringstream in(
        "# measured plate responses\n"
        "tx_index,path_index,a_bar_l,a_bar_r,delta_phi\n"
        "0,0,0.9,0.75,0.7\n"
        "0,1,0.88,0.74,0.71\n"
        "1,0,0.91,0.76,0.69\n"
        "1,1,0.89,0.73,0.72\n");
    const auto table = load_gnp_table(in);
    REQUIRE(table.size() == 2);
    REQUIRE(table[0].size() == 2);
    CHECK(table[1][0].a_bar_l == doctest::Approx(0.91));
    CHECK(table[0][1].delta_phi == doctest::Approx(0.71));

    std::istringstream sparse("0,0,0.9,0.75,0.7\n1,1,0.9,0.75,0.7\n");
    CHECK_THROWS(load_gnp_table(sparse));

    std::istringstream bad("0,0,1.5,0.75,0.7\n");
    CHECK_THROWS(load_gnp_table(bad));
}
