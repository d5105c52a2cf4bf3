#include <cmath>
#include <random>

#include <doctest.h>

#include "mfeh/magnetics.hpp"

using namespace mfeh;

namespace {
const double f0 = 50.0 / 3.0;
}

TEST_CASE("effective radius") {
    CHECK(effective_radius(0.5, 1.435) == doctest::Approx(0.7946611909650924).epsilon(1e-12));
    // coincident rails reduce to one conductor
    CHECK(effective_radius(0.7, 0.0) == doctest::Approx(0.7).epsilon(1e-12));
    // d_rr -> infinity limit is 2 r_n
    CHECK(effective_radius(0.5, 1e12) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(effective_radius(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(effective_radius(-0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(effective_radius(0.5, -1.0), std::domain_error);
}

TEST_CASE("effective radius stays in [r_n, 2 r_n)") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> rn_dist(0.01, 10.0), drr_dist(0.0, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const double rn = rn_dist(rng), drr = drr_dist(rng);
        const double re = effective_radius(rn, drr);
        CHECK(re >= rn);
        CHECK(re < 2.0 * rn);
    }
}

TEST_CASE("two-rail field matches the free-air flux density figure") {
    const SourceCurrent src(100.0, f0);
    const RailSiteGeometry geom(0.5, 1.435);
    const auto field = field_two_rail(src, geom);
    CHECK(field.b_rms == doctest::Approx(25.2e-6).epsilon(0.005));
    CHECK(field.b_rms == doctest::Approx(mu0 * field.h_rms).epsilon(1e-15));
}

TEST_CASE("two-rail field is zero at zero current and linear in current") {
    const RailSiteGeometry geom(0.5, 1.435);
    CHECK(field_two_rail(SourceCurrent(0.0, f0), geom).h_rms == 0.0);
    const double h100 = field_two_rail(SourceCurrent(100.0, f0), geom).h_rms;
    const double h200 = field_two_rail(SourceCurrent(200.0, f0), geom).h_rms;
    CHECK(h200 == doctest::Approx(2.0 * h100).epsilon(1e-14));
}

TEST_CASE("two-rail superposition identity against the two-wire sum") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> rn_dist(0.05, 5.0), drr_dist(0.0, 10.0),
        i_dist(0.0, 500.0);
    for (int k = 0; k < 500; ++k) {
        const double rn = rn_dist(rng), drr = drr_dist(rng), i = i_dist(rng);
        const auto field = field_two_rail(SourceCurrent(i, f0), RailSiteGeometry(rn, drr));
        // independent route: two single-conductor infinite-wire terms
        const double oracle = i / 2.0 / (2.0 * pi * rn) + i / 2.0 / (2.0 * pi * (rn + drr));
        CHECK(field.h_rms == doctest::Approx(oracle).epsilon(1e-12));
    }
}

TEST_CASE("equal-split contributions cancel midway between the rails") {
    // between the rails the two terms are antiparallel; at the midpoint the
    // equal-split fields have equal magnitude, so the net field is zero
    const double d_rr = 1.435, i = 120.0;
    const double mid = d_rr / 2.0;
    const double near_mag = 0.5 * i / (2.0 * pi * mid);
    const double far_mag = 0.5 * i / (2.0 * pi * (d_rr - mid));
    CHECK(near_mag - far_mag == 0.0);
}

TEST_CASE("general current split superposes the two wire terms") {
    const RailSiteGeometry geom(0.5, 1.435, 0.7);
    const auto field = field_two_rail(SourceCurrent(100.0, f0), geom);
    const double oracle = 100.0 * (0.7 / (2.0 * pi * 0.5) + 0.3 / (2.0 * pi * 1.935));
    CHECK(field.h_rms == doctest::Approx(oracle).epsilon(1e-14));
    CHECK_THROWS_AS(RailSiteGeometry(0.5, 1.435, 1.5), std::domain_error);
}

TEST_CASE("finite segment field") {
    CHECK(field_finite_segment(SourceCurrent(100.0, f0), 1.0, 1.2).h_rms ==
          doctest::Approx(8.188454267608968).epsilon(1e-12));
    // a -> infinity recovers the infinite-wire term
    CHECK(field_finite_segment(SourceCurrent(100.0, f0), 0.5, 1e6).h_rms ==
          doctest::Approx(100.0 / (2.0 * pi * 0.5)).epsilon(1e-6));
    // a = 2r makes the correction factor exactly 1/sqrt(2)
    const double r = 0.37;
    const double h = field_finite_segment(SourceCurrent(1.0, f0), r, 2.0 * r).h_rms;
    CHECK(h == doctest::Approx(1.0 / (2.0 * pi * r) / std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(field_finite_segment(SourceCurrent(1.0, f0), 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(field_finite_segment(SourceCurrent(1.0, f0), 1.0, -1.0), std::domain_error);
}

TEST_CASE("finite segment approaches the infinite wire with bounded error") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> r_dist(0.05, 2.0);
    for (int k = 0; k < 200; ++k) {
        const double r = r_dist(rng);
        for (const double a : {50.0, 200.0, 1000.0}) {
            const double h = field_finite_segment(SourceCurrent(1.0, f0), r, a).h_rms;
            const double h_inf = 1.0 / (2.0 * pi * r);
            const double bound = (2.0 * r / a) * (2.0 * r / a);
            CHECK(std::fabs(h / h_inf - 1.0) <= bound);
        }
    }
}

TEST_CASE("lab loop field") {
    CHECK(field_lab_loop(SourceCurrent(1.0, f0), LabLoopGeometry(0.25, 1.2, 3.0)).h_rms ==
          doctest::Approx(0.5787585041050557).epsilon(1e-12));
    CHECK(field_lab_loop(SourceCurrent(1.0, f0), LabLoopGeometry(0.5, 1.2, 3.0)).h_rms ==
          doctest::Approx(0.23684916339301929).epsilon(1e-12));
    // b -> infinity: the far side vanishes
    const double h_loop = field_lab_loop(SourceCurrent(1.0, f0), LabLoopGeometry(0.25, 1.2, 1e9)).h_rms;
    const double h_seg = field_finite_segment(SourceCurrent(1.0, f0), 0.25, 1.2).h_rms;
    CHECK(h_loop == doctest::Approx(h_seg).epsilon(1e-9));
}

TEST_CASE("lab loop is always below the single segment") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> r_dist(0.05, 2.0), a_dist(0.1, 10.0), b_dist(0.01, 50.0);
    for (int k = 0; k < 500; ++k) {
        const double r = r_dist(rng), a = a_dist(rng), b = b_dist(rng);
        const double h_loop = field_lab_loop(SourceCurrent(1.0, f0), LabLoopGeometry(r, a, b)).h_rms;
        const double h_seg = field_finite_segment(SourceCurrent(1.0, f0), r, a).h_rms;
        CHECK(h_loop < h_seg);
        CHECK(h_loop >= 0.0);
    }
}

TEST_CASE("field strength decreases monotonically with distance") {
    double prev_rail = 1e300, prev_seg = 1e300, prev_loop = 1e300;
    for (double r = 0.1; r <= 3.0; r += 0.1) {
        const double h_rail = field_two_rail(SourceCurrent(100.0, f0), RailSiteGeometry(r, 1.435)).h_rms;
        const double h_seg = field_finite_segment(SourceCurrent(100.0, f0), r, 1.2).h_rms;
        const double h_loop = field_lab_loop(SourceCurrent(100.0, f0), LabLoopGeometry(r, 1.2, 3.0)).h_rms;
        CHECK(h_rail < prev_rail);
        CHECK(h_seg < prev_seg);
        CHECK(h_loop < prev_loop);
        prev_rail = h_rail;
        prev_seg = h_seg;
        prev_loop = h_loop;
    }
}

TEST_CASE("all field operations scale exactly linearly in current") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> i_dist(0.1, 400.0), s_dist(0.1, 8.0);
    for (int k = 0; k < 200; ++k) {
        const double i = i_dist(rng), s = s_dist(rng);
        const RailSiteGeometry geom(0.4, 1.435);
        const LabLoopGeometry loop(0.3, 1.2, 3.0);
        CHECK(field_two_rail(SourceCurrent(s * i, f0), geom).h_rms ==
              doctest::Approx(s * field_two_rail(SourceCurrent(i, f0), geom).h_rms).epsilon(1e-14));
        CHECK(field_lab_loop(SourceCurrent(s * i, f0), loop).h_rms ==
              doctest::Approx(s * field_lab_loop(SourceCurrent(i, f0), loop).h_rms).epsilon(1e-14));
    }
}

TEST_CASE("type invariants reject bad inputs") {
    CHECK_THROWS_AS(SourceCurrent(-1.0, f0), std::domain_error);
    CHECK_THROWS_AS(SourceCurrent(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(RailSiteGeometry(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(LabLoopGeometry(0.25, 0.0, 3.0), std::domain_error);
    CHECK_THROWS_AS(LabLoopGeometry(0.25, 1.2, 0.0), std::domain_error);
}
