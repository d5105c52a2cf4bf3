#include <cmath>
#include <random>
#include <sstream>

#include <doctest.h>

#include "mfeh/lab_data.hpp"
#include "mfeh/optimize.hpp"
#include "mfeh/report.hpp"

using namespace mfeh;

namespace {
const double f0 = 50.0 / 3.0;

CoefficientTable published_table() {
    CoefficientTable table;
    for (const auto& row : lab::model_coefficients())
        table.push_back({row.coil, row.f_hz, row.r_m, row.k_uw_per_a2});
    return table;
}
} // namespace

TEST_CASE("predicted coefficients match the published model curves") {
    const LabLoopGeometry loop(0.25, 1.2, 3.0);
    CHECK(predict_coefficient(coil_a(), loop, f0) == doctest::Approx(0.10339).epsilon(0.01));
    CHECK(predict_coefficient(coil_b(), loop, f0) == doctest::Approx(0.066376).epsilon(0.01));
    // f^2 scaling: 50 Hz is exactly 9x
    CHECK(predict_coefficient(coil_a(), loop, 50.0) ==
          doctest::Approx(9.0 * predict_coefficient(coil_a(), loop, f0)).epsilon(1e-12));
}

TEST_CASE("coefficient is a pure quadratic extraction") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> i_dist(0.1, 500.0), r_dist(0.1, 2.0);
    for (int n = 0; n < 200; ++n) {
        const double i = i_dist(rng);
        const LabLoopGeometry loop(r_dist(rng), 1.2, 3.0);
        const double k = predict_coefficient(coil_a(), loop, f0);
        const double p = matched_load_power(coil_a(), field_lab_loop(SourceCurrent(i, f0), loop), f0);
        CHECK(k == doctest::Approx(p * 1e6 / (i * i)).epsilon(1e-12));
    }
}

TEST_CASE("fit recovers the lab conductor length from the published table") {
    const auto result = fit_loop_length(published_table(), 3.0, 0.1, 10.0);
    CHECK(result.a == doctest::Approx(1.2).epsilon(0.1 / 1.2));
    CHECK(result.rms_log_residual < 0.01);
}

TEST_CASE("fit residual beats an exhaustive 1 mm grid scan") {
    const auto observed = published_table();
    const auto objective = [&](double a) {
        double sum = 0.0;
        for (const auto& row : observed) {
            const double k = predict_coefficient(resolve_preset_coil(row.coil_label),
                                                 LabLoopGeometry(row.distance, a, 3.0),
                                                 row.frequency);
            const double d = std::log(k) - std::log(row.k_uw_per_a2);
            sum += d * d;
        }
        return sum;
    };
    double best_a = 0.1, best_f = objective(0.1);
    for (int i = 1; i <= 9900; ++i) {
        const double a = 0.1 + 1e-3 * i;
        const double f = objective(a);
        if (f < best_f) {
            best_f = f;
            best_a = a;
        }
    }
    const auto result = fit_loop_length(observed, 3.0, 0.1, 10.0);
    CHECK(std::fabs(result.a - best_a) <= 1e-3);
    CHECK(objective(result.a) <= best_f + 1e-15);
}

TEST_CASE("fit recovers a synthetic generator length") {
    CoefficientTable synthetic;
    for (const double r : {0.25, 0.5, 0.75, 1.0})
        for (const char* coil : {"coil-a", "coil-b"})
            synthetic.push_back({coil, f0, r,
                                 predict_coefficient(resolve_preset_coil(coil),
                                                     LabLoopGeometry(r, 2.0, 3.0), f0)});
    const auto result = fit_loop_length(synthetic, 3.0, 0.1, 10.0);
    CHECK(result.a == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(result.rms_log_residual < 1e-6);
}

TEST_CASE("fit rejects degenerate tables") {
    CoefficientTable single{{"coil-a", f0, 0.25, 0.1}};
    CHECK_THROWS_AS(fit_loop_length(single, 3.0, 0.1, 10.0), validation_error);
    CoefficientTable one_distance{{"coil-a", f0, 0.25, 0.1}, {"coil-b", f0, 0.25, 0.07}};
    CHECK_THROWS_AS(fit_loop_length(one_distance, 3.0, 0.1, 10.0), validation_error);
    CoefficientTable ok{{"coil-a", f0, 0.25, 0.1}, {"coil-a", f0, 0.5, 0.017}};
    CHECK_THROWS_AS(fit_loop_length(ok, 3.0, -1.0, 10.0), validation_error);
    CHECK_THROWS_AS(fit_loop_length(ok, 0.0, 0.1, 10.0), validation_error);
}

TEST_CASE("sweep reproduces the full published grid within 1%") {
    SweepSpec spec;
    spec.coil_labels = {"coil-a", "coil-b"};
    spec.frequencies = {f0, 50.0};
    spec.distances = {0.25, 0.5, 0.75, 1.0};
    spec.geometry = SweepGeometry::lab_loop;
    spec.loop_a = 1.2;
    spec.loop_b = 3.0;
    const auto rows = sweep(spec);
    REQUIRE(rows.size() == 16);
    for (const auto& row : rows) {
        bool matched = false;
        for (const auto& ref : lab::model_coefficients()) {
            if (ref.coil == row.coil_label && ref.f_hz == row.frequency &&
                ref.r_m == row.distance) {
                CHECK(row.value == doctest::Approx(ref.k_uw_per_a2).epsilon(0.01));
                matched = true;
            }
        }
        CHECK(matched);
    }
}

TEST_CASE("single-point sweep equals predict_coefficient") {
    SweepSpec spec;
    spec.coil_labels = {"coil-a"};
    spec.frequencies = {f0};
    spec.distances = {0.25};
    const auto rows = sweep(spec);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].value ==
          doctest::Approx(predict_coefficient(coil_a(), LabLoopGeometry(0.25, 1.2, 3.0), f0))
              .epsilon(1e-14));
}

TEST_CASE("two-rail power sweep matches the chained voltage example") {
    SweepSpec spec;
    spec.coil_labels = {"coil-a"};
    spec.frequencies = {f0};
    spec.distances = {0.5};
    spec.currents = {100.0};
    spec.geometry = SweepGeometry::two_rail;
    spec.d_rr = 1.435;
    const auto rows = sweep(spec);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].value == doctest::Approx(124.2e-6).epsilon(0.001));
}

TEST_CASE("sweep output is deterministic and lexicographically ordered") {
    SweepSpec spec;
    spec.coil_labels = {"coil-b", "coil-a"};
    spec.frequencies = {50.0, f0};
    spec.distances = {1.0, 0.25, 0.5};
    const auto rows = sweep(spec);
    std::ostringstream a, b;
    write_sweep_csv(a, rows, false);
    write_sweep_csv(b, sweep(spec), false);
    CHECK(a.str() == b.str());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto key = [](const SweepRow& r) {
            return std::make_tuple(r.coil_label, r.frequency, r.distance, r.i_a);
        };
        CHECK(key(rows[i - 1]) < key(rows[i]));
    }
}

TEST_CASE("sweep rejects empty ranges") {
    SweepSpec spec;
    spec.coil_labels = {};
    spec.frequencies = {f0};
    spec.distances = {0.25};
    CHECK_THROWS_AS(sweep(spec), validation_error);
}

TEST_CASE("coil ranking by k matches (N A mu_e)^2 / R") {
    const auto score = [](const CoilSpec& c) {
        const double nam = double(c.turns) * c.area * c.mu_e;
        return nam * nam / c.resistance;
    };
    const LabLoopGeometry loop(0.5, 1.2, 3.0);
    const bool k_order = predict_coefficient(coil_a(), loop, f0) > predict_coefficient(coil_b(), loop, f0);
    const bool s_order = score(coil_a()) > score(coil_b());
    CHECK(k_order == s_order);
}

TEST_CASE("placement optimum sits on the minimum-distance constraint") {
    OptimizeSpec spec;
    spec.coil_labels = {"coil-a"};
    spec.frequency = f0;
    spec.distance_lo = 0.25;
    spec.distance_hi = 1.0;
    spec.min_distance = 0.5;
    spec.geometry = SweepGeometry::two_rail;
    const auto result = optimize_placement(spec);
    CHECK(result.distance == 0.5);
    CHECK(result.coil_label == "coil-a");
}

TEST_CASE("placement picks the stronger coil") {
    OptimizeSpec spec;
    spec.coil_labels = {"coil-a", "coil-b"};
    spec.frequency = f0;
    spec.distance_lo = 0.5;
    spec.distance_hi = 0.5;
    const auto result = optimize_placement(spec);
    CHECK(result.coil_label == "coil-a");
    CHECK(result.distance == 0.5);
}

TEST_CASE("placement rejects infeasible constraint sets") {
    OptimizeSpec spec;
    spec.coil_labels = {"coil-a"};
    spec.distance_lo = 0.25;
    spec.distance_hi = 0.4;
    spec.min_distance = 0.5;
    CHECK_THROWS_AS(optimize_placement(spec), validation_error);
    spec.min_distance = 0.0;
    spec.coil_labels = {};
    CHECK_THROWS_AS(optimize_placement(spec), validation_error);
}

TEST_CASE("no grid point beats the refined placement") {
    OptimizeSpec spec;
    spec.coil_labels = {"coil-a"};
    spec.frequency = f0;
    spec.distance_lo = 0.3;
    spec.distance_hi = 1.5;
    spec.geometry = SweepGeometry::two_rail;
    const auto result = optimize_placement(spec);
    for (int i = 0; i <= 1000; ++i) {
        const double r = 0.3 + (1.5 - 0.3) * i / 1000.0;
        const double k = predict_coefficient_two_rail(coil_a(), RailSiteGeometry(r, 1.435), f0);
        CHECK(k <= result.k_uw_per_a2 + 1e-15);
    }
}
