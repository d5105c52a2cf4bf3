#pragma once

// Model fitting and design-space exploration: quadratic power coefficients
// (P = k I^2), least-squares recovery of the lab conductor length, parameter
// sweeps over the coil/frequency/distance grid, and constrained placement
// optimization.

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mfeh/common.hpp"
#include "mfeh/harvester.hpp"
#include "mfeh/magnetics.hpp"

namespace mfeh {

/// One row of a coefficient table: P_l = k * I^2.
struct CoefficientRow {
    std::string coil_label;
    double frequency;    ///< [Hz]
    double distance;     ///< [m]
    double k_uw_per_a2;  ///< [uW/A^2], > 0
};

using CoefficientTable = std::vector<CoefficientRow>;

/// Matched-load power at I = 1 A for the lab-loop geometry, in uW. Since the
/// power model is purely quadratic in I, this is the full model curve.
inline double predict_coefficient(const CoilSpec& coil, const LabLoopGeometry& loop,
                                  double frequency) {
    const SourceCurrent unit(1.0, frequency);
    return matched_load_power(coil, field_lab_loop(unit, loop), frequency) * 1.0e6;
}

/// Same, for the infinite two-rail site geometry.
inline double predict_coefficient_two_rail(const CoilSpec& coil, const RailSiteGeometry& geom,
                                           double frequency) {
    const SourceCurrent unit(1.0, frequency);
    return matched_load_power(coil, field_two_rail(unit, geom), frequency) * 1.0e6;
}

namespace detail {

/// Golden-section minimization of a unimodal scalar function on [lo, hi].
inline double golden_section_min(const std::function<double(double)>& f, double lo,
                                 double hi, double tol) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace detail

struct FitResult {
    double a;                ///< fitted conductor length [m]
    double rms_log_residual; ///< sqrt(mean((log k_model - log k_obs)^2))
};

using CoilResolver = std::function<CoilSpec(const std::string&)>;

inline CoilSpec resolve_preset_coil(const std::string& label) {
    if (auto coil = coil_preset(label)) return *coil;
    throw validation_error("unknown coil preset '" + label + "'");
}

/// Recover the lab conductor length a from observed power coefficients by
/// minimizing the sum of squared log residuals over the table. Log space
/// keeps the distances comparable despite the power spread. Bracketing grid
/// scan followed by golden-section refinement.
inline FitResult fit_loop_length(const CoefficientTable& observed, double b,
                                 double a_min, double a_max,
                                 const CoilResolver& resolve = resolve_preset_coil) {
    if (observed.size() < 2)
        throw validation_error("fit_loop_length: need at least 2 observations");
    if (a_min <= 0.0 || a_max <= a_min)
        throw validation_error("fit_loop_length: bounds must satisfy 0 < a_min < a_max");
    if (b <= 0.0)
        throw validation_error("fit_loop_length: b must be > 0");
    std::set<double> distances;
    for (const auto& row : observed) {
        if (row.k_uw_per_a2 <= 0.0)
            throw validation_error("fit_loop_length: coefficients must be > 0");
        distances.insert(row.distance);
    }
    if (distances.size() < 2)
        throw validation_error("fit_loop_length: observations must span at least 2 distances");

    const auto objective = [&](double a) {
        double sum = 0.0;
        for (const auto& row : observed) {
            const CoilSpec coil = resolve(row.coil_label);
            const double k = predict_coefficient(coil, LabLoopGeometry(row.distance, a, b),
                                                 row.frequency);
            const double d = std::log(k) - std::log(row.k_uw_per_a2);
            sum += d * d;
        }
        return sum;
    };

    constexpr int grid_n = 512;
    double best_x = a_min, best_f = objective(a_min);
    for (int i = 1; i <= grid_n; ++i) {
        const double x = a_min + (a_max - a_min) * double(i) / grid_n;
        const double fx = objective(x);
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    const double step = (a_max - a_min) / grid_n;
    const double lo = std::max(a_min, best_x - step);
    const double hi = std::min(a_max, best_x + step);
    const double a_fit = detail::golden_section_min(objective, lo, hi, 1.0e-7);
    return FitResult{a_fit, std::sqrt(objective(a_fit) / double(observed.size()))};
}

/// Which field model a sweep or placement search evaluates.
enum class SweepGeometry { lab_loop, two_rail };

struct SweepSpec {
    std::vector<std::string> coil_labels;
    std::vector<double> frequencies; ///< [Hz]
    std::vector<double> distances;   ///< [m]
    std::vector<double> currents;    ///< [A]; empty => coefficient table
    SweepGeometry geometry = SweepGeometry::lab_loop;
    double loop_a = 1.2;        ///< lab-loop conductor length [m]
    double loop_b = 3.0;        ///< lab-loop near/far separation [m]
    double d_rr = 1.435;        ///< two-rail separation [m]
    double current_split = 0.5; ///< two-rail near-rail fraction
};

struct SweepRow {
    std::string coil_label;
    double frequency;
    double distance;
    double i_a;   ///< 0 for coefficient tables
    double value; ///< k [uW/A^2] or power [W]
};

/// Evaluate the full Cartesian grid. Rows come out in lexicographic order
/// (coil, frequency, distance, current); the output is a pure function of
/// the inputs.
inline std::vector<SweepRow> sweep(const SweepSpec& spec,
                                   const CoilResolver& resolve = resolve_preset_coil) {
    if (spec.coil_labels.empty() || spec.frequencies.empty() || spec.distances.empty())
        throw validation_error("sweep: coil, frequency and distance ranges must be non-empty");

    auto coils = spec.coil_labels;
    auto freqs = spec.frequencies;
    auto dists = spec.distances;
    auto currents = spec.currents;
    std::sort(coils.begin(), coils.end());
    std::sort(freqs.begin(), freqs.end());
    std::sort(dists.begin(), dists.end());
    std::sort(currents.begin(), currents.end());

    const auto coefficient = [&](const CoilSpec& coil, double f, double r) {
        if (spec.geometry == SweepGeometry::lab_loop)
            return predict_coefficient(coil, LabLoopGeometry(r, spec.loop_a, spec.loop_b), f);
        return predict_coefficient_two_rail(
            coil, RailSiteGeometry(r, spec.d_rr, spec.current_split), f);
    };

    std::vector<SweepRow> rows;
    for (const auto& label : coils) {
        const CoilSpec coil = resolve(label);
        for (double f : freqs) {
            for (double r : dists) {
                const double k = coefficient(coil, f, r);
                if (currents.empty()) {
                    rows.push_back({label, f, r, 0.0, k});
                } else {
                    for (double i : currents)
                        rows.push_back({label, f, r, i, k * 1.0e-6 * i * i});
                }
            }
        }
    }
    return rows;
}

struct OptimizeSpec {
    std::vector<std::string> coil_labels;
    double frequency = 50.0 / 3.0;
    double distance_lo = 0.25; ///< search range [m]
    double distance_hi = 1.0;
    double min_distance = 0.0; ///< placement constraint [m]
    SweepGeometry geometry = SweepGeometry::two_rail;
    double loop_a = 1.2;
    double loop_b = 3.0;
    double d_rr = 1.435;
    double current_split = 0.5;
};

struct PlacementResult {
    std::string coil_label;
    double distance;     ///< [m]
    double k_uw_per_a2;  ///< objective value at the optimum
};

/// Best coil and distance over the feasible box: dense grid per coil
/// followed by golden-section refinement around the winning grid point.
/// Power is strictly decreasing in distance, so with a minimum-distance
/// constraint the optimum sits on the boundary.
inline PlacementResult optimize_placement(const OptimizeSpec& spec,
                                          const CoilResolver& resolve = resolve_preset_coil) {
    if (spec.coil_labels.empty())
        throw validation_error("optimize_placement: no coil candidates");
    const double lo = std::max(spec.distance_lo, spec.min_distance);
    const double hi = spec.distance_hi;
    if (lo > hi || lo <= 0.0)
        throw validation_error("optimize_placement: empty feasible distance set");

    const auto objective = [&](const CoilSpec& coil, double r) {
        if (spec.geometry == SweepGeometry::lab_loop)
            return predict_coefficient(coil, LabLoopGeometry(r, spec.loop_a, spec.loop_b),
                                       spec.frequency);
        return predict_coefficient_two_rail(
            coil, RailSiteGeometry(r, spec.d_rr, spec.current_split), spec.frequency);
    };

    auto labels = spec.coil_labels;
    std::sort(labels.begin(), labels.end());

    PlacementResult best{"", 0.0, -1.0};
    constexpr int grid_n = 512;
    for (const auto& label : labels) {
        const CoilSpec coil = resolve(label);
        double best_r = lo, best_k = objective(coil, lo);
        if (hi > lo) {
            for (int i = 1; i <= grid_n; ++i) {
                const double r = lo + (hi - lo) * double(i) / grid_n;
                const double k = objective(coil, r);
                if (k > best_k) {
                    best_k = k;
                    best_r = r;
                }
            }
            const double step = (hi - lo) / grid_n;
            const double r_lo = std::max(lo, best_r - step);
            const double r_hi = std::min(hi, best_r + step);
            best_r = detail::golden_section_min(
                [&](double r) { return -objective(coil, r); }, r_lo, r_hi, 1.0e-9);
            best_k = objective(coil, best_r);
            // monotone objectives pin the optimum to the range boundary
            for (double endpoint : {lo, hi}) {
                const double k = objective(coil, endpoint);
                if (k >= best_k) {
                    best_k = k;
                    best_r = endpoint;
                }
            }
        }
        if (best_k > best.k_uw_per_a2) best = {label, best_r, best_k};
    }
    return best;
}

} // namespace mfeh
