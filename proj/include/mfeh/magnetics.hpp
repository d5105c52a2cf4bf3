#pragma once

// Ambient magnetic field models for rail-current geometries: the infinite
// two-rail plane used at a real site, a finite straight segment, and the
// rectangular laboratory loop built from two such segments.

#include <cmath>
#include <stdexcept>

#include "mfeh/common.hpp"

namespace mfeh {

/// RMS rail return current and its electrification frequency.
struct SourceCurrent {
    double i_rms;     ///< total return current [A RMS]
    double frequency; ///< [Hz]

    SourceCurrent(double i_rms_, double frequency_)
        : i_rms(i_rms_), frequency(frequency_) {
        if (i_rms < 0.0)
            throw std::domain_error("SourceCurrent: i_rms must be >= 0");
        if (frequency <= 0.0)
            throw std::domain_error("SourceCurrent: frequency must be > 0");
    }

    double omega() const { return 2.0 * pi * frequency; }
};

/// Trackside site geometry. r_n is measured outward from the near rail, so
/// the inter-rail region is not representable; the two-rail model is only
/// derived for the additive exterior region.
struct RailSiteGeometry {
    double r_n;           ///< distance from near rail centre to coil axis [m]
    double d_rr;          ///< rail-to-rail separation [m]
    double current_split; ///< fraction of return current in the near rail

    RailSiteGeometry(double r_n_, double d_rr_, double current_split_ = 0.5)
        : r_n(r_n_), d_rr(d_rr_), current_split(current_split_) {
        if (r_n <= 0.0)
            throw std::domain_error("RailSiteGeometry: r_n must be > 0");
        if (d_rr < 0.0)
            throw std::domain_error("RailSiteGeometry: d_rr must be >= 0");
        if (current_split < 0.0 || current_split > 1.0)
            throw std::domain_error("RailSiteGeometry: current_split must be in [0,1]");
    }
};

/// Laboratory loop: a conductor of length `a` at distance `r`, returning
/// through a far side `b` further away. Side segments are assumed to cancel.
struct LabLoopGeometry {
    double r; ///< coil distance from the near conductor [m]
    double a; ///< conductor length [m]
    double b; ///< near-to-far-side separation [m]

    LabLoopGeometry(double r_, double a_, double b_) : r(r_), a(a_), b(b_) {
        if (r <= 0.0)
            throw std::domain_error("LabLoopGeometry: r must be > 0");
        if (a <= 0.0)
            throw std::domain_error("LabLoopGeometry: a must be > 0");
        if (b <= 0.0)
            throw std::domain_error("LabLoopGeometry: b must be > 0");
    }
};

/// Vertical ambient field at the harvester, RMS. b_rms is the free-air flux
/// density, tied to h_rms by b = mu0 * h exactly.
struct FieldStrength {
    double h_rms; ///< [A/m RMS]
    double b_rms; ///< [T RMS], free air

    static FieldStrength from_h(double h_rms) {
        if (h_rms < 0.0)
            throw std::domain_error("FieldStrength: h_rms must be >= 0");
        return FieldStrength{h_rms, mu0 * h_rms};
    }
};

/// Single-conductor-equivalent radius combining both rails' contributions.
/// Lies in [r_n, 2*r_n); equals r_n for coincident rails.
inline double effective_radius(double r_n, double d_rr) {
    if (r_n <= 0.0)
        throw std::domain_error("effective_radius: r_n must be > 0");
    if (d_rr < 0.0)
        throw std::domain_error("effective_radius: d_rr must be >= 0");
    return 2.0 * r_n * (r_n + d_rr) / (2.0 * r_n + d_rr);
}

/// Field of two infinite parallel rails on the exterior plane. For an even
/// split this reduces to i_rms / (2 pi r_e); for a general split the two
/// single-wire terms are superposed with weights split and 1-split.
inline FieldStrength field_two_rail(const SourceCurrent& src, const RailSiteGeometry& geom) {
    const double near_term = geom.current_split / (2.0 * pi * geom.r_n);
    const double far_term = (1.0 - geom.current_split) / (2.0 * pi * (geom.r_n + geom.d_rr));
    return FieldStrength::from_h(src.i_rms * (near_term + far_term));
}

/// Field of a finite straight segment of length a at perpendicular distance r
/// from its midpoint: the infinite-wire term times a / sqrt(4 r^2 + a^2).
inline FieldStrength field_finite_segment(const SourceCurrent& src, double r, double a) {
    if (r <= 0.0)
        throw std::domain_error("field_finite_segment: r must be > 0");
    if (a <= 0.0)
        throw std::domain_error("field_finite_segment: a must be > 0");
    const double h = src.i_rms / (2.0 * pi * r) * a / std::sqrt(4.0 * r * r + a * a);
    return FieldStrength::from_h(h);
}

/// Field of the rectangular lab loop: near-side segment minus the far-side
/// segment at r + b (reversed polarity). Positive for any b > 0.
inline FieldStrength field_lab_loop(const SourceCurrent& src, const LabLoopGeometry& loop) {
    const double near = field_finite_segment(src, loop.r, loop.a).h_rms;
    const double far = field_finite_segment(src, loop.r + loop.b, loop.a).h_rms;
    return FieldStrength::from_h(near - far);
}

} // namespace mfeh
