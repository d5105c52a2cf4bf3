#pragma once

// Timetable-driven energy budgets: piecewise-constant train-pass current
// episodes converted to harvested energy at a site, extrapolated over a
// period and compared against a sensor node's daily requirement.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mfeh/common.hpp"
#include "mfeh/harvester.hpp"
#include "mfeh/magnetics.hpp"

namespace mfeh {

/// One piecewise-constant episode of current draw.
struct CurrentSegment {
    double duration; ///< [s]
    double i_rms;    ///< total rail return current [A RMS]
};

/// A train pass: ordered current segments starting at `start`, with a
/// per-event attenuation factor standing in for ground leakage.
struct TrainPassEvent {
    std::string label;
    double start = 0.0; ///< [s]
    std::vector<CurrentSegment> segments;
    double attenuation = 1.0; ///< applied to rail current at the site, in [0,1]

    double duration() const {
        double d = 0.0;
        for (const auto& s : segments) d += s.duration;
        return d;
    }

    void validate() const {
        if (attenuation < 0.0 || attenuation > 1.0)
            throw validation_error("event '" + label + "': attenuation must be in [0,1]");
        if (segments.empty())
            throw validation_error("event '" + label + "': no segments");
        for (const auto& s : segments) {
            if (s.duration <= 0.0)
                throw validation_error("event '" + label + "': segment duration must be > 0");
            if (s.i_rms < 0.0)
                throw validation_error("event '" + label + "': segment current must be >= 0");
        }
    }
};

struct Timetable {
    std::vector<TrainPassEvent> events; ///< sorted by start
    double period = 86400.0;            ///< [s], defaults to one day

    void validate() const {
        if (period <= 0.0)
            throw validation_error("timetable: period must be > 0");
        double prev_end = 0.0;
        for (std::size_t i = 0; i < events.size(); ++i) {
            const auto& e = events[i];
            e.validate();
            if (i > 0 && e.start < events[i - 1].start)
                throw validation_error("timetable: events not sorted by start");
            if (e.start < prev_end)
                throw validation_error("timetable: event '" + e.label + "' overlaps its predecessor");
            if (e.start < 0.0 || e.start + e.duration() > period)
                throw validation_error("timetable: event '" + e.label + "' does not fit in period");
            prev_end = e.start + e.duration();
        }
    }
};

/// Harvester deployment: track geometry, electrification frequency, coil.
struct SiteConfig {
    RailSiteGeometry geometry;
    double frequency; ///< [Hz]
    CoilSpec coil;
};

/// Sensor node demand, reduced to joules per day.
struct NodeBudget {
    double daily_requirement; ///< [J/day]
};

struct EnergyReport {
    std::vector<std::pair<std::string, double>> per_event; ///< (label, joules)
    double daily_total = 0.0;                              ///< [J] over the period
    double margin = 0.0;                                   ///< harvested / required
};

/// Energy harvested during one pass: matched-load power per segment times
/// segment duration, with the event's attenuation applied to the current.
inline double simulate_pass(const SiteConfig& site, const TrainPassEvent& event) {
    event.validate();
    double energy = 0.0;
    for (const auto& seg : event.segments) {
        const SourceCurrent src(seg.i_rms * event.attenuation, site.frequency);
        const FieldStrength h0 = field_two_rail(src, site.geometry);
        energy += matched_load_power(site.coil, h0, site.frequency) * seg.duration;
    }
    return energy;
}

inline double feasibility_margin(double harvest_joules, const NodeBudget& budget) {
    if (budget.daily_requirement <= 0.0)
        throw std::domain_error("feasibility_margin: budget must be > 0");
    return harvest_joules / budget.daily_requirement;
}

/// Sum per-event energies over the period; margin against the budget.
/// Events are summed in index order for deterministic totals.
inline EnergyReport simulate_period(const SiteConfig& site, const Timetable& timetable,
                                    const NodeBudget& budget) {
    timetable.validate();
    EnergyReport report;
    for (const auto& event : timetable.events) {
        const double e = simulate_pass(site, event);
        report.per_event.emplace_back(event.label, e);
        report.daily_total += e;
    }
    report.margin = budget.daily_requirement > 0.0
                        ? report.daily_total / budget.daily_requirement
                        : 0.0;
    return report;
}

} // namespace mfeh
