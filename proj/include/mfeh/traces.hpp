#pragma once

// Measured-trace analysis: load-voltage time series in, instantaneous power,
// voltage envelope, pass detection, and trapezoidal energy integration out.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mfeh/common.hpp"

namespace mfeh {

using TimeSeries = std::vector<std::pair<double, double>>;

enum class TraceKind { waveform, envelope };

inline std::string to_string(TraceKind kind) {
    return kind == TraceKind::waveform ? "waveform" : "envelope";
}

inline TraceKind trace_kind_from_string(const std::string& s) {
    if (s == "waveform") return TraceKind::waveform;
    if (s == "envelope") return TraceKind::envelope;
    throw validation_error("trace kind must be 'waveform' or 'envelope', got '" + s + "'");
}

/// Timestamped load-voltage samples plus the load they were measured across.
/// `kind` records whether samples are the raw waveform or a pre-enveloped
/// amplitude; with amplitudes, power_trace yields peak instantaneous power.
struct Trace {
    TimeSeries samples; ///< (t [s], v_load [V]), t strictly increasing
    double r_load;      ///< [ohm]
    std::string coil_label;
    std::string site_label;
    TraceKind kind = TraceKind::waveform;

    void validate() const {
        if (r_load <= 0.0)
            throw validation_error("trace: r_load must be > 0");
        for (std::size_t i = 1; i < samples.size(); ++i)
            if (samples[i].first <= samples[i - 1].first)
                throw validation_error("trace: timestamps must be strictly increasing");
    }
};

struct PassInterval {
    double t_start;
    double t_end;
    double peak_power; ///< [W]
    double energy;     ///< [J], trapezoidal over the interval
};

struct PassDetection {
    std::vector<PassInterval> intervals; ///< ordered, non-overlapping
};

/// Pointwise instantaneous dissipated power p = v^2 / r_load.
inline TimeSeries power_trace(const Trace& trace) {
    trace.validate();
    TimeSeries power;
    power.reserve(trace.samples.size());
    for (const auto& [t, v] : trace.samples)
        power.emplace_back(t, v * v / trace.r_load);
    return power;
}

/// Sliding-window maximum of |v|, window centred on each sample. Output
/// length equals input length; edge windows are truncated.
inline TimeSeries envelope(const Trace& trace, double window = 1.0) {
    trace.validate();
    const auto& s = trace.samples;
    if (window <= 0.0)
        throw validation_error("envelope: window must be > 0");
    if (s.size() >= 3) {
        const double mean_dt = (s.back().first - s.front().first) / double(s.size() - 1);
        if (window < 2.0 * mean_dt)
            throw validation_error("envelope: window must span at least 2 sample spacings");
    }
    TimeSeries out;
    out.reserve(s.size());
    const double half = window / 2.0;
    std::size_t lo = 0, hi = 0; // [lo, hi) window bounds
    std::deque<std::size_t> maxq; // indices of decreasing |v|
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double t = s[i].first;
        while (hi < s.size() && s[hi].first <= t + half) {
            while (!maxq.empty() && std::fabs(s[maxq.back()].second) <= std::fabs(s[hi].second))
                maxq.pop_back();
            maxq.push_back(hi);
            ++hi;
        }
        while (lo < s.size() && s[lo].first < t - half) {
            if (!maxq.empty() && maxq.front() == lo) maxq.pop_front();
            ++lo;
        }
        out.emplace_back(t, std::fabs(s[maxq.front()].second));
    }
    return out;
}

namespace detail {

/// Linear interpolation of a series at time t; t must lie within the span.
inline double interp(const TimeSeries& series, double t) {
    auto it = std::lower_bound(series.begin(), series.end(), t,
                               [](const auto& p, double x) { return p.first < x; });
    if (it == series.begin()) return it->second;
    if (it == series.end()) return series.back().second;
    const auto& [t1, y1] = *it;
    const auto& [t0, y0] = *(it - 1);
    return y0 + (y1 - y0) * (t - t0) / (t1 - t0);
}

} // namespace detail

/// Trapezoidal integral of a power series over [t0, t1]. Partial end
/// intervals are handled by linear interpolation, so the result is additive
/// over adjacent subintervals.
inline double integrate_energy(const TimeSeries& power, double t0, double t1) {
    if (power.size() < 2)
        throw validation_error("integrate_energy: need at least 2 samples");
    if (t0 >= t1)
        throw validation_error("integrate_energy: t0 must be < t1");
    if (t0 < power.front().first || t1 > power.back().first)
        throw validation_error("integrate_energy: bounds outside trace span");

    double energy = 0.0;
    double t_prev = t0;
    double p_prev = detail::interp(power, t0);
    auto it = std::upper_bound(power.begin(), power.end(), t0,
                               [](double x, const auto& p) { return x < p.first; });
    for (; it != power.end() && it->first < t1; ++it) {
        energy += 0.5 * (p_prev + it->second) * (it->first - t_prev);
        t_prev = it->first;
        p_prev = it->second;
    }
    const double p_end = detail::interp(power, t1);
    energy += 0.5 * (p_prev + p_end) * (t1 - t_prev);
    return energy;
}

/// Maximal intervals where power >= threshold, merged when the gap between
/// consecutive intervals is shorter than `hold`.
inline PassDetection detect_passes(const TimeSeries& power, double threshold, double hold) {
    if (threshold <= 0.0)
        throw validation_error("detect_passes: threshold must be > 0");
    if (hold < 0.0)
        throw validation_error("detect_passes: hold must be >= 0");

    std::vector<std::pair<double, double>> raw; // (t_start, t_end)
    bool active = false;
    double start = 0.0;
    for (std::size_t i = 0; i < power.size(); ++i) {
        const bool above = power[i].second >= threshold;
        if (above && !active) {
            active = true;
            start = power[i].first;
        } else if (!above && active) {
            active = false;
            raw.emplace_back(start, power[i - 1].first);
        }
    }
    if (active) raw.emplace_back(start, power.back().first);

    std::vector<std::pair<double, double>> merged;
    for (const auto& iv : raw) {
        if (!merged.empty() && iv.first - merged.back().second < hold)
            merged.back().second = iv.second;
        else
            merged.push_back(iv);
    }

    PassDetection detection;
    for (const auto& [t0, t1] : merged) {
        PassInterval interval{t0, t1, 0.0, 0.0};
        for (const auto& [t, p] : power)
            if (t >= t0 && t <= t1) interval.peak_power = std::max(interval.peak_power, p);
        if (t1 > t0) interval.energy = integrate_energy(power, t0, t1);
        detection.intervals.push_back(interval);
    }
    return detection;
}

/// Trace CSV: `t_s,v_load_V` header, one sample per line, '#' comments.
inline void write_trace_csv(std::ostream& os, const Trace& trace) {
    os << "t_s,v_load_V\n";
    for (const auto& [t, v] : trace.samples)
        os << format_g9(t) << ',' << format_g9(v) << '\n';
}

inline TimeSeries read_trace_samples(std::istream& is) {
    TimeSeries samples;
    std::string line;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "t_s,v_load_V")
                throw validation_error("trace csv: expected header 't_s,v_load_V'");
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw validation_error("trace csv: malformed line " + std::to_string(lineno));
        char* end = nullptr;
        const std::string ts = line.substr(0, comma);
        const std::string vs = line.substr(comma + 1);
        const double t = std::strtod(ts.c_str(), &end);
        if (end == ts.c_str() || *end != '\0')
            throw validation_error("trace csv: bad timestamp on line " + std::to_string(lineno));
        const double v = std::strtod(vs.c_str(), &end);
        if (end == vs.c_str() || *end != '\0')
            throw validation_error("trace csv: bad voltage on line " + std::to_string(lineno));
        samples.emplace_back(t, v);
    }
    if (!header_seen)
        throw validation_error("trace csv: missing header");
    return samples;
}

} // namespace mfeh
