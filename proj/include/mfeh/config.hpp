#pragma once

// Flat `key = value` configuration grammar, grouped by bracketed section
// headers. Unknown sections and keys are rejected; units are encoded in key
// suffixes (_m, _hz, _a, _ohm, _s, _j).

#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mfeh/common.hpp"
#include "mfeh/harvester.hpp"
#include "mfeh/magnetics.hpp"
#include "mfeh/optimize.hpp"
#include "mfeh/scenario.hpp"
#include "mfeh/traces.hpp"

namespace mfeh {

struct ConfigSection {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;

    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : entries)
            if (k == key) return &v;
        return nullptr;
    }
};

struct ConfigDocument {
    std::vector<ConfigSection> sections;

    const ConfigSection* find(const std::string& name) const {
        for (const auto& s : sections)
            if (s.name == name) return &s;
        return nullptr;
    }

    std::vector<const ConfigSection*> find_all(const std::string& name) const {
        std::vector<const ConfigSection*> out;
        for (const auto& s : sections)
            if (s.name == name) out.push_back(&s);
        return out;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

inline const std::map<std::string, std::set<std::string>>& config_schema() {
    static const std::map<std::string, std::set<std::string>> schema = {
        {"site", {"i_a", "f_hz", "r_n_m", "d_rr_m", "current_split"}},
        {"coil",
         {"preset", "turns", "area_m2", "resistance_ohm", "inductance_h", "mu_e", "mu_r",
          "resistivity_ohm_m", "loss_tangent", "rod_diameter_m"}},
        {"lab_loop", {"r_m", "a_m", "b_m"}},
        {"timetable", {"period_s"}},
        {"event", {"label", "start_s", "attenuation", "segments"}},
        {"budget", {"daily_j"}},
        {"trace", {"r_load_ohm", "coil", "site", "kind"}},
        {"sweep", {"geometry", "coils", "f_hz", "r_m", "i_a"}},
        {"fit", {"b_m", "a_min_m", "a_max_m"}},
    };
    return schema;
}

} // namespace detail

inline ConfigDocument parse_config(std::istream& is) {
    ConfigDocument doc;
    ConfigSection* current = nullptr;
    std::string line;
    std::size_t lineno = 0;
    const auto& schema = detail::config_schema();
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string trimmed = detail::trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (trimmed.front() == '[') {
            if (trimmed.back() != ']')
                throw validation_error("config line " + std::to_string(lineno) +
                                       ": malformed section header");
            const std::string name = detail::trim(trimmed.substr(1, trimmed.size() - 2));
            if (schema.find(name) == schema.end())
                throw validation_error("config line " + std::to_string(lineno) +
                                       ": unknown section [" + name + "]");
            doc.sections.push_back(ConfigSection{name, {}});
            current = &doc.sections.back();
            continue;
        }
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw validation_error("config line " + std::to_string(lineno) +
                                   ": expected 'key = value'");
        if (!current)
            throw validation_error("config line " + std::to_string(lineno) +
                                   ": key outside any section");
        const std::string key = detail::trim(trimmed.substr(0, eq));
        const std::string value = detail::trim(trimmed.substr(eq + 1));
        const auto& allowed = schema.at(current->name);
        if (allowed.find(key) == allowed.end())
            throw validation_error("config line " + std::to_string(lineno) + ": unknown key '" +
                                   key + "' in section [" + current->name + "]");
        if (current->find(key))
            throw validation_error("config line " + std::to_string(lineno) + ": duplicate key '" +
                                   key + "' in section [" + current->name + "]");
        current->entries.emplace_back(key, value);
    }
    return doc;
}

inline void dump_config(std::ostream& os, const ConfigDocument& doc) {
    for (const auto& section : doc.sections) {
        os << '[' << section.name << "]\n";
        for (const auto& [k, v] : section.entries) os << k << " = " << v << '\n';
        os << '\n';
    }
}

namespace detail {

inline double parse_double(const std::string& value, const std::string& context) {
    char* end = nullptr;
    const double x = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *trim(end ? end : "").c_str() != '\0')
        throw validation_error(context + ": cannot parse number '" + value + "'");
    return x;
}

inline std::vector<std::string> split(const std::string& value, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

inline double require_double(const ConfigSection& s, const std::string& key) {
    const std::string* v = s.find(key);
    if (!v) throw validation_error("section [" + s.name + "]: missing key '" + key + "'");
    return parse_double(*v, "[" + s.name + "] " + key);
}

inline double double_or(const ConfigSection& s, const std::string& key, double fallback) {
    const std::string* v = s.find(key);
    return v ? parse_double(*v, "[" + s.name + "] " + key) : fallback;
}

inline std::vector<double> double_list(const ConfigSection& s, const std::string& key) {
    const std::string* v = s.find(key);
    if (!v) return {};
    std::vector<double> out;
    for (const auto& item : split(*v, ','))
        out.push_back(parse_double(item, "[" + s.name + "] " + key));
    return out;
}

} // namespace detail

struct SiteInput {
    double i_rms;
    double frequency;
    RailSiteGeometry geometry;
};

inline SiteInput load_site(const ConfigDocument& doc) {
    const ConfigSection* s = doc.find("site");
    if (!s) throw validation_error("config: missing [site] section");
    const double i = detail::require_double(*s, "i_a");
    const double f = detail::require_double(*s, "f_hz");
    RailSiteGeometry geom(detail::require_double(*s, "r_n_m"),
                          detail::require_double(*s, "d_rr_m"),
                          detail::double_or(*s, "current_split", 0.5));
    if (i < 0.0) throw validation_error("[site] i_a must be >= 0");
    if (f <= 0.0) throw validation_error("[site] f_hz must be > 0");
    return SiteInput{i, f, geom};
}

/// Coil from the [coil] section: either a preset reference, optionally with
/// overridden fields, or a fully explicit specification.
inline CoilSpec load_coil(const ConfigDocument& doc) {
    const ConfigSection* s = doc.find("coil");
    if (!s) throw validation_error("config: missing [coil] section");
    long turns;
    double area, resistance, inductance, mu_e, mu_r, resistivity, loss_tangent, rod_diameter;
    if (const std::string* preset = s->find("preset")) {
        const auto base = coil_preset(*preset);
        if (!base) throw validation_error("[coil] unknown preset '" + *preset + "'");
        turns = base->turns;
        area = base->area;
        resistance = base->resistance;
        inductance = base->inductance;
        mu_e = base->mu_e;
        mu_r = base->material.mu_r;
        resistivity = base->material.resistivity;
        loss_tangent = base->material.loss_tangent;
        rod_diameter = base->rod_diameter;
    } else {
        if (!s->find("turns") || !s->find("area_m2") || !s->find("resistance_ohm") ||
            !s->find("mu_e"))
            throw validation_error(
                "[coil] needs either 'preset' or turns/area_m2/resistance_ohm/mu_e");
        turns = 0;
        area = resistance = mu_e = 0.0;
        inductance = 0.0;
        mu_r = material_4b1().mu_r;
        resistivity = material_4b1().resistivity;
        loss_tangent = material_4b1().loss_tangent;
        rod_diameter = 8.0e-3;
    }
    if (s->find("turns")) turns = static_cast<long>(detail::require_double(*s, "turns"));
    area = detail::double_or(*s, "area_m2", area);
    resistance = detail::double_or(*s, "resistance_ohm", resistance);
    inductance = detail::double_or(*s, "inductance_h", inductance);
    mu_e = detail::double_or(*s, "mu_e", mu_e);
    mu_r = detail::double_or(*s, "mu_r", mu_r);
    resistivity = detail::double_or(*s, "resistivity_ohm_m", resistivity);
    loss_tangent = detail::double_or(*s, "loss_tangent", loss_tangent);
    rod_diameter = detail::double_or(*s, "rod_diameter_m", rod_diameter);
    return CoilSpec(turns, area, resistance, inductance,
                    CoreMaterial(mu_r, resistivity, loss_tangent), mu_e, rod_diameter);
}

inline LabLoopGeometry load_lab_loop(const ConfigDocument& doc) {
    const ConfigSection* s = doc.find("lab_loop");
    if (!s) throw validation_error("config: missing [lab_loop] section");
    return LabLoopGeometry(detail::require_double(*s, "r_m"), detail::require_double(*s, "a_m"),
                           detail::require_double(*s, "b_m"));
}

inline Timetable load_timetable(const ConfigDocument& doc) {
    Timetable timetable;
    if (const ConfigSection* t = doc.find("timetable"))
        timetable.period = detail::double_or(*t, "period_s", 86400.0);
    for (const ConfigSection* s : doc.find_all("event")) {
        TrainPassEvent event;
        if (const std::string* label = s->find("label")) event.label = *label;
        event.start = detail::double_or(*s, "start_s", 0.0);
        event.attenuation = detail::double_or(*s, "attenuation", 1.0);
        const std::string* segments = s->find("segments");
        if (!segments) throw validation_error("[event] missing 'segments'");
        for (const auto& item : detail::split(*segments, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw validation_error("[event] segments entries must be 'duration_s:i_a'");
            event.segments.push_back(CurrentSegment{
                detail::parse_double(item.substr(0, colon), "[event] segment duration"),
                detail::parse_double(item.substr(colon + 1), "[event] segment current")});
        }
        timetable.events.push_back(std::move(event));
    }
    timetable.validate();
    return timetable;
}

inline NodeBudget load_budget(const ConfigDocument& doc) {
    const ConfigSection* s = doc.find("budget");
    if (!s) throw validation_error("config: missing [budget] section");
    const double daily = detail::require_double(*s, "daily_j");
    if (daily < 0.0) throw validation_error("[budget] daily_j must be >= 0");
    return NodeBudget{daily};
}

struct TraceMeta {
    double r_load;
    std::string coil_label;
    std::string site_label;
    TraceKind kind = TraceKind::waveform;
};

inline TraceMeta load_trace_meta(const ConfigDocument& doc) {
    const ConfigSection* s = doc.find("trace");
    if (!s) throw validation_error("config: missing [trace] section");
    TraceMeta meta;
    meta.r_load = detail::require_double(*s, "r_load_ohm");
    if (meta.r_load <= 0.0) throw validation_error("[trace] r_load_ohm must be > 0");
    if (const std::string* c = s->find("coil")) meta.coil_label = *c;
    if (const std::string* site = s->find("site")) meta.site_label = *site;
    if (const std::string* k = s->find("kind")) meta.kind = trace_kind_from_string(*k);
    return meta;
}

inline SweepSpec load_sweep(const ConfigDocument& doc) {
    const ConfigSection* s = doc.find("sweep");
    if (!s) throw validation_error("config: missing [sweep] section");
    SweepSpec spec;
    if (const std::string* coils = s->find("coils"))
        spec.coil_labels = detail::split(*coils, ',');
    spec.frequencies = detail::double_list(*s, "f_hz");
    spec.distances = detail::double_list(*s, "r_m");
    spec.currents = detail::double_list(*s, "i_a");
    const std::string* geometry = s->find("geometry");
    const std::string kind = geometry ? *geometry : "lab_loop";
    if (kind == "lab_loop") {
        spec.geometry = SweepGeometry::lab_loop;
        const LabLoopGeometry loop = load_lab_loop(doc);
        spec.loop_a = loop.a;
        spec.loop_b = loop.b;
    } else if (kind == "two_rail") {
        spec.geometry = SweepGeometry::two_rail;
        const SiteInput site = load_site(doc);
        spec.d_rr = site.geometry.d_rr;
        spec.current_split = site.geometry.current_split;
    } else {
        throw validation_error("[sweep] geometry must be 'lab_loop' or 'two_rail'");
    }
    return spec;
}

struct FitInput {
    double b;
    double a_min;
    double a_max;
};

inline FitInput load_fit(const ConfigDocument& doc) {
    FitInput input{3.0, 0.1, 10.0};
    if (const ConfigSection* s = doc.find("fit")) {
        input.b = detail::double_or(*s, "b_m", input.b);
        input.a_min = detail::double_or(*s, "a_min_m", input.a_min);
        input.a_max = detail::double_or(*s, "a_max_m", input.a_max);
    }
    return input;
}

} // namespace mfeh
