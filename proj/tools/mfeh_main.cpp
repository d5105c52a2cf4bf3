// mfeh — command-line front end for the railway magnetic-field energy
// harvesting toolkit. One subcommand per verb; deterministic CSV to --out,
// human summary to stdout. Exit codes: 0 success, 2 parse/validation
// error, 3 domain error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mfeh/mfeh.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_domain = 3;

mfeh::ConfigDocument read_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw mfeh::validation_error("cannot open config file '" + path + "'");
    return mfeh::parse_config(is);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw mfeh::validation_error("cannot open output file '" + path + "'");
    os << content;
}

std::string coil_label_of(const mfeh::ConfigDocument& doc) {
    if (const mfeh::ConfigSection* s = doc.find("coil"))
        if (const std::string* preset = s->find("preset")) return *preset;
    return "custom";
}

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string plot_path;
    bool dump_config = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool config_required = true) {
    auto* c = cmd->add_option("--config", opts.config_path, "configuration file");
    if (config_required) c->required();
    cmd->add_option("--out", opts.out_path, "write machine-readable CSV here");
    cmd->add_option("--plot", opts.plot_path, "write an SVG chart derived from the CSV");
    cmd->add_flag("--dump-config", opts.dump_config,
                  "print the parsed configuration and exit");
}

/// Returns true when the subcommand should stop after dumping the config.
bool maybe_dump(const CommonOpts& opts) {
    if (!opts.dump_config) return false;
    mfeh::dump_config(std::cout, read_config(opts.config_path));
    return true;
}

int cmd_field(const CommonOpts& opts, double at, bool at_set, double i_override,
              bool i_set) {
    if (maybe_dump(opts)) return exit_ok;
    const auto doc = read_config(opts.config_path);
    auto site = mfeh::load_site(doc);
    if (i_set) site.i_rms = i_override;
    const double r_n = at_set ? at : site.geometry.r_n;
    const mfeh::RailSiteGeometry geom(r_n, site.geometry.d_rr, site.geometry.current_split);
    const mfeh::SourceCurrent src(site.i_rms, site.frequency);
    const auto field = mfeh::field_two_rail(src, geom);
    const double r_e = mfeh::effective_radius(geom.r_n, geom.d_rr);

    std::cout << "field at r_n = " << mfeh::format_g9(r_n) << " m (d_rr = "
              << mfeh::format_g9(geom.d_rr) << " m, I = " << mfeh::format_g9(site.i_rms)
              << " A RMS)\n"
              << "  r_e = " << mfeh::format_g9(r_e) << " m\n"
              << "  H   = " << mfeh::format_g9(field.h_rms) << " A/m RMS\n"
              << "  B   = " << mfeh::format_g9(field.b_rms) << " T RMS\n";

    std::ostringstream csv;
    csv << "r_m,re_m,h_a_per_m,b_t\n"
        << mfeh::format_g9(r_n) << ',' << mfeh::format_g9(r_e) << ','
        << mfeh::format_g9(field.h_rms) << ',' << mfeh::format_g9(field.b_rms) << '\n';
    if (!opts.out_path.empty()) write_file(opts.out_path, csv.str());
    return exit_ok;
}

int cmd_power(const CommonOpts& opts, double at, bool at_set, double i_override, bool i_set,
              double f_override, bool f_set) {
    if (maybe_dump(opts)) return exit_ok;
    const auto doc = read_config(opts.config_path);
    auto site = mfeh::load_site(doc);
    const auto coil = mfeh::load_coil(doc);
    if (i_set) site.i_rms = i_override;
    if (f_set) site.frequency = f_override;
    const double r_n = at_set ? at : site.geometry.r_n;
    const mfeh::RailSiteGeometry geom(r_n, site.geometry.d_rr, site.geometry.current_split);
    const mfeh::SourceCurrent src(site.i_rms, site.frequency);
    const auto field = mfeh::field_two_rail(src, geom);
    const double v_oc = mfeh::open_circuit_voltage(coil, field, site.frequency);
    const double p = mfeh::matched_load_power(coil, field, site.frequency);

    std::cout << "matched-load power for " << coil_label_of(doc) << " at r_n = "
              << mfeh::format_g9(r_n) << " m, f = " << mfeh::format_g9(site.frequency)
              << " Hz, I = " << mfeh::format_g9(site.i_rms) << " A RMS\n"
              << "  V_oc = " << mfeh::format_g9(v_oc) << " V RMS\n"
              << "  P_l  = " << mfeh::format_g9(p) << " W\n";

    std::ostringstream csv;
    csv << "coil,f_hz,r_m,i_a,p_w\n"
        << coil_label_of(doc) << ',' << mfeh::format_g9(site.frequency) << ','
        << mfeh::format_g9(r_n) << ',' << mfeh::format_g9(site.i_rms) << ','
        << mfeh::format_g9(p) << '\n';
    if (!opts.out_path.empty()) write_file(opts.out_path, csv.str());
    return exit_ok;
}

int cmd_sweep(const CommonOpts& opts) {
    if (maybe_dump(opts)) return exit_ok;
    const auto doc = read_config(opts.config_path);
    const auto spec = mfeh::load_sweep(doc);
    const auto rows = mfeh::sweep(spec);
    const bool power_table = !spec.currents.empty();

    std::ostringstream csv;
    mfeh::write_sweep_csv(csv, rows, power_table);
    std::cout << csv.str();
    if (!opts.out_path.empty()) write_file(opts.out_path, csv.str());

    if (!opts.plot_path.empty()) {
        std::map<std::string, mfeh::PlotSeries> by_series;
        for (const auto& row : rows) {
            if (power_table) {
                const std::string key = row.coil_label + " " + mfeh::format_g9(row.frequency) +
                                        " Hz " + mfeh::format_g9(row.distance) + " m";
                by_series[key].label = key;
                by_series[key].points.emplace_back(row.i_a, row.value);
            } else {
                const std::string key =
                    row.coil_label + " " + mfeh::format_g9(row.frequency) + " Hz";
                by_series[key].label = key;
                by_series[key].points.emplace_back(row.distance, row.value);
            }
        }
        std::vector<mfeh::PlotSeries> series;
        for (auto& [key, s] : by_series) series.push_back(std::move(s));
        std::ostringstream svg;
        if (power_table)
            mfeh::write_svg_chart(svg, "matched-load power", "I [A]", "P [W]", series);
        else
            mfeh::write_svg_chart(svg, "power coefficient", "r [m]", "k [uW/A^2]", series);
        write_file(opts.plot_path, svg.str());
    }
    return exit_ok;
}

mfeh::CoefficientTable read_coefficient_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw mfeh::validation_error("cannot open observed table '" + path + "'");
    mfeh::CoefficientTable table;
    std::string line;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "coil,f_hz,r_m,k_uw_per_a2")
                throw mfeh::validation_error(
                    "observed table: expected header 'coil,f_hz,r_m,k_uw_per_a2'");
            header_seen = true;
            continue;
        }
        std::stringstream ss(line);
        std::string coil, f, r, k;
        if (!std::getline(ss, coil, ',') || !std::getline(ss, f, ',') ||
            !std::getline(ss, r, ',') || !std::getline(ss, k))
            throw mfeh::validation_error("observed table: malformed line " +
                                         std::to_string(lineno));
        table.push_back({coil, std::stod(f), std::stod(r), std::stod(k)});
    }
    if (!header_seen) throw mfeh::validation_error("observed table: missing header");
    return table;
}

int cmd_fit(const CommonOpts& opts, const std::string& observed_path) {
    if (maybe_dump(opts)) return exit_ok;
    const auto doc = read_config(opts.config_path);
    const auto input = mfeh::load_fit(doc);
    const auto observed = read_coefficient_csv(observed_path);
    const auto result = mfeh::fit_loop_length(observed, input.b, input.a_min, input.a_max);

    std::cout << "fitted conductor length over " << observed.size() << " observations (b = "
              << mfeh::format_g9(input.b) << " m)\n"
              << "  a            = " << mfeh::format_g9(result.a) << " m\n"
              << "  log residual = " << mfeh::format_g9(result.rms_log_residual) << " (RMS)\n";

    if (!opts.out_path.empty()) {
        std::ostringstream csv;
        csv << "a_m,rms_log_residual\n"
            << mfeh::format_g9(result.a) << ',' << mfeh::format_g9(result.rms_log_residual)
            << '\n';
        write_file(opts.out_path, csv.str());
    }
    return exit_ok;
}

int cmd_simulate(const CommonOpts& opts) {
    if (maybe_dump(opts)) return exit_ok;
    const auto doc = read_config(opts.config_path);
    const auto site_input = mfeh::load_site(doc);
    const auto coil = mfeh::load_coil(doc);
    const auto timetable = mfeh::load_timetable(doc);
    const auto budget = mfeh::load_budget(doc);
    const mfeh::SiteConfig site{site_input.geometry, site_input.frequency, coil};
    const auto report = mfeh::simulate_period(site, timetable, budget);

    std::cout << "energy over " << mfeh::format_g9(timetable.period) << " s ("
              << report.per_event.size() << " events)\n";
    for (const auto& [label, joules] : report.per_event)
        std::cout << "  " << label << ": " << mfeh::format_g9(joules) << " J\n";
    std::cout << "total  = " << mfeh::format_g9(report.daily_total) << " J\n"
              << "margin = " << mfeh::format_g9(report.margin) << " (vs "
              << mfeh::format_g9(budget.daily_requirement) << " J/day)\n";

    if (!opts.out_path.empty()) {
        std::ostringstream csv;
        mfeh::write_energy_csv(csv, report);
        write_file(opts.out_path, csv.str());
    }
    return exit_ok;
}

int cmd_trace(const CommonOpts& opts, const std::string& trace_path, double window,
              double threshold, double hold) {
    if (maybe_dump(opts)) return exit_ok;
    const auto doc = read_config(opts.config_path);
    const auto meta = mfeh::load_trace_meta(doc);

    std::ifstream is(trace_path);
    if (!is) throw mfeh::validation_error("cannot open trace file '" + trace_path + "'");
    mfeh::Trace trace{mfeh::read_trace_samples(is), meta.r_load, meta.coil_label,
                      meta.site_label, meta.kind};
    trace.validate();
    if (trace.samples.size() < 2)
        throw mfeh::validation_error("trace: need at least 2 samples");

    // Raw waveforms are enveloped first so power follows the amplitude
    // convention; pre-enveloped traces are used as-is.
    if (trace.kind == mfeh::TraceKind::waveform) {
        trace.samples = mfeh::envelope(trace, window);
        trace.kind = mfeh::TraceKind::envelope;
    }

    const auto power = mfeh::power_trace(trace);
    const double total = mfeh::integrate_energy(power, power.front().first, power.back().first);
    const auto detection = mfeh::detect_passes(power, threshold, hold);

    std::cout << "trace '" << trace_path << "' (" << trace.samples.size() << " samples, "
              << mfeh::to_string(trace.kind) << ", R_l = " << mfeh::format_g9(trace.r_load)
              << " ohm)\n"
              << "total energy = " << mfeh::format_g9(total) << " J\n"
              << "detections   = " << detection.intervals.size() << " (threshold "
              << mfeh::format_g9(threshold) << " W, hold " << mfeh::format_g9(hold) << " s)\n";
    for (const auto& iv : detection.intervals)
        std::cout << "  [" << mfeh::format_g9(iv.t_start) << ", " << mfeh::format_g9(iv.t_end)
                  << "] s  peak " << mfeh::format_g9(iv.peak_power) << " W  energy "
                  << mfeh::format_g9(iv.energy) << " J\n";

    if (!opts.out_path.empty()) {
        std::ostringstream csv;
        mfeh::write_detection_csv(csv, detection);
        write_file(opts.out_path, csv.str());
    }
    if (!opts.plot_path.empty()) {
        mfeh::PlotSeries series{"P_l", power};
        std::ostringstream svg;
        mfeh::write_svg_chart(svg, "instantaneous power", "t [s]", "P [W]", {series});
        write_file(opts.plot_path, svg.str());
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"railway magnetic-field energy harvesting toolkit"};
    app.require_subcommand(1);

    CommonOpts field_opts, power_opts, sweep_opts, fit_opts, sim_opts, trace_opts;

    auto* field = app.add_subcommand("field", "ambient field at a trackside distance");
    add_common(field, field_opts);
    double field_at = 0.0, field_i = 0.0;
    auto* field_at_opt = field->add_option("--at", field_at, "distance from near rail [m]");
    auto* field_i_opt = field->add_option("--i", field_i, "override rail current [A RMS]");

    auto* power = app.add_subcommand("power", "matched-load power at the configured site");
    add_common(power, power_opts);
    double power_at = 0.0, power_i = 0.0, power_f = 0.0;
    auto* power_at_opt = power->add_option("--at", power_at, "distance from near rail [m]");
    auto* power_i_opt = power->add_option("--i", power_i, "override rail current [A RMS]");
    auto* power_f_opt = power->add_option("--f", power_f, "override frequency [Hz]");

    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a parameter grid");
    add_common(sweep_cmd, sweep_opts);

    auto* fit = app.add_subcommand("fit", "fit the lab conductor length to observed coefficients");
    add_common(fit, fit_opts);
    std::string observed_path;
    fit->add_option("--observed", observed_path, "observed coefficient CSV")->required();

    auto* simulate = app.add_subcommand("simulate", "timetable-driven energy budget");
    add_common(simulate, sim_opts);

    auto* trace_cmd = app.add_subcommand("trace", "analyse a measured load-voltage trace");
    add_common(trace_cmd, trace_opts);
    std::string trace_path;
    double window = 1.0, threshold = 1.0e-6, hold = 0.0;
    trace_cmd->add_option("--trace", trace_path, "trace CSV file")->required();
    trace_cmd->add_option("--window", window, "envelope window [s]");
    trace_cmd->add_option("--threshold", threshold, "pass detection threshold [W]");
    trace_cmd->add_option("--hold", hold, "merge gaps shorter than this [s]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    try {
        if (field->parsed())
            return cmd_field(field_opts, field_at, field_at_opt->count() > 0, field_i,
                             field_i_opt->count() > 0);
        if (power->parsed())
            return cmd_power(power_opts, power_at, power_at_opt->count() > 0, power_i,
                             power_i_opt->count() > 0, power_f, power_f_opt->count() > 0);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_opts);
        if (fit->parsed()) return cmd_fit(fit_opts, observed_path);
        if (simulate->parsed()) return cmd_simulate(sim_opts);
        if (trace_cmd->parsed()) return cmd_trace(trace_opts, trace_path, window, threshold, hold);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const mfeh::validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
    return exit_validation;
}
