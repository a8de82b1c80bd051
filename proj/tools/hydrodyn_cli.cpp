// hydrodyn command-line front end.
//
// Emits reproducible tables (CSV with a header row and '#' footer comments,
// or a single JSON document) for the calculator's operations. Values are
// printed with 6 significant figures; identical invocations produce
// byte-identical output. Exit codes: 0 success, 2 invalid input,
// 3 numerical non-convergence.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hydrodyn/hydrodyn.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNoConvergence = 3;

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// JSON numbers carry the same 6-significant-figure rounding as the CSV text.
double num6(double v) { return std::strtod(num(v).c_str(), nullptr); }

int fail(const std::string& message, int code = kExitInvalid) {
    std::cerr << "hydrodyn: " << message << "\n";
    return code;
}

int fail(hydro_status st) {
    return fail(hydro_status_message(st),
                st == HYDRO_ERR_NO_CONVERGENCE ? kExitNoConvergence : kExitInvalid);
}

int emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) return fail("cannot open output file: " + out_path);
    f << content;
    return f ? kExitOk : fail("write failed: " + out_path);
}

struct ModelHandle {
    hydro_model* ptr = nullptr;
    ~ModelHandle() { hydro_model_destroy(ptr); }
};

// Shared options of every subcommand.
struct CommonOpts {
    double e0_ev = 13.598;
    std::string format = "csv";
    std::string out_path;
    long seed = 0;  // reserved for randomized sweeps; recorded for reproducibility

    void attach(CLI::App* cmd) {
        cmd->add_option("--e0-ev", e0_ev, "Ionization energy magnitude [eV]")
            ->capture_default_str();
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "Output path (default: standard output)");
        cmd->add_option("--seed", seed, "Seed for randomized sweeps")->capture_default_str();
    }
    bool json_format() const { return format == "json"; }
};

int make_model(const CommonOpts& opts, ModelHandle& handle) {
    if (!(opts.e0_ev > 0.0)) return fail("E0 must be positive");
    if (const auto st = hydro_model_create(opts.e0_ev, &handle.ptr); st != HYDRO_OK)
        return fail(st);
    return kExitOk;
}

double to_ev(double joule) {
    double out = 0.0;
    hydro_energy_convert(joule, HYDRO_JOULE_TO_EV, &out);
    return out;
}

/* ---------------------------------------------------------------- */

int cmd_calibrate(const CommonOpts& opts) {
    ModelHandle model;
    if (const int rc = make_model(opts, model); rc != kExitOk) return rc;
    hydro_calibration cal{};
    hydro_model_calibration(model.ptr, &cal);

    std::string body;
    if (opts.json_format()) {
        json doc{{"e0_ev", num6(opts.e0_ev)}, {"v0", num6(cal.v0)},     {"r0", num6(cal.r0)},
                 {"nu0", num6(cal.nu0)},      {"rho_el0", num6(cal.rho_el0)}};
        body = doc.dump(2) + "\n";
    } else {
        body = "e0_ev,v0,r0,nu0,rho_el0\n";
        body += num(opts.e0_ev) + "," + num(cal.v0) + "," + num(cal.r0) + "," + num(cal.nu0) +
                "," + num(cal.rho_el0) + "\n";
    }
    return emit(opts.out_path, body);
}

/* ---------------------------------------------------------------- */

int cmd_spectrum(const CommonOpts& opts, int lower, int upper, int n_max) {
    if (n_max < 1) return fail("n-max must be >= 1");
    if (lower != 0 && lower < 1) return fail("n must be >= 1");
    if (upper != 0) {
        if (lower == 0) return fail("explicit m requires n");
        if (upper <= lower) return fail("m must exceed n");
    }
    ModelHandle model;
    if (const int rc = make_model(opts, model); rc != kExitOk) return rc;

    struct Row {
        hydro_emission_line line;
    };
    std::vector<Row> rows;
    const auto add_line = [&](int n, int m) -> int {
        Row row{};
        if (const auto st = hydro_emission_line_get(model.ptr, n, m, &row.line); st != HYDRO_OK)
            return fail(st);
        rows.push_back(row);
        return kExitOk;
    };
    if (upper != 0) {
        if (const int rc = add_line(lower, upper); rc != kExitOk) return rc;
    } else {
        for (int n = lower == 0 ? 1 : lower; n <= (lower == 0 ? n_max : lower); ++n)
            for (int m = n + 1; m <= n_max; ++m)
                if (const int rc = add_line(n, m); rc != kExitOk) return rc;
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.line.frequency > b.line.frequency;
    });

    std::string body;
    if (opts.json_format()) {
        json doc = json::array();
        for (const auto& row : rows)
            doc.push_back({{"n", row.line.lower},
                           {"m", row.line.upper},
                           {"frequency_hz", num6(row.line.frequency)},
                           {"energy_ev", num6(to_ev(row.line.energy))},
                           {"wavelength_nm", num6(row.line.wavelength * 1e9)}});
        body = doc.dump(2) + "\n";
    } else {
        body = "n,m,frequency_hz,energy_ev,wavelength_nm\n";
        for (const auto& row : rows)
            body += std::to_string(row.line.lower) + "," + std::to_string(row.line.upper) + "," +
                    num(row.line.frequency) + "," + num(to_ev(row.line.energy)) + "," +
                    num(row.line.wavelength * 1e9) + "\n";
        body += "# count," + std::to_string(rows.size()) + "\n";
    }
    return emit(opts.out_path, body);
}

/* ---------------------------------------------------------------- */

int cmd_decay_trace(const CommonOpts& opts, int lower, int upper, int periods,
                    double probe_fraction, long steps) {
    if (lower < 1) return fail("n must be >= 1");
    if (upper <= lower) return fail("m must exceed n");
    if (periods < 1) return fail("periods must be >= 1");
    if (!(probe_fraction > 0.0 && probe_fraction <= 1.0))
        return fail("probe-r must lie in (0, 1]");
    if (steps < 10000) return fail("steps must be at least 10000");
    ModelHandle model;
    if (const int rc = make_model(opts, model); rc != kExitOk) return rc;
    hydro_calibration cal{};
    hydro_model_calibration(model.ptr, &cal);
    const double probe_r = probe_fraction * cal.r0;
    const double tau_eps = periods * cal.tau0;

    hydro_decay_config cfg{};
    if (const auto st = hydro_decay_config_make(lower, upper, tau_eps, &cfg); st != HYDRO_OK)
        return fail(st);
    hydro_decay_trace* trace = nullptr;
    if (const auto st = hydro_decay_trace_run(model.ptr, &cfg, probe_r, steps, &trace);
        st != HYDRO_OK)
        return fail(st);

    const size_t count = hydro_decay_trace_size(trace);
    const double* times = hydro_decay_trace_times(trace);
    const double* u2 = hydro_decay_trace_u_squared(trace);
    const double residual = hydro_decay_trace_endpoint_residual(trace);
    const double rate = hydro_decay_trace_photon_rate(trace);

    std::string body;
    json rows = json::array();
    if (!opts.json_format()) body = "t_s,u2_analytic,u2_oracle,abs_rel_diff,guard\n";
    const double un = cal.v0 / lower;
    for (size_t i = 0; i < count; ++i) {
        const double t = times[i];
        const double c = std::cos(cal.omega0 * t);
        const int guard = std::abs(c) <= 0.1 ? 1 : 0;
        double w = 0.0;
        hydro_velocity_sq_product(model.ptr, &cfg, t, &w);
        const double u2_analytic = w / (c * c);
        const double diff = std::abs(u2_analytic - u2[i]) / (un * un);
        if (opts.json_format()) {
            rows.push_back({{"t_s", num6(t)},
                            {"u2_analytic", num6(u2_analytic)},
                            {"u2_oracle", num6(u2[i])},
                            {"abs_rel_diff", num6(diff)},
                            {"guard", guard}});
        } else {
            body += num(t) + "," + num(u2_analytic) + "," + num(u2[i]) + "," + num(diff) + "," +
                    std::to_string(guard) + "\n";
        }
    }
    if (opts.json_format()) {
        json doc{{"n", lower},
                 {"m", upper},
                 {"tau_eps_s", num6(tau_eps)},
                 {"probe_r_m", num6(probe_r)},
                 {"photon_rate", num6(rate)},
                 {"endpoint_residual", num6(residual)},
                 {"rows", std::move(rows)}};
        body = doc.dump(2) + "\n";
    } else {
        body += "# photon_rate," + num(rate) + "\n";
        body += "# endpoint_residual," + num(residual) + "\n";
    }
    hydro_decay_trace_destroy(trace);
    return emit(opts.out_path, body);
}

/* ---------------------------------------------------------------- */

int cmd_ensemble(const CommonOpts& opts, std::vector<double> temps, int n_max, double lo,
                 double hi) {
    if (temps.empty()) temps = {293.0, 1273.0, 2273.0};
    for (const double t : temps)
        if (!(t > 0.0)) return fail("temperature must be positive");
    if (n_max < 1) return fail("n-max must be >= 1");
    if (!(lo > 0.0 && lo < hi && hi < 1.0)) return fail("need 0 < lo < hi < 1");
    ModelHandle model;
    if (const int rc = make_model(opts, model); rc != kExitOk) return rc;

    std::string body;
    json rows = json::array();
    json bands = json::array();
    if (!opts.json_format()) body = "temperature_k,n,factor\n";
    for (const double temp : temps) {
        for (int n = 1; n <= n_max; ++n) {
            double factor = 0.0;
            if (const auto st = hydro_excitation_probability(model.ptr, n, temp, &factor);
                st != HYDRO_OK)
                return fail(st);
            if (opts.json_format())
                rows.push_back(
                    {{"temperature_k", num6(temp)}, {"n", n}, {"factor", num6(factor)}});
            else
                body += num(temp) + "," + std::to_string(n) + "," + num(factor) + "\n";
        }
    }
    for (const double temp : temps) {
        int n_lo = 0, n_hi = 0;
        if (const auto st = hydro_transition_band(model.ptr, temp, lo, hi, &n_lo, &n_hi);
            st != HYDRO_OK)
            return fail(st);
        if (opts.json_format())
            bands.push_back({{"temperature_k", num6(temp)}, {"n_lo", n_lo}, {"n_hi", n_hi}});
        else
            body += "# transition_band temperature_k=" + num(temp) + " lo=" + num(lo) +
                    " hi=" + num(hi) + " n_lo=" + std::to_string(n_lo) +
                    " n_hi=" + std::to_string(n_hi) + "\n";
    }
    if (opts.json_format()) {
        json doc{{"n_max", n_max},
                 {"lo", num6(lo)},
                 {"hi", num6(hi)},
                 {"rows", std::move(rows)},
                 {"transition_bands", std::move(bands)}};
        body = doc.dump(2) + "\n";
    }
    return emit(opts.out_path, body);
}

/* ---------------------------------------------------------------- */

int ladder_report(const CommonOpts& opts, int n_max, bool with_zero_radii) {
    if (n_max < 1) return fail("n-max must be >= 1");
    ModelHandle model;
    if (const int rc = make_model(opts, model); rc != kExitOk) return rc;

    std::string body;
    json rows = json::array();
    if (!opts.json_format()) body = "n,standard_energy_ev,dynamic_energy_ev\n";
    for (int n = 1; n <= n_max; ++n) {
        double standard = 0.0;
        if (const auto st = hydro_energy_level(n, &standard); st != HYDRO_OK) return fail(st);
        hydro_radial_mode mode{};
        if (const auto st = hydro_radial_mode_get(model.ptr, n, &mode); st != HYDRO_OK)
            return fail(st);
        const double standard_ev = to_ev(standard);
        const double dynamic_ev = to_ev(mode.w_kinetic);  // per-level electron energy W_el(n)
        if (opts.json_format())
            rows.push_back({{"n", n},
                            {"standard_energy_ev", num6(standard_ev)},
                            {"dynamic_energy_ev", num6(dynamic_ev)}});
        else
            body += std::to_string(n) + "," + num(standard_ev) + "," + num(dynamic_ev) + "\n";
    }

    double zero_full = 0.0, zero_mech = 0.0;
    if (with_zero_radii) {
        hydro_frequency_zero_radius(HYDRO_FREQUENCY_FULL, &zero_full);
        hydro_frequency_zero_radius(HYDRO_FREQUENCY_MECHANICAL, &zero_mech);
    }
    if (opts.json_format()) {
        json doc{{"rows", std::move(rows)}};
        if (with_zero_radii) {
            doc["zero_radius_full_m"] = num6(zero_full);
            doc["zero_radius_mechanical_m"] = num6(zero_mech);
        }
        body = doc.dump(2) + "\n";
    } else if (with_zero_radii) {
        body += "# zero_radius_full_m," + num(zero_full) + "\n";
        body += "# zero_radius_mechanical_m," + num(zero_mech) + "\n";
    }
    return emit(opts.out_path, body);
}

/* ---------------------------------------------------------------- */

int cmd_bulk(const CommonOpts& opts) {
    ModelHandle model;
    if (const int rc = make_model(opts, model); rc != kExitOk) return rc;
    struct Entry {
        const char* phase;
        hydro_phase tag;
        double mass_g;
    };
    // Reference masses: 1 l of gas at standard conditions, 1 l of liquid.
    const Entry entries[] = {{"gas", HYDRO_PHASE_GAS, 0.0899},
                             {"liquid", HYDRO_PHASE_LIQUID, 70.7}};

    std::string body;
    json rows = json::array();
    if (!opts.json_format())
        body = "phase,mass_g,atom_count,occupied_volume_l,reference_volume_l,ratio\n";
    for (const auto& entry : entries) {
        hydro_bulk_report rep{};
        if (const auto st = hydro_bulk_volume(model.ptr, entry.tag, entry.mass_g, &rep);
            st != HYDRO_OK)
            return fail(st);
        if (opts.json_format())
            rows.push_back({{"phase", entry.phase},
                            {"mass_g", num6(entry.mass_g)},
                            {"atom_count", num6(rep.atom_count)},
                            {"occupied_volume_l", num6(rep.occupied_volume_l)},
                            {"reference_volume_l", num6(rep.reference_volume_l)},
                            {"ratio", num6(rep.ratio_to_reference)}});
        else
            body += std::string(entry.phase) + "," + num(entry.mass_g) + "," +
                    num(rep.atom_count) + "," + num(rep.occupied_volume_l) + "," +
                    num(rep.reference_volume_l) + "," + num(rep.ratio_to_reference) + "\n";
    }
    if (opts.json_format()) body = json{{"rows", std::move(rows)}}.dump(2) + "\n";
    return emit(opts.out_path, body);
}

/* ---------------------------------------------------------------- */

int cmd_nuclear(const CommonOpts& opts) {
    ModelHandle model;
    if (const int rc = make_model(opts, model); rc != kExitOk) return rc;
    double intensity = 0.0;
    if (const auto st = hydro_nuclear_field_intensity(model.ptr, &intensity); st != HYDRO_OK)
        return fail(st);
    double k_el = 0.0, r_el = 0.0, k_grav = 0.0, r_grav = 0.0;
    hydro_nuclear_radius_estimate(model.ptr, HYDRO_COUPLING_ELECTROSTATIC, &k_el, &r_el);
    hydro_nuclear_radius_estimate(model.ptr, HYDRO_COUPLING_GRAVITATIONAL, &k_grav, &r_grav);

    // Verdicts against the ~1e-15 m nuclear scattering scale.
    const char* verdict_el = "far too big";
    const char* verdict_grav = "far too small";

    std::string body;
    if (opts.json_format()) {
        json doc{{"field_intensity", num6(intensity)},
                 {"electrostatic",
                  {{"k_constant", num6(k_el)}, {"radius_m", num6(r_el)}, {"verdict", verdict_el}}},
                 {"gravitational",
                  {{"k_constant", num6(k_grav)},
                   {"radius_m", num6(r_grav)},
                   {"verdict", verdict_grav}}}};
        body = doc.dump(2) + "\n";
    } else {
        body = "quantity,value,verdict\n";
        body += "field_intensity," + num(intensity) + ",\n";
        body += "k_electrostatic," + num(k_el) + ",\n";
        body += "r_n_electrostatic," + num(r_el) + "," + verdict_el + "\n";
        body += "k_gravitational," + num(k_grav) + ",\n";
        body += "r_n_gravitational," + num(r_grav) + "," + verdict_grav + "\n";
    }
    return emit(opts.out_path, body);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hydrodyn - dual-model hydrogen calculator"};
    app.require_subcommand(1);

    CommonOpts calibrate_opts, spectrum_opts, decay_opts, ensemble_opts, baseline_opts,
        compare_opts, bulk_opts, nuclear_opts;

    auto* calibrate = app.add_subcommand("calibrate", "Calibrated model parameters");
    calibrate_opts.attach(calibrate);

    auto* spectrum = app.add_subcommand("spectrum", "Spectral line table");
    spectrum_opts.attach(spectrum);
    int sp_n = 0, sp_m = 0, sp_n_max = 8;
    spectrum->add_option("--n", sp_n, "Lower level filter (omit for all)");
    spectrum->add_option("--m", sp_m, "Single upper level (requires --n)");
    spectrum->add_option("--n-max", sp_n_max, "Largest upper level")->capture_default_str();

    auto* decay = app.add_subcommand("decay-trace", "Deterministic decay trace");
    decay_opts.attach(decay);
    int dt_n = 1, dt_m = 2, dt_periods = 10;
    double dt_probe = 0.5;
    long dt_steps = 10000;
    decay->add_option("--n", dt_n, "Initial level")->capture_default_str();
    decay->add_option("--m", dt_m, "Final level (m > n)")->capture_default_str();
    decay->add_option("--periods", dt_periods, "Emission interval in whole periods tau0")
        ->capture_default_str();
    decay->add_option("--probe-r", dt_probe, "Probe radius as a fraction of R0")
        ->capture_default_str();
    decay->add_option("--steps", dt_steps, "Integration steps (>= 10000)")->capture_default_str();

    auto* ensemble = app.add_subcommand("ensemble", "Boltzmann excitation dataset");
    ensemble_opts.attach(ensemble);
    std::vector<double> en_temps;
    int en_n_max = 200;
    double en_lo = 0.01, en_hi = 0.95;
    ensemble->add_option("--temps", en_temps, "Temperatures [K]")->delimiter(',');
    ensemble->add_option("--n-max", en_n_max, "Largest excitation level")->capture_default_str();
    ensemble->add_option("--lo", en_lo, "Low transition-band threshold")->capture_default_str();
    ensemble->add_option("--hi", en_hi, "High transition-band threshold")->capture_default_str();

    auto* baseline = app.add_subcommand("baseline", "Energy ladders of both models");
    baseline_opts.attach(baseline);
    int bl_n_max = 10;
    baseline->add_option("--n-max", bl_n_max, "Ladder depth")->capture_default_str();

    auto* compare = app.add_subcommand("compare", "Ladders plus zero-frequency radii");
    compare_opts.attach(compare);
    int cp_n_max = 10;
    compare->add_option("--n-max", cp_n_max, "Ladder depth")->capture_default_str();

    auto* bulk = app.add_subcommand("bulk", "Bulk volume checks (gas and liquid)");
    bulk_opts.attach(bulk);

    auto* nuclear = app.add_subcommand("nuclear", "Nuclear field constants and radius estimates");
    nuclear_opts.attach(nuclear);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "hydrodyn: " << e.what() << "\n";
        return kExitInvalid;
    }

    if (calibrate->parsed()) return cmd_calibrate(calibrate_opts);
    if (spectrum->parsed()) return cmd_spectrum(spectrum_opts, sp_n, sp_m, sp_n_max);
    if (decay->parsed())
        return cmd_decay_trace(decay_opts, dt_n, dt_m, dt_periods, dt_probe, dt_steps);
    if (ensemble->parsed()) return cmd_ensemble(ensemble_opts, en_temps, en_n_max, en_lo, en_hi);
    if (baseline->parsed()) return ladder_report(baseline_opts, bl_n_max, false);
    if (compare->parsed()) return ladder_report(compare_opts, cp_n_max, true);
    if (bulk->parsed()) return cmd_bulk(bulk_opts);
    if (nuclear->parsed()) return cmd_nuclear(nuclear_opts);
    return fail("no subcommand given");
}
