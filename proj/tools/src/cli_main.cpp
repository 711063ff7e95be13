// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"

namespace spinwave::cli {

namespace {

bool parse_sweep(const std::string& text, RunConfig& rc) {
    double lo = 0.0, hi = 0.0;
    int points = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &lo, &hi, &points, &extra) != 3) return false;
    rc.sweep_min = lo;
    rc.sweep_max = hi;
    rc.sweep_points = points;
    return true;
}

// JSON config file with the same keys as the long options; flags given on the
// command line take precedence because they are parsed afterwards.
bool load_config(const std::string& path, RunConfig& rc) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read config file '" << path << "'\n";
        return false;
    }
    nlohmann::json cfg;
    try {
        in >> cfg;
    } catch (const std::exception& e) {
        std::cerr << "error: config file is not valid JSON: " << e.what() << "\n";
        return false;
    }
    if (!cfg.is_object()) {
        std::cerr << "error: config file must hold a JSON object\n";
        return false;
    }
    try {
        for (const auto& [key, value] : cfg.items()) {
            if (key == "d") {
                rc.d_values.clear();
                if (value.is_array())
                    for (const auto& v : value) rc.d_values.push_back(v.get<double>());
                else
                    rc.d_values.push_back(value.get<double>());
            } else if (key == "d_sweep") {
                if (!parse_sweep(value.get<std::string>(), rc)) throw std::invalid_argument("d_sweep");
            } else if (key == "grid") {
                rc.grid_n = value.get<int>();
            } else if (key == "out") {
                rc.out_path = value.get<std::string>();
            } else if (key == "format") {
                rc.format = value.get<std::string>();
            } else if (key == "strictness") {
                rc.strictness = value.get<double>();
            } else if (key == "preset") {
                rc.preset = value.get<std::string>();
            } else if (key == "gamma_eg_mhz") {
                rc.gamma_eg_mhz = value.get<double>();
            } else if (key == "gamma_es_mhz") {
                rc.gamma_es_mhz = value.get<double>();
            } else if (key == "d_bar") {
                rc.d_bar = value.get<double>();
            } else if (key == "omega_w_tau") {
                rc.omega_w_tau = value.get<double>();
            } else if (key == "tau_d_us") {
                rc.tau_d_us = value.get<double>();
            } else if (key == "length_mm") {
                rc.length_mm = value.get<double>();
            } else if (key == "splitting_ghz") {
                rc.splitting_ghz = value.get<double>();
            } else if (key == "spin") {
                rc.spin_source = value.get<std::string>();
            } else if (key == "alpha_l") {
                rc.alpha_l = value.get<double>();
            } else if (key == "spin_file") {
                rc.spin_file = value.get<std::string>();
            } else if (key == "summary") {
                rc.summary_path = value.get<std::string>();
            } else if (key == "omega_r_ratio") {
                rc.omega_r_ratio = value.get<double>();
            } else if (key == "direction") {
                rc.direction = value.get<std::string>();
            } else if (key == "t_end") {
                rc.t_end = value.get<double>();
            } else if (key == "tol") {
                rc.tol = value.get<double>();
            } else {
                std::cerr << "error: unknown config key '" << key << "'\n";
                return false;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: bad config value: " << e.what() << "\n";
        return false;
    }
    return true;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    RunConfig rc;

    // The config file provides defaults, so it must be read before CLI11
    // binds the remaining flags over it.
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--config") == 0 && i + 1 < argc) {
            if (!load_config(argv[i + 1], rc)) return kExitConfig;
        } else if (std::strncmp(argv[i], "--config=", 9) == 0) {
            if (!load_config(argv[i] + 9, rc)) return kExitConfig;
        }
    }

    CLI::App app{"spin-wave shaping and retrieval-efficiency toolkit"};
    app.require_subcommand(1);

    std::string sweep_text, config_dummy;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_dummy, "JSON config file (flags override its values)");
        sub->add_option("--d", rc.d_values, "optical depth value(s), comma separated")
            ->delimiter(',');
        sub->add_option("--d-sweep", sweep_text, "log-spaced depth sweep min:max:points");
        sub->add_option("--grid", rc.grid_n, "quadrature grid size");
        sub->add_option("--out", rc.out_path, "output path (default: stdout)");
        sub->add_option("--format", rc.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--strictness", rc.strictness,
                        "factor interpreting the protocol's inequality margins");
        sub->add_option("--preset", rc.preset, "named parameter preset (rb87)");
    };
    auto add_physical = [&](CLI::App* sub) {
        sub->add_option("--gamma-eg-mhz", rc.gamma_eg_mhz, "e-g decay rate, linear MHz");
        sub->add_option("--gamma-es-mhz", rc.gamma_es_mhz, "e-s decay rate, linear MHz");
        sub->add_option("--d-bar", rc.d_bar, "optical depth of the e-s transition");
        sub->add_option("--omega-w-tau", rc.omega_w_tau, "write pulse area Omega_W^max tau_W");
        sub->add_option("--tau-d-us", rc.tau_d_us, "write detection window, microseconds");
        sub->add_option("--length-mm", rc.length_mm, "sample length, millimeters");
        sub->add_option("--splitting-ghz", rc.splitting_ghz,
                        "ground-state splitting for the phase-matching margin, linear GHz");
        sub->add_option("--omega-r-ratio", rc.omega_r_ratio,
                        "read Rabi frequency in units of gamma_eg (1+d)/2");
    };

    CLI::App* table = app.add_subcommand("table", "efficiency comparison per optical depth");
    add_common(table);
    CLI::App* shapes = app.add_subcommand("shapes", "optimal and best-fit exponential spin shapes");
    add_common(shapes);
    CLI::App* curve = app.add_subcommand("curve", "efficiencies over a log-spaced depth sweep");
    add_common(curve);
    CLI::App* feas = app.add_subcommand("feasibility", "physical-units working-point report");
    add_common(feas);
    add_physical(feas);
    CLI::App* sim = app.add_subcommand("simulate", "time-domain read simulation");
    add_common(sim);
    add_physical(sim);
    sim->add_option("--spin", rc.spin_source, "initial spin wave: flat|exponential|optimal|file");
    sim->add_option("--alpha-l", rc.alpha_l, "decay constant for --spin exponential");
    sim->add_option("--spin-file", rc.spin_file, "amplitude samples, one 're [im]' line per node");
    sim->add_option("--summary", rc.summary_path, "JSON summary path (default: stdout)");
    sim->add_option("--direction", rc.direction, "retrieval direction")
        ->check(CLI::IsMember({"forward", "backward"}));
    sim->add_option("--t-end", rc.t_end, "integration horizon, units of 1/gamma_eg");
    sim->add_option("--tol", rc.tol, "integrator tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (!sweep_text.empty() && !parse_sweep(sweep_text, rc)) {
        std::cerr << "error: --d-sweep expects min:max:points\n";
        return kExitConfig;
    }
    if (sim->parsed() && sim->count("--grid") == 0 && rc.grid_n == 512) {
        rc.grid_n = 128;  // simulation default; reproduction commands keep 512
    }

    if (table->parsed()) return cmd_table(rc);
    if (shapes->parsed()) return cmd_shapes(rc);
    if (curve->parsed()) return cmd_curve(rc);
    if (feas->parsed()) return cmd_feasibility(rc);
    if (sim->parsed()) return cmd_simulate(rc);
    return kExitConfig;
}

}  // namespace spinwave::cli
