// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace spinwave::cli {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitIo = 2;

struct RunConfig {
    // common
    std::vector<double> d_values = {0.1, 1.0, 10.0, 20.0, 100.0};
    double sweep_min = 0.1;
    double sweep_max = 100.0;
    int sweep_points = 0;  // > 0 activates the log-spaced sweep (curve)
    int grid_n = 512;
    double strictness = 10.0;
    std::string out_path;        // empty = stdout
    std::string format = "csv";  // csv | json
    std::string preset;          // "" | "rb87"

    // physical parameters (feasibility / simulate); NaN = take from preset
    double gamma_eg_mhz = nan_marker();
    double gamma_es_mhz = nan_marker();
    double d_bar = nan_marker();
    double omega_w_tau = nan_marker();  // pulse area Omega_W^max * tau_W
    double tau_d_us = nan_marker();
    double length_mm = nan_marker();
    double splitting_ghz = 0.0;  // ground-state splitting for phase matching

    // simulate
    std::string spin_source = "optimal";  // flat | exponential | optimal | file
    double alpha_l = nan_marker();        // exponential source decay; NaN = from tau_w_approx
    std::string spin_file;
    std::string summary_path;  // JSON summary sink (empty = stdout)
    double omega_r_ratio = 100.0;  // Omega_R in units of gamma_eg (1 + d) / 2
    std::string direction = "backward";
    double t_end = 15.0;
    double tol = 1e-9;

    static double nan_marker();
};

int cmd_table(const RunConfig& config);
int cmd_shapes(const RunConfig& config);
int cmd_curve(const RunConfig& config);
int cmd_feasibility(const RunConfig& config);
int cmd_simulate(const RunConfig& config);

/// Parse arguments (including an optional JSON config file; flags override
/// its values) and dispatch. Returns a process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace spinwave::cli
