// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "output.hpp"
#include "spinwave/dynamics.hpp"
#include "spinwave/retrieval.hpp"
#include "spinwave/write_process.hpp"

namespace spinwave::cli {

using ordered_json = nlohmann::ordered_json;

double RunConfig::nan_marker() { return std::numeric_limits<double>::quiet_NaN(); }

namespace {

bool given(double v) { return !std::isnan(v); }

double pick(double flag_value, double preset_value) {
    return given(flag_value) ? flag_value : preset_value;
}

// Rb-87 D2 reference parameters: branching-weighted decay rates, matched
// optical depths, a weak write pulse and a 0.1 us detection window.
struct Physical {
    AtomicEnsemble ensemble;
    double omega_w_tau;
    double tau_d;
    double splitting;
};

Physical resolve_physical(const RunConfig& c, double d_value) {
    const bool rb87 = (c.preset == "rb87");
    if (!c.preset.empty() && !rb87) throw std::invalid_argument("unknown preset '" + c.preset + "'");
    const double gamma_eg =
        units::mhz_to_rad_per_s(pick(c.gamma_eg_mhz, 6.067 / 12.0));
    const double gamma_es =
        units::mhz_to_rad_per_s(pick(c.gamma_es_mhz, 6.067 / 8.0));
    const double d_bar = pick(c.d_bar, 20.0);
    const double length = 1e-3 * pick(c.length_mm, 3.0);
    const double tau_d = 1e-6 * pick(c.tau_d_us, 0.1);
    const double omega_w_tau = pick(c.omega_w_tau, 0.01);
    const double splitting = units::mhz_to_rad_per_s(1e3 * c.splitting_ghz);
    return Physical{AtomicEnsemble(d_value, d_bar, gamma_eg, gamma_es, length), omega_w_tau,
                    tau_d, splitting};
}

void require_repro_grid(const RunConfig& c) {
    if (c.grid_n < 16) throw std::invalid_argument("reproduction commands need --grid >= 16");
}

void require_depths(const std::vector<double>& ds) {
    if (ds.empty()) throw std::invalid_argument("need at least one optical depth");
    for (const double d : ds)
        if (!(d > 0.0)) throw std::invalid_argument("optical depths must be positive");
}

int emit(const RunConfig& c, const std::string& text) {
    if (!write_text(c.out_path, text)) {
        std::cerr << "error: cannot write output to '" << c.out_path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}

ordered_json regime_json(const RegimeReport& report) {
    ordered_json arr = ordered_json::array();
    for (const auto& cond : report.conditions) {
        arr.push_back(ordered_json{{"name", cond.name},
                                   {"expression", cond.expression},
                                   {"left", cond.left},
                                   {"right", cond.right},
                                   {"margin", cond.margin},
                                   {"satisfied", cond.satisfied}});
    }
    return arr;
}

}  // namespace

int cmd_table(const RunConfig& c) {
    return guarded([&] {
        require_repro_grid(c);
        require_depths(c.d_values);
        const SpatialGrid grid = make_grid(c.grid_n, QuadratureRule::GaussLegendre);
        std::vector<EfficiencyReport> rows;
        rows.reserve(c.d_values.size());
        for (const double d : c.d_values) rows.push_back(efficiency_report(d, grid));

        std::string text;
        if (c.format == "json") {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows)
                arr.push_back(ordered_json{{"d", r.d},
                                           {"eta_fwd", r.eta_fwd},
                                           {"eta_offres", r.eta_offres},
                                           {"eta_res", r.eta_res},
                                           {"eta_star", r.eta_star},
                                           {"alpha_l", r.alpha_l_used},
                                           {"gamma_tau_w", r.tau_w_used}});
            text = ordered_json{{"grid", c.grid_n}, {"rows", std::move(arr)}}.dump(2) + "\n";
        } else {
            text = "d,eta_fwd,eta_offres,eta_res,eta_star\n";
            for (const auto& r : rows)
                text += compact(r.d) + "," + fixed4(r.eta_fwd) + "," + fixed4(r.eta_offres) + "," +
                        fixed4(r.eta_res) + "," + fixed4(r.eta_star) + "\n";
        }
        return emit(c, text);
    });
}

int cmd_shapes(const RunConfig& c) {
    return guarded([&] {
        require_repro_grid(c);
        require_depths(c.d_values);
        const SpatialGrid grid = make_grid(c.grid_n, QuadratureRule::GaussLegendre);

        std::string csv = "d,x,s_opt,s_exp\n";
        ordered_json arr = ordered_json::array();
        for (const double d : c.d_values) {
            const OptimalSpin opt = optimal_spin_wave(d, grid);
            const ExponentialFit fit = best_fit_exponential(d, grid);
            const SpinWave expw = exponential_spin_wave(grid, fit.alpha_L);
            std::complex<double> overlap{0.0, 0.0};
            for (int i = 0; i < grid.size(); ++i)
                overlap += grid.weights[i] * std::conj(opt.spin.amplitude[i]) * expw.amplitude[i];
            if (c.format == "json") {
                ordered_json entry{{"d", d},
                                   {"eta_star", opt.eta_star},
                                   {"alpha_l_fit", fit.alpha_L},
                                   {"eta_fit", fit.eta},
                                   {"overlap", std::norm(overlap)}};
                entry["x"] = grid.nodes;
                ordered_json s_opt = ordered_json::array(), s_exp = ordered_json::array();
                for (int i = 0; i < grid.size(); ++i) {
                    s_opt.push_back(opt.spin.amplitude[i].real());
                    s_exp.push_back(expw.amplitude[i].real());
                }
                entry["s_opt"] = s_opt;
                entry["s_exp"] = s_exp;
                arr.push_back(std::move(entry));
            } else {
                for (int i = 0; i < grid.size(); ++i) {
                    char line[96];
                    std::snprintf(line, sizeof(line), "%g,%.6f,%.6f,%.6f\n", d, grid.nodes[i],
                                  opt.spin.amplitude[i].real(), expw.amplitude[i].real());
                    csv += line;
                }
            }
        }
        if (c.format == "json")
            return emit(c, ordered_json{{"grid", c.grid_n}, {"shapes", std::move(arr)}}.dump(2) + "\n");
        return emit(c, csv);
    });
}

int cmd_curve(const RunConfig& c) {
    return guarded([&] {
        require_repro_grid(c);
        const int points = c.sweep_points > 0 ? c.sweep_points : 25;
        if (points < 2) throw std::invalid_argument("sweep needs at least 2 points");
        if (!(c.sweep_min > 0.0) || !(c.sweep_max > c.sweep_min))
            throw std::invalid_argument("sweep range must satisfy 0 < min < max");
        const SpatialGrid grid = make_grid(c.grid_n, QuadratureRule::GaussLegendre);

        std::string csv = "d,eta_star,eta_res,eta_fwd,eta_offres\n";
        ordered_json arr = ordered_json::array();
        const double log_lo = std::log(c.sweep_min), log_hi = std::log(c.sweep_max);
        for (int i = 0; i < points; ++i) {
            const double d = std::exp(log_lo + (log_hi - log_lo) * i / (points - 1));
            const EfficiencyReport r = efficiency_report(d, grid);
            if (c.format == "json") {
                arr.push_back(ordered_json{{"d", r.d},
                                           {"eta_star", r.eta_star},
                                           {"eta_res", r.eta_res},
                                           {"eta_fwd", r.eta_fwd},
                                           {"eta_offres", r.eta_offres}});
            } else {
                csv += compact(r.d) + "," + fixed4(r.eta_star) + "," + fixed4(r.eta_res) + "," +
                       fixed4(r.eta_fwd) + "," + fixed4(r.eta_offres) + "\n";
            }
        }
        if (c.format == "json")
            return emit(c, ordered_json{{"grid", c.grid_n}, {"rows", std::move(arr)}}.dump(2) + "\n");
        return emit(c, csv);
    });
}

int cmd_feasibility(const RunConfig& c) {
    return guarded([&] {
        require_repro_grid(c);
        const bool explicit_params = given(c.gamma_eg_mhz) && given(c.gamma_es_mhz) &&
                                     given(c.d_bar) && given(c.omega_w_tau) && given(c.tau_d_us);
        if (c.preset.empty() && !explicit_params)
            throw std::invalid_argument(
                "feasibility needs --preset rb87 or the full set of physical parameters");
        const double d = c.d_values.size() == 1 ? c.d_values.front() : 20.0;
        const Physical phys = resolve_physical(c, d);
        const AtomicEnsemble& ens = phys.ensemble;

        const double gamma_tau = tau_w_approx(ens.d);
        const double tau_w = gamma_tau / ens.gamma_eg;
        const PulseSpec write_pulse = write_rising_exponential(phys.omega_w_tau / tau_w, tau_w);
        const WritePreparation prep = prepare_coherence_exponential(ens, write_pulse);
        const double n_w = write_photon_number(ens, prep, phys.tau_d);

        const double omega_threshold = 0.5 * ens.gamma_eg * (1.0 + ens.d);
        const double omega_r = c.omega_r_ratio * omega_threshold;
        const PulseSpec read_pulse = pi_read_pulse(omega_r);
        const RegimeReport regimes =
            validate_regimes(ens, write_pulse, phys.tau_d, read_pulse, c.strictness, phys.splitting);

        const SpatialGrid grid = make_grid(c.grid_n, QuadratureRule::GaussLegendre);
        const RetrievalKernel kernel = build_kernel(ens.d, grid);
        const double eta_res =
            efficiency(kernel, heralded_spin_wave(prep, grid), Direction::Backward);
        const double eta_star = optimal_spin_wave(ens.d, grid).eta_star;

        ordered_json report{
            {"preset", c.preset.empty() ? "custom" : c.preset},
            {"d", ens.d},
            {"d_bar", ens.d_bar},
            {"gamma_eg_rad_per_s", ens.gamma_eg},
            {"gamma_es_rad_per_s", ens.gamma_es},
            {"length_m", ens.length},
            {"gamma_tau_w", gamma_tau},
            {"tau_w_s", tau_w},
            {"omega_w_max_rad_per_s", write_pulse.omega_max},
            {"omega_w_tau", phys.omega_w_tau},
            {"theta0_mag", prep.theta0_mag},
            {"alpha_l", prep.alpha_L},
            {"excited_fraction", prep.excited_fraction},
            {"tau_d_s", phys.tau_d},
            {"n_w", n_w},
            {"omega_r_threshold_rad_per_s", omega_threshold},
            {"omega_r_threshold_mhz", units::rad_per_s_to_mhz(omega_threshold)},
            {"omega_r_used_rad_per_s", omega_r},
            {"pi_pulse_loss", pi_pulse_transfer_loss(ens, omega_r)},
            {"eta_res_predicted", eta_res},
            {"eta_star", eta_star},
            {"eta_offres", flat_efficiency_analytic(ens.d)},
            {"strictness", c.strictness},
            {"regimes", regime_json(regimes)},
            {"regimes_all_satisfied", regimes.all_satisfied()},
        };
        return emit(c, report.dump(2) + "\n");
    });
}

int cmd_simulate(const RunConfig& c) {
    return guarded([&] {
        if (c.grid_n < 2) throw std::invalid_argument("--grid must be at least 2");
        const double d = c.d_values.size() == 1 ? c.d_values.front() : 20.0;
        const Physical phys = resolve_physical(c, d);
        const AtomicEnsemble& ens = phys.ensemble;
        const SpatialGrid grid = make_grid(c.grid_n, QuadratureRule::GaussLegendre);

        SpinWave spin = flat_spin_wave(grid);
        double alpha_used = std::numeric_limits<double>::quiet_NaN();
        if (c.spin_source == "flat") {
        } else if (c.spin_source == "exponential") {
            alpha_used = given(c.alpha_l) ? c.alpha_l : alpha_from_write(d, tau_w_approx(d));
            spin = exponential_spin_wave(grid, alpha_used);
        } else if (c.spin_source == "optimal") {
            spin = optimal_spin_wave(d, grid).spin;
        } else if (c.spin_source == "file") {
            std::ifstream in(c.spin_file);
            if (!in) throw std::invalid_argument("cannot open spin file '" + c.spin_file + "'");
            std::vector<std::complex<double>> amp;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#') continue;
                std::istringstream ls(line);
                double re = 0.0, im = 0.0;
                if (!(ls >> re)) throw std::invalid_argument("malformed spin file line: " + line);
                ls >> im;  // optional imaginary part
                amp.emplace_back(re, im);
            }
            if (static_cast<int>(amp.size()) != grid.size())
                throw std::invalid_argument("spin file must provide exactly one amplitude per grid node");
            spin = spin_wave_from_samples(grid, std::move(amp), true);
        } else {
            throw std::invalid_argument("unknown spin source '" + c.spin_source + "'");
        }

        Direction direction = Direction::Backward;
        if (c.direction == "forward")
            direction = Direction::Forward;
        else if (c.direction != "backward")
            throw std::invalid_argument("direction must be 'forward' or 'backward'");

        const double omega_threshold = 0.5 * ens.gamma_eg * (1.0 + ens.d);
        const double omega_r = c.omega_r_ratio * omega_threshold;
        const PulseSpec read = omega_r > 0.0 ? pi_read_pulse(omega_r, direction)
                                             : read_square(0.0, 1.0 / ens.gamma_eg, direction);
        const EmissionRecord rec = simulate_read(ens, spin, read, c.t_end, c.tol);

        std::string csv = "t,flux,emitted,loss,residual\n";
        for (size_t i = 0; i < rec.time.size(); ++i)
            csv += sci6(rec.time[i]) + "," + sci6(rec.flux[i]) + "," + sci6(rec.emitted[i]) + "," +
                   sci6(rec.loss[i]) + "," + sci6(rec.residual[i]) + "\n";
        const int code = emit(c, csv);
        if (code != kExitOk) return code;

        const double eta_reference = efficiency(build_kernel(d, grid), spin, direction);
        ordered_json summary{
            {"d", d},
            {"grid", c.grid_n},
            {"spin_source", c.spin_source},
            {"omega_r_rad_per_s", read.omega_max},
            {"omega_r_over_threshold", c.omega_r_ratio},
            {"tau_r_s", read.duration},
            {"direction", c.direction},
            {"t_end", c.t_end},
            {"tol", c.tol},
            {"final_eta", rec.total_efficiency},
            {"eta_kernel_reference", eta_reference},
            {"residual_excitation", rec.residual_excitation},
            {"budget_residual", rec.max_budget_error},
            {"steps", rec.steps},
        };
        if (given(alpha_used)) summary["alpha_l"] = alpha_used;
        if (!write_text(c.summary_path, summary.dump(2) + "\n")) {
            std::cerr << "error: cannot write summary to '" << c.summary_path << "'\n";
            return kExitIo;
        }
        return kExitOk;
    });
}

}  // namespace spinwave::cli
