#include "sedlab/experiments.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "sedlab/errors.hpp"
#include "sedlab/pilot_wave.hpp"
#include "sedlab/quantum.hpp"
#include "sedlab/slit.hpp"
#include "sedlab/spectral.hpp"
#include "sedlab/version.hpp"

namespace sedlab {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

/* locale-independent, 17 significant digits: round-trips a double exactly */
std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

double parse_double(const ExperimentConfig& cfg, const std::string& key, double fallback) {
    const auto it = cfg.parameters.find(key);
    if (it == cfg.parameters.end())
        return fallback;
    const std::string& v = it->second;
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        throw ConfigError("key '" + key + "': cannot parse '" + v + "' as a number");
    return out;
}

std::size_t parse_size(const ExperimentConfig& cfg, const std::string& key, std::size_t fallback) {
    const auto it = cfg.parameters.find(key);
    if (it == cfg.parameters.end())
        return fallback;
    const std::string& v = it->second;
    std::size_t out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        throw ConfigError("key '" + key + "': cannot parse '" + v + "' as a positive integer");
    return out;
}

std::string parse_string(const ExperimentConfig& cfg, const std::string& key,
                         const std::string& fallback) {
    const auto it = cfg.parameters.find(key);
    return it == cfg.parameters.end() ? fallback : it->second;
}

std::vector<double> parse_double_list(const ExperimentConfig& cfg, const std::string& key,
                                      const std::string& fallback) {
    const std::string raw = parse_string(cfg, key, fallback);
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0.0;
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw ConfigError("key '" + key + "': empty list entry");
        const std::string t = item.substr(b, e - b + 1);
        const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
        if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
            throw ConfigError("key '" + key + "': cannot parse '" + t + "' as a number");
        out.push_back(v);
    }
    if (out.empty())
        throw ConfigError("key '" + key + "': empty list");
    return out;
}

void atomic_write(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f)
            throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

struct ExperimentResult {
    std::string csv;
    json summary;
    bool pass = true;
};

PhysicalParticle natural_particle(double mass, double beta) {
    if (!(mass > 0.0))
        throw std::domain_error("mass must be positive");
    if (!(beta > -1.0 && beta < 1.0))
        throw std::domain_error("beta must lie in (-1, 1)");
    return PhysicalParticle{mass, beta};
}

ExperimentResult run_debroglie(const ExperimentConfig& cfg) {
    const double beta = parse_double(cfg, "beta", 0.0);
    const double mass = parse_double(cfg, "mass", 1.0);
    const double beat_periods = parse_double(cfg, "beat_periods", 8.0);
    const double samples_per_carrier = parse_double(cfg, "samples_per_carrier", 32.0);

    const PhysicalParticle particle = natural_particle(mass, beta);
    const UnitSystem units = UnitSystem::natural();
    SplitMix64 rng(cfg.seed);
    const PilotWaveParams params = random_pilot_wave_params(particle, units, rng);
    const Grid1D grid = recommended_spectral_grid(params, beat_periods, samples_per_carrier);
    const SampledField field = synthesize_field(params, grid, 0.0);

    const double measured = measure_de_broglie(field);
    const double analytic = de_broglie_wavelength(particle, units);
    const double rel = std::fabs(measured - analytic) / analytic;
    const bool ok = rel < 1e-2;

    ExperimentResult r;
    std::ostringstream csv;
    csv << "beta,mass,lambda_analytic,lambda_measured,rel_error\n"
        << fmt(beta) << ',' << fmt(mass) << ',' << fmt(analytic) << ','
        << fmt(measured) << ',' << fmt(rel) << '\n';
    r.csv = csv.str();
    r.summary["beta"] = beta;
    r.summary["mass"] = mass;
    r.summary["beat_periods"] = beat_periods;
    r.summary["samples_per_carrier"] = samples_per_carrier;
    r.summary["theta1"] = params.theta1;
    r.summary["theta2"] = params.theta2;
    r.summary["grid_points"] = grid.n_points;
    r.summary["lambda_analytic"] = analytic;
    r.summary["lambda_measured"] = measured;
    r.summary["rel_error"] = rel;
    r.summary["check_lambda_match"] = ok;
    r.pass = ok;
    return r;
}

ExperimentResult run_dispersion(const ExperimentConfig& cfg) {
    const double beta = parse_double(cfg, "beta", 0.5);
    const double carrier_beta = parse_double(cfg, "carrier_beta", 0.05);
    const std::size_t levels = parse_size(cfg, "levels", 3);
    const double ppw = parse_double(cfg, "points_per_wavelength", 20.0);
    const double periods = parse_double(cfg, "modulation_periods", 2.0);
    const double mass = parse_double(cfg, "mass", 1.0);
    if (levels < 2)
        throw ConfigError("dispersion needs at least 2 refinement levels");

    const UnitSystem units = UnitSystem::natural();
    SplitMix64 rng(cfg.seed);

    // full product wave against the light-speed equation, refined grids
    const PhysicalParticle particle = natural_particle(mass, beta);
    const PilotWaveParams params = random_pilot_wave_params(particle, units, rng);
    const double lambda_fast = 2.0 * std::numbers::pi / (params.envelope_k() + params.k_b);
    const double domain = periods * params.lambda_b;

    std::vector<double> hs, residuals;
    for (std::size_t lev = 0; lev < levels; ++lev) {
        const double target_h = lambda_fast / (ppw * std::pow(2.0, static_cast<double>(lev)));
        const std::size_t n = static_cast<std::size_t>(std::ceil(domain / target_h)) + 1;
        const Grid1D grid{0.0, domain, n};
        hs.push_back(grid.spacing());
        residuals.push_back(wave_equation_residual(params, grid, 0.0, units.c(),
                                                   FieldComponent::full));
    }
    std::vector<double> orders;
    for (std::size_t i = 1; i < residuals.size(); ++i)
        orders.push_back(std::log2(residuals[i - 1] / residuals[i]));

    // carrier factor against its slow phase speed c^2/v on a fixed grid
    const PhysicalParticle slow = natural_particle(mass, carrier_beta);
    const PilotWaveParams slow_params = random_pilot_wave_params(slow, units, rng);
    const double slow_domain = 4.0 * slow_params.lambda_b;
    const std::size_t slow_n =
        static_cast<std::size_t>(std::ceil(slow_domain / (slow_params.lambda_b / 500.0))) + 1;
    const Grid1D slow_grid{0.0, slow_domain, slow_n};
    const double carrier_speed = units.c() / carrier_beta;  // c^2 / v
    const double carrier_residual = wave_equation_residual(slow_params, slow_grid, 0.0,
                                                           carrier_speed, FieldComponent::carrier);

    double order_mean = 0.0;
    for (double o : orders) order_mean += o;
    order_mean /= static_cast<double>(orders.size());
    const bool order_ok = std::fabs(order_mean - 2.0) <= 0.3;
    const bool carrier_ok = carrier_residual < 0.01;

    ExperimentResult r;
    std::ostringstream csv;
    csv << "level,h,residual,observed_order\n";
    for (std::size_t i = 0; i < residuals.size(); ++i) {
        csv << i << ',' << fmt(hs[i]) << ',' << fmt(residuals[i]) << ',';
        if (i > 0)
            csv << fmt(orders[i - 1]);
        csv << '\n';
    }
    r.csv = csv.str();
    r.summary["beta"] = beta;
    r.summary["carrier_beta"] = carrier_beta;
    r.summary["levels"] = levels;
    r.summary["points_per_wavelength"] = ppw;
    r.summary["modulation_periods"] = periods;
    r.summary["mass"] = mass;
    r.summary["theta1"] = params.theta1;
    r.summary["theta2"] = params.theta2;
    r.summary["carrier_theta1"] = slow_params.theta1;
    r.summary["carrier_theta2"] = slow_params.theta2;
    r.summary["order_mean"] = order_mean;
    r.summary["carrier_residual"] = carrier_residual;
    r.summary["check_order_second"] = order_ok;
    r.summary["check_carrier_residual"] = carrier_ok;
    r.pass = order_ok && carrier_ok;
    return r;
}

ExperimentResult run_tise(const ExperimentConfig& cfg) {
    const std::string kind = parse_string(cfg, "potential", "");
    const double mass = parse_double(cfg, "mass", 1.0);
    const std::size_t n_states = parse_size(cfg, "n_states", 5);
    const std::size_t n_points = parse_size(cfg, "n_points", 2001);
    const double stiffness = parse_double(cfg, "stiffness", 1.0);

    Potential pot;
    double x_min_def = 0.0, x_max_def = 1.0;
    if (kind == "infinite_well") {
        pot = Potential::infinite_well();
    } else if (kind == "free") {
        pot = Potential::free_particle();
    } else if (kind == "harmonic") {
        pot = Potential::harmonic(stiffness);
        x_min_def = -10.0;
        x_max_def = 10.0;
    } else {
        throw ConfigError("key 'potential': expected infinite_well, harmonic, or free, got '"
                          + kind + "'");
    }
    const double x_min = parse_double(cfg, "x_min", x_min_def);
    const double x_max = parse_double(cfg, "x_max", x_max_def);
    const Grid1D grid{x_min, x_max, n_points};

    const EnergySpectrum spec = solve_tise(pot, grid, mass, n_states);

    const double L = x_max - x_min;
    const auto analytic = [&](std::size_t n1) {  // n1 is 1-based
        if (pot.kind == PotentialKind::harmonic)
            return (static_cast<double>(n1) - 0.5) * std::sqrt(stiffness / mass);
        const double npi = static_cast<double>(n1) * std::numbers::pi;
        return npi * npi / (2.0 * mass * L * L);
    };

    double e1_rel = 0.0, max_abs = 0.0;
    std::ostringstream csv;
    csv << "n,energy,analytic,abs_error,rel_error\n";
    for (std::size_t j = 0; j < n_states; ++j) {
        const double e = spec.eigenvalues[j];
        const double a = analytic(j + 1);
        const double abs_err = std::fabs(e - a);
        const double rel_err = abs_err / std::fabs(a);
        if (j == 0)
            e1_rel = rel_err;
        if (j < 5)
            max_abs = std::max(max_abs, abs_err);
        csv << (j + 1) << ',' << fmt(e) << ',' << fmt(a) << ','
            << fmt(abs_err) << ',' << fmt(rel_err) << '\n';
    }

    const bool ok = pot.kind == PotentialKind::harmonic ? max_abs < 1e-3 : e1_rel < 1e-3;

    ExperimentResult r;
    r.csv = csv.str();
    r.summary["potential"] = kind;
    r.summary["mass"] = mass;
    r.summary["n_states"] = n_states;
    r.summary["n_points"] = n_points;
    r.summary["x_min"] = x_min;
    r.summary["x_max"] = x_max;
    r.summary["stiffness"] = stiffness;
    r.summary["e1"] = spec.eigenvalues[0];
    r.summary["e1_analytic"] = analytic(1);
    r.summary["e1_rel_error"] = e1_rel;
    r.summary["check_spectrum"] = ok;
    r.pass = ok;
    return r;
}

ExperimentResult run_kg_limit(const ExperimentConfig& cfg) {
    const std::vector<double> masses = parse_double_list(cfg, "masses", "1,10,100");
    const double stiffness = parse_double(cfg, "stiffness", 1.0);
    const double x_min = parse_double(cfg, "x_min", -10.0);
    const double x_max = parse_double(cfg, "x_max", 10.0);
    const std::size_t n_points = parse_size(cfg, "n_points", 2001);

    const Potential pot = Potential::harmonic(stiffness);
    const Grid1D grid{x_min, x_max, n_points};
    const std::vector<LimitRow> rows = nonrelativistic_limit_study(pot, grid, masses);

    bool monotone = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (!(rows[i].residual < rows[i - 1].residual))
            monotone = false;
    const double ratio = rows.size() > 1 ? rows.back().residual / rows.front().residual : 0.0;
    // the decade-ratio check only makes sense across a wide mass span
    const bool ratio_applicable = rows.size() > 1 && masses.back() / masses.front() >= 100.0;
    const bool ratio_ok = !ratio_applicable || ratio < 0.1;
    const bool trend_ok = rows.size() < 2 || monotone;

    ExperimentResult r;
    std::ostringstream csv;
    csv << "mass,ground_energy,beta_sq,residual\n";
    for (const LimitRow& row : rows)
        csv << fmt(row.mass) << ',' << fmt(row.ground_energy) << ','
            << fmt(row.beta_sq) << ',' << fmt(row.residual) << '\n';
    r.csv = csv.str();
    r.summary["masses"] = parse_string(cfg, "masses", "1,10,100");
    r.summary["stiffness"] = stiffness;
    r.summary["x_min"] = x_min;
    r.summary["x_max"] = x_max;
    r.summary["n_points"] = n_points;
    r.summary["residual_first"] = rows.front().residual;
    r.summary["residual_last"] = rows.back().residual;
    r.summary["residual_ratio"] = ratio;
    r.summary["check_monotone_decay"] = trend_ok;
    r.summary["check_decade_ratio"] = ratio_ok;
    r.pass = trend_ok && ratio_ok;
    return r;
}

ExperimentResult run_double_slit(const ExperimentConfig& cfg) {
    const double beta = parse_double(cfg, "beta", 0.0);
    const double mass = parse_double(cfg, "mass", 1.0);
    const double d_over = parse_double(cfg, "d_over_lambda", 10.0);
    const double a_over = parse_double(cfg, "a_over_lambda", 1.0);
    const double L_over = parse_double(cfg, "L_over_lambda", 1000.0);
    const double hw_over = parse_double(cfg, "half_width_over_lambda", 400.0);
    const std::size_t n_particles = parse_size(cfg, "n_particles", 50000);
    const std::size_t n_modes = parse_size(cfg, "n_modes", 16);
    const double spread = parse_double(cfg, "angular_spread", 0.0);
    const std::size_t bins = parse_size(cfg, "bins", 160);
    const std::size_t aperture_samples = parse_size(cfg, "aperture_samples", 64);
    const std::string state_name = parse_string(cfg, "slit_state", "both_open");

    SlitState state;
    if (state_name == "both_open") state = SlitState::both_open;
    else if (state_name == "slit1_only") state = SlitState::slit1_only;
    else if (state_name == "slit2_only") state = SlitState::slit2_only;
    else throw ConfigError("key 'slit_state': expected both_open, slit1_only, or slit2_only");

    const PhysicalParticle particle = natural_particle(mass, beta);
    const double lambda = de_broglie_wavelength(particle, UnitSystem::natural());
    SlitGeometry geom;
    geom.slit_separation = d_over * lambda;
    geom.slit_width = a_over * lambda;
    geom.screen_distance = L_over * lambda;
    geom.detector_half_width = hw_over * lambda;
    geom.aperture_samples_per_slit = aperture_samples;

    const ArrivalHistogram hist = run_double_slit(geom, particle, n_particles, n_modes,
                                                  spread, cfg.seed, bins, state);

    const double expected_spacing = lambda * geom.screen_distance / geom.slit_separation;
    const bool enough_counts = hist.total >= 10000;
    const bool wide_enough = hist.bin_edges.front() <= -3.5 * expected_spacing &&
                             hist.bin_edges.back() >= 3.5 * expected_spacing;

    ExperimentResult r;
    std::ostringstream csv;
    csv << "bin_left,bin_right,bin_center,count\n";
    for (std::size_t i = 0; i < hist.counts.size(); ++i)
        csv << fmt(hist.bin_edges[i]) << ',' << fmt(hist.bin_edges[i + 1]) << ','
            << fmt(0.5 * (hist.bin_edges[i] + hist.bin_edges[i + 1])) << ','
            << hist.counts[i] << '\n';
    r.csv = csv.str();

    r.summary["beta"] = beta;
    r.summary["mass"] = mass;
    r.summary["lambda_b"] = lambda;
    r.summary["d_over_lambda"] = d_over;
    r.summary["a_over_lambda"] = a_over;
    r.summary["L_over_lambda"] = L_over;
    r.summary["half_width_over_lambda"] = hw_over;
    r.summary["n_particles"] = n_particles;
    r.summary["n_modes"] = n_modes;
    r.summary["angular_spread"] = spread;
    r.summary["bins"] = bins;
    r.summary["aperture_samples"] = aperture_samples;
    r.summary["slit_state"] = state_name;
    r.summary["fraunhofer_ok"] = geom.fraunhofer_ok(lambda);
    r.summary["expected_fringe_spacing"] = expected_spacing;

    if (!enough_counts || !wide_enough) {
        r.summary["checks_skipped_low_stats"] = true;
        r.pass = true;
        return r;
    }
    r.summary["checks_skipped_low_stats"] = false;

    const double visibility = fringe_visibility(hist, expected_spacing);
    r.summary["visibility"] = visibility;
    if (state == SlitState::both_open) {
        const double spacing = measure_fringe_spacing(hist, expected_spacing);
        const double spacing_rel = std::fabs(spacing - expected_spacing) / expected_spacing;
        r.summary["fringe_spacing"] = spacing;
        r.summary["fringe_spacing_rel_error"] = spacing_rel;
        r.summary["lambda_from_fringes"] =
            spacing * geom.slit_separation / geom.screen_distance;
        const bool vis_ok = visibility >= 0.6;
        const bool spacing_ok = spacing_rel <= 0.05;
        bool chi_ok = true;
        if (spread == 0.0) {
            const ChiSquareResult c2 = chi_square_against_pattern(hist, geom, lambda);
            r.summary["chi2"] = c2.chi2;
            r.summary["chi2_dof"] = c2.dof;
            r.summary["chi2_per_dof"] = c2.per_dof;
            chi_ok = c2.per_dof < 2.0;
            r.summary["check_chi2"] = chi_ok;
        }
        r.summary["check_visibility"] = vis_ok;
        r.summary["check_fringe_spacing"] = spacing_ok;
        r.pass = vis_ok && spacing_ok && chi_ok;
    } else {
        // a covered slit must not show fringes at the two-slit spacing
        const bool vis_ok = visibility <= 0.2;
        r.summary["check_visibility"] = vis_ok;
        r.pass = vis_ok;
    }
    return r;
}

ExperimentResult dispatch(const ExperimentConfig& cfg) {
    if (cfg.experiment == "debroglie") return run_debroglie(cfg);
    if (cfg.experiment == "dispersion") return run_dispersion(cfg);
    if (cfg.experiment == "tise") return run_tise(cfg);
    if (cfg.experiment == "kg_limit") return run_kg_limit(cfg);
    if (cfg.experiment == "double_slit") return run_double_slit(cfg);
    throw ConfigError("unknown experiment '" + cfg.experiment + "'");
}

}

int run_experiment(const ExperimentConfig& config) {
    const fs::path out_dir(config.output_path);
    fs::create_directories(out_dir);
    // a failed run must leave no result.csv behind, stale ones included
    std::error_code ec;
    fs::remove(out_dir / "result.csv", ec);
    fs::remove(out_dir / "summary.json", ec);

    const auto t0 = std::chrono::steady_clock::now();
    ExperimentResult res = dispatch(config);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;

    json summary;
    summary["experiment"] = config.experiment;
    summary["seed"] = config.seed;
    summary["version"] = version_string;
    for (auto& [key, value] : res.summary.items())
        summary[key] = value;
    summary["elapsed_seconds"] = elapsed.count();
    summary["checks_passed"] = res.pass;

    atomic_write(out_dir / "summary.json", summary.dump(2) + "\n");
    atomic_write(out_dir / "result.csv", res.csv);
    return res.pass ? 0 : 1;
}

}
