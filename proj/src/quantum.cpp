#include "sedlab/quantum.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sedlab/errors.hpp"

namespace sedlab {

Potential Potential::infinite_well() {
    Potential p;
    p.kind = PotentialKind::infinite_well;
    return p;
}

Potential Potential::harmonic(double stiffness) {
    if (!(stiffness > 0.0))
        throw std::domain_error("harmonic stiffness must be positive");
    Potential p;
    p.kind = PotentialKind::harmonic;
    p.stiffness = stiffness;
    return p;
}

Potential Potential::free_particle() {
    Potential p;
    p.kind = PotentialKind::free_particle;
    return p;
}

Potential Potential::tabulated(std::vector<double> samples) {
    for (double v : samples)
        if (!std::isfinite(v))
            throw std::domain_error("tabulated potential must be finite");
    Potential p;
    p.kind = PotentialKind::tabulated;
    p.samples = std::move(samples);
    return p;
}

double Potential::value(double x) const {
    switch (kind) {
        case PotentialKind::infinite_well:
        case PotentialKind::free_particle:
            return 0.0;
        case PotentialKind::harmonic:
            return 0.5 * stiffness * x * x;
        case PotentialKind::tabulated:
        default:
            throw std::logic_error("tabulated potential is indexed on a grid, not evaluated");
    }
}

namespace {

double potential_at(const Potential& pot, const SampledField& phi, std::size_t i) {
    if (pot.kind == PotentialKind::tabulated)
        return pot.samples[i];
    return pot.value(phi.x(i));
}

double fastest_wavenumber(const PilotWaveParams& p, FieldComponent component) {
    switch (component) {
        case FieldComponent::carrier:  return p.k_b;
        case FieldComponent::envelope: return p.envelope_k();
        case FieldComponent::full:
        default:                       return p.envelope_k() + p.k_b;
    }
}

}

double wave_equation_residual(const PilotWaveParams& params, const Grid1D& grid,
                              double t, double speed, FieldComponent component) {
    grid.validate();
    if (grid.n_points < 3)
        throw std::invalid_argument("residual needs at least 3 grid points");
    if (!(speed > 0.0))
        throw std::domain_error("wave speed must be positive");

    const double h = grid.spacing();
    const double k_fast = fastest_wavenumber(params, component);
    if (!(k_fast > 0.0))
        throw std::domain_error("selected component has no spatial structure");
    if (2.0 * std::numbers::pi / k_fast < 16.0 * h)
        throw ResolutionError("grid under-resolves the field: need >= 16 points per wavelength");

    const double c = params.light_speed();
    const double dt = h / (10.0 * c);

    const SampledField f0 = synthesize_field(params, grid, t, component);
    const SampledField fm = synthesize_field(params, grid, t - dt, component);
    const SampledField fp = synthesize_field(params, grid, t + dt, component);

    const double inv_h2 = 1.0 / (h * h);
    const double inv_dt2 = 1.0 / (dt * dt);
    const double inv_u2 = 1.0 / (speed * speed);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 1; i + 1 < grid.n_points; ++i) {
        const double xx = (f0.values[i + 1] - 2.0 * f0.values[i] + f0.values[i - 1]) * inv_h2;
        const double tt = (fp.values[i] - 2.0 * f0.values[i] + fm.values[i]) * inv_dt2;
        const double r = xx - inv_u2 * tt;
        num += r * r;
        den += xx * xx;
    }
    if (den == 0.0)
        throw std::domain_error("field snapshot has no spatial curvature on this grid");
    return std::sqrt(num / den);
}

double klein_gordon_residual(const SampledField& phi, double sigma,
                             const Potential& potential, double mass) {
    phi.validate();
    if (phi.size() < 3)
        throw std::invalid_argument("residual needs at least 3 samples");
    if (!(mass > 0.0))
        throw std::domain_error("mass must be positive");
    if (potential.kind == PotentialKind::tabulated && potential.samples.size() != phi.size())
        throw std::invalid_argument("tabulated potential is not aligned with the field grid");

    const double inv_h2 = 1.0 / (phi.spacing * phi.spacing);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 1; i + 1 < phi.size(); ++i) {
        const double lap = (phi.values[i + 1] - 2.0 * phi.values[i] + phi.values[i - 1]) * inv_h2;
        const double s = sigma - potential_at(potential, phi, i);
        const double r = lap + (s * s - mass * mass) * phi.values[i];
        num += r * r;
        den += phi.values[i] * phi.values[i];
    }
    if (den == 0.0)
        throw std::domain_error("field is zero on the interior");
    return std::sqrt(num / den);
}

EnergySpectrum solve_tise(const Potential& potential, const Grid1D& grid,
                          double mass, std::size_t n_states) {
    grid.validate();
    if (grid.n_points < 3)
        throw std::invalid_argument("eigensolve needs at least 3 grid points");
    if (!(mass > 0.0))
        throw std::domain_error("mass must be positive");
    if (n_states < 1)
        throw std::invalid_argument("n_states must be positive");
    if (n_states >= grid.n_points / 4)
        throw ResolutionError("n_states too large for this grid: need n_states < n_points/4");
    if (potential.kind == PotentialKind::tabulated && potential.samples.size() != grid.n_points)
        throw std::invalid_argument("tabulated potential is not aligned with the grid");

    const lapack_int m = static_cast<lapack_int>(grid.n_points - 2);
    const double h = grid.spacing();
    const double kin = 1.0 / (mass * h * h);

    std::vector<double> diag(m), offdiag(m > 1 ? m - 1 : 1);
    for (lapack_int i = 0; i < m; ++i) {
        double v;
        if (potential.kind == PotentialKind::tabulated)
            v = potential.samples[static_cast<std::size_t>(i) + 1];
        else
            v = potential.value(grid.x(static_cast<std::size_t>(i) + 1));
        diag[i] = kin + v;
        if (i + 1 < m)
            offdiag[i] = -0.5 * kin;
    }

    const lapack_int iu = static_cast<lapack_int>(n_states);
    std::vector<double> w(m), z(static_cast<std::size_t>(m) * n_states);
    std::vector<lapack_int> isuppz(2 * n_states);
    lapack_int found = 0;
    const double abstol = 2.0 * LAPACKE_dlamch('S');
    const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', m,
                                           diag.data(), offdiag.data(),
                                           0.0, 0.0, 1, iu, abstol, &found,
                                           w.data(), z.data(), m, isuppz.data());
    if (info != 0)
        throw std::runtime_error("tridiagonal eigensolver failed, info = " + std::to_string(info));
    if (found < iu)
        throw std::runtime_error("eigensolver returned fewer states than requested");

    EnergySpectrum spec;
    spec.eigenvalues.assign(w.begin(), w.begin() + iu);
    spec.eigenfunctions.resize(n_states);
    const double inv_sqrt_h = 1.0 / std::sqrt(h);
    for (std::size_t j = 0; j < n_states; ++j) {
        std::vector<double>& f = spec.eigenfunctions[j];
        f.assign(grid.n_points, 0.0);
        const double* col = z.data() + j * static_cast<std::size_t>(m);
        std::size_t imax = 0;
        double vmax = 0.0;
        for (lapack_int i = 0; i < m; ++i) {
            // dstevr returns unit 2-norm vectors; rescale to discrete L2 norm 1
            f[static_cast<std::size_t>(i) + 1] = col[i] * inv_sqrt_h;
            if (std::fabs(col[i]) > vmax) {
                vmax = std::fabs(col[i]);
                imax = static_cast<std::size_t>(i) + 1;
            }
        }
        if (f[imax] < 0.0)
            for (double& v : f) v = -v;
    }
    return spec;
}

std::vector<LimitRow> nonrelativistic_limit_study(const Potential& potential,
                                                  const Grid1D& grid,
                                                  const std::vector<double>& masses) {
    if (masses.empty())
        throw std::invalid_argument("mass list must not be empty");
    for (std::size_t i = 0; i < masses.size(); ++i) {
        if (!(masses[i] > 0.0))
            throw std::invalid_argument("masses must be positive");
        if (i > 0 && !(masses[i] > masses[i - 1]))
            throw std::invalid_argument("masses must be strictly ascending");
    }

    std::vector<LimitRow> rows;
    rows.reserve(masses.size());
    for (double mass : masses) {
        const EnergySpectrum spec = solve_tise(potential, grid, mass, 1);
        const double e0 = spec.eigenvalues[0];
        SampledField phi;
        phi.values = spec.eigenfunctions[0];
        phi.origin = grid.x_min;
        phi.spacing = grid.spacing();
        const double sigma = mass + e0;  // m c^2 + E0, natural units
        const double res = klein_gordon_residual(phi, sigma, potential, mass);
        rows.push_back({mass, e0, 2.0 * e0 / mass, res});
    }
    return rows;
}

}
