#include "sedlab/pilot_wave.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sedlab {

namespace {

double wrap_phase(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(theta, two_pi);
    if (w < 0.0) w += two_pi;
    return w;
}

}

double compton_frequency(const PhysicalParticle& particle, const UnitSystem& units) {
    particle.validate(units);
    return particle.mass * units.c() * units.c() / units.hbar();
}

DopplerPair doppler_frequencies(const PhysicalParticle& particle, const UnitSystem& units) {
    const double wc = compton_frequency(particle, units);
    const double g = particle.gamma(units);
    const double b = particle.beta(units);
    const double wz = g * wc;
    const double wb = g * b * wc;
    return {wz + wb, wz - wb};
}

DopplerPair wave_numbers(const PhysicalParticle& particle, const UnitSystem& units) {
    const double kc = compton_frequency(particle, units) / units.c();
    const double g = particle.gamma(units);
    const double b = particle.beta(units);
    const double kb = g * b * kc;
    return {g * kc + kb, g * kc - kb};
}

PilotWaveParams make_pilot_wave_params(const PhysicalParticle& particle,
                                       const UnitSystem& units,
                                       double theta1, double theta2,
                                       double amplitude) {
    particle.validate(units);
    if (!std::isfinite(theta1) || !std::isfinite(theta2))
        throw std::domain_error("phases must be finite");
    if (!std::isfinite(amplitude))
        throw std::domain_error("amplitude must be finite");

    PilotWaveParams p;
    p.beta = particle.beta(units);
    p.gamma = particle.gamma(units);
    p.omega_c = compton_frequency(particle, units);
    p.omega_z = p.gamma * p.omega_c;
    p.omega_b = p.gamma * p.beta * p.omega_c;
    p.k_c = p.omega_c / units.c();
    p.k_b = p.gamma * p.beta * p.k_c;
    p.lambda_c = 2.0 * std::numbers::pi / p.k_c;
    p.lambda_b = p.k_b > 0.0 ? 2.0 * std::numbers::pi / p.k_b
                             : std::numeric_limits<double>::infinity();
    p.theta1 = wrap_phase(theta1);
    p.theta2 = wrap_phase(theta2);
    p.amplitude = amplitude;
    return p;
}

PilotWaveParams random_pilot_wave_params(const PhysicalParticle& particle,
                                         const UnitSystem& units,
                                         SplitMix64& rng,
                                         double amplitude) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double t1 = rng.uniform(0.0, two_pi);
    const double t2 = rng.uniform(0.0, two_pi);
    return make_pilot_wave_params(particle, units, t1, t2, amplitude);
}

double pilot_wave_value(const PilotWaveParams& p, double x, double t) {
    return p.amplitude * std::cos(p.omega_z * t - p.k_b * x + p.theta1)
                       * std::cos(p.omega_b * t - p.envelope_k() * x + p.theta2);
}

double component_value(const PilotWaveParams& p, FieldComponent component,
                       double x, double t) {
    switch (component) {
        case FieldComponent::carrier:
            return p.amplitude * std::cos(p.omega_z * t - p.k_b * x + p.theta1);
        case FieldComponent::envelope:
            return p.amplitude * std::cos(p.omega_b * t - p.envelope_k() * x + p.theta2);
        case FieldComponent::full:
        default:
            return pilot_wave_value(p, x, t);
    }
}

SampledField synthesize_field(const PilotWaveParams& params, const Grid1D& grid, double t,
                              FieldComponent component) {
    grid.validate();
    SampledField f;
    f.origin = grid.x_min;
    f.spacing = grid.spacing();
    f.time_stamp = t;
    f.values.resize(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i)
        f.values[i] = component_value(params, component, grid.x(i), t);
    return f;
}

double de_broglie_wavelength(const PhysicalParticle& particle, const UnitSystem& units) {
    particle.validate(units);
    if (particle.velocity == 0.0)
        throw std::domain_error("zero velocity: the modulation wavelength diverges");
    return 2.0 * std::numbers::pi * units.hbar() / particle.momentum(units);
}

}
