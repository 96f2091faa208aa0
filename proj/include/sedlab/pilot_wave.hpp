#pragma once

#include "sedlab/field.hpp"
#include "sedlab/grid.hpp"
#include "sedlab/particle.hpp"
#include "sedlab/rng.hpp"
#include "sedlab/units.hpp"

namespace sedlab {

/* Frequency/wavenumber bundle of the Doppler-split wave pair around the
 * Compton frequency, plus the phases and amplitude of the product-form wave
 *
 *   phi(x, t) = amplitude * cos(omega_z t - k_b x + theta1)
 *                         * cos(omega_b t - gamma k_c x + theta2)
 *
 * with omega_z = gamma omega_c, omega_b = gamma beta omega_c, k_b = gamma beta k_c.
 * The first factor is the carrier (phase speed c^2/v along x), the second the
 * envelope (speed v). lambda_b is the spatial modulation wavelength 2*pi/k_b;
 * it is +inf for a particle at rest. */
struct PilotWaveParams {
    double omega_c = 0.0;
    double omega_z = 0.0;
    double omega_b = 0.0;
    double k_c = 0.0;
    double k_b = 0.0;
    double lambda_c = 0.0;
    double lambda_b = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double amplitude = 2.0;
    double beta = 0.0;
    double gamma = 1.0;

    double envelope_k() const { return gamma * k_c; }
    /* speed of light in the unit system the params were built with */
    double light_speed() const { return omega_c / k_c; }
};

/* omega_c = m c^2 / hbar */
double compton_frequency(const PhysicalParticle& particle, const UnitSystem& units);

struct DopplerPair {
    double plus;
    double minus;
};

/* omega_z +- omega_b = gamma(1 +- beta) omega_c; both positive below c */
DopplerPair doppler_frequencies(const PhysicalParticle& particle,
                                const UnitSystem& units = UnitSystem::natural());

/* gamma k_c +- k_b; satisfies omega/k = c component-wise */
DopplerPair wave_numbers(const PhysicalParticle& particle,
                         const UnitSystem& units = UnitSystem::natural());

/* Builds the full parameter bundle; phases are wrapped into [0, 2*pi). */
PilotWaveParams make_pilot_wave_params(const PhysicalParticle& particle,
                                       const UnitSystem& units,
                                       double theta1, double theta2,
                                       double amplitude = 2.0);

/* Same, with theta1, theta2 ~ Uniform[0, 2*pi) drawn from rng (theta1 first). */
PilotWaveParams random_pilot_wave_params(const PhysicalParticle& particle,
                                         const UnitSystem& units,
                                         SplitMix64& rng,
                                         double amplitude = 2.0);

/* The product-form wave value at (x, t). */
double pilot_wave_value(const PilotWaveParams& params, double x, double t);

/* Selects the full product or one of its factors (amplitude carried along). */
enum class FieldComponent { full, carrier, envelope };

double component_value(const PilotWaveParams& params, FieldComponent component,
                       double x, double t);

/* Snapshot of the wave on a grid at time t. */
SampledField synthesize_field(const PilotWaveParams& params, const Grid1D& grid, double t,
                              FieldComponent component = FieldComponent::full);

/* h / p with p = gamma m |v|; throws for v = 0 (the modulation disappears at rest). */
double de_broglie_wavelength(const PhysicalParticle& particle, const UnitSystem& units);

}
