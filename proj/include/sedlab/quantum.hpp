#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sedlab/field.hpp"
#include "sedlab/grid.hpp"
#include "sedlab/pilot_wave.hpp"

namespace sedlab {

/* This module works in natural units: hbar = c = 1. */

enum class PotentialKind { infinite_well, harmonic, free_particle, tabulated };

/* infinite_well / free_particle: V = 0 inside the grid box, Dirichlet walls at
 * the boundary (no arbitrary finite wall height). harmonic: V = stiffness x^2 / 2.
 * tabulated: samples aligned to the grid the operation runs on. */
struct Potential {
    PotentialKind kind = PotentialKind::free_particle;
    double stiffness = 1.0;
    std::vector<double> samples;

    static Potential infinite_well();
    static Potential harmonic(double stiffness);
    static Potential free_particle();
    static Potential tabulated(std::vector<double> samples);

    /* value of an analytic kind at x; tabulated values are indexed, not evaluated */
    double value(double x) const;
};

struct EnergySpectrum {
    std::vector<double> eigenvalues;                  // ascending
    std::vector<std::vector<double>> eigenfunctions;  // full grid incl. boundary zeros,
                                                      // discrete L2 norm 1, max-|.| sample positive
    std::optional<double> sigma;                      // relativistic energy when relevant
};

/* RMS of d2phi/dx2 - (1/speed^2) d2phi/dt2 over interior points, normalized by
 * the RMS of d2phi/dx2. Central differences; time derivative from snapshots at
 * t +- dt with dt = h/(10 c). The full product field propagates at c exactly;
 * only the carrier factor satisfies the slow-speed (c^2/v) equation, so the
 * component selector picks what is being checked. */
double wave_equation_residual(const PilotWaveParams& params, const Grid1D& grid,
                              double t, double speed,
                              FieldComponent component = FieldComponent::full);

/* RMS of  D2 phi + [(sigma - V)^2 - m^2] phi  over interior points (natural
 * units), normalized by the RMS of phi. */
double klein_gordon_residual(const SampledField& phi, double sigma,
                             const Potential& potential, double mass);

/* Lowest n_states eigenpairs of -(1/2m) D2 + V with Dirichlet boundaries on the
 * grid; second-order symmetric tridiagonal discretization. */
EnergySpectrum solve_tise(const Potential& potential, const Grid1D& grid,
                          double mass, std::size_t n_states);

struct LimitRow {
    double mass = 0.0;
    double ground_energy = 0.0;
    double beta_sq = 0.0;  // 2 E0 / (m c^2), the characteristic beta^2
    double residual = 0.0;
};

/* For each mass: ground-state solve, then the relativistic residual at
 * sigma = m c^2 + E0. The residual tracks beta_sq as the masses grow. */
std::vector<LimitRow> nonrelativistic_limit_study(const Potential& potential,
                                                  const Grid1D& grid,
                                                  const std::vector<double>& masses);

}
