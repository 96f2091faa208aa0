#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sedlab/field.hpp"
#include "sedlab/grid.hpp"
#include "sedlab/particle.hpp"
#include "sedlab/rng.hpp"

namespace sedlab {

/* Two slits centered at -d/2 (slit 1) and +d/2 (slit 2) in the aperture plane,
 * detector line at distance L. Everything is 2D (one transverse axis). */
struct SlitGeometry {
    double slit_separation = 10.0;   // d, center to center
    double slit_width = 1.0;         // a
    double screen_distance = 1000.0; // L
    double detector_half_width = 400.0;
    std::size_t aperture_samples_per_slit = 64;

    void validate() const;
    /* far-field sanity diagnostic, not an error: L well beyond d^2/lambda */
    bool fraunhofer_ok(double wavelength) const {
        return screen_distance > 10.0 * slit_separation * slit_separation / wavelength;
    }
};

enum class SlitState { both_open, slit1_only, slit2_only };

/* One stochastic draw of the incident background: n plane-wave modes with
 * independent phases in [0, 2*pi) and incidence angles in [-spread, spread]. */
struct FieldRealization {
    std::vector<double> mode_phases;
    std::vector<double> mode_angles;
    std::uint64_t seed = 0;

    std::size_t n_modes() const { return mode_phases.size(); }
};

FieldRealization draw_realization(std::size_t n_modes, double angular_spread,
                                  std::uint64_t seed);
/* Same draw from a live generator (phases first, then angles); used when the
 * stream must continue into the arrival draw. */
FieldRealization draw_realization_from(std::size_t n_modes, double angular_spread,
                                       SplitMix64& rng);

struct ArrivalHistogram {
    std::vector<double> bin_edges;        // ascending, uniform
    std::vector<std::uint64_t> counts;    // size = bin_edges.size() - 1
    std::uint64_t total = 0;
    std::uint64_t seed = 0;
};

/* Scalar Huygens summation: each open slit contributes aperture_samples_per_slit
 * secondary sources; the realization's modes set the incident amplitude at each
 * source; propagation to the detector uses the paraxial quadratic phase
 * k (y - y_s)^2 / (2L) (a common k L factor is dropped) and 1/sqrt(r) spreading
 * with the exact distance r. Returns |amplitude|^2 on the detector grid. */
SampledField diffracted_intensity(const SlitGeometry& geometry, double wavelength,
                                  const FieldRealization& realization,
                                  const Grid1D& detector_grid,
                                  SlitState state = SlitState::both_open);

/* Inverse-CDF draw from the intensity treated as a piecewise-linear density. */
double sample_arrival(const SampledField& intensity, SplitMix64& rng);

/* One particle = one realization = one arrival; per-particle streams seeded by
 * substream_seed(master_seed, i). Wavelength is the particle's modulation
 * wavelength in natural units. Bit-exact reproducible from master_seed. */
ArrivalHistogram run_double_slit(const SlitGeometry& geometry,
                                 const PhysicalParticle& particle,
                                 std::size_t n_particles, std::size_t n_modes,
                                 double angular_spread, std::uint64_t master_seed,
                                 std::size_t bins,
                                 SlitState state = SlitState::both_open);

/* (I_max - I_min)/(I_max + I_min) from mean counts in narrow windows around the
 * expected central peaks (0, +-s) and troughs (+-s/2, +-3s/2); window halfwidth
 * s/16. Needs >= 1e4 counts and >= 3 expected fringes across the detector. */
double fringe_visibility(const ArrivalHistogram& histogram, double expected_spacing);

/* (y_3 - y_-3)/6 from windowed argmax bins around m*s, m = -3..3. */
double measure_fringe_spacing(const ArrivalHistogram& histogram, double expected_spacing);

struct ChiSquareResult {
    double chi2 = 0.0;
    std::size_t dof = 0;
    double per_dof = 0.0;
};

/* Pearson chi-square of the histogram against the analytic far-field two-slit
 * pattern cos^2(pi d y / lambda L) * sinc^2(pi a y / lambda L) * L/sqrt(L^2+y^2),
 * integrated over each bin, one fitted amplitude, bins with expected counts
 * >= min_expected. Both slits open, zero angular spread. */
ChiSquareResult chi_square_against_pattern(const ArrivalHistogram& histogram,
                                           const SlitGeometry& geometry,
                                           double wavelength,
                                           double min_expected = 20.0);

}
