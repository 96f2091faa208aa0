#pragma once

#include <cstddef>
#include <vector>

#include "sedlab/field.hpp"
#include "sedlab/grid.hpp"
#include "sedlab/pilot_wave.hpp"

namespace sedlab {

struct SpectrumPeak {
    double wavenumber = 0.0;  // refined by parabolic interpolation on log power
    double power = 0.0;       // raw bin power at the peak, |X_k|^2 / N^2
    double bin_width = 0.0;   // 2*pi / (N * spacing)
};

struct PowerSpectrum {
    std::vector<double> power;    // bins k = 0 .. N/2, |X_k|^2 / N^2
    double bin_width = 0.0;
    double signal_power = 0.0;    // sum of the squared Hann-windowed samples
    double spectral_power = 0.0;  // the same quantity from the transform side
};

/* Hann-windowed real FFT of the field. signal_power vs spectral_power is the
 * Parseval guard for the transform plumbing. Needs >= 16 samples. */
PowerSpectrum power_spectrum(const SampledField& field);

/* The `count` highest-power local maxima of the windowed power spectrum,
 * sorted by descending power. Constant (or zero) fields yield no peaks. */
std::vector<SpectrumPeak> dominant_wavenumbers(const SampledField& field, std::size_t count);

/* 2*pi / k_hat_b with k_hat_b = (k_hat_plus - k_hat_minus)/2 from the two
 * dominant peaks. Throws ResolutionError when the pair is not separated by
 * more than 4 spectral bins (window too short for this beta). */
double measure_de_broglie(const SampledField& field);

/* Grid resolving the fastest component with `samples_per_carrier` points per
 * wavelength, spanning `beat_periods` of the slowest scale (the modulation
 * wavelength or the red-shifted component, whichever is longer). */
Grid1D recommended_spectral_grid(const PilotWaveParams& params,
                                 double beat_periods = 8.0,
                                 double samples_per_carrier = 32.0);

}
