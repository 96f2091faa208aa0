#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "sedlab/errors.hpp"
#include "sedlab/spectral.hpp"

using namespace sedlab;

namespace {

constexpr double pi = std::numbers::pi;

SampledField cosine_field(double k, double phase, double spacing, std::size_t n) {
    SampledField f;
    f.spacing = spacing;
    f.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        f.values[i] = std::cos(k * spacing * static_cast<double>(i) + phase);
    return f;
}

SampledField snapshot(double beta, double beat_periods = 8.0,
                      double samples_per_carrier = 32.0, std::uint64_t seed = 11) {
    const UnitSystem nat = UnitSystem::natural();
    SplitMix64 rng(seed);
    const PilotWaveParams p = random_pilot_wave_params({1.0, beta}, nat, rng);
    const Grid1D g = recommended_spectral_grid(p, beat_periods, samples_per_carrier);
    return synthesize_field(p, g, 0.0);
}

}

TEST_CASE("pure cosine peak") {
    // 64 points per period, 8 periods, k = 5
    const double k = 5.0;
    const double spacing = (2.0 * pi / k) / 64.0;
    const SampledField f = cosine_field(k, 0.0, spacing, 512);
    const auto peaks = dominant_wavenumbers(f, 1);
    REQUIRE(peaks.size() == 1);
    CHECK(std::fabs(peaks[0].wavenumber - k) < 0.5 * peaks[0].bin_width);
    CHECK(peaks[0].power > 0.0);
}

TEST_CASE("degenerate fields") {
    SampledField zero;
    zero.spacing = 0.1;
    zero.values.assign(256, 0.0);
    CHECK(dominant_wavenumbers(zero, 3).empty());

    SampledField flat;
    flat.spacing = 0.1;
    flat.values.assign(256, 2.5);
    CHECK(dominant_wavenumbers(flat, 3).empty());

    SampledField tiny;
    tiny.spacing = 0.1;
    tiny.values.assign(8, 1.0);
    CHECK_THROWS_AS(dominant_wavenumbers(tiny, 1), std::invalid_argument);
    CHECK_THROWS_AS(dominant_wavenumbers(zero, 0), std::invalid_argument);
}

TEST_CASE("wave pair peaks") {
    const UnitSystem nat = UnitSystem::natural();
    SplitMix64 rng(11);
    const PilotWaveParams p = random_pilot_wave_params({1.0, 0.5}, nat, rng);
    const Grid1D g = recommended_spectral_grid(p);
    const SampledField f = synthesize_field(p, g, 0.0);

    const auto peaks = dominant_wavenumbers(f, 2);
    REQUIRE(peaks.size() == 2);
    const double k_hi = std::max(peaks[0].wavenumber, peaks[1].wavenumber);
    const double k_lo = std::min(peaks[0].wavenumber, peaks[1].wavenumber);
    const double bw = peaks[0].bin_width;
    const double k_plus = p.envelope_k() + p.k_b;
    const double k_minus = p.envelope_k() - p.k_b;
    CHECK(std::fabs(k_hi - k_plus) < bw);
    CHECK(std::fabs(k_lo - k_minus) < bw);
    // half-difference recovers the modulation, half-sum the fast scale
    CHECK(std::fabs(0.5 * (k_hi - k_lo) - p.k_b) < bw);
    CHECK(std::fabs(0.5 * (k_hi + k_lo) - p.envelope_k()) < bw);
}

TEST_CASE("de Broglie measurement") {
    const UnitSystem nat = UnitSystem::natural();
    const double l05 = de_broglie_wavelength({1.0, 0.5}, nat);
    const double l09 = de_broglie_wavelength({1.0, 0.9}, nat);
    CHECK(std::fabs(measure_de_broglie(snapshot(0.5)) - l05) / l05 < 0.01);
    CHECK(std::fabs(measure_de_broglie(snapshot(0.9)) - l09) / l09 < 0.01);
    // desk values
    CHECK(std::fabs(measure_de_broglie(snapshot(0.5)) - 10.8828) / 10.8828 < 0.01);
    CHECK(std::fabs(measure_de_broglie(snapshot(0.9)) - 3.0437) / 3.0437 < 0.01);
}

TEST_CASE("round trip across beta") {
    const UnitSystem nat = UnitSystem::natural();
    for (double beta : {0.1, 0.2, 0.3, 0.5, 0.7, 0.85, 0.95}) {
        const double analytic = de_broglie_wavelength({1.0, beta}, nat);
        const double measured = measure_de_broglie(snapshot(beta));
        CHECK(std::fabs(measured - analytic) / analytic < 0.01);
    }
}

TEST_CASE("window doubling does not hurt") {
    const UnitSystem nat = UnitSystem::natural();
    for (double beta : {0.2, 0.5}) {
        const double analytic = de_broglie_wavelength({1.0, beta}, nat);
        double prev = -1.0;
        for (double periods : {8.0, 16.0, 32.0}) {
            const double measured = measure_de_broglie(snapshot(beta, periods));
            const double err = std::fabs(measured - analytic) / analytic;
            if (prev >= 0.0)
                CHECK(err <= prev * 1.25 + 1e-9);  // monotone within noise
            prev = err;
        }
    }
}

TEST_CASE("resolution limit") {
    // a window sized for beta = 0.5 cannot split the pair at beta = 0.005
    const UnitSystem nat = UnitSystem::natural();
    SplitMix64 rng(13);
    const PilotWaveParams wide = random_pilot_wave_params({1.0, 0.5}, nat, rng);
    const Grid1D g = recommended_spectral_grid(wide);
    const PilotWaveParams slow = make_pilot_wave_params({1.0, 0.005}, nat, 0.3, 1.1);
    const SampledField f = synthesize_field(slow, g, 0.0);
    CHECK_THROWS_AS(measure_de_broglie(f), ResolutionError);
    try {
        measure_de_broglie(f);
    } catch (const ResolutionError& e) {
        CHECK(std::string(e.what()).find("beta") != std::string::npos);
    }

    // at rest there is nothing to resolve at all
    const PilotWaveParams rest = make_pilot_wave_params({1.0, 0.0}, nat, 0.0, 0.0);
    CHECK_THROWS_AS(recommended_spectral_grid(rest), std::domain_error);
}

TEST_CASE("Parseval guard") {
    for (double beta : {0.1, 0.5, 0.9}) {
        const PowerSpectrum ps = power_spectrum(snapshot(beta));
        REQUIRE(ps.signal_power > 0.0);
        CHECK(std::fabs(ps.spectral_power - ps.signal_power) / ps.signal_power < 1e-10);
    }
    const SampledField f = cosine_field(3.0, 0.4, 0.05, 700);  // odd-ish length too
    const PowerSpectrum ps = power_spectrum(f);
    CHECK(std::fabs(ps.spectral_power - ps.signal_power) / ps.signal_power < 1e-10);
}
