#include "sedlab/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sedlab/errors.hpp"

namespace sedlab {

PowerSpectrum power_spectrum(const SampledField& field) {
    field.validate();
    const std::size_t n = field.size();
    if (n < 16)
        throw std::invalid_argument("spectral analysis needs at least 16 samples");

    std::vector<double> in(n);
    double sig = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        // periodic Hann window
        const double w = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi *
                                               static_cast<double>(i) / static_cast<double>(n)));
        in[i] = w * field.values[i];
        sig += in[i] * in[i];
    }

    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                          reinterpret_cast<fftw_complex*>(out.data()),
                                          FFTW_ESTIMATE);
    if (!plan)
        throw std::runtime_error("fftw plan creation failed");
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    PowerSpectrum ps;
    ps.bin_width = 2.0 * std::numbers::pi / (static_cast<double>(n) * field.spacing);
    ps.power.resize(out.size());
    double spec = 0.0;
    const double nn = static_cast<double>(n) * static_cast<double>(n);
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double p = std::norm(out[k]);
        ps.power[k] = p / nn;
        // one-sided Parseval sum: interior bins carry the conjugate half too
        const double fold = (k == 0 || 2 * k == n) ? 1.0 : 2.0;
        spec += fold * p;
    }
    ps.signal_power = sig;
    ps.spectral_power = spec / static_cast<double>(n);
    return ps;
}

std::vector<SpectrumPeak> dominant_wavenumbers(const SampledField& field, std::size_t count) {
    const PowerSpectrum ps = power_spectrum(field);
    if (count == 0)
        throw std::invalid_argument("peak count must be positive");
    if (ps.signal_power == 0.0)
        return {};

    double pmax = 0.0;
    for (double p : ps.power) pmax = std::max(pmax, p);
    if (pmax == 0.0)
        return {};
    // rounding noise in an otherwise structureless spectrum is not a peak
    const double floor = 1e-24 * pmax;

    struct Cand { std::size_t k; double p; };
    std::vector<Cand> cands;
    for (std::size_t k = 1; k + 1 < ps.power.size(); ++k) {
        const double p = ps.power[k];
        if (p > ps.power[k - 1] && p >= ps.power[k + 1] && p > floor)
            cands.push_back({k, p});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.p != b.p) return a.p > b.p;
        return a.k < b.k;
    });
    if (cands.size() > count)
        cands.resize(count);

    std::vector<SpectrumPeak> peaks;
    peaks.reserve(cands.size());
    for (const Cand& c : cands) {
        double delta = 0.0;
        const double pl = ps.power[c.k - 1], pc = ps.power[c.k], pr = ps.power[c.k + 1];
        if (pl > 0.0 && pr > 0.0) {
            const double ll = std::log(pl), lc = std::log(pc), lr = std::log(pr);
            const double denom = ll - 2.0 * lc + lr;
            if (denom != 0.0)
                delta = 0.5 * (ll - lr) / denom;
            delta = std::clamp(delta, -0.5, 0.5);
        }
        peaks.push_back({(static_cast<double>(c.k) + delta) * ps.bin_width, pc, ps.bin_width});
    }
    return peaks;
}

double measure_de_broglie(const SampledField& field) {
    const auto peaks = dominant_wavenumbers(field, 2);

    auto unresolved = [&](double k_center, double bin_width) -> ResolutionError {
        std::ostringstream msg;
        msg << "wave pair not resolvable in this window";
        if (k_center > 0.0 && bin_width > 0.0)
            msg << "; minimum resolvable beta ~ " << (2.0 * bin_width / k_center)
                << " (need a longer window below that)";
        return ResolutionError(msg.str());
    };

    if (peaks.size() < 2) {
        const double kc = peaks.empty() ? 0.0 : peaks[0].wavenumber;
        const double bw = peaks.empty() ? 0.0 : peaks[0].bin_width;
        throw unresolved(kc, bw);
    }
    const double k_hi = std::max(peaks[0].wavenumber, peaks[1].wavenumber);
    const double k_lo = std::min(peaks[0].wavenumber, peaks[1].wavenumber);
    const double bw = peaks[0].bin_width;
    if (!((k_hi - k_lo) > 4.0 * bw))
        throw unresolved(0.5 * (k_hi + k_lo), bw);
    return 2.0 * std::numbers::pi / (0.5 * (k_hi - k_lo));
}

Grid1D recommended_spectral_grid(const PilotWaveParams& params,
                                 double beat_periods, double samples_per_carrier) {
    if (!(params.k_b > 0.0))
        throw std::domain_error("zero modulation wavenumber: nothing to resolve");
    if (!(beat_periods > 0.0) || !(samples_per_carrier > 0.0))
        throw std::invalid_argument("beat_periods and samples_per_carrier must be positive");

    const double k_plus = params.envelope_k() + params.k_b;
    const double k_minus = params.envelope_k() - params.k_b;
    const double lambda_fast = 2.0 * std::numbers::pi / k_plus;
    // the window must hold several periods of the slowest scale present
    double lambda_slow = params.lambda_b;
    if (k_minus > 0.0)
        lambda_slow = std::max(lambda_slow, 2.0 * std::numbers::pi / k_minus);

    const double span = beat_periods * lambda_slow;
    const double h = lambda_fast / samples_per_carrier;
    const std::size_t n = static_cast<std::size_t>(std::ceil(span / h)) + 1;
    return Grid1D{0.0, span, std::max<std::size_t>(n, 16)};
}

}
