#include "sedlab/slit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "sedlab/errors.hpp"
#include "sedlab/pilot_wave.hpp"

namespace sedlab {

void SlitGeometry::validate() const {
    if (!(slit_width > 0.0))
        throw std::invalid_argument("slit width must be positive");
    if (!(slit_separation > slit_width))
        throw std::invalid_argument("slit separation must exceed slit width (disjoint slits)");
    if (!(screen_distance > 0.0))
        throw std::invalid_argument("screen distance must be positive");
    if (!(detector_half_width > 0.0))
        throw std::invalid_argument("detector half-width must be positive");
    if (aperture_samples_per_slit == 0)
        throw std::invalid_argument("need at least one aperture sample per slit");
}

FieldRealization draw_realization_from(std::size_t n_modes, double angular_spread,
                                       SplitMix64& rng) {
    if (n_modes == 0)
        throw std::invalid_argument("need at least one mode");
    if (!(angular_spread >= 0.0) || angular_spread >= 0.5 * std::numbers::pi)
        throw std::invalid_argument("angular spread must be in [0, pi/2)");
    FieldRealization r;
    r.mode_phases.resize(n_modes);
    r.mode_angles.resize(n_modes);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < n_modes; ++i)
        r.mode_phases[i] = rng.uniform(0.0, two_pi);
    for (std::size_t i = 0; i < n_modes; ++i)
        r.mode_angles[i] = angular_spread == 0.0
                               ? 0.0
                               : rng.uniform(-angular_spread, angular_spread);
    return r;
}

FieldRealization draw_realization(std::size_t n_modes, double angular_spread,
                                  std::uint64_t seed) {
    SplitMix64 rng(seed);
    FieldRealization r = draw_realization_from(n_modes, angular_spread, rng);
    r.seed = seed;
    return r;
}

namespace {

std::vector<double> source_points(const SlitGeometry& g, SlitState state) {
    std::vector<double> ys;
    const auto add_slit = [&](double center) {
        const std::size_t n = g.aperture_samples_per_slit;
        const double step = g.slit_width / static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j)
            ys.push_back(center - 0.5 * g.slit_width + (static_cast<double>(j) + 0.5) * step);
    };
    if (state != SlitState::slit2_only) add_slit(-0.5 * g.slit_separation);
    if (state != SlitState::slit1_only) add_slit(+0.5 * g.slit_separation);
    return ys;
}

/* Propagation factors source -> detector point: paraxial quadratic phase
 * k dy^2/(2L) (a global exp(ikL) is dropped) with 1/sqrt(r) spreading at the
 * exact distance, weighted by the aperture element per source. */
std::vector<std::complex<double>> build_kernel(const SlitGeometry& g, double k,
                                               const std::vector<double>& sources,
                                               const std::vector<double>& det_y) {
    const double L = g.screen_distance;
    const double weight = g.slit_width / static_cast<double>(g.aperture_samples_per_slit);
    std::vector<std::complex<double>> kernel(det_y.size() * sources.size());
    for (std::size_t p = 0; p < det_y.size(); ++p) {
        std::complex<double>* row = kernel.data() + p * sources.size();
        for (std::size_t s = 0; s < sources.size(); ++s) {
            const double dy = det_y[p] - sources[s];
            const double r = std::sqrt(L * L + dy * dy);
            const double phase = k * dy * dy / (2.0 * L);
            row[s] = std::polar(weight / std::sqrt(r), phase);
        }
    }
    return kernel;
}

void incident_field(const FieldRealization& real, double k,
                    const std::vector<double>& sources,
                    std::vector<std::complex<double>>& u) {
    u.assign(sources.size(), {0.0, 0.0});
    for (std::size_t m = 0; m < real.n_modes(); ++m) {
        const double kt = k * std::sin(real.mode_angles[m]);
        const double phase0 = real.mode_phases[m];
        for (std::size_t s = 0; s < sources.size(); ++s)
            u[s] += std::polar(1.0, kt * sources[s] + phase0);
    }
}

void intensity_from(const std::vector<std::complex<double>>& kernel,
                    const std::vector<std::complex<double>>& u,
                    std::vector<double>& out) {
    const std::size_t ns = u.size();
    const std::size_t np = kernel.size() / ns;
    out.resize(np);
    for (std::size_t p = 0; p < np; ++p) {
        const std::complex<double>* row = kernel.data() + p * ns;
        double re = 0.0, im = 0.0;
        for (std::size_t s = 0; s < ns; ++s) {
            const double a = row[s].real(), b = row[s].imag();
            const double c = u[s].real(), d = u[s].imag();
            re += a * c - b * d;
            im += a * d + b * c;
        }
        out[p] = re * re + im * im;
    }
}

double sample_from_density(const std::vector<double>& f, double origin, double spacing,
                           SplitMix64& rng) {
    const std::size_t n = f.size();
    for (double v : f)
        if (!(v >= 0.0))
            throw std::domain_error("intensity must be non-negative");

    // trapezoid masses of the piecewise-linear density
    std::vector<double> cum(n, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        total += 0.5 * (f[i] + f[i + 1]) * spacing;
        cum[i + 1] = total;
    }
    if (!(total > 0.0))
        throw std::domain_error("intensity is identically zero");

    const double target = rng.uniform01() * total;
    const auto it = std::upper_bound(cum.begin(), cum.end(), target);
    std::size_t seg = it == cum.begin() ? 0 : static_cast<std::size_t>(it - cum.begin()) - 1;
    seg = std::min(seg, n - 2);

    const double rest = (target - cum[seg]) / spacing;  // integral of the segment density over xi
    const double f0 = f[seg], f1 = f[seg + 1];
    const double df = f1 - f0;
    double xi;
    if (f0 + f1 <= 0.0) {
        xi = 0.5;
    } else if (std::fabs(df) < 1e-12 * (f0 + f1)) {
        xi = rest / f0;
    } else {
        // solve f0 xi + df xi^2 / 2 = rest, stable root
        const double disc = std::sqrt(std::max(0.0, f0 * f0 + 2.0 * df * rest));
        xi = df > 0.0 ? (disc - f0) / df : 2.0 * rest / (f0 + disc);
    }
    xi = std::clamp(xi, 0.0, 1.0);
    return origin + (static_cast<double>(seg) + xi) * spacing;
}

}

SampledField diffracted_intensity(const SlitGeometry& geometry, double wavelength,
                                  const FieldRealization& realization,
                                  const Grid1D& detector_grid, SlitState state) {
    geometry.validate();
    detector_grid.validate();
    if (!(wavelength > 0.0))
        throw std::domain_error("wavelength must be positive");
    if (realization.n_modes() == 0)
        throw std::domain_error("realization has no modes");
    if (realization.mode_angles.size() != realization.mode_phases.size())
        throw std::invalid_argument("realization phases/angles length mismatch");
    const double tol = 1e-9 * geometry.detector_half_width;
    if (detector_grid.x_min < -geometry.detector_half_width - tol ||
        detector_grid.x_max > geometry.detector_half_width + tol)
        throw std::invalid_argument("detector grid exceeds the detector half-width");

    const double k = 2.0 * std::numbers::pi / wavelength;
    const std::vector<double> sources = source_points(geometry, state);
    std::vector<double> det_y(detector_grid.n_points);
    for (std::size_t i = 0; i < det_y.size(); ++i)
        det_y[i] = detector_grid.x(i);

    const auto kernel = build_kernel(geometry, k, sources, det_y);
    std::vector<std::complex<double>> u;
    incident_field(realization, k, sources, u);

    SampledField out;
    out.origin = detector_grid.x_min;
    out.spacing = detector_grid.spacing();
    intensity_from(kernel, u, out.values);
    return out;
}

double sample_arrival(const SampledField& intensity, SplitMix64& rng) {
    intensity.validate();
    if (intensity.size() < 2)
        throw std::invalid_argument("intensity needs at least 2 samples");
    return sample_from_density(intensity.values, intensity.origin, intensity.spacing, rng);
}

ArrivalHistogram run_double_slit(const SlitGeometry& geometry,
                                 const PhysicalParticle& particle,
                                 std::size_t n_particles, std::size_t n_modes,
                                 double angular_spread, std::uint64_t master_seed,
                                 std::size_t bins, SlitState state) {
    geometry.validate();
    particle.validate(UnitSystem::natural());
    if (n_particles == 0)
        throw std::invalid_argument("need at least one particle");
    if (n_modes == 0)
        throw std::invalid_argument("need at least one mode");
    if (bins == 0)
        throw std::invalid_argument("need at least one histogram bin");

    const double wavelength = de_broglie_wavelength(particle, UnitSystem::natural());
    const double k = 2.0 * std::numbers::pi / wavelength;
    const double W = geometry.detector_half_width;

    const std::size_t n_det = std::max<std::size_t>(1025, 4 * bins + 1);
    Grid1D det{-W, W, n_det};
    const std::vector<double> sources = source_points(geometry, state);
    std::vector<double> det_y(n_det);
    for (std::size_t i = 0; i < n_det; ++i)
        det_y[i] = det.x(i);
    const auto kernel = build_kernel(geometry, k, sources, det_y);

    ArrivalHistogram hist;
    hist.seed = master_seed;
    hist.total = n_particles;
    hist.bin_edges.resize(bins + 1);
    const double bin_w = 2.0 * W / static_cast<double>(bins);
    for (std::size_t i = 0; i <= bins; ++i)
        hist.bin_edges[i] = -W + bin_w * static_cast<double>(i);
    hist.counts.assign(bins, 0);

    std::vector<std::complex<double>> u;
    std::vector<double> intensity;
    for (std::size_t i = 0; i < n_particles; ++i) {
        SplitMix64 rng(substream_seed(master_seed, i));
        const FieldRealization real = draw_realization_from(n_modes, angular_spread, rng);
        incident_field(real, k, sources, u);
        intensity_from(kernel, u, intensity);
        const double y = sample_from_density(intensity, -W, det.spacing(), rng);
        auto b = static_cast<std::size_t>((y + W) / bin_w);
        b = std::min(b, bins - 1);
        ++hist.counts[b];
    }
    return hist;
}

namespace {

void validate_histogram(const ArrivalHistogram& hist) {
    if (hist.bin_edges.size() < 2 || hist.counts.size() + 1 != hist.bin_edges.size())
        throw std::invalid_argument("malformed histogram");
    for (std::size_t i = 0; i + 1 < hist.bin_edges.size(); ++i)
        if (!(hist.bin_edges[i + 1] > hist.bin_edges[i]))
            throw std::invalid_argument("histogram bin edges must be strictly ascending");
    std::uint64_t sum = 0;
    for (std::uint64_t c : hist.counts) sum += c;
    if (sum != hist.total)
        throw std::invalid_argument("histogram total does not match its counts");
}

double bin_center(const ArrivalHistogram& hist, std::size_t i) {
    return 0.5 * (hist.bin_edges[i] + hist.bin_edges[i + 1]);
}

/* mean count over bins whose centers land in [center-halfwidth, center+halfwidth];
 * falls back to the nearest bin when the window is narrower than a bin */
double window_mean(const ArrivalHistogram& hist, double center, double halfwidth) {
    double sum = 0.0;
    std::size_t n = 0;
    double best = 0.0, best_dist = -1.0;
    for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        const double c = bin_center(hist, i);
        const double dist = std::fabs(c - center);
        if (dist <= halfwidth) {
            sum += static_cast<double>(hist.counts[i]);
            ++n;
        }
        if (best_dist < 0.0 || dist < best_dist) {
            best_dist = dist;
            best = static_cast<double>(hist.counts[i]);
        }
    }
    return n > 0 ? sum / static_cast<double>(n) : best;
}

}

double fringe_visibility(const ArrivalHistogram& histogram, double expected_spacing) {
    validate_histogram(histogram);
    if (!(expected_spacing > 0.0))
        throw std::invalid_argument("expected spacing must be positive");
    if (histogram.total < 10000)
        throw StatisticsError("fringe visibility needs at least 1e4 arrivals");
    const double span = histogram.bin_edges.back() - histogram.bin_edges.front();
    if (span < 3.0 * expected_spacing)
        throw std::invalid_argument("detector spans fewer than 3 expected fringes");

    const double s = expected_spacing;
    const double w = s / 16.0;
    double imax = 0.0;
    for (double m : {-1.0, 0.0, 1.0})
        imax += window_mean(histogram, m * s, w);
    imax /= 3.0;
    double imin = 0.0;
    for (double m : {-1.5, -0.5, 0.5, 1.5})
        imin += window_mean(histogram, m * s, w);
    imin /= 4.0;

    const double denom = imax + imin;
    if (denom <= 0.0)
        return 0.0;
    return std::clamp((imax - imin) / denom, 0.0, 1.0);
}

double measure_fringe_spacing(const ArrivalHistogram& histogram, double expected_spacing) {
    validate_histogram(histogram);
    if (!(expected_spacing > 0.0))
        throw std::invalid_argument("expected spacing must be positive");
    const double s = expected_spacing;
    if (histogram.bin_edges.front() > -3.5 * s || histogram.bin_edges.back() < 3.5 * s)
        throw std::invalid_argument("detector too narrow for a 7-peak spacing estimate");

    // the mean of the 6 consecutive peak distances over m = -3..3 telescopes to
    // (y_3 - y_-3)/6, so only the outermost peaks need locating
    const auto windowed_argmax = [&](double center) {
        double best_count = -1.0, best_y = center;
        for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
            const double c = bin_center(histogram, i);
            if (std::fabs(c - center) <= 0.5 * s) {
                const double v = static_cast<double>(histogram.counts[i]);
                if (v > best_count) {
                    best_count = v;
                    best_y = c;
                }
            }
        }
        return best_y;
    };
    return (windowed_argmax(3.0 * s) - windowed_argmax(-3.0 * s)) / 6.0;
}

ChiSquareResult chi_square_against_pattern(const ArrivalHistogram& histogram,
                                           const SlitGeometry& geometry,
                                           double wavelength, double min_expected) {
    validate_histogram(histogram);
    geometry.validate();
    if (!(wavelength > 0.0))
        throw std::domain_error("wavelength must be positive");

    const double L = geometry.screen_distance;
    const double d = geometry.slit_separation;
    const double a = geometry.slit_width;
    const double k_fr = std::numbers::pi / (wavelength * L);
    const auto sinc = [](double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; };
    const auto model = [&](double y) {
        const double co = std::cos(k_fr * d * y);
        const double sc = sinc(k_fr * a * y);
        return co * co * sc * sc * L / std::sqrt(L * L + y * y);
    };

    // per-bin model mass via Simpson with 8 sub-intervals
    const std::size_t nb = histogram.counts.size();
    std::vector<double> q(nb, 0.0);
    for (std::size_t i = 0; i < nb; ++i) {
        const double lo = histogram.bin_edges[i], hi = histogram.bin_edges[i + 1];
        const int ns = 8;
        const double hstep = (hi - lo) / ns;
        double acc = model(lo) + model(hi);
        for (int j = 1; j < ns; ++j)
            acc += (j % 2 == 1 ? 4.0 : 2.0) * model(lo + hstep * j);
        q[i] = acc * hstep / 3.0;
    }

    // amplitude fit on the retained set, one refinement pass
    std::vector<char> keep(nb, 1);
    double amp = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
        double nsum = 0.0, qsum = 0.0;
        for (std::size_t i = 0; i < nb; ++i) {
            if (!keep[i]) continue;
            nsum += static_cast<double>(histogram.counts[i]);
            qsum += q[i];
        }
        if (!(qsum > 0.0))
            throw StatisticsError("analytic pattern vanishes on the detector");
        amp = nsum / qsum;
        for (std::size_t i = 0; i < nb; ++i)
            keep[i] = amp * q[i] >= min_expected ? 1 : 0;
    }

    ChiSquareResult res;
    std::size_t used = 0;
    for (std::size_t i = 0; i < nb; ++i) {
        if (!keep[i]) continue;
        const double e = amp * q[i];
        const double diff = static_cast<double>(histogram.counts[i]) - e;
        res.chi2 += diff * diff / e;
        ++used;
    }
    if (used < 2)
        throw StatisticsError("too few populated bins for a chi-square test");
    res.dof = used - 1;  // one amplitude fitted
    res.per_dof = res.chi2 / static_cast<double>(res.dof);
    return res;
}

}
