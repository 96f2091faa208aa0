#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sedlab/pilot_wave.hpp"

using namespace sedlab;

namespace {

constexpr double pi = std::numbers::pi;

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

/* the two traveling component waves, written independently from the product form */
double component_sum(const PilotWaveParams& p, double x, double t) {
    const double k_plus = p.envelope_k() + p.k_b;
    const double k_minus = p.envelope_k() - p.k_b;
    const double omega_plus = p.omega_z + p.omega_b;
    const double omega_minus = p.omega_z - p.omega_b;
    // the minus wave counter-propagates: +k_minus x
    return 0.5 * p.amplitude * (std::cos(omega_plus * t - k_plus * x + p.theta1 + p.theta2) +
                                std::cos(omega_minus * t + k_minus * x + p.theta1 - p.theta2));
}

}

TEST_CASE("compton frequency") {
    const UnitSystem nat = UnitSystem::natural();
    CHECK(compton_frequency({1.0, 0.0}, nat) == 1.0);
    CHECK(compton_frequency({2.0, 0.0}, nat) == 2.0);

    // electron, SI; desk value m c^2 / hbar with CODATA mass 9.1093837015e-31 kg
    const UnitSystem si = UnitSystem::si();
    const double wc = compton_frequency({9.1093837015e-31, 0.0}, si);
    CHECK(rel(wc, 7.7634407062933e+20) < 1e-12);

    CHECK_THROWS_AS(compton_frequency({0.0, 0.0}, nat), std::domain_error);
    CHECK_THROWS_AS(compton_frequency({-1.0, 0.0}, nat), std::domain_error);
}

TEST_CASE("doppler frequencies") {
    const DopplerPair rest = doppler_frequencies({1.0, 0.0});
    CHECK(rest.plus == 1.0);
    CHECK(rest.minus == 1.0);

    // beta = 0.5: sqrt((1+b)/(1-b)) = sqrt(3), inverse for the red side
    const DopplerPair half = doppler_frequencies({1.0, 0.5});
    CHECK(rel(half.plus, 1.7320508075688772) < 1e-12);
    CHECK(rel(half.minus, 0.5773502691896258) < 1e-12);

    SplitMix64 rng(1001);
    for (int i = 0; i < 1000; ++i) {
        const double beta = 0.999 * (1.0 - rng.uniform01());
        const PhysicalParticle p{1.0, beta};
        const DopplerPair d = doppler_frequencies(p);
        CHECK(d.plus > 0.0);
        CHECK(d.minus > 0.0);
        CHECK(rel(d.plus * d.minus, 1.0) < 1e-12);  // gamma^2 (1 - beta^2) = 1
    }

    CHECK_THROWS_AS(doppler_frequencies({1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(doppler_frequencies({1.0, -1.5}), std::domain_error);
}

TEST_CASE("wave numbers") {
    const DopplerPair rest = wave_numbers({1.0, 0.0});
    CHECK(rest.plus == 1.0);
    CHECK(rest.minus == 1.0);

    const DopplerPair half = wave_numbers({1.0, 0.5});
    CHECK(rel(half.plus, 1.7320508075688772) < 1e-12);
    CHECK(rel(half.minus, 0.5773502691896258) < 1e-12);

    // omega/k = c for each component, by construction
    SplitMix64 rng(1002);
    for (int i = 0; i < 1000; ++i) {
        const double beta = 0.999 * (1.0 - rng.uniform01());
        const double mass = 0.5 + 2.5 * rng.uniform01();
        const PhysicalParticle p{mass, beta};
        const DopplerPair w = doppler_frequencies(p);
        const DopplerPair k = wave_numbers(p);
        CHECK(rel(w.plus / k.plus, 1.0) < 1e-12);
        CHECK(rel(w.minus / k.minus, 1.0) < 1e-12);
    }

    // and in SI, where c is not 1
    const UnitSystem si = UnitSystem::si();
    const PhysicalParticle electron{9.1093837015e-31, 0.3 * constants::c_si};
    const DopplerPair w = doppler_frequencies(electron, si);
    const DopplerPair k = wave_numbers(electron, si);
    CHECK(rel(w.plus / k.plus, constants::c_si) < 1e-12);
    CHECK(rel(w.minus / k.minus, constants::c_si) < 1e-12);
}

TEST_CASE("pilot wave value") {
    const UnitSystem nat = UnitSystem::natural();
    const PilotWaveParams p0 = make_pilot_wave_params({1.0, 0.5}, nat, 0.0, 0.0);
    CHECK(p0.amplitude == 2.0);
    CHECK(pilot_wave_value(p0, 0.0, 0.0) == 2.0);

    const PilotWaveParams p1 = make_pilot_wave_params({1.0, 0.5}, nat, pi / 2.0, 0.7);
    CHECK(std::fabs(pilot_wave_value(p1, 0.0, 0.0)) < 1e-14);

    // product form == sum of the two traveling waves, relative to amplitude
    SplitMix64 rng(1003);
    for (int i = 0; i < 1000; ++i) {
        const double beta = 0.99 * (1.0 - rng.uniform01());
        const double x = 100.0 * (2.0 * rng.uniform01() - 1.0);
        const double t = 100.0 * (2.0 * rng.uniform01() - 1.0);
        const double th1 = 2.0 * pi * rng.uniform01();
        const double th2 = 2.0 * pi * rng.uniform01();
        const PilotWaveParams p = make_pilot_wave_params({1.0, beta}, nat, th1, th2);
        const double v = pilot_wave_value(p, x, t);
        CHECK(std::fabs(v - component_sum(p, x, t)) / p.amplitude < 1e-12);
    }
}

TEST_CASE("field synthesis") {
    const UnitSystem nat = UnitSystem::natural();
    const PilotWaveParams p = make_pilot_wave_params({1.0, 0.4}, nat, 1.1, 2.2);
    const Grid1D grid{-3.0, 9.0, 257};
    const SampledField f = synthesize_field(p, grid, 0.75);
    REQUIRE(f.size() == 257);
    CHECK(f.spacing == grid.spacing());
    CHECK(f.origin == grid.x_min);
    CHECK(f.time_stamp == 0.75);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(f.values[i] == pilot_wave_value(p, grid.x(i), 0.75));

    // carrier at a zero: beta = 0 makes the first factor cos(theta1) everywhere
    const PilotWaveParams z = make_pilot_wave_params({1.0, 0.0}, nat, pi / 2.0, 0.3);
    const SampledField fz = synthesize_field(z, Grid1D{0.0, 1.0, 2}, 0.0);
    CHECK(std::fabs(fz.values[0]) < 1e-15);
    CHECK(std::fabs(fz.values[1]) < 1e-15);

    CHECK_THROWS_AS(synthesize_field(p, Grid1D{0.0, 1.0, 1}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_field(p, Grid1D{1.0, 0.0, 32}, 0.0), std::invalid_argument);
}

TEST_CASE("de Broglie wavelength") {
    const UnitSystem nat = UnitSystem::natural();
    CHECK(rel(de_broglie_wavelength({1.0, 0.5}, nat), 10.882796185405304) < 1e-12);
    CHECK(rel(de_broglie_wavelength({1.0, 0.9}, nat), 3.043085533059486) < 1e-12);

    const UnitSystem si = UnitSystem::si();
    const double lam = de_broglie_wavelength({9.1093837015e-31, 0.01 * constants::c_si}, si);
    CHECK(rel(lam, 2.4261889201381184e-10) < 1e-9);
    CHECK(rel(lam, 2.43e-10) < 0.01);

    CHECK_THROWS_AS(de_broglie_wavelength({1.0, 0.0}, nat), std::domain_error);
}

TEST_CASE("velocity factorization and consistency") {
    const UnitSystem nat = UnitSystem::natural();
    SplitMix64 rng(1004);
    double prev_lambda = 1e300;
    for (int i = 0; i < 200; ++i) {
        const double beta = 0.999 * (1.0 - rng.uniform01());
        const PilotWaveParams p = make_pilot_wave_params({1.0, beta}, nat, 0.0, 0.0);
        const double carrier_speed = p.omega_z / p.k_b;     // c^2 / v
        const double envelope_speed = p.omega_b / p.envelope_k();  // v
        CHECK(rel(carrier_speed * envelope_speed, 1.0) < 1e-12);
        CHECK(rel(envelope_speed, beta) < 1e-12);
        CHECK(rel(de_broglie_wavelength({1.0, beta}, nat), 2.0 * pi / p.k_b) < 1e-12);
    }
    // lambda_b strictly decreases with |v|
    for (double beta = 0.05; beta < 1.0; beta += 0.05) {
        const double lam = de_broglie_wavelength({1.0, beta}, nat);
        CHECK(lam < prev_lambda);
        prev_lambda = lam;
    }
}

TEST_CASE("seeded phase draw") {
    const UnitSystem nat = UnitSystem::natural();
    SplitMix64 a(77), b(77), c(78);
    const PilotWaveParams pa = random_pilot_wave_params({1.0, 0.5}, nat, a);
    const PilotWaveParams pb = random_pilot_wave_params({1.0, 0.5}, nat, b);
    const PilotWaveParams pc = random_pilot_wave_params({1.0, 0.5}, nat, c);
    CHECK(pa.theta1 == pb.theta1);
    CHECK(pa.theta2 == pb.theta2);
    CHECK(pa.theta1 != pc.theta1);
    CHECK(pa.theta1 >= 0.0);
    CHECK(pa.theta1 < 2.0 * pi);
    CHECK(pa.theta2 >= 0.0);
    CHECK(pa.theta2 < 2.0 * pi);
}

TEST_CASE("component selection") {
    const UnitSystem nat = UnitSystem::natural();
    const PilotWaveParams p = make_pilot_wave_params({1.0, 0.6}, nat, 0.4, 1.9);
    const double x = 2.37, t = -1.1;
    const double carrier = component_value(p, FieldComponent::carrier, x, t);
    const double envelope = component_value(p, FieldComponent::envelope, x, t);
    const double full = component_value(p, FieldComponent::full, x, t);
    CHECK(std::fabs(carrier * envelope / p.amplitude - full) / p.amplitude < 1e-12);
    CHECK(full == pilot_wave_value(p, x, t));
}
