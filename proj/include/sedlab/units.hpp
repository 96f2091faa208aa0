#pragma once

#include <numbers>

namespace sedlab {

namespace constants {
/* SI defining constants (exact by definition). */
inline constexpr double c_si = 299792458.0;      // m/s
inline constexpr double h_si = 6.62607015e-34;   // J s
inline constexpr double hbar_si = h_si / (2.0 * std::numbers::pi);
}

enum class UnitMode { natural, si };

/* natural: hbar = c = 1 and mass carries the scale; si: meters/seconds/kilograms.
 * All core math runs in natural units; SI enters only through these accessors. */
struct UnitSystem {
    UnitMode mode = UnitMode::natural;

    double c() const { return mode == UnitMode::natural ? 1.0 : constants::c_si; }
    double hbar() const { return mode == UnitMode::natural ? 1.0 : constants::hbar_si; }
    double h() const { return 2.0 * std::numbers::pi * hbar(); }

    static constexpr UnitSystem natural() { return {UnitMode::natural}; }
    static constexpr UnitSystem si() { return {UnitMode::si}; }
};

/* Scale factors tying the natural system to SI for a particle of the given SI mass:
 * value_si = value_natural * scale. Lengths are in reduced Compton units hbar/(m c). */
struct UnitScales {
    double mass;        // kg
    double velocity;    // m/s
    double length;      // m
    double time;        // s
    double frequency;   // rad/s
    double wavenumber;  // rad/m
    double energy;      // J
};

inline UnitScales si_scales(double anchor_mass_kg) {
    const double m = anchor_mass_kg;
    const double c = constants::c_si;
    const double hb = constants::hbar_si;
    return UnitScales{
        m,
        c,
        hb / (m * c),
        hb / (m * c * c),
        m * c * c / hb,
        m * c / hb,
        m * c * c,
    };
}

}
