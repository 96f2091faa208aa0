#pragma once

#include <cmath>
#include <stdexcept>

#include "sedlab/units.hpp"

namespace sedlab {

/* Point particle moving along x; velocity is signed, kinematics use |velocity|. */
struct PhysicalParticle {
    double mass = 1.0;
    double velocity = 0.0;

    double beta(const UnitSystem& u = UnitSystem::natural()) const {
        return std::fabs(velocity) / u.c();
    }
    double gamma(const UnitSystem& u = UnitSystem::natural()) const {
        const double b = beta(u);
        return 1.0 / std::sqrt((1.0 - b) * (1.0 + b));
    }
    double momentum(const UnitSystem& u = UnitSystem::natural()) const {
        return gamma(u) * mass * std::fabs(velocity);
    }
    void validate(const UnitSystem& u = UnitSystem::natural()) const {
        if (!(mass > 0.0))
            throw std::domain_error("particle mass must be positive");
        if (!(std::fabs(velocity) < u.c()))
            throw std::domain_error("particle speed must be strictly below c");
    }
};

}
