#pragma once

#include <cstddef>
#include <stdexcept>

namespace sedlab {

/* Uniform 1D grid with n_points samples covering [x_min, x_max] inclusive. */
struct Grid1D {
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t n_points = 2;

    double spacing() const {
        return (x_max - x_min) / static_cast<double>(n_points - 1);
    }
    double x(std::size_t i) const {
        return x_min + spacing() * static_cast<double>(i);
    }
    void validate() const {
        if (n_points < 2)
            throw std::invalid_argument("grid needs at least 2 points");
        if (!(x_max > x_min))
            throw std::invalid_argument("grid needs x_max > x_min");
    }
};

}
