#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sedlab {

/* Real field sampled on a uniform 1D grid: values[i] lives at origin + i*spacing,
 * all taken at the single time time_stamp. */
struct SampledField {
    std::vector<double> values;
    double origin = 0.0;
    double spacing = 1.0;
    double time_stamp = 0.0;

    std::size_t size() const { return values.size(); }
    double x(std::size_t i) const { return origin + spacing * static_cast<double>(i); }
    void validate() const {
        if (!(spacing > 0.0))
            throw std::invalid_argument("field spacing must be positive");
        for (double v : values)
            if (!std::isfinite(v))
                throw std::domain_error("field values must be finite");
    }
};

}
