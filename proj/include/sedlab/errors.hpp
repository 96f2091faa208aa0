#pragma once

#include <stdexcept>

namespace sedlab {

/* Typed failures; the CLI maps them onto exit codes (see FORMATS.md):
 * config/domain problems -> 2, numerical resolution -> 3, statistics -> 4. */

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StatisticsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}
