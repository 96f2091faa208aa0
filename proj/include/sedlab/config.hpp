#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sedlab {

inline constexpr std::uint64_t default_seed = 42;

struct ExperimentConfig {
    std::string experiment;
    std::map<std::string, std::string> parameters;  // experiment-specific keys, raw values
    std::uint64_t seed = default_seed;
    std::string output_path = ".";
};

struct ExperimentInfo {
    std::string name;
    std::vector<std::string> required;
    std::vector<std::pair<std::string, std::string>> optional;  // key, default shown by `list`
};

const std::vector<ExperimentInfo>& experiment_table();

/* Line-oriented `key = value` text with `#` comments. The experiment is named
 * either by a [name] header or an `experiment = name` key (both allowed when
 * they agree). Unknown keys, duplicates, and malformed lines are rejected with
 * line numbers. Global keys: seed (default 42), out (default "."). */
ExperimentConfig parse_config(const std::string& text);

}
