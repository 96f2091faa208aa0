#include "sedlab/config.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "sedlab/errors.hpp"

namespace sedlab {

const std::vector<ExperimentInfo>& experiment_table() {
    static const std::vector<ExperimentInfo> table = {
        {"debroglie",
         {"beta"},
         {{"mass", "1"}, {"beat_periods", "8"}, {"samples_per_carrier", "32"}}},
        {"dispersion",
         {},
         {{"beta", "0.5"}, {"carrier_beta", "0.05"}, {"levels", "3"},
          {"points_per_wavelength", "20"}, {"modulation_periods", "2"}, {"mass", "1"}}},
        {"tise",
         {"potential"},
         {{"mass", "1"}, {"n_states", "5"}, {"n_points", "2001"},
          {"x_min", "potential-dependent"}, {"x_max", "potential-dependent"},
          {"stiffness", "1"}}},
        {"kg_limit",
         {},
         {{"masses", "1,10,100"}, {"stiffness", "1"}, {"x_min", "-10"},
          {"x_max", "10"}, {"n_points", "2001"}}},
        {"double_slit",
         {"beta"},
         {{"mass", "1"}, {"d_over_lambda", "10"}, {"a_over_lambda", "1"},
          {"L_over_lambda", "1000"}, {"half_width_over_lambda", "400"},
          {"n_particles", "50000"}, {"n_modes", "16"}, {"angular_spread", "0"},
          {"bins", "160"}, {"aperture_samples", "64"}, {"slit_state", "both_open"}}},
    };
    return table;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const ExperimentInfo* find_experiment(const std::string& name) {
    for (const auto& e : experiment_table())
        if (e.name == name) return &e;
    return nullptr;
}

[[noreturn]] void fail(int line, const std::string& what) {
    std::ostringstream msg;
    msg << "line " << line << ": " << what;
    throw ConfigError(msg.str());
}

}

ExperimentConfig parse_config(const std::string& text) {
    struct Entry {
        int line;
        std::string value;
    };
    std::map<std::string, Entry> entries;
    std::optional<std::string> header;
    int header_line = 0;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail(lineno, "unterminated [experiment] header");
            if (header)
                fail(lineno, "second [experiment] header (first on line " +
                                 std::to_string(header_line) + ")");
            header = trim(line.substr(1, line.size() - 2));
            header_line = lineno;
            if (header->empty())
                fail(lineno, "empty [experiment] header");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(lineno, "expected `key = value`");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            fail(lineno, "missing key before `=`");
        if (value.empty())
            fail(lineno, "missing value for key '" + key + "'");
        const auto prev = entries.find(key);
        if (prev != entries.end())
            throw ConfigError("duplicate key '" + key + "' (lines " +
                              std::to_string(prev->second.line) + " and " +
                              std::to_string(lineno) + ")");
        entries.emplace(key, Entry{lineno, value});
    }

    // the experiment may be named by the header, the `experiment` key, or both
    std::string name;
    int name_line = header_line;
    const auto exp_key = entries.find("experiment");
    if (header && exp_key != entries.end()) {
        if (*header != exp_key->second.value)
            throw ConfigError("[" + *header + "] header disagrees with experiment = " +
                              exp_key->second.value);
        name = *header;
    } else if (header) {
        name = *header;
    } else if (exp_key != entries.end()) {
        name = exp_key->second.value;
        name_line = exp_key->second.line;
    } else {
        throw ConfigError("no experiment named: add a [name] header or an `experiment = name` key");
    }
    if (exp_key != entries.end())
        entries.erase("experiment");

    const ExperimentInfo* info = find_experiment(name);
    if (!info)
        fail(std::max(name_line, 1), "unknown experiment '" + name + "'");

    ExperimentConfig cfg;
    cfg.experiment = name;

    const auto seed_it = entries.find("seed");
    if (seed_it != entries.end()) {
        const std::string& v = seed_it->second.value;
        std::uint64_t seed = 0;
        const auto res = std::from_chars(v.data(), v.data() + v.size(), seed);
        if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
            fail(seed_it->second.line, "cannot parse seed '" + v + "' as an unsigned integer");
        cfg.seed = seed;
        entries.erase("seed");
    }
    const auto out_it = entries.find("out");
    if (out_it != entries.end()) {
        cfg.output_path = out_it->second.value;
        entries.erase("out");
    }

    const auto known = [&](const std::string& key) {
        if (std::find(info->required.begin(), info->required.end(), key) != info->required.end())
            return true;
        for (const auto& [opt, def] : info->optional)
            if (opt == key) return true;
        return false;
    };
    for (const auto& [key, entry] : entries) {
        if (!known(key))
            fail(entry.line, "unknown key '" + key + "' for experiment '" + name + "'");
        cfg.parameters[key] = entry.value;
    }
    for (const std::string& req : info->required)
        if (!cfg.parameters.count(req))
            throw ConfigError("missing required key '" + req + "' for experiment '" + name + "'");

    return cfg;
}

}
