#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "sedlab/config.hpp"
#include "sedlab/errors.hpp"

using namespace sedlab;

namespace {

std::string message_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}

TEST_CASE("minimal valid config") {
    const ExperimentConfig c = parse_config("experiment = debroglie\nbeta = 0.5\nmass = 1\n");
    CHECK(c.experiment == "debroglie");
    CHECK(c.parameters.at("beta") == "0.5");
    CHECK(c.parameters.at("mass") == "1");
    CHECK(c.seed == default_seed);
    CHECK(c.output_path == ".");
}

TEST_CASE("header form and comments") {
    const ExperimentConfig c = parse_config(
        "# modulation wavelength recovery\n"
        "[debroglie]\n"
        "\n"
        "beta = 0.3   # half the reference speed, roughly\n"
        "seed = 123\n"
        "out = /tmp/sedlab-test\n");
    CHECK(c.experiment == "debroglie");
    CHECK(c.parameters.at("beta") == "0.3");
    CHECK(c.seed == 123);
    CHECK(c.output_path == "/tmp/sedlab-test");

    // header and key may coexist when they agree
    CHECK(parse_config("[tise]\nexperiment = tise\npotential = harmonic\n").experiment == "tise");
    CHECK_THROWS_AS(parse_config("[tise]\nexperiment = debroglie\nbeta = 1\n"), ConfigError);
}

TEST_CASE("rejections name the line") {
    CHECK(message_of("experiment = warp\n").find("warp") != std::string::npos);
    CHECK(message_of("beta = 0.5\n").find("experiment") != std::string::npos);

    const std::string dup = message_of("[debroglie]\nbeta = 0.5\nmass = 1\nbeta = 0.7\n");
    CHECK(dup.find("beta") != std::string::npos);
    CHECK(dup.find("2") != std::string::npos);
    CHECK(dup.find("4") != std::string::npos);

    const std::string unk = message_of("[debroglie]\nbeta = 0.5\nwidth = 2\n");
    CHECK(unk.find("line 3") != std::string::npos);
    CHECK(unk.find("width") != std::string::npos);

    CHECK(message_of("[debroglie]\nmass = 1\n").find("beta") != std::string::npos);
    CHECK(message_of("[debroglie]\nbeta\n").find("line 2") != std::string::npos);
    CHECK(message_of("[debroglie]\nbeta =\n").find("beta") != std::string::npos);
    CHECK(message_of("[debroglie]\nbeta = 0.5\nseed = -3\n").find("seed") != std::string::npos);
    CHECK(message_of("[]\n").find("header") != std::string::npos);
    CHECK(message_of("[debroglie\nbeta = 0.5\n").find("header") != std::string::npos);
    CHECK(message_of("[a]\n[b]\n").find("second") != std::string::npos);
}

TEST_CASE("experiment table") {
    const auto& table = experiment_table();
    REQUIRE(table.size() == 5);
    bool saw_slit = false;
    for (const auto& info : table) {
        if (info.name == "double_slit") {
            saw_slit = true;
            bool has_particles = false;
            for (const auto& [k, d] : info.optional)
                if (k == "n_particles") {
                    has_particles = true;
                    CHECK(d == "50000");
                }
            CHECK(has_particles);
            CHECK(info.required == std::vector<std::string>{"beta"});
        }
    }
    CHECK(saw_slit);

    // every experiment in the table parses with its required keys filled
    for (const auto& info : table) {
        std::string text = "[" + info.name + "]\n";
        for (const auto& req : info.required) {
            if (req == "beta") text += "beta = 0.5\n";
            else if (req == "potential") text += "potential = harmonic\n";
            else text += req + " = 1\n";
        }
        CHECK(parse_config(text).experiment == info.name);
    }
}
