#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "polariton/config.hpp"

using namespace polariton;

namespace {

const std::string kBase =
    "E0 = 2.104 eV\n"
    "d = 1 D\n"
    "n = 3.5e11 cm^-3\n"
    "tau_coh = 10 ns\n"
    "m = 1\n"
    "detuning = 0 meV\n"
    "d_beam = 0.1 cm\n"
    "g = 0.1 meV\n";

std::string without(const std::string& text, const std::string& key) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto eol = text.find('\n', pos);
        const std::string line = text.substr(pos, eol - pos + 1);
        if (line.rfind(key + " ", 0) != 0) out += line;
        pos = eol + 1;
    }
    return out;
}

std::string error_of(const std::string& text) {
    try {
        build_config(parse_config_text(text));
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("quantity parsing") {
    CHECK(parse_quantity("2.104 eV", "E0") == 2.104 * units::eV);
    CHECK(parse_quantity("3.5e11 cm^-3", "n").magnitude() == 3.5e11);
    CHECK(parse_quantity("3.5e17 m^-3", "n").dimension() == dims::volume_density);
    CHECK(oracle::rel_diff(parse_quantity("3.5e17 m^-3", "n").magnitude(), 3.5e11) < 1e-15);
    CHECK(parse_quantity("1 D", "d") == 1e-18 * units::esu_cm);
    CHECK(parse_quantity("1e-18 esu*cm", "d") == 1.0 * units::debye);
    CHECK(parse_quantity("5e10 1/s", "omega_eff").dimension() == dims::frequency);
    CHECK(parse_quantity("5e10 Hz", "omega_eff").magnitude() == 5e10);
    CHECK(parse_quantity("-0.5 meV", "detuning") == -0.5 * units::meV);
    CHECK(parse_quantity("+2 K", "T") == 2.0 * units::K);
    CHECK(oracle::rel_diff(parse_quantity("1 C*m", "d").magnitude(), 2.99792458e11) < 1e-15);

    CHECK_THROWS_AS(parse_quantity("2.104", "E0"), ConfigError);
    CHECK_THROWS_AS(parse_quantity("2.104 parsec", "E0"), ConfigError);
    CHECK_THROWS_AS(parse_quantity("abc eV", "E0"), ConfigError);
    CHECK_THROWS_AS(parse_quantity("", "E0"), ConfigError);
    CHECK_THROWS_AS(parse_unit("cm^x", "n"), ConfigError);
}

TEST_CASE("a complete config builds") {
    const RunConfig cfg = build_config(parse_config_text(kBase));
    CHECK(cfg.medium.transition_energy == 2.104 * units::eV);
    CHECK(cfg.cavity.mode_index == 1);
    CHECK(cfg.detuning.has_value());
    CHECK(std::abs(cfg.coupling().detuning.in(units::eV)) < 1e-12 * 2.104);
    CHECK_FALSE(cfg.gas.has_value());
    CHECK_FALSE(cfg.trap.has_value());
    CHECK(cfg.threshold == 10.0);
}

TEST_CASE("comments and layout do not change the hash") {
    const ConfigMap a = parse_config_text(kBase);
    const ConfigMap b = parse_config_text("# header\n\n  g=0.1 meV   # coupling\n" + without(kBase, "g"));
    CHECK(config_hash(a) == config_hash(b));
    CHECK(config_hash(a).size() == 16);
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("configuration errors name the key") {
    for (const char* key : {"E0", "d", "n", "tau_coh", "m", "d_beam", "g"}) {
        CAPTURE(key);
        const std::string msg = error_of(without(kBase, key));
        CHECK(msg.find("missing required key '" + std::string(key) + "'") != std::string::npos);
    }
    CHECK(error_of(without(kBase, "detuning")).find("L_cav") != std::string::npos);
    CHECK(error_of(kBase + "L_cav = 1 cm\n").find("mutually exclusive") != std::string::npos);
    CHECK(error_of(kBase + "colour = red\n").find("unknown key 'colour'") != std::string::npos);
    CHECK(error_of(kBase + "g = 0.2 meV\n").find("duplicate key 'g'") != std::string::npos);
    CHECK(error_of(without(kBase, "g") + "g = 0.1\n").find("'g'") != std::string::npos);
    CHECK(error_of(without(kBase, "g") + "g = 0.1 cm\n").find("'g'") != std::string::npos);
    CHECK(error_of(without(kBase, "m") + "m = 1.5\n").find("'m'") != std::string::npos);
    CHECK(error_of(kBase + "U0 = 1 meV\n").find("omega_eff") != std::string::npos);
    CHECK(error_of(kBase + "T = 300 K\n").find("'n2'") != std::string::npos);
    CHECK(error_of(kBase + "format = xml\n").find("format") != std::string::npos);
    CHECK(error_of(kBase + "oops\n").find("line 9") != std::string::npos);
}

TEST_CASE("gas and trap sections") {
    const RunConfig cfg = build_config(parse_config_text(
        kBase + "T = 300 K\nn2 = 0.5e8 cm^-2\nm_eff = 5e-33 g\nomega_eff = 5e10 1/s\n"));
    REQUIRE(cfg.gas.has_value());
    REQUIRE(cfg.trap.has_value());
    CHECK(cfg.gas->mass == 5e-33 * units::g);
    CHECK_FALSE(cfg.mass_from_coupling);
    CHECK(cfg.trap->omega_eff.magnitude() == 5e10);

    const RunConfig lower = build_config(parse_config_text(kBase + "T = 300 K\nn3 = 3.5e11 cm^-3\n"));
    CHECK(lower.mass_from_coupling);
    CHECK(lower.gas->mass == effective_masses(lower.coupling()).lower);
}

TEST_CASE("sweepable keys") {
    CHECK(is_numeric_key("g"));
    CHECK(is_numeric_key("m"));
    CHECK(is_numeric_key("threshold"));
    CHECK_FALSE(is_numeric_key("format"));
    CHECK_FALSE(is_numeric_key("colour"));
}
