// Flat `key = value` run configuration with mandatory unit suffixes.
//
//     E0      = 2.104 eV
//     d       = 1 D
//     n       = 3.5e11 cm^-3
//     tau_coh = 10 ns
//     m       = 1
//     L_cav   = 2.95e-5 cm      # or: detuning = 0 meV
//     d_beam  = 0.1 cm
//     g       = 0.1 meV
//
// Optional gas keys (T, m_eff, n2, n3, n_s), trap keys (omega_eff, U0, r0,
// omega_at, n0, E_char) and knobs (threshold, paraxial_bound, format, units).

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "polariton/coupling.hpp"
#include "polariton/quantities.hpp"
#include "polariton/thermo.hpp"

namespace polariton {

enum class OutputFormat { csv, json };

/// Ordered raw key/value pairs as read from a config file.
using ConfigMap = std::map<std::string, std::string, std::less<>>;

struct RunConfig {
    MediumParams medium;
    CavityParams cavity;
    Quantity g;
    std::optional<Quantity> detuning;  // given instead of L_cav
    std::optional<GasState> gas;
    std::optional<TrapSpec> trap;
    std::optional<Quantity> omega_at;
    std::optional<Quantity> energy_scale;  // E_char
    double n0 = 1.0;
    double threshold = kDefaultStrongCouplingThreshold;
    double paraxial_bound = 0.2;
    std::optional<OutputFormat> format;
    std::optional<UnitSystem> units;
    bool mass_from_coupling = false;  // m_eff was absent and defaulted to the lower-branch mass

    [[nodiscard]] CouplingParams coupling() const;
};

/// Number followed by a unit expression such as `eV`, `cm^-3`, `esu*cm`, `1/s`.
/// Bare numbers are rejected.
Quantity parse_quantity(std::string_view text, std::string_view key);

/// Splits "3.5e11 cm^-3" into its number and unit text.
std::pair<double, std::string> split_value(std::string_view text, std::string_view key);

/// Evaluates a unit expression alone ("meV", "cm^-2", "1/s").
Quantity parse_unit(std::string_view expr, std::string_view key);

ConfigMap parse_config_text(std::string_view text);
ConfigMap load_config_file(const std::string& path);

/// Validates keys and builds the typed configuration. Errors are ConfigError
/// messages naming the offending key.
RunConfig build_config(const ConfigMap& map);

/// Keys that hold a number (with or without unit); only these can be swept.
bool is_numeric_key(std::string_view key);
bool is_known_key(std::string_view key);

/// FNV-1a 64 of the given bytes as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Hash of the canonical `key=value` listing, independent of file layout.
std::string config_hash(const ConfigMap& map);

}  // namespace polariton
