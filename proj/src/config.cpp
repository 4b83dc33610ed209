#include "polariton/config.hpp"

#include <array>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "polariton/format.hpp"

namespace polariton {

namespace {

enum class KeyKind { quantity, integer, real, text };

struct KeySpec {
    std::string_view name;
    KeyKind kind;
    Dimension dim;
};

const std::array<KeySpec, 23>& key_table() {
    static const std::array<KeySpec, 23> table{{
        {"E0", KeyKind::quantity, dims::energy},
        {"d", KeyKind::quantity, dims::dipole_moment},
        {"n", KeyKind::quantity, dims::volume_density},
        {"tau_coh", KeyKind::quantity, dims::time},
        {"m", KeyKind::integer, dims::none},
        {"L_cav", KeyKind::quantity, dims::length},
        {"detuning", KeyKind::quantity, dims::energy},
        {"d_beam", KeyKind::quantity, dims::length},
        {"g", KeyKind::quantity, dims::energy},
        {"T", KeyKind::quantity, dims::temperature},
        {"m_eff", KeyKind::quantity, dims::mass},
        {"n2", KeyKind::quantity, dims::area_density},
        {"n3", KeyKind::quantity, dims::volume_density},
        {"n_s", KeyKind::quantity, dims::area_density},
        {"omega_eff", KeyKind::quantity, dims::frequency},
        {"U0", KeyKind::quantity, dims::energy},
        {"r0", KeyKind::quantity, dims::length},
        {"omega_at", KeyKind::quantity, dims::frequency},
        {"E_char", KeyKind::quantity, dims::energy},
        {"n0", KeyKind::real, dims::none},
        {"threshold", KeyKind::real, dims::none},
        {"paraxial_bound", KeyKind::real, dims::none},
        {"format", KeyKind::text, dims::none},
    }};
    return table;
}

const KeySpec* find_key(std::string_view key) {
    for (const auto& spec : key_table()) {
        if (spec.name == key) return &spec;
    }
    if (key == "units") {
        static const KeySpec units_spec{"units", KeyKind::text, dims::none};
        return &units_spec;
    }
    return nullptr;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

const Quantity* lookup_unit(std::string_view name) {
    static const Quantity per_second{1.0, dims::frequency};
    static const Quantity statcoulomb{1.0, dims::charge};
    static const Quantity coulomb{2.99792458e9, dims::charge};
    static const std::array<std::pair<std::string_view, const Quantity*>, 26> table{{
        {"m", &units::m},       {"cm", &units::cm},         {"mm", &units::mm},
        {"um", &units::um},     {"nm", &units::nm},         {"g", &units::g},
        {"kg", &units::kg},     {"s", &units::s},           {"ms", &units::ms},
        {"us", &units::us},     {"ns", &units::ns},         {"ps", &units::ps},
        {"fs", &units::fs},     {"K", &units::K},           {"eV", &units::eV},
        {"meV", &units::meV},   {"erg", &units::erg},       {"J", &units::J},
        {"D", &units::debye},   {"debye", &units::debye},   {"esu", &statcoulomb},
        {"statC", &statcoulomb}, {"C", &coulomb},           {"Hz", &per_second},
        {"rad", &units::one},   {"1", &units::one},
    }};
    for (const auto& [key, q] : table) {
        if (key == name) return q;
    }
    return nullptr;
}

Quantity parse_factor(std::string_view tok, std::string_view key) {
    const auto caret = tok.find('^');
    const std::string_view name = tok.substr(0, caret);
    const Quantity* base = lookup_unit(name);
    if (!base) {
        throw ConfigError("unknown unit '" + std::string(name) + "' for key '" + std::string(key) +
                          "'");
    }
    if (caret == std::string_view::npos) return *base;
    const double e = parse_number(tok.substr(caret + 1), key);
    if (e != static_cast<int>(e)) {
        throw ConfigError("non-integer unit exponent for key '" + std::string(key) + "'");
    }
    return pow(*base, Rational(static_cast<int>(e)));
}

}  // namespace

Quantity parse_unit(std::string_view expr, std::string_view key) {
    expr = trim(expr);
    if (expr.empty()) {
        throw ConfigError("value for key '" + std::string(key) + "' needs a unit suffix");
    }
    Quantity acc = units::one;
    char op = '*';
    std::size_t pos = 0;
    while (pos <= expr.size()) {
        const std::size_t next = expr.find_first_of("*/", pos);
        const std::string_view tok =
            trim(expr.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (tok.empty()) {
            throw ConfigError("malformed unit '" + std::string(expr) + "' for key '" +
                              std::string(key) + "'");
        }
        const Quantity f = parse_factor(tok, key);
        acc = op == '*' ? acc * f : acc / f;
        if (next == std::string_view::npos) break;
        op = expr[next];
        pos = next + 1;
    }
    return acc;
}

std::pair<double, std::string> split_value(std::string_view text, std::string_view key) {
    text = trim(text);
    const auto sp = text.find_first_of(" \t");
    const std::string_view num = text.substr(0, sp);
    const double v = parse_number(num, key);
    const std::string_view unit = sp == std::string_view::npos ? std::string_view{} : trim(text.substr(sp));
    return {v, std::string(unit)};
}

Quantity parse_quantity(std::string_view text, std::string_view key) {
    const auto [v, unit] = split_value(text, key);
    if (unit.empty()) {
        throw ConfigError("value for key '" + std::string(key) +
                          "' needs a unit suffix (bare numbers are rejected)");
    }
    return v * parse_unit(unit, key);
}

ConfigMap parse_config_text(std::string_view text) {
    ConfigMap map;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (!is_known_key(key)) throw ConfigError("unknown key '" + key + "'");
        if (value.empty()) throw ConfigError("empty value for key '" + key + "'");
        if (!map.emplace(key, value).second) throw ConfigError("duplicate key '" + key + "'");
    }
    return map;
}

ConfigMap load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

bool is_known_key(std::string_view key) { return find_key(key) != nullptr; }

bool is_numeric_key(std::string_view key) {
    const KeySpec* spec = find_key(key);
    return spec && spec->kind != KeyKind::text;
}

namespace {

class Reader {
public:
    explicit Reader(const ConfigMap& map) : map_(map) {}

    [[nodiscard]] bool has(std::string_view key) const { return map_.find(key) != map_.end(); }

    [[nodiscard]] Quantity quantity(std::string_view key) const {
        const auto it = map_.find(key);
        if (it == map_.end()) throw ConfigError("missing required key '" + std::string(key) + "'");
        const KeySpec* spec = find_key(key);
        return parse_quantity(it->second, key).require(spec->dim, "key '" + std::string(key) + "'");
    }

    [[nodiscard]] std::optional<Quantity> optional_quantity(std::string_view key) const {
        if (!has(key)) return std::nullopt;
        return quantity(key);
    }

    [[nodiscard]] double real(std::string_view key, double fallback) const {
        const auto it = map_.find(key);
        if (it == map_.end()) return fallback;
        return parse_number(trim(it->second), "key '" + std::string(key) + "'");
    }

    [[nodiscard]] int integer(std::string_view key) const {
        const auto it = map_.find(key);
        if (it == map_.end()) throw ConfigError("missing required key '" + std::string(key) + "'");
        const double v = parse_number(trim(it->second), "key '" + std::string(key) + "'");
        if (v != static_cast<int>(v)) {
            throw ConfigError("key '" + std::string(key) + "' must be an integer");
        }
        return static_cast<int>(v);
    }

    [[nodiscard]] std::optional<std::string> text(std::string_view key) const {
        const auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

private:
    const ConfigMap& map_;
};

}  // namespace

CouplingParams RunConfig::coupling() const { return make_coupling(medium, cavity, g); }

RunConfig build_config(const ConfigMap& map) {
    for (const auto& [key, value] : map) {
        if (!is_known_key(key)) throw ConfigError("unknown key '" + key + "'");
    }
    const Reader r(map);
    RunConfig cfg;
    cfg.medium = {r.quantity("E0"), r.quantity("d"), r.quantity("n"), r.quantity("tau_coh")};
    cfg.medium.validate();

    cfg.cavity.mode_index = r.integer("m");
    cfg.cavity.beam_diameter = r.quantity("d_beam");
    if (r.has("L_cav") && r.has("detuning")) {
        throw ConfigError("keys 'L_cav' and 'detuning' are mutually exclusive");
    }
    if (r.has("detuning")) {
        cfg.detuning = r.quantity("detuning");
        cfg.cavity.length =
            cavity_length_for_detuning(cfg.medium, cfg.cavity.mode_index, *cfg.detuning);
    } else if (r.has("L_cav")) {
        cfg.cavity.length = r.quantity("L_cav");
    } else {
        throw ConfigError("missing required key 'L_cav' (or 'detuning')");
    }
    cfg.cavity.validate();
    cfg.g = r.quantity("g");
    if (!(cfg.g.magnitude() > 0.0)) throw ConfigError("key 'g' must be positive");

    cfg.threshold = r.real("threshold", cfg.threshold);
    cfg.paraxial_bound = r.real("paraxial_bound", cfg.paraxial_bound);
    cfg.n0 = r.real("n0", cfg.n0);
    if (!(cfg.paraxial_bound > 0.0)) throw ConfigError("key 'paraxial_bound' must be positive");
    if (!(cfg.n0 > 0.0)) throw ConfigError("key 'n0' must be positive");

    if (const auto f = r.text("format")) {
        if (*f == "csv") cfg.format = OutputFormat::csv;
        else if (*f == "json") cfg.format = OutputFormat::json;
        else throw ConfigError("key 'format' must be csv or json");
    }
    if (const auto u = r.text("units")) {
        if (*u == "cgs") cfg.units = UnitSystem::cgs;
        else if (*u == "si") cfg.units = UnitSystem::si;
        else throw ConfigError("key 'units' must be cgs or si");
    }

    const bool any_gas = r.has("T") || r.has("m_eff") || r.has("n2") || r.has("n3") || r.has("n_s");
    if (any_gas) {
        GasState gas;
        gas.temperature = r.quantity("T");
        if (r.has("m_eff")) {
            gas.mass = r.quantity("m_eff");
        } else {
            gas.mass = effective_masses(cfg.coupling()).lower;
            cfg.mass_from_coupling = true;
        }
        gas.n2 = r.optional_quantity("n2");
        gas.n3 = r.optional_quantity("n3");
        gas.n_s = r.optional_quantity("n_s");
        if (!gas.n2 && !gas.n3) throw ConfigError("missing required key 'n2' (or 'n3')");
        gas.validate();
        cfg.gas = gas;
    }

    if (r.has("omega_eff")) {
        TrapSpec trap{r.quantity("omega_eff"), r.optional_quantity("U0"), r.optional_quantity("r0")};
        if (cfg.gas) trap.check_consistency(cfg.gas->mass);
        cfg.trap = trap;
    } else if (r.has("U0") || r.has("r0")) {
        throw ConfigError("missing required key 'omega_eff' (U0/r0 need a trap frequency)");
    }
    cfg.omega_at = r.optional_quantity("omega_at");
    cfg.energy_scale = r.optional_quantity("E_char");
    return cfg;
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string config_hash(const ConfigMap& map) {
    std::string canon;
    for (const auto& [key, value] : map) {
        canon += key;
        canon += '=';
        canon += value;
        canon += '\n';
    }
    return fnv1a_hex(canon);
}

}  // namespace polariton
