#include "polariton/cli.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "polariton/config.hpp"
#include "polariton/coupling.hpp"
#include "polariton/dispersion.hpp"
#include "polariton/format.hpp"
#include "polariton/thermo.hpp"
#include "polariton/trap.hpp"

namespace polariton::cli {

namespace {

constexpr const char* kLambdaNote =
    "lambda_T = h / sqrt(2 pi m_eff kB T); the form hbar / sqrt(2 m_eff kB T) is smaller by "
    "sqrt(4 pi) and inconsistent with n2 lambda_T^2 = T_d / T";
constexpr const char* kMuNote =
    "mu = kB T ln[1 - exp(-T_d / T)], using n2 lambda_T^2 = T_d / T";
constexpr const char* kN2Note = "n2 estimated as lambda_T * n3 (order-of-magnitude estimate)";
constexpr const char* kMassNote =
    "m_eff not given; using the lower-branch curvature mass 2 m_ph / (1 + D / sqrt(D^2 + 4 g^2))";
constexpr const char* kDepthNote =
    "well depth is measured at the paraxial window edge, not at k_par -> infinity";

// ---------------------------------------------------------------------------
// Tabular results shared by the CSV and JSON emitters.

struct Cell {
    enum class Kind { number, boolean, text, empty };
    Kind kind = Kind::empty;
    std::string text;
};

Cell num(double v) { return {Cell::Kind::number, format_number(v)}; }
Cell flag(bool b) { return {Cell::Kind::boolean, b ? "true" : "false"}; }
Cell text(std::string s) { return {Cell::Kind::text, std::move(s)}; }
Cell blank() { return {}; }

struct Table {
    std::vector<std::string> notes;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    int exit_code = kExitOk;
};

struct Context {
    std::string command;
    std::string hash;
    UnitSystem units = UnitSystem::cgs;
    OutputFormat format = OutputFormat::csv;
};

std::vector<std::string> preamble(const Context& ctx) {
    return {std::string(kToolName) + " " + kVersion, "config_hash = " + ctx.hash,
            "command = " + ctx.command, std::string("units = ") + std::string(to_string(ctx.units))};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

void write_csv_rows(std::ostream& os, const Table& t) {
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << csv_escape(row[i].text);
        }
        os << '\n';
    }
}

void write_csv(std::ostream& os, const Context& ctx, const Table& t) {
    for (const auto& line : preamble(ctx)) os << "# " << line << '\n';
    for (const auto& note : t.notes) os << "# " << note << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) os << ',';
        os << t.columns[i];
    }
    os << '\n';
    write_csv_rows(os, t);
}

nlohmann::ordered_json cell_json(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::number: {
            const double v = std::strtod(c.text.c_str(), nullptr);
            if (!std::isfinite(v)) return nullptr;
            return v;
        }
        case Cell::Kind::boolean: return c.text == "true";
        case Cell::Kind::text: return c.text;
        case Cell::Kind::empty: return nullptr;
    }
    return nullptr;
}

void write_json(std::ostream& os, const Context& ctx, const Table& t) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json meta;
    meta["tool"] = std::string(kToolName) + " " + kVersion;
    meta["config_hash"] = ctx.hash;
    meta["command"] = ctx.command;
    meta["units"] = std::string(to_string(ctx.units));
    meta["notes"] = t.notes;
    doc["_meta"] = meta;
    auto row_object = [&](const std::vector<Cell>& row) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
        return obj;
    };
    if (t.rows.size() == 1) {
        const nlohmann::ordered_json obj = row_object(t.rows.front());
        for (const auto& [k, v] : obj.items()) doc[k] = v;
    } else {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) rows.push_back(row_object(row));
        doc["rows"] = rows;
    }
    os << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Unit presentation.

double present(const Quantity& q, UnitSystem sys) { return convert(q, sys).magnitude(); }

std::string col(const char* cgs, const char* si, UnitSystem sys) {
    return sys == UnitSystem::cgs ? cgs : si;
}

double in_ev(const Quantity& e) { return e.in(units::eV); }

// ---------------------------------------------------------------------------
// Commands.

struct GridFlags {
    int samples = 101;
    double kmax = 0.1;
    unsigned workers = 1;
    bool well = false;
};

Table check_coupling_table(const RunConfig& cfg) {
    const Quantity omega_c = cooperative_frequency(cfg.medium);
    const Quantity decoherence = 1.0 / (2.0 * cfg.medium.coherence_time);
    const CouplingVerdict v = is_strong_coupling(cfg.medium, cfg.threshold);
    Table t;
    t.columns = {"omega_c_s1", "decoherence_rate_s1", "ratio", "threshold", "regime"};
    t.rows.push_back({num(omega_c.magnitude()), num(decoherence.magnitude()), num(v.ratio),
                      num(cfg.threshold), text(v.regime == Regime::strong ? "Strong" : "Weak")});
    t.exit_code = v.regime == Regime::strong ? kExitOk : kExitRegime;
    return t;
}

std::optional<Quantity> superfluid_density(const RunConfig& cfg) {
    if (!cfg.gas) return std::nullopt;
    if (cfg.gas->n_s) return cfg.gas->n_s;
    return cfg.gas->n2;
}

Table masses_table(const RunConfig& cfg, UnitSystem sys) {
    const PolaritonMasses m = effective_masses(cfg.coupling());
    Table t;
    t.columns = {"detuning_eV",
                 col("m_ph_g", "m_ph_kg", sys),
                 col("m_upper_g", "m_upper_kg", sys),
                 col("m_lower_g", "m_lower_kg", sys),
                 "upper_saturated",
                 "lower_saturated",
                 "T_KT_upper_K",
                 "T_KT_lower_K"};
    std::vector<Cell> row{num(in_ev(m.detuning)), num(present(m.photon, sys)),
                          num(present(m.upper, sys)), num(present(m.lower, sys)),
                          flag(m.upper_saturated), flag(m.lower_saturated)};
    if (const auto ns = superfluid_density(cfg)) {
        row.push_back(num(kt_temperature(*ns, m.upper).magnitude()));
        row.push_back(num(kt_temperature(*ns, m.lower).magnitude()));
    } else {
        row.push_back(blank());
        row.push_back(blank());
    }
    t.rows.push_back(std::move(row));
    return t;
}

DispersionCurve curve_for(const RunConfig& cfg, const GridFlags& grid) {
    return sample_dispersion(cfg.coupling(), cfg.medium.transition_energy,
                             {grid.samples, grid.kmax}, grid.workers, cfg.paraxial_bound);
}

Table hopfield_table(const RunConfig& cfg, const GridFlags& grid) {
    const DispersionCurve curve = curve_for(cfg, grid);
    Table t;
    t.columns = {"k_par_over_k_perp", "delta_k_eV", "mu_sq", "nu_sq"};
    for (const auto& p : curve.points) {
        t.rows.push_back({num((p.k_par / curve.k_perp).value()),
                          num(in_ev(cfg.medium.transition_energy - p.photon_paraxial)),
                          num(p.mode.mu_sq), num(p.mode.nu_sq)});
    }
    if (curve.paraxial_warning) t.notes.emplace_back("warning: k_max exceeds the paraxial bound");
    return t;
}

Table dispersion_table(const DispersionCurve& curve) {
    Table t;
    t.columns = {"k_par_over_k_perp", "E1_eV",   "E2_eV", "mu_sq",
                 "nu_sq",             "E_ph_paraxial_eV", "E_ph_freespace_eV"};
    for (const auto& p : curve.points) {
        t.rows.push_back({num((p.k_par / curve.k_perp).value()), num(in_ev(p.mode.upper)),
                          num(in_ev(p.mode.lower)), num(p.mode.mu_sq), num(p.mode.nu_sq),
                          num(in_ev(p.photon_paraxial)), num(in_ev(p.photon_freespace))});
    }
    return t;
}

std::vector<std::string> well_notes(const RunConfig& cfg, int& exit_code) {
    std::vector<std::string> notes;
    try {
        WellOptions opts;
        opts.paraxial_bound = cfg.paraxial_bound;
        const WellGeometry w = well_geometry(cfg.coupling(), cfg.medium.transition_energy, opts);
        notes.push_back("well_inflection_k_over_k_perp = " + format_number(w.angular_halfwidth));
        notes.push_back("well_depth_eV = " + format_number(in_ev(w.depth)));
        notes.push_back("well_energy_eV = " + format_number(in_ev(w.well_energy)) +
                        " (hbar^2 dk^2 / 2 m_lower)");
        notes.push_back("well_m_eff_g = " + format_number(w.lower_mass.magnitude()) +
                        " (lower-branch mass)");
        notes.push_back("diffraction_limit_rad = " + format_number(w.diffraction_limit));
        notes.push_back(std::string("diffraction_ok = ") + (w.diffraction_ok ? "true" : "false"));
        notes.emplace_back(kDepthNote);
    } catch (const NoWellError& e) {
        notes.push_back(std::string("well = none (") + e.what() + ")");
        exit_code = kExitRegime;
    }
    return notes;
}

const GasState& require_gas(const RunConfig& cfg) {
    if (!cfg.gas) throw ConfigError("missing required key 'T' (gas state needed)");
    return *cfg.gas;
}

Table thresholds_table(const RunConfig& cfg, UnitSystem sys) {
    const GasState& gas = require_gas(cfg);
    const CondensationReport r = condensation_report(gas, cfg.trap);
    Table t;
    t.notes.emplace_back(kLambdaNote);
    t.notes.emplace_back(kMuNote);
    if (r.n2_estimated) t.notes.emplace_back(kN2Note);
    if (cfg.mass_from_coupling) t.notes.emplace_back(kMassNote);
    if (r.mu.negligible) t.notes.emplace_back("mu is below 1e-13 kB T (0- within precision)");
    t.notes.push_back("T_eff = g / kB = " +
                      format_number(effective_temperature(cfg.g).magnitude()) +
                      " K (informational)");
    t.columns = {"T_K",
                 col("m_eff_g", "m_eff_kg", sys),
                 col("n3_cm3", "n3_m3", sys),
                 col("n2_cm2", "n2_m2", sys),
                 col("lambda_T_cm", "lambda_T_m", sys),
                 col("r_int_cm", "r_int_m", sys),
                 "T_d_K",
                 "T_KT_K",
                 "mu_meV",
                 "omega_eff_s1",
                 "T_c_K",
                 "N2",
                 "N0_frac",
                 "degenerate",
                 "kt_superfluid",
                 "overlap"};
    std::vector<Cell> row{
        num(r.temperature.magnitude()),
        num(present(r.mass, sys)),
        r.n3 ? num(present(*r.n3, sys)) : blank(),
        num(present(r.n2, sys)),
        num(present(r.lambda_t, sys)),
        num(present(r.r_int, sys)),
        num(r.t_degeneracy.magnitude()),
        num(r.t_kt.magnitude()),
        num(r.mu.mu.in(units::meV)),
        r.omega_eff ? num(r.omega_eff->magnitude()) : blank(),
        r.t_c ? num(r.t_c->magnitude()) : blank(),
        r.trapped_particles ? num(*r.trapped_particles) : blank(),
        r.condensate_fraction ? num(*r.condensate_fraction) : blank(),
        flag(r.degenerate),
        flag(r.kt_superfluid),
        flag(r.overlap),
    };
    t.rows.push_back(std::move(row));
    return t;
}

Table trap_table(const RunConfig& cfg, const Quantity& target_tc, double particles,
                 UnitSystem sys) {
    if (!cfg.omega_at) throw ConfigError("missing required key 'omega_at'");
    Quantity mass;
    Table t;
    if (cfg.gas) {
        mass = cfg.gas->mass;
    } else {
        mass = effective_masses(cfg.coupling()).lower;
        t.notes.emplace_back(kMassNote);
    }
    const Quantity scale = cfg.energy_scale.value_or(cfg.medium.transition_energy);
    const TrapDesign d = design_trap(target_tc, particles, mass, scale, *cfg.omega_at, cfg.n0,
                                     cfg.cavity.beam_diameter);
    t.notes.push_back("target_T_c_K = " + format_number(target_tc.magnitude()) +
                      ", N = " + format_number(particles));
    if (d.beam_within_lens) {
        t.notes.push_back(std::string("beam_within_lens = ") +
                          (*d.beam_within_lens ? "true" : "false") + " (d_beam/2 <= r_max)");
    }
    t.columns = {"omega_eff_s1", "omega_at_s1", col("n_prime_cm2", "n_prime_m2", sys),
                 "n0",           col("r_max_cm", "r_max_m", sys), "E_char_eV",
                 "assumption_note"};
    t.rows.push_back({num(d.omega_eff.magnitude()), num(d.omega_at.magnitude()),
                      num(present(d.lens.n_prime, sys)), num(d.lens.n0),
                      num(present(d.lens.r_max, sys)), num(in_ev(d.energy_scale)),
                      text(d.assumption_note)});
    return t;
}

Quantity parse_flag_quantity(const std::string& v, const char* name, const Dimension& dim) {
    return parse_quantity(v, name).require(dim, name);
}

// ---------------------------------------------------------------------------
// Sweep.

struct SweepFlags {
    std::string param;
    std::string from;
    std::string to;
    int steps = 11;
    std::string scale = "linear";
    std::string target = "masses";
};

std::vector<double> sweep_values(double from, double to, int steps, bool log_scale) {
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / (steps - 1);
        double v = 0.0;
        if (i == 0) v = from;
        else if (i == steps - 1) v = to;
        else if (log_scale) v = from * std::pow(to / from, t);
        else v = from * (1.0 - t) + to * t;
        out[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

using TableFn = std::function<Table(const RunConfig&)>;

Table run_sweep(const ConfigMap& base, const SweepFlags& sw, const TableFn& target,
                unsigned workers) {
    if (!is_known_key(sw.param)) throw ConfigError("unknown sweep key '" + sw.param + "'");
    if (!is_numeric_key(sw.param)) {
        throw ConfigError("cannot sweep non-numeric key '" + sw.param + "'");
    }
    if (sw.steps < 2) throw ConfigError("--steps must be >= 2");
    const bool log_scale = sw.scale == "log";
    if (!log_scale && sw.scale != "linear") throw ConfigError("--scale must be linear or log");

    const auto [from, from_unit] = split_value(sw.from, "--from");
    const auto [to, to_unit] = split_value(sw.to, "--to");
    if (from_unit != to_unit) throw ConfigError("--from and --to must use the same unit");
    if (from == to) throw ConfigError("--from and --to must differ");
    if (log_scale && (from == 0.0 || to == 0.0 || (from < 0.0) != (to < 0.0))) {
        throw ConfigError("log sweeps need nonzero endpoints of the same sign");
    }
    // Reject a unit of the wrong dimension once, before any evaluation.
    {
        ConfigMap probe = base;
        probe[sw.param] = format_number(from) + (from_unit.empty() ? "" : " " + from_unit);
        (void)build_config(probe);
    }

    const std::vector<double> values = sweep_values(from, to, sw.steps, log_scale);
    std::vector<Table> tables(values.size());
    std::vector<std::exception_ptr> errors(values.size());
    auto eval = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                ConfigMap point = base;
                point[sw.param] = format_number(values[i]) + (from_unit.empty() ? "" : " " + from_unit);
                tables[i] = target(build_config(point));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t n = values.size();
    const std::size_t nthreads = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
    if (nthreads == 1) {
        eval(0, n);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (n + nthreads - 1) / nthreads;
        for (std::size_t b = 0; b < n; b += chunk) pool.emplace_back(eval, b, std::min(n, b + chunk));
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    Table out;
    out.notes.push_back("sweep = " + sw.param + " from " + format_number(from) + " to " +
                        format_number(to) + (from_unit.empty() ? "" : " " + from_unit) + ", " +
                        std::to_string(sw.steps) + " steps, " + sw.scale + " scale, target " +
                        sw.target);
    for (const auto& note : tables.front().notes) out.notes.push_back(note);
    out.columns.push_back("sweep_" + sw.param);
    for (const auto& c : tables.front().columns) out.columns.push_back(c);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& row : tables[i].rows) {
            std::vector<Cell> r{num(values[i])};
            r.insert(r.end(), row.begin(), row.end());
            out.rows.push_back(std::move(r));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

struct CommonFlags {
    std::string config;
    std::string out = "-";
    std::string format;
    std::string units;
};

void add_common(CLI::App* sub, CommonFlags& f) {
    sub->add_option("--config", f.config, "Run configuration (key = value with units)")->required();
    sub->add_option("--out", f.out, "Output path, '-' for standard output");
    sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--units", f.units, "cgs or si")->check(CLI::IsMember({"cgs", "si"}));
}

void add_grid(CLI::App* sub, GridFlags& g) {
    sub->add_option("--samples", g.samples, "Number of k_par samples (>= 2)");
    sub->add_option("--kmax", g.kmax, "Largest k_par in units of k_perp");
    sub->add_option("--workers", g.workers, "Worker threads");
}

void emit(std::ostream& os, const Context& ctx, const Table& t) {
    if (ctx.format == OutputFormat::json) {
        write_json(os, ctx, t);
    } else {
        write_csv(os, ctx, t);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cavity-polariton dispersion and condensation thresholds", kToolName};
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
    app.require_subcommand(1);

    CommonFlags common;
    GridFlags grid;
    SweepFlags sweep;
    std::string target_tc;
    double n_particles = 0.0;

    auto* check = app.add_subcommand("check-coupling", "Strong-coupling criterion");
    auto* disp = app.add_subcommand("dispersion", "Polariton branches over a k_par grid");
    auto* hop = app.add_subcommand("hopfield", "Hopfield weights over a k_par grid");
    auto* mass = app.add_subcommand("masses", "Branch curvature masses");
    auto* thr = app.add_subcommand("thresholds", "Degeneracy / KT / trapped-BEC ladder");
    auto* trap = app.add_subcommand("trap", "Gradient-index trap design");
    auto* sw = app.add_subcommand("sweep", "Sweep one config key through a target command");
    for (auto* sub : {check, disp, hop, mass, thr, trap, sw}) add_common(sub, common);
    for (auto* sub : {disp, hop, sw}) add_grid(sub, grid);
    disp->add_flag("--well", grid.well, "Report lower-branch well geometry (exit 2 if none)");
    trap->add_option("--target-tc", target_tc, "Target condensation temperature, e.g. '300 K'")
        ->required();
    trap->add_option("--n-particles", n_particles, "Total particle number N")->required();
    sw->add_option("--param", sweep.param, "Config key to sweep")->required();
    sw->add_option("--from", sweep.from, "Start value with unit, e.g. '-2 meV'")->required();
    sw->add_option("--to", sweep.to, "End value with unit")->required();
    sw->add_option("--steps", sweep.steps, "Number of sweep points (>= 2)");
    sw->add_option("--scale", sweep.scale, "linear or log");
    sw->add_option("--target", sweep.target, "Command evaluated at each point")
        ->check(CLI::IsMember({"check-coupling", "dispersion", "hopfield", "masses", "thresholds"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const ConfigMap map = load_config_file(common.config);
        const RunConfig cfg = build_config(map);
        Context ctx;
        ctx.hash = config_hash(map);
        ctx.units = common.units.empty() ? cfg.units.value_or(UnitSystem::cgs)
                                         : (common.units == "si" ? UnitSystem::si : UnitSystem::cgs);
        const bool json_default = trap->parsed();
        ctx.format = common.format.empty()
                         ? cfg.format.value_or(json_default ? OutputFormat::json : OutputFormat::csv)
                         : (common.format == "json" ? OutputFormat::json : OutputFormat::csv);
        if (grid.workers == 0) grid.workers = 1;

        std::ostringstream buf;
        int code = kExitOk;
        auto table_for = [&](const std::string& name) -> TableFn {
            if (name == "check-coupling") return [](const RunConfig& c) { return check_coupling_table(c); };
            if (name == "masses") return [&ctx](const RunConfig& c) { return masses_table(c, ctx.units); };
            if (name == "thresholds") return [&ctx](const RunConfig& c) { return thresholds_table(c, ctx.units); };
            if (name == "hopfield") {
                GridFlags g = grid;
                g.workers = 1;
                return [g](const RunConfig& c) { return hopfield_table(c, g); };
            }
            GridFlags g = grid;
            g.workers = 1;
            return [g](const RunConfig& c) { return dispersion_table(curve_for(c, g)); };
        };

        if (check->parsed()) {
            ctx.command = "check-coupling";
            const Table t = check_coupling_table(cfg);
            emit(buf, ctx, t);
            code = t.exit_code;
        } else if (mass->parsed()) {
            ctx.command = "masses";
            emit(buf, ctx, masses_table(cfg, ctx.units));
        } else if (thr->parsed()) {
            ctx.command = "thresholds";
            emit(buf, ctx, thresholds_table(cfg, ctx.units));
        } else if (hop->parsed()) {
            ctx.command = "hopfield";
            emit(buf, ctx, hopfield_table(cfg, grid));
        } else if (trap->parsed()) {
            ctx.command = "trap";
            const Quantity tc = parse_flag_quantity(target_tc, "--target-tc", dims::temperature);
            if (!(tc.magnitude() > 0.0)) throw ConfigError("--target-tc must be positive");
            if (!(n_particles > 0.0)) throw ConfigError("--n-particles must be positive");
            emit(buf, ctx, trap_table(cfg, tc, n_particles, ctx.units));
        } else if (disp->parsed()) {
            ctx.command = "dispersion";
            const DispersionCurve curve = curve_for(cfg, grid);
            std::vector<std::string> notes = preamble(ctx);
            if (curve.paraxial_warning) {
                notes.emplace_back("warning: k_max exceeds the paraxial bound");
                err << "warning: k_max exceeds the paraxial bound\n";
            }
            if (grid.well) {
                for (auto& n : well_notes(cfg, code)) notes.push_back(std::move(n));
            }
            if (ctx.format == OutputFormat::json) {
                Table t = dispersion_table(curve);
                t.notes.push_back("delta_eV = " + format_number(in_ev(curve.detuning)));
                t.notes.push_back("g_eV = " + format_number(in_ev(curve.g)));
                t.notes.push_back("k_perp_cm1 = " + format_number(curve.k_perp.magnitude()));
                for (std::size_t i = 4; i < notes.size(); ++i) t.notes.push_back(notes[i]);
                write_json(buf, ctx, t);
            } else {
                write_dispersion_csv(buf, curve, notes);
            }
        } else if (sw->parsed()) {
            ctx.command = "sweep";
            if (ctx.format == OutputFormat::json) throw ConfigError("sweep emits CSV only");
            emit(buf, ctx, run_sweep(map, sweep, table_for(sweep.target), grid.workers));
        }

        if (common.out.empty() || common.out == "-") {
            out << buf.str();
        } else {
            std::ofstream file(common.out, std::ios::binary);
            if (!file) throw ConfigError("cannot open output file '" + common.out + "'");
            file << buf.str();
        }
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace polariton::cli
