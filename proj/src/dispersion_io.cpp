#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "polariton/dispersion.hpp"
#include "polariton/format.hpp"

namespace polariton {

namespace {

constexpr const char* kHeader =
    "k_par_over_k_perp,E1_eV,E2_eV,mu_sq,nu_sq,E_ph_paraxial_eV,E_ph_freespace_eV";

std::string ev(const Quantity& e) { return format_number(e.in(units::eV)); }

bool take_meta(const std::string& line, const std::string& key, std::string& value) {
    const std::string prefix = "# " + key + " = ";
    if (line.rfind(prefix, 0) != 0) return false;
    value = line.substr(prefix.size());
    return true;
}

}  // namespace

void write_dispersion_csv(std::ostream& os, const DispersionCurve& curve,
                          const std::vector<std::string>& notes) {
    os << "# delta_eV = " << ev(curve.detuning) << '\n';
    os << "# g_eV = " << ev(curve.g) << '\n';
    os << "# k_perp_cm1 = " << format_number(curve.k_perp.in(Quantity(1.0, dims::wavenumber)))
       << '\n';
    os << "# grid = samples " << curve.grid.samples << " k_max_over_k_perp "
       << format_number(curve.grid.k_max_over_k_perp) << '\n';
    os << "# paraxial_warning = " << (curve.paraxial_warning ? 1 : 0) << '\n';
    for (const auto& note : notes) os << "# " << note << '\n';
    os << kHeader << '\n';
    for (const auto& p : curve.points) {
        os << format_number((p.k_par / curve.k_perp).value()) << ',' << ev(p.mode.upper) << ','
           << ev(p.mode.lower) << ',' << format_number(p.mode.mu_sq) << ','
           << format_number(p.mode.nu_sq) << ',' << ev(p.photon_paraxial) << ','
           << ev(p.photon_freespace) << '\n';
    }
}

DispersionCurve read_dispersion_csv(std::istream& is, std::vector<std::string>* notes) {
    DispersionCurve curve;
    bool have_header = false;
    int seen_meta = 0;
    std::string line;
    while (std::getline(is, line)) {
        if (!have_header && !line.empty() && line[0] == '#') {
            std::string v;
            if (take_meta(line, "delta_eV", v)) {
                curve.detuning = parse_number(v, "delta_eV") * units::eV;
                ++seen_meta;
            } else if (take_meta(line, "g_eV", v)) {
                curve.g = parse_number(v, "g_eV") * units::eV;
                ++seen_meta;
            } else if (take_meta(line, "k_perp_cm1", v)) {
                curve.k_perp = Quantity(parse_number(v, "k_perp_cm1"), dims::wavenumber);
                ++seen_meta;
            } else if (take_meta(line, "grid", v)) {
                std::istringstream gs(v);
                std::string w1, w2, kmax;
                gs >> w1 >> curve.grid.samples >> w2 >> kmax;
                if (!gs || w1 != "samples" || w2 != "k_max_over_k_perp") {
                    throw ConfigError("malformed grid metadata line");
                }
                curve.grid.k_max_over_k_perp = parse_number(kmax, "k_max_over_k_perp");
                ++seen_meta;
            } else if (take_meta(line, "paraxial_warning", v)) {
                curve.paraxial_warning = v == "1";
                ++seen_meta;
            } else if (notes) {
                notes->push_back(line.size() > 2 ? line.substr(2) : std::string());
            }
            continue;
        }
        if (!have_header) {
            if (line != kHeader) throw ConfigError("unexpected dispersion CSV header: " + line);
            if (seen_meta != 5) throw ConfigError("dispersion CSV metadata is incomplete");
            have_header = true;
            continue;
        }
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        double v[7];
        for (double& x : v) {
            if (!std::getline(row, cell, ',')) throw ConfigError("short dispersion CSV row");
            x = parse_number(cell, "dispersion CSV cell");
        }
        BranchPoint p;
        p.k_par = v[0] * curve.k_perp;
        p.mode = {v[1] * units::eV, v[2] * units::eV, v[3], v[4]};
        p.photon_paraxial = v[5] * units::eV;
        p.photon_freespace = v[6] * units::eV;
        curve.points.push_back(p);
    }
    if (!have_header) throw ConfigError("dispersion CSV has no header row");
    return curve;
}

}  // namespace polariton
