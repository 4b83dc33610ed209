#include "polariton/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polariton {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(const Quantity& q, const Dimension& d, const char* name) {
    q.require(d, name);
    if (!(q.magnitude() > 0.0)) throw ConfigError(std::string(name) + " must be positive");
}

const Quantity& kB() { return constants::k_boltzmann; }
const Quantity& hbar() { return constants::hbar; }

}  // namespace

PolaritonMasses effective_masses(const CouplingParams& coupling) {
    coupling.g.require(dims::energy, "g");
    if (!(coupling.g.magnitude() > 0.0)) throw ConfigError("g must be positive");
    const Quantity photon = hbar() * coupling.k_perp / constants::c;
    const Quantity& det = coupling.detuning;
    const Quantity root = sqrt(det * det + 4.0 * coupling.g * coupling.g);
    // 1 - |D|/R = 4g^2 / (R (R + |D|)) avoids cancellation on the heavy branch.
    const double light = 1.0 + (abs(det) / root).value();
    const double heavy = (4.0 * coupling.g * coupling.g / (root * (root + abs(det)))).value();
    double den_upper = det.magnitude() >= 0.0 ? heavy : light;
    double den_lower = det.magnitude() >= 0.0 ? light : heavy;

    PolaritonMasses out{photon, photon, photon, det};
    if (den_upper < kMassSaturation) {
        den_upper = kMassSaturation;
        out.upper_saturated = true;
    }
    if (den_lower < kMassSaturation) {
        den_lower = kMassSaturation;
        out.lower_saturated = true;
    }
    out.upper = 2.0 * photon / den_upper;
    out.lower = 2.0 * photon / den_lower;
    return out;
}

Quantity transverse_energy(const Quantity& k_par, const Quantity& mass) {
    k_par.require(dims::wavenumber, "k_par");
    require_positive(mass, dims::mass, "mass");
    return hbar() * hbar() * k_par * k_par / (2.0 * mass);
}

Quantity group_velocity(const Quantity& k_par, const Quantity& mass) {
    k_par.require(dims::wavenumber, "k_par");
    require_positive(mass, dims::mass, "mass");
    return (hbar() * k_par / mass).require(dims::velocity, "group velocity");
}

Quantity thermal_wavelength(const Quantity& mass, const Quantity& temperature) {
    require_positive(mass, dims::mass, "mass");
    require_positive(temperature, dims::temperature, "T");
    return (constants::h / sqrt(2.0 * kPi * mass * kB() * temperature))
        .require(dims::length, "lambda_T");
}

Quantity degeneracy_temperature(const Quantity& n2, const Quantity& mass) {
    require_positive(n2, dims::area_density, "n2");
    require_positive(mass, dims::mass, "mass");
    return (2.0 * kPi * hbar() * hbar() * n2 / (mass * kB()))
        .require(dims::temperature, "T_d");
}

Quantity kt_temperature(const Quantity& n_s, const Quantity& mass) {
    require_positive(n_s, dims::area_density, "n_s");
    require_positive(mass, dims::mass, "mass");
    return (kPi * hbar() * hbar() * n_s / (2.0 * mass * kB()))
        .require(dims::temperature, "T_KT");
}

Quantity trapped_bec_temperature(const Quantity& n2, const Quantity& mass) {
    require_positive(n2, dims::area_density, "n2");
    require_positive(mass, dims::mass, "mass");
    return (2.0 * kPi * hbar() * hbar() * n2 / (kTrappedBecZeta * mass * kB()))
        .require(dims::temperature, "T_c");
}

Quantity trapped_bec_temperature_from_N(double particles, const Quantity& omega_eff) {
    omega_eff.require(dims::frequency, "omega_eff");
    if (!(particles > 0.0)) throw ConfigError("particle number must be positive");
    if (omega_eff.magnitude() < 0.0) throw ConfigError("omega_eff must be non-negative");
    return (hbar() * omega_eff / kB() * std::sqrt(particles / kTrappedBecZeta))
        .require(dims::temperature, "T_c");
}

double trapped_number(const Quantity& n2, const Quantity& temperature, const Quantity& omega_eff,
                      const Quantity& mass) {
    require_positive(n2, dims::area_density, "n2");
    require_positive(temperature, dims::temperature, "T");
    require_positive(mass, dims::mass, "mass");
    omega_eff.require(dims::frequency, "omega_eff");
    if (!(omega_eff.magnitude() > 0.0)) {
        throw std::domain_error("trapped particle number diverges without a trap (omega_eff = 0)");
    }
    return (2.0 * kPi * n2 * kB() * temperature / (mass * omega_eff * omega_eff)).value();
}

double condensate_fraction(const Quantity& temperature, const Quantity& critical) {
    temperature.require(dims::temperature, "T");
    critical.require(dims::temperature, "T_c");
    if (temperature.magnitude() < 0.0) throw ConfigError("T must be non-negative");
    if (!(critical.magnitude() > 0.0)) throw ConfigError("T_c must be positive");
    const double r = (temperature / critical).value();
    return std::max(0.0, 1.0 - r * r);
}

Quantity effective_temperature(const Quantity& g) {
    g.require(dims::energy, "g");
    return g / kB();
}

ChemicalPotential chemical_potential(const Quantity& n2, const Quantity& mass,
                                     const Quantity& temperature) {
    const Quantity td = degeneracy_temperature(n2, mass);
    require_positive(temperature, dims::temperature, "T");
    const double x = (td / temperature).value();
    // ln(1 - e^-x): log1p form once e^-x < 1/2, log(-expm1) form below that.
    const double log_term =
        x > std::numbers::ln2 ? std::log1p(-std::exp(-x)) : std::log(-std::expm1(-x));
    return {kB() * temperature * log_term, -log_term < 1e-13};
}

void GasState::validate() const {
    require_positive(temperature, dims::temperature, "T");
    require_positive(mass, dims::mass, "m_eff");
    if (!n2 && !n3) throw ConfigError("gas state needs n2 or n3");
    if (n2) require_positive(*n2, dims::area_density, "n2");
    if (n3) require_positive(*n3, dims::volume_density, "n3");
    if (n_s) require_positive(*n_s, dims::area_density, "n_s");
}

void TrapSpec::check_consistency(const Quantity& mass, double rel_tol) const {
    omega_eff.require(dims::frequency, "omega_eff");
    if (omega_eff.magnitude() < 0.0) throw ConfigError("omega_eff must be non-negative");
    if (!u0 || !r0) return;
    u0->require(dims::energy, "U0");
    r0->require(dims::length, "r0");
    const Quantity expected = 0.5 * mass * omega_eff * omega_eff * *r0 * *r0;
    const double scale = std::max(std::abs(expected.magnitude()), std::abs(u0->magnitude()));
    if (std::abs((expected - *u0).magnitude()) > rel_tol * scale) {
        throw ConfigError("U0 is inconsistent with m_eff * omega_eff^2 * r0^2 / 2");
    }
}

CondensationReport condensation_report(const GasState& state, const std::optional<TrapSpec>& trap) {
    state.validate();
    CondensationReport r;
    r.temperature = state.temperature;
    r.mass = state.mass;
    r.n3 = state.n3;
    r.lambda_t = thermal_wavelength(state.mass, state.temperature);
    if (state.n2) {
        r.n2 = *state.n2;
    } else {
        r.n2 = r.lambda_t * *state.n3;
        r.n2_estimated = true;
    }
    r.r_int = 1.0 / sqrt(r.n2);
    r.t_degeneracy = degeneracy_temperature(r.n2, state.mass);
    r.t_kt = kt_temperature(state.n_s.value_or(r.n2), state.mass);
    r.mu = chemical_potential(r.n2, state.mass, state.temperature);
    r.degenerate = state.temperature <= r.t_degeneracy;
    r.kt_superfluid = state.temperature <= r.t_kt;
    r.overlap = r.lambda_t >= r.r_int;

    if (trap) {
        trap->check_consistency(state.mass);
        r.omega_eff = trap->omega_eff;
        if (trap->omega_eff.magnitude() > 0.0) {
            r.t_c = trapped_bec_temperature(r.n2, state.mass);
            r.trapped_particles =
                trapped_number(r.n2, state.temperature, trap->omega_eff, state.mass);
            r.condensate_fraction = condensate_fraction(state.temperature, *r.t_c);
        } else {
            r.t_c = Quantity(0.0, dims::temperature);
            r.condensate_fraction = 0.0;
        }
    }
    return r;
}

}  // namespace polariton
