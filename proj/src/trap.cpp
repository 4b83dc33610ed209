#include "polariton/trap.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polariton/thermo.hpp"

namespace polariton {

namespace {

const Dimension kInverseArea{-2, 0, 0, 0};

void require_positive(const Quantity& q, const Dimension& d, const char* name) {
    q.require(d, name);
    if (!(q.magnitude() > 0.0)) throw ConfigError(std::string(name) + " must be positive");
}

}  // namespace

double LensProfile::index_at(const Quantity& r) const {
    r.require(dims::length, "r");
    const double n2 = n0 * n0 * (1.0 - (n_prime * r * r).value());
    if (!(n2 > 0.0)) throw std::domain_error("refractive index profile vanishes at this radius");
    return std::sqrt(n2);
}

double LensProfile::optical_potential(const Quantity& r) const {
    r.require(dims::length, "r");
    return 0.5 * (n_prime * r * r).value();
}

Quantity TrapDesign::potential_energy(const Quantity& r) const {
    return energy_scale * lens.optical_potential(r);
}

LensProfile lens_for_omega(const Quantity& omega_eff, const Quantity& mass,
                           const Quantity& energy_scale, double n0, double validity_fraction) {
    omega_eff.require(dims::frequency, "omega_eff");
    if (omega_eff.magnitude() < 0.0) throw ConfigError("omega_eff must be non-negative");
    require_positive(mass, dims::mass, "m_eff");
    require_positive(energy_scale, dims::energy, "E_char");
    if (!(n0 > 0.0)) throw ConfigError("n0 must be positive");
    if (!(validity_fraction > 0.0 && validity_fraction < 1.0)) {
        throw ConfigError("lens validity fraction must lie in (0, 1)");
    }

    LensProfile lens;
    lens.n0 = n0;
    lens.n_prime = (mass * omega_eff * omega_eff / energy_scale).require(kInverseArea, "n_prime");
    if (lens.n_prime.magnitude() > 0.0) {
        lens.r_max = validity_fraction / sqrt(lens.n_prime);
    } else {
        lens.r_max = Quantity(std::numeric_limits<double>::infinity(), dims::length);
    }
    return lens;
}

Quantity omega_for_lens(const LensProfile& lens, const Quantity& mass, const Quantity& energy_scale) {
    lens.n_prime.require(kInverseArea, "n_prime");
    if (lens.n_prime.magnitude() < 0.0) throw ConfigError("n_prime must be non-negative");
    require_positive(mass, dims::mass, "m_eff");
    require_positive(energy_scale, dims::energy, "E_char");
    return sqrt(lens.n_prime * energy_scale / mass).require(dims::frequency, "omega_eff");
}

TrapDesign design_trap(const Quantity& target_tc, double particles, const Quantity& mass,
                       const Quantity& energy_scale, const Quantity& omega_at, double n0,
                       const std::optional<Quantity>& beam_diameter) {
    require_positive(target_tc, dims::temperature, "target T_c");
    if (!(particles > 0.0)) throw ConfigError("particle number must be positive");
    require_positive(omega_at, dims::frequency, "omega_at");

    TrapDesign design;
    design.omega_eff = (constants::k_boltzmann * target_tc *
                        std::sqrt(kTrappedBecZeta / particles) / constants::hbar)
                           .require(dims::frequency, "omega_eff");
    design.lens = lens_for_omega(design.omega_eff, mass, energy_scale, n0);
    design.omega_at = omega_at;
    design.energy_scale = energy_scale;
    if (beam_diameter) {
        require_positive(*beam_diameter, dims::length, "d_beam");
        design.beam_within_lens = 0.5 * *beam_diameter <= design.lens.r_max;
    }
    return design;
}

}  // namespace polariton
