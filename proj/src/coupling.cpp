#include "polariton/coupling.hpp"

#include <numbers>
#include <string>

namespace polariton {

namespace {

void require_positive(const Quantity& q, const Dimension& d, const char* name) {
    q.require(d, name);
    if (!(q.magnitude() > 0.0)) {
        throw ConfigError(std::string(name) + " must be strictly positive");
    }
}

}  // namespace

void MediumParams::validate() const {
    require_positive(transition_energy, dims::energy, "E0");
    require_positive(dipole, dims::dipole_moment, "d");
    require_positive(density, dims::volume_density, "n");
    require_positive(coherence_time, dims::time, "tau_coh");
}

Quantity MediumParams::transition_frequency() const {
    return transition_energy / constants::hbar;
}

void CavityParams::validate() const {
    require_positive(length, dims::length, "L_cav");
    require_positive(beam_diameter, dims::length, "d_beam");
    if (mode_index < 1) throw ConfigError("m must be >= 1");
}

Quantity cooperative_frequency(const MediumParams& medium) {
    medium.validate();
    const Quantity omega0 = medium.transition_frequency();
    return sqrt(2.0 * std::numbers::pi * medium.dipole * medium.dipole * omega0 *
                medium.density / constants::hbar)
        .require(dims::frequency, "omega_c");
}

CouplingVerdict is_strong_coupling(const MediumParams& medium, double threshold) {
    const double ratio = (cooperative_frequency(medium) * 2.0 * medium.coherence_time).value();
    return {ratio > threshold ? Regime::strong : Regime::weak, ratio};
}

CouplingParams make_coupling(const MediumParams& medium, const CavityParams& cavity,
                             const Quantity& g) {
    medium.validate();
    cavity.validate();
    require_positive(g, dims::energy, "g");
    const Quantity k_perp = std::numbers::pi * cavity.mode_index / cavity.length;
    const Quantity detuning = medium.transition_energy - constants::hbar * constants::c * k_perp;
    return {g, k_perp, detuning, cavity};
}

Quantity resonant_cavity_length(const MediumParams& medium, int mode_index) {
    if (mode_index < 1) throw ConfigError("m must be >= 1");
    medium.validate();
    return std::numbers::pi * mode_index * constants::hbar * constants::c /
           medium.transition_energy;
}

Quantity cavity_length_for_detuning(const MediumParams& medium, int mode_index,
                                    const Quantity& detuning) {
    if (mode_index < 1) throw ConfigError("m must be >= 1");
    medium.validate();
    const Quantity photon = medium.transition_energy - detuning;
    if (!(photon.magnitude() > 0.0)) {
        throw ConfigError("detuning must be smaller than E0");
    }
    return std::numbers::pi * mode_index * constants::hbar * constants::c / photon;
}

}  // namespace polariton
