// Atomic-optical trap design: a gradient-index lens n^2(r) = n0^2 (1 - n' r^2)
// whose optical potential n' r^2 / 2 reproduces the harmonic polariton trap
// m_eff Omega_eff^2 r^2 / 2 once scaled by an energy E_char:
//
//     n' = m_eff Omega_eff^2 / E_char
//
// E_char defaults to the transition energy E0 (the trapped photon carries
// roughly E0, and m_ph c^2 ~ E0). Omega_at, the magnetic trap frequency for the
// atoms, is carried through unchanged; nothing here ties it to Omega_eff.

#pragma once

#include <optional>
#include <string>

#include "polariton/quantities.hpp"

namespace polariton {

inline constexpr double kDefaultLensValidityFraction = 0.5;

inline constexpr const char* kTrapAssumptionNote =
    "n_prime = m_eff * omega_eff^2 / E_char; E_char is an assumed energy scale (default E0) "
    "that makes the dimensionless optical potential n_prime*r^2/2 an energy. "
    "omega_at is echoed as given; no relation between omega_at and omega_eff is imposed.";

struct LensProfile {
    double n0 = 1.0;
    Quantity n_prime;  // 1/length^2
    Quantity r_max;    // harmonic-validity radius; infinite for a flat profile

    /// n(r) from n^2 = n0^2 (1 - n' r^2); throws std::domain_error where n^2 <= 0.
    [[nodiscard]] double index_at(const Quantity& r) const;
    /// Dimensionless focusing potential (n0^2 - n^2(r)) / (2 n0^2) = n' r^2 / 2.
    [[nodiscard]] double optical_potential(const Quantity& r) const;
};

struct TrapDesign {
    LensProfile lens;
    Quantity omega_eff;
    Quantity omega_at;
    Quantity energy_scale;  // E_char
    std::string assumption_note = kTrapAssumptionNote;
    std::optional<bool> beam_within_lens;  // d_beam / 2 <= r_max, when a beam is given

    /// E_char * U_opt(r); equals m_eff Omega_eff^2 r^2 / 2 by construction.
    [[nodiscard]] Quantity potential_energy(const Quantity& r) const;
};

LensProfile lens_for_omega(const Quantity& omega_eff, const Quantity& mass,
                           const Quantity& energy_scale, double n0,
                           double validity_fraction = kDefaultLensValidityFraction);

/// sqrt(n' E_char / m_eff), the inverse of lens_for_omega.
Quantity omega_for_lens(const LensProfile& lens, const Quantity& mass, const Quantity& energy_scale);

/// Omega_eff = kB T_c sqrt(1.645 / N) / hbar, then the matching lens.
TrapDesign design_trap(const Quantity& target_tc, double particles, const Quantity& mass,
                       const Quantity& energy_scale, const Quantity& omega_at, double n0 = 1.0,
                       const std::optional<Quantity>& beam_diameter = std::nullopt);

}  // namespace polariton
