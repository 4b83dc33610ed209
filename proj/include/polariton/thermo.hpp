// Thermodynamics of the transverse (two-dimensional) polariton gas:
// curvature masses, thermal wavelength, the degeneracy / Kosterlitz-Thouless /
// trapped-BEC temperature ladder, condensate fraction and group velocity.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polariton/coupling.hpp"
#include "polariton/quantities.hpp"

namespace polariton {

/// Prefactor of the 2D harmonic-trap BEC temperature (zeta(2) to 4 figures).
inline constexpr double kTrappedBecZeta = 1.645;

/// Denominators 1 -/+ D/sqrt(D^2+4g^2) below this saturate and are flagged.
inline constexpr double kMassSaturation = 1e-12;

struct PolaritonMasses {
    Quantity photon;  // m_ph = hbar k_perp / c
    Quantity upper;   // m_pol^(1)
    Quantity lower;   // m_pol^(2)
    Quantity detuning;
    bool upper_saturated = false;
    bool lower_saturated = false;
};

PolaritonMasses effective_masses(const CouplingParams& coupling);

/// hbar^2 k^2 / (2 m)
Quantity transverse_energy(const Quantity& k_par, const Quantity& mass);
/// hbar k / m
Quantity group_velocity(const Quantity& k_par, const Quantity& mass);

/// h / sqrt(2 pi m kB T)
Quantity thermal_wavelength(const Quantity& mass, const Quantity& temperature);
/// 2 pi hbar^2 n2 / (m kB)
Quantity degeneracy_temperature(const Quantity& n2, const Quantity& mass);
/// pi hbar^2 n_s / (2 m kB)
Quantity kt_temperature(const Quantity& n_s, const Quantity& mass);
/// 2 pi hbar^2 n2 / (1.645 m kB)
Quantity trapped_bec_temperature(const Quantity& n2, const Quantity& mass);
/// (hbar Omega / kB) sqrt(N / 1.645); Omega = 0 gives 0.
Quantity trapped_bec_temperature_from_N(double particles, const Quantity& omega_eff);
/// 2 pi n2 kB T / (m Omega^2); throws std::domain_error for Omega = 0.
double trapped_number(const Quantity& n2, const Quantity& temperature, const Quantity& omega_eff,
                      const Quantity& mass);
/// max(0, 1 - (T/Tc)^2)
double condensate_fraction(const Quantity& temperature, const Quantity& critical);

/// kB T_eff = g; informational scale only.
Quantity effective_temperature(const Quantity& g);

struct ChemicalPotential {
    Quantity mu;              // always < 0 for T > 0
    bool negligible = false;  // |mu| < 1e-13 kB T, i.e. indistinguishable from 0-
};

/// mu = kB T ln[1 - exp(-T_d/T)], cancellation-safe for T << T_d.
ChemicalPotential chemical_potential(const Quantity& n2, const Quantity& mass,
                                     const Quantity& temperature);

struct GasState {
    std::optional<Quantity> n2;
    std::optional<Quantity> n3;
    Quantity temperature;
    Quantity mass;
    std::optional<Quantity> n_s;  // defaults to n2

    void validate() const;
};

struct TrapSpec {
    Quantity omega_eff;
    std::optional<Quantity> u0;
    std::optional<Quantity> r0;

    /// When both U0 and r0 are present, U0 must equal m Omega^2 r0^2 / 2.
    void check_consistency(const Quantity& mass, double rel_tol = 1e-9) const;
};

struct CondensationReport {
    Quantity temperature;
    Quantity mass;
    std::optional<Quantity> n3;
    Quantity n2;
    bool n2_estimated = false;  // n2 = lambda_T n3
    Quantity lambda_t;
    Quantity r_int;
    Quantity t_degeneracy;
    Quantity t_kt;
    ChemicalPotential mu;
    std::optional<Quantity> omega_eff;
    std::optional<Quantity> t_c;
    std::optional<double> trapped_particles;
    std::optional<double> condensate_fraction;
    bool degenerate = false;
    bool kt_superfluid = false;
    bool overlap = false;
};

CondensationReport condensation_report(const GasState& state,
                                       const std::optional<TrapSpec>& trap = std::nullopt);

}  // namespace polariton
