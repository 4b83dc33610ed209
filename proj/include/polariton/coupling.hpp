// Strong-coupling criterion and the coupling parameters (g, k_perp, detuning)
// shared by the dispersion and thermodynamics layers.

#pragma once

#include "polariton/quantities.hpp"

namespace polariton {

/// Atomic medium. All fields strictly positive; `dipole` is in Gaussian units.
struct MediumParams {
    Quantity transition_energy;  // E0
    Quantity dipole;             // d, esu·cm
    Quantity density;            // n, atoms per volume
    Quantity coherence_time;     // tau_coh

    /// Throws ConfigError/DimensionError on a non-positive or mis-dimensioned field.
    void validate() const;
    [[nodiscard]] Quantity transition_frequency() const;  // omega0 = E0/hbar
};

struct CavityParams {
    Quantity length;         // L_cav
    int mode_index = 1;      // m
    Quantity beam_diameter;  // d_beam

    void validate() const;
};

struct CouplingParams {
    Quantity g;
    Quantity k_perp;
    Quantity detuning;  // E0 - hbar c k_perp, signed
    CavityParams cavity;
};

/// omega_c = sqrt(2 pi d^2 omega0 n / hbar), Gaussian units.
Quantity cooperative_frequency(const MediumParams& medium);

enum class Regime { strong, weak };

struct CouplingVerdict {
    Regime regime;
    double ratio;  // omega_c * 2 tau_coh
};

inline constexpr double kDefaultStrongCouplingThreshold = 10.0;

/// Strong iff omega_c * 2 tau_coh exceeds `threshold`.
CouplingVerdict is_strong_coupling(const MediumParams& medium,
                                   double threshold = kDefaultStrongCouplingThreshold);

/// k_perp = pi m / L_cav and detuning = E0 - hbar c k_perp. Requires g > 0.
CouplingParams make_coupling(const MediumParams& medium, const CavityParams& cavity,
                             const Quantity& g);

/// L_cav = pi m hbar c / E0, the length that zeroes the detuning.
Quantity resonant_cavity_length(const MediumParams& medium, int mode_index);

/// Cavity length giving the requested detuning: pi m hbar c / (E0 - detuning).
Quantity cavity_length_for_detuning(const MediumParams& medium, int mode_index,
                                    const Quantity& detuning);

}  // namespace polariton
