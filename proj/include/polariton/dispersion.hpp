// Polariton branches, Hopfield weights, paraxial cavity dispersion and the
// lower-branch well.
//
// Conventions: mu_sq is the photon weight of the upper branch (equivalently the
// matter weight of the lower one), nu_sq = 1 - mu_sq. delta = E_at - E_ph.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "polariton/coupling.hpp"
#include "polariton/quantities.hpp"

namespace polariton {

class NoWellError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModeProblem {
    Quantity atom_energy;    // E_at
    Quantity photon_energy;  // E_ph
    Quantity g;

    [[nodiscard]] Quantity delta() const { return atom_energy - photon_energy; }
};

/// Energies and weights of the two polariton modes at one wavevector.
struct Eigenmode {
    Quantity upper;  // E1
    Quantity lower;  // E2
    double mu_sq = 0.0;
    double nu_sq = 0.0;
};

struct BranchPoint {
    Quantity k_par;
    Eigenmode mode;
    Quantity photon_paraxial;
    Quantity photon_freespace;
};

struct GridSpec {
    int samples = 101;
    double k_max_over_k_perp = 0.1;
};

inline constexpr double kDefaultParaxialBound = 0.2;

struct DispersionCurve {
    Quantity detuning;
    Quantity g;
    Quantity k_perp;
    GridSpec grid;
    bool paraxial_warning = false;  // k_max beyond the paraxial bound
    std::vector<BranchPoint> points;
};

struct WellGeometry {
    Quantity inflection_k;       // half-width of the well in k_par
    Quantity depth;              // E2(window edge) - E2(0)
    double angular_halfwidth;    // inflection_k / k_perp, rad
    double diffraction_limit;    // d_beam / L_cav, rad
    bool diffraction_ok;         // angular_halfwidth > diffraction_limit
    Quantity lower_mass;         // lower-branch curvature mass used below
    Quantity well_energy;        // hbar^2 inflection_k^2 / (2 lower_mass)
};

struct WellOptions {
    double paraxial_bound = kDefaultParaxialBound;  // window edge, units of k_perp
    double step = 1e-4;                              // finite-difference step, units of k_perp
    double tolerance = 1e-6;                         // root tolerance, units of k_perp
};

/// hbar c [k_perp + k_par^2 / (2 k_perp)].
Quantity photon_energy_paraxial(const Quantity& k_par, const CouplingParams& coupling);

/// hbar c sqrt(k_perp^2 + k_par^2), the untruncated photon dispersion.
Quantity photon_energy_exact(const Quantity& k_par, const CouplingParams& coupling);

[[nodiscard]] bool within_paraxial(const Quantity& k_par, const CouplingParams& coupling,
                                   double bound = kDefaultParaxialBound);

/// Closed-form branch energies and Hopfield weights.
Eigenmode diagonalize_mode(const ModeProblem& prob);

/// Eigen-decomposition of [[E_ph, g], [g, E_at]] by the characteristic quadratic.
/// Independent of diagonalize_mode; used to cross-check it.
Eigenmode oracle_diagonalize(const ModeProblem& prob);

/// E2 - E_at, evaluated without subtracting two energies of size ~E_at.
Quantity lower_branch_offset(const Quantity& delta, const Quantity& g);

/// Samples both branches over k_par in [0, k_max]. Points are evaluated on up to
/// `workers` threads and always returned in ascending k_par.
DispersionCurve sample_dispersion(const CouplingParams& coupling, const Quantity& atom_energy,
                                  const GridSpec& grid, unsigned workers = 1,
                                  double paraxial_bound = kDefaultParaxialBound);

/// Locates the inflection of E2(k_par) by bisection on a central-difference
/// second derivative. Throws NoWellError when no +/- sign change exists.
WellGeometry well_geometry(const CouplingParams& coupling, const Quantity& atom_energy,
                           const WellOptions& options = {});

// CSV form of a DispersionCurve. `notes` are extra '#' lines written after the
// metadata block and preserved verbatim by the reader.
void write_dispersion_csv(std::ostream& os, const DispersionCurve& curve,
                          const std::vector<std::string>& notes = {});
DispersionCurve read_dispersion_csv(std::istream& is, std::vector<std::string>* notes = nullptr);

}  // namespace polariton
