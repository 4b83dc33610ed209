#include "polariton/dispersion.hpp"

#include <cmath>
#include <string>
#include <thread>

#include "polariton/thermo.hpp"

namespace polariton {

namespace {

Quantity hbar_c() { return constants::hbar * constants::c; }

void check_problem(const ModeProblem& prob) {
    prob.atom_energy.require(dims::energy, "E_at");
    prob.photon_energy.require(dims::energy, "E_ph");
    prob.g.require(dims::energy, "g");
    if (!(prob.g.magnitude() > 0.0)) throw ConfigError("g must be positive");
}

}  // namespace

Quantity photon_energy_paraxial(const Quantity& k_par, const CouplingParams& coupling) {
    k_par.require(dims::wavenumber, "k_par");
    const Quantity& kp = coupling.k_perp;
    return hbar_c() * (kp + k_par * k_par / (2.0 * kp));
}

Quantity photon_energy_exact(const Quantity& k_par, const CouplingParams& coupling) {
    k_par.require(dims::wavenumber, "k_par");
    const Quantity& kp = coupling.k_perp;
    return hbar_c() * sqrt(kp * kp + k_par * k_par);
}

bool within_paraxial(const Quantity& k_par, const CouplingParams& coupling, double bound) {
    return abs(k_par) <= bound * coupling.k_perp;
}

Quantity lower_branch_offset(const Quantity& delta, const Quantity& g) {
    const Quantity root = sqrt(delta * delta + 4.0 * g * g);
    if (delta.magnitude() >= 0.0) return -0.5 * (delta + root);
    return -2.0 * g * g / (root - delta);
}

Eigenmode diagonalize_mode(const ModeProblem& prob) {
    check_problem(prob);
    const Quantity delta = prob.delta();
    const Quantity four_g2 = 4.0 * prob.g * prob.g;
    const Quantity root = sqrt(delta * delta + four_g2);

    // delta + root loses everything when delta << -2g; use 4g^2 / (root - delta) there.
    double mu_sq = 0.0;
    double nu_sq = 0.0;
    if (delta.magnitude() >= 0.0) {
        const Quantity sum = delta + root;
        mu_sq = (four_g2 / (2.0 * root * sum)).value();
        nu_sq = (sum / (2.0 * root)).value();
    } else {
        const Quantity diff = root - delta;
        mu_sq = (diff / (2.0 * root)).value();
        nu_sq = (four_g2 / (2.0 * root * diff)).value();
    }

    const Quantity total = prob.atom_energy + prob.photon_energy;
    return {0.5 * (total + root), 0.5 * (total - root), mu_sq, nu_sq};
}

Eigenmode oracle_diagonalize(const ModeProblem& prob) {
    check_problem(prob);
    const double e_ph = prob.photon_energy.magnitude();
    const double e_at = prob.atom_energy.magnitude();
    const double g = prob.g.magnitude();

    // Shift by E_at: A - E_at I = [[t, g], [g, 0]] has trace t and determinant -g^2.
    // Stable roots of x^2 - t x - g^2 = 0: the large one from the sign-matched
    // formula, the small one from the product of roots.
    const double t = e_ph - e_at;
    const double disc = std::sqrt(t * t + 4.0 * g * g);
    const double big = 0.5 * (t + std::copysign(disc, t));
    const double small = big != 0.0 ? -g * g / big : 0.0;
    const double hi = std::max(big, small);
    const double lo = std::min(big, small);

    // Second row of (A' - hi I) v = 0 gives v = (hi, g) in the (photon, atom) basis.
    const double norm2 = hi * hi + g * g;
    const double photon_weight = hi * hi / norm2;
    const double atom_weight = g * g / norm2;

    const Dimension& e = prob.atom_energy.dimension();
    const UnitSystem sys = prob.atom_energy.system();
    return {Quantity(e_at + hi, e, sys), Quantity(e_at + lo, e, sys), photon_weight, atom_weight};
}

DispersionCurve sample_dispersion(const CouplingParams& coupling, const Quantity& atom_energy,
                                  const GridSpec& grid, unsigned workers, double paraxial_bound) {
    if (grid.samples < 2) throw ConfigError("grid needs at least 2 samples");
    if (!(grid.k_max_over_k_perp > 0.0)) throw ConfigError("grid k_max must be positive");
    atom_energy.require(dims::energy, "E_at");

    DispersionCurve curve;
    curve.detuning = coupling.detuning;
    curve.g = coupling.g;
    curve.k_perp = coupling.k_perp;
    curve.grid = grid;
    curve.paraxial_warning = grid.k_max_over_k_perp > paraxial_bound;
    curve.points.resize(static_cast<std::size_t>(grid.samples));

    const auto n = static_cast<std::size_t>(grid.samples);
    const double step = grid.k_max_over_k_perp / static_cast<double>(n - 1);
    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double ratio = i + 1 == n ? grid.k_max_over_k_perp : step * static_cast<double>(i);
            const Quantity k = ratio * coupling.k_perp;
            BranchPoint& p = curve.points[i];
            p.k_par = k;
            p.photon_paraxial = photon_energy_paraxial(k, coupling);
            p.photon_freespace = photon_energy_exact(k, coupling);
            p.mode = diagonalize_mode({atom_energy, p.photon_paraxial, coupling.g});
        }
    };

    const std::size_t nthreads = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
    if (nthreads == 1) {
        fill(0, n);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(nthreads);
        const std::size_t chunk = (n + nthreads - 1) / nthreads;
        for (std::size_t begin = 0; begin < n; begin += chunk) {
            pool.emplace_back(fill, begin, std::min(n, begin + chunk));
        }
    }
    return curve;
}

WellGeometry well_geometry(const CouplingParams& coupling, const Quantity& atom_energy,
                           const WellOptions& options) {
    atom_energy.require(dims::energy, "E_at");
    coupling.g.require(dims::energy, "g");
    if (!(coupling.g.magnitude() > 0.0)) throw NoWellError("g must be positive for a well");

    const Quantity& kp = coupling.k_perp;
    const Quantity h = options.step * kp;
    const Quantity curvature = hbar_c() / (2.0 * kp);
    // E2 relative to E_at; the paraxial photon sits at E_at - detuning + hbar c k^2 / 2k_perp.
    auto lower = [&](const Quantity& k) {
        const Quantity delta = coupling.detuning - curvature * k * k;
        return lower_branch_offset(delta, coupling.g);
    };
    auto second_derivative = [&](const Quantity& k) {
        return ((lower(k + h) - 2.0 * lower(k) + lower(k - h)) / (h * h)).magnitude();
    };

    const double k_lo = options.step;
    const double k_hi = options.paraxial_bound - options.step;
    if (!(k_hi > k_lo)) throw NoWellError("search window is empty");

    double prev_k = k_lo;
    double prev_d2 = second_derivative(prev_k * kp);
    if (!(prev_d2 > 0.0)) throw NoWellError("E2 is not convex at k_par = 0");

    // Log-spaced scan resolves inflections much closer to 0 than the window edge.
    constexpr int kScan = 512;
    const double ratio = std::pow(k_hi / k_lo, 1.0 / kScan);
    double a = 0.0;
    double b = 0.0;
    bool bracketed = false;
    for (int i = 1; i <= kScan; ++i) {
        const double k = i == kScan ? k_hi : k_lo * std::pow(ratio, i);
        const double d2 = second_derivative(k * kp);
        if (d2 <= 0.0) {
            a = prev_k;
            b = k;
            bracketed = true;
            break;
        }
        prev_k = k;
    }
    if (!bracketed) throw NoWellError("no inflection of E2 inside the paraxial window");

    while (b - a > options.tolerance) {
        const double mid = 0.5 * (a + b);
        if (second_derivative(mid * kp) > 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }

    const double k_inflection = 0.5 * (a + b);
    const Quantity edge = options.paraxial_bound * kp;
    const Quantity depth = lower(edge) - lower(Quantity(0.0, dims::wavenumber));
    const PolaritonMasses masses = effective_masses(coupling);
    const Quantity inflection = k_inflection * kp;
    const double phi = (coupling.cavity.beam_diameter / coupling.cavity.length).value();

    return {inflection,
            depth,
            k_inflection,
            phi,
            k_inflection > phi,
            masses.lower,
            transverse_energy(inflection, masses.lower)};
}

}  // namespace polariton
