// Unit-safe physical quantities over the Gaussian-CGS base set.
//
// Every Quantity carries its magnitude, an exact Dimension over
// {length, mass, time, temperature} and the unit system its magnitude is
// expressed in. Electric charge is folded into the mechanical base in the
// Gaussian convention (1 statC = g^1/2 cm^3/2 s^-1), which is why exponents are
// exact rationals rather than integers. Arithmetic checks dimensions on every
// call and throws DimensionError on a mismatch.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polariton {

class DimensionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational number, always stored in lowest terms with den > 0.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int32_t n) : num_(n) {}  // NOLINT(implicit)
    Rational(std::int32_t n, std::int32_t d);

    [[nodiscard]] constexpr std::int32_t num() const { return num_; }
    [[nodiscard]] constexpr std::int32_t den() const { return den_; }
    [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }
    [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
    [[nodiscard]] double to_double() const { return static_cast<double>(num_) / den_; }

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a) { return Rational(-a.num_, a.den_); }
    friend Rational operator-(Rational a, Rational b) { return a + (-b); }
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);
    friend constexpr bool operator==(Rational a, Rational b) = default;

    [[nodiscard]] std::string str() const;

private:
    std::int32_t num_ = 0;
    std::int32_t den_ = 1;
};

struct Dimension {
    Rational length;
    Rational mass;
    Rational time;
    Rational temperature;

    [[nodiscard]] bool dimensionless() const {
        return length.is_zero() && mass.is_zero() && time.is_zero() && temperature.is_zero();
    }
    [[nodiscard]] bool all_integer() const {
        return length.is_integer() && mass.is_integer() && time.is_integer() &&
               temperature.is_integer();
    }

    friend Dimension operator*(const Dimension& a, const Dimension& b);
    friend Dimension operator/(const Dimension& a, const Dimension& b);
    friend bool operator==(const Dimension& a, const Dimension& b) = default;

    /// e.g. "cm^-2 g s^-1" style rendering in the base symbols L M T Θ.
    [[nodiscard]] std::string str() const;
};

Dimension pow(const Dimension& d, Rational p);

namespace dims {
inline const Dimension none{};
inline const Dimension length{1, 0, 0, 0};
inline const Dimension mass{0, 1, 0, 0};
inline const Dimension time{0, 0, 1, 0};
inline const Dimension temperature{0, 0, 0, 1};
inline const Dimension wavenumber{-1, 0, 0, 0};
inline const Dimension area_density{-2, 0, 0, 0};
inline const Dimension volume_density{-3, 0, 0, 0};
inline const Dimension frequency{0, 0, -1, 0};
inline const Dimension velocity{1, 0, -1, 0};
inline const Dimension energy{2, 1, -2, 0};
inline const Dimension action{2, 1, -1, 0};
inline const Dimension energy_per_temperature{2, 1, -2, -1};
// Gaussian charge: g^1/2 cm^3/2 s^-1; dipole moment adds one length.
inline const Dimension charge{Rational(3, 2), Rational(1, 2), -1, 0};
inline const Dimension dipole_moment{Rational(5, 2), Rational(1, 2), -1, 0};
}  // namespace dims

enum class UnitSystem { cgs, si };

std::string_view to_string(UnitSystem s);

class Quantity {
public:
    Quantity() = default;
    Quantity(double magnitude, Dimension dim, UnitSystem system = UnitSystem::cgs)
        : magnitude_(magnitude), dim_(dim), system_(system) {}

    static Quantity scalar(double v) { return Quantity(v, dims::none); }

    [[nodiscard]] double magnitude() const { return magnitude_; }
    [[nodiscard]] const Dimension& dimension() const { return dim_; }
    [[nodiscard]] UnitSystem system() const { return system_; }

    /// Magnitude of a dimensionless quantity; throws otherwise.
    [[nodiscard]] double value() const;

    /// Magnitude expressed as a multiple of `unit` (same dimension required).
    [[nodiscard]] double in(const Quantity& unit) const;

    [[nodiscard]] bool has_dimension(const Dimension& d) const { return dim_ == d; }
    /// Throws DimensionError naming `what` if the dimension differs.
    const Quantity& require(const Dimension& d, std::string_view what) const;

    Quantity& operator+=(const Quantity& o);
    Quantity& operator-=(const Quantity& o);
    Quantity& operator*=(double s) { magnitude_ *= s; return *this; }
    Quantity& operator/=(double s) { magnitude_ /= s; return *this; }

    friend Quantity operator+(Quantity a, const Quantity& b) { return a += b; }
    friend Quantity operator-(Quantity a, const Quantity& b) { return a -= b; }
    friend Quantity operator-(Quantity a) { a.magnitude_ = -a.magnitude_; return a; }
    friend Quantity operator*(const Quantity& a, const Quantity& b);
    friend Quantity operator/(const Quantity& a, const Quantity& b);
    friend Quantity operator*(double s, Quantity q) { return q *= s; }
    friend Quantity operator*(Quantity q, double s) { return q *= s; }
    friend Quantity operator/(Quantity q, double s) { return q /= s; }
    friend Quantity operator/(double s, const Quantity& q) { return scalar(s) / q; }

    friend bool operator==(const Quantity& a, const Quantity& b);
    friend bool operator<(const Quantity& a, const Quantity& b);
    friend bool operator>(const Quantity& a, const Quantity& b) { return b < a; }
    friend bool operator<=(const Quantity& a, const Quantity& b) { return !(b < a); }
    friend bool operator>=(const Quantity& a, const Quantity& b) { return !(a < b); }

    [[nodiscard]] std::string str() const;

private:
    double magnitude_ = 0.0;
    Dimension dim_{};
    UnitSystem system_ = UnitSystem::cgs;
};

Quantity sqrt(const Quantity& q);
Quantity pow(const Quantity& q, Rational p);
Quantity abs(const Quantity& q);

/// Rescales the magnitude into `target`; dimension is unchanged.
/// Dimensions with fractional exponents have no SI (kg, m, s, K) form and throw.
Quantity convert(const Quantity& q, UnitSystem target);

/// Multiplicative factor turning a magnitude in `from` into one in `to`.
double conversion_factor(const Dimension& d, UnitSystem from, UnitSystem to);

enum class ConstantId { hbar, h, c, k_boltzmann };

/// CODATA-2018 value in the CGS base system.
Quantity constant(ConstantId id);
/// Lookup by name ("hbar", "h", "c", "k_boltzmann"); unknown names throw ConfigError.
Quantity constant(std::string_view name);

namespace constants {
inline const Quantity hbar{1.054571817e-27, dims::action};
inline const Quantity h{6.62607015e-27, dims::action};
inline const Quantity c{2.99792458e10, dims::velocity};
inline const Quantity k_boltzmann{1.380649e-16, dims::energy_per_temperature};
}  // namespace constants

// CGS-valued unit quantities for building inputs: 2.104 * units::eV.
namespace units {
inline const Quantity one = Quantity::scalar(1.0);
inline const Quantity cm{1.0, dims::length};
inline const Quantity m{1e2, dims::length};
inline const Quantity mm{1e-1, dims::length};
inline const Quantity um{1e-4, dims::length};
inline const Quantity nm{1e-7, dims::length};
inline const Quantity g{1.0, dims::mass};
inline const Quantity kg{1e3, dims::mass};
inline const Quantity s{1.0, dims::time};
inline const Quantity ms{1e-3, dims::time};
inline const Quantity us{1e-6, dims::time};
inline const Quantity ns{1e-9, dims::time};
inline const Quantity ps{1e-12, dims::time};
inline const Quantity fs{1e-15, dims::time};
inline const Quantity K{1.0, dims::temperature};
inline const Quantity erg{1.0, dims::energy};
inline const Quantity J{1e7, dims::energy};
inline const Quantity eV{1.602176634e-12, dims::energy};
inline const Quantity meV{1.602176634e-15, dims::energy};
inline const Quantity esu_cm{1.0, dims::dipole_moment};
inline const Quantity debye{1e-18, dims::dipole_moment};
}  // namespace units

}  // namespace polariton
