#include "polariton/quantities.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace polariton {

namespace {

std::int32_t checked(std::int64_t v) {
    if (v > std::numeric_limits<std::int32_t>::max() ||
        v < std::numeric_limits<std::int32_t>::min()) {
        throw DimensionError("dimension exponent overflow");
    }
    return static_cast<std::int32_t>(v);
}

Rational make_rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DimensionError("zero denominator in dimension exponent");
    if (d < 0) { n = -n; d = -d; }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    return Rational(checked(n), checked(d));
}

}  // namespace

Rational::Rational(std::int32_t n, std::int32_t d) {
    if (d == 0) throw DimensionError("zero denominator in dimension exponent");
    std::int64_t nn = n, dd = d;
    if (dd < 0) { nn = -nn; dd = -dd; }
    const std::int64_t g = std::gcd(nn < 0 ? -nn : nn, dd);
    num_ = checked(g > 1 ? nn / g : nn);
    den_ = checked(g > 1 ? dd / g : dd);
}

Rational operator+(Rational a, Rational b) {
    if (a.den_ == 1 && b.den_ == 1) return Rational(checked(std::int64_t{a.num_} + b.num_));
    return make_rational(std::int64_t{a.num_} * b.den_ + std::int64_t{b.num_} * a.den_,
                         std::int64_t{a.den_} * b.den_);
}

Rational operator*(Rational a, Rational b) {
    if (a.den_ == 1 && b.den_ == 1) return Rational(checked(std::int64_t{a.num_} * b.num_));
    return make_rational(std::int64_t{a.num_} * b.num_, std::int64_t{a.den_} * b.den_);
}

Rational operator/(Rational a, Rational b) {
    if (b.num_ == 0) throw DimensionError("division by zero exponent");
    return make_rational(std::int64_t{a.num_} * b.den_, std::int64_t{a.den_} * b.num_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Dimension operator*(const Dimension& a, const Dimension& b) {
    return {a.length + b.length, a.mass + b.mass, a.time + b.time,
            a.temperature + b.temperature};
}

Dimension operator/(const Dimension& a, const Dimension& b) {
    return {a.length - b.length, a.mass - b.mass, a.time - b.time,
            a.temperature - b.temperature};
}

Dimension pow(const Dimension& d, Rational p) {
    return {d.length * p, d.mass * p, d.time * p, d.temperature * p};
}

std::string Dimension::str() const {
    if (dimensionless()) return "1";
    std::ostringstream os;
    const std::array<std::pair<const char*, Rational>, 4> parts{
        {{"L", length}, {"M", mass}, {"T", time}, {"Θ", temperature}}};
    bool first = true;
    for (const auto& [sym, e] : parts) {
        if (e.is_zero()) continue;
        if (!first) os << ' ';
        first = false;
        os << sym;
        if (!(e == Rational(1))) os << '^' << e.str();
    }
    return os.str();
}

std::string_view to_string(UnitSystem s) {
    return s == UnitSystem::cgs ? "cgs" : "si";
}

namespace {

void require_same(const Quantity& a, const Quantity& b, const char* op) {
    if (a.dimension() != b.dimension()) {
        throw DimensionError(std::string("dimension mismatch in ") + op + ": [" +
                             a.dimension().str() + "] vs [" + b.dimension().str() + "]");
    }
    if (a.system() != b.system()) {
        throw DimensionError(std::string("unit system mismatch in ") + op);
    }
}

void require_same_system(const Quantity& a, const Quantity& b, const char* op) {
    if (a.system() != b.system()) {
        throw DimensionError(std::string("unit system mismatch in ") + op);
    }
}

}  // namespace

double Quantity::value() const {
    if (!dim_.dimensionless()) {
        throw DimensionError("expected a dimensionless quantity, got [" + dim_.str() + "]");
    }
    return magnitude_;
}

double Quantity::in(const Quantity& unit) const {
    require_same(*this, unit, "unit conversion");
    return magnitude_ / unit.magnitude_;
}

const Quantity& Quantity::require(const Dimension& d, std::string_view what) const {
    if (dim_ != d) {
        throw DimensionError(std::string(what) + " has dimension [" + dim_.str() +
                             "], expected [" + d.str() + "]");
    }
    return *this;
}

Quantity& Quantity::operator+=(const Quantity& o) {
    require_same(*this, o, "addition");
    magnitude_ += o.magnitude_;
    return *this;
}

Quantity& Quantity::operator-=(const Quantity& o) {
    require_same(*this, o, "subtraction");
    magnitude_ -= o.magnitude_;
    return *this;
}

Quantity operator*(const Quantity& a, const Quantity& b) {
    require_same_system(a, b, "multiplication");
    return Quantity(a.magnitude_ * b.magnitude_, a.dim_ * b.dim_, a.system_);
}

Quantity operator/(const Quantity& a, const Quantity& b) {
    require_same_system(a, b, "division");
    return Quantity(a.magnitude_ / b.magnitude_, a.dim_ / b.dim_, a.system_);
}

bool operator==(const Quantity& a, const Quantity& b) {
    require_same(a, b, "comparison");
    return a.magnitude_ == b.magnitude_;
}

bool operator<(const Quantity& a, const Quantity& b) {
    require_same(a, b, "comparison");
    return a.magnitude_ < b.magnitude_;
}

std::string Quantity::str() const {
    std::ostringstream os;
    os.precision(12);
    os << magnitude_ << " [" << dim_.str() << "] (" << to_string(system_) << ")";
    return os.str();
}

Quantity sqrt(const Quantity& q) {
    return Quantity(std::sqrt(q.magnitude()), pow(q.dimension(), Rational(1, 2)), q.system());
}

Quantity pow(const Quantity& q, Rational p) {
    return Quantity(std::pow(q.magnitude(), p.to_double()), pow(q.dimension(), p), q.system());
}

Quantity abs(const Quantity& q) {
    return Quantity(std::abs(q.magnitude()), q.dimension(), q.system());
}

namespace {

// 10^p for the integer powers that occur; exact as doubles up to 10^22.
double exact_pow10(int p) {
    static constexpr std::array<double, 23> table{
        1e0,  1e1,  1e2,  1e3,  1e4,  1e5,  1e6,  1e7,  1e8,  1e9,  1e10, 1e11,
        1e12, 1e13, 1e14, 1e15, 1e16, 1e17, 1e18, 1e19, 1e20, 1e21, 1e22};
    const int a = std::abs(p);
    if (a < static_cast<int>(table.size())) return p >= 0 ? table[a] : 1.0 / table[a];
    return std::pow(10.0, p);
}

}  // namespace

double conversion_factor(const Dimension& d, UnitSystem from, UnitSystem to) {
    if (from == to) return 1.0;
    if (!d.all_integer()) {
        throw DimensionError("dimension [" + d.str() +
                             "] is Gaussian-only and has no SI mechanical form");
    }
    // 1 cm = 1e-2 m, 1 g = 1e-3 kg; s and K are shared.
    const int cgs_to_si_exp = -2 * d.length.num() - 3 * d.mass.num();
    const double f = exact_pow10(std::abs(cgs_to_si_exp));
    const bool shrink = (cgs_to_si_exp < 0) == (from == UnitSystem::cgs);
    return shrink ? 1.0 / f : f;
}

Quantity convert(const Quantity& q, UnitSystem target) {
    if (q.system() == target) return q;
    if (!q.dimension().all_integer()) {
        throw DimensionError("dimension [" + q.dimension().str() +
                             "] is Gaussian-only and has no SI mechanical form");
    }
    const int cgs_to_si_exp = -2 * q.dimension().length.num() - 3 * q.dimension().mass.num();
    const double f = exact_pow10(std::abs(cgs_to_si_exp));
    // Divide or multiply by the same exact power so a round trip costs <= 1 ulp.
    const bool shrink = (cgs_to_si_exp < 0) == (q.system() == UnitSystem::cgs);
    const double mag = shrink ? q.magnitude() / f : q.magnitude() * f;
    return Quantity(mag, q.dimension(), target);
}

Quantity constant(ConstantId id) {
    switch (id) {
        case ConstantId::hbar: return constants::hbar;
        case ConstantId::h: return constants::h;
        case ConstantId::c: return constants::c;
        case ConstantId::k_boltzmann: return constants::k_boltzmann;
    }
    throw ConfigError("unknown constant id");
}

Quantity constant(std::string_view name) {
    if (name == "hbar") return constant(ConstantId::hbar);
    if (name == "h") return constant(ConstantId::h);
    if (name == "c") return constant(ConstantId::c);
    if (name == "k_boltzmann" || name == "kB") return constant(ConstantId::k_boltzmann);
    throw ConfigError("unknown constant '" + std::string(name) + "'");
}

}  // namespace polariton
