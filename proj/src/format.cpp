#include "polariton/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "polariton/quantities.hpp"

namespace polariton {

std::string format_number(double v, int digits) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return std::signbit(v) ? "-0" : "0";
    std::array<char, 64> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, digits);
    return std::string(buf.data(), res.ptr);
}

double parse_number(std::string_view text, std::string_view what) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last || first == last) {
        throw ConfigError("cannot parse number '" + std::string(text) + "' for " +
                          std::string(what));
    }
    return v;
}

}  // namespace polariton
