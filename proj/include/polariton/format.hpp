// Locale-independent number formatting shared by every emitter.

#pragma once

#include <string>
#include <string_view>

namespace polariton {

inline constexpr int kOutputDigits = 12;

/// Shortest "%.12g"-equivalent rendering, always with '.' as decimal point.
std::string format_number(double v, int digits = kOutputDigits);

/// Strict full-string parse; throws ConfigError mentioning `what` on failure.
double parse_number(std::string_view text, std::string_view what);

}  // namespace polariton
