#pragma once
// Deterministic decimal rendering of doubles at 15 significant digits
// (digits beyond the 15th dropped, matching the reference listings), with
// directed variants that keep printed interval endpoints outward, and exact
// hexadecimal floats for full-precision output.
#include <string>

namespace cuspcert {

// Truncated toward zero after 15 significant digits.
std::string sig15(double v);
// Directed: the printed decimal is <= v.
std::string sig15_down(double v);
// Directed: the printed decimal is >= v.
std::string sig15_up(double v);
// Exact "%a" rendering.
std::string hex_float(double v);

}  // namespace cuspcert
