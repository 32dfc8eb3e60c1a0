#pragma once

#include <string>

namespace stpete {

/// %g-style rendering with 6 significant digits and trailing zeros dropped
/// ("0.76", "1", "2.33333"). Exact decimal ties round away from zero, so
/// 4.328125 prints as "4.32813".
std::string sig6(double v);

}  // namespace stpete
