#pragma once

#include <string>

namespace gibbs {

/// 12 significant digits; fixed notation for |x| in [1e-3, 1e6], scientific
/// otherwise. Locale independent.
std::string format_number(double x);

}  // namespace gibbs
