#include "gibbs/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <system_error>

namespace gibbs {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  // The rounded value decides the notation; the band [1e-3, 1e6] is closed.
  auto sci = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 11);
  const std::string scientific(buf, sci.ptr);
  const int exponent = std::atoi(scientific.c_str() + scientific.find('e') + 1);
  const bool top_edge = exponent == 6 && scientific.find("1.00000000000e") <= 1;
  if (x == 0.0 || exponent < -3 || (exponent > 5 && !top_edge)) return scientific;
  auto fix = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 11 - exponent);
  return std::string(buf, fix.ptr);
}

}  // namespace gibbs
