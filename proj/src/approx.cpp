#include "realcyc/approx.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace realcyc {

std::complex<long double> approximate(const Cyclotomic& a) {
  const long double step = 2.0L * std::numbers::pi_v<long double> / a.conductor();
  std::complex<long double> sum = 0;
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const long double value = static_cast<long double>(c[i].get_d());
    sum += value * std::polar(1.0L, step * static_cast<long double>(i));
  }
  return sum;
}

std::string approx_string(const Cyclotomic& a) {
  const auto z = approximate(a);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12Lg%+.12Lgi", z.real(), z.imag());
  return buf;
}

}  // namespace realcyc
