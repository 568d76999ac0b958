#pragma once

#include <complex>
#include <string>

#include "realcyc/cyclotomic.hpp"

namespace realcyc {

/// Debug-only numeric rendering. Evaluates in long double (about 18
/// significant digits on x86-64); nothing in the library branches on it.
std::complex<long double> approximate(const Cyclotomic& a);

/// "re+imi" with 12 significant digits.
std::string approx_string(const Cyclotomic& a);

}  // namespace realcyc
