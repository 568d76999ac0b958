#pragma once

#include <span>

#include "realcyc/matrix.hpp"

// Group-sum kernels. Every sum below runs over the full element list of a
// closure. `serial` is the reference implementation kept for testing; the
// `parallel` versions split the element list across OpenMP threads and
// combine per-thread partial sums in thread order. Exact arithmetic makes
// both produce identical results.

namespace realcyc::kernels {

namespace serial {

/// sum_h h^T * conj(h)
CycMatrix hermitian_sum(std::span<const CycMatrix> elements);

/// sum_g g^T * seed * g
CycMatrix bilinear_average(std::span<const CycMatrix> elements, const CycMatrix& seed);

/// sum_g trace(g^2)
Cyclotomic trace_of_squares_sum(std::span<const CycMatrix> elements);

/// sum_g a[g] * conj(b[g])
Cyclotomic character_pairing_sum(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b);

/// trace of every element.
std::vector<Cyclotomic> traces(std::span<const CycMatrix> elements);

}  // namespace serial

namespace parallel {

CycMatrix hermitian_sum(std::span<const CycMatrix> elements);
CycMatrix bilinear_average(std::span<const CycMatrix> elements, const CycMatrix& seed);
Cyclotomic trace_of_squares_sum(std::span<const CycMatrix> elements);
Cyclotomic character_pairing_sum(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b);
std::vector<Cyclotomic> traces(std::span<const CycMatrix> elements);

}  // namespace parallel

/// trace(g*g) without forming the product.
Cyclotomic trace_of_square(const CycMatrix& g);

}  // namespace realcyc::kernels
