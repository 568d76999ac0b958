#include "realcyc/kernels.hpp"

#include <omp.h>

#include <exception>
#include <functional>
#include <vector>

namespace realcyc::kernels::parallel {

namespace {

// Sums term(i) for i in [0, count) with one accumulator per thread; partial
// sums are combined in thread order.
template <typename T, typename Term>
T reduce(std::size_t count, const T& zero, Term term) {
  const int threads = omp_get_max_threads();
  std::vector<T> partial(static_cast<std::size_t>(threads), zero);
  std::exception_ptr failure;
#pragma omp parallel num_threads(threads)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
      try {
        partial[tid] += term(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  T sum = zero;
  for (const auto& p : partial) sum += p;
  return sum;
}

}  // namespace

CycMatrix hermitian_sum(std::span<const CycMatrix> elements) {
  if (elements.empty()) throw Error(ErrorKind::InvalidArgument, "empty element list");
  const auto& first = elements.front();
  const CycMatrix zero(first.conductor(), first.cols(), first.cols());
  return reduce(elements.size(), zero,
                [&](std::size_t i) { return transpose(elements[i]) * conj_entries(elements[i]); });
}

CycMatrix bilinear_average(std::span<const CycMatrix> elements, const CycMatrix& seed) {
  const CycMatrix zero(seed.conductor(), seed.rows(), seed.cols());
  return reduce(elements.size(), zero,
                [&](std::size_t i) { return transpose(elements[i]) * seed * elements[i]; });
}

Cyclotomic trace_of_squares_sum(std::span<const CycMatrix> elements) {
  if (elements.empty()) throw Error(ErrorKind::InvalidArgument, "empty element list");
  return reduce(elements.size(), Cyclotomic(elements.front().conductor()),
                [&](std::size_t i) { return trace_of_square(elements[i]); });
}

Cyclotomic character_pairing_sum(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b) {
  if (a.size() != b.size() || a.empty()) throw Error(ErrorKind::DimensionMismatch, "character lengths");
  return reduce(a.size(), Cyclotomic(a.front().conductor()), [&](std::size_t i) { return a[i] * b[i].conj(); });
}

std::vector<Cyclotomic> traces(std::span<const CycMatrix> elements) {
  if (elements.empty()) return {};
  std::vector<Cyclotomic> out(elements.size(), Cyclotomic(elements.front().conductor()));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(elements.size()); ++i) {
    out[static_cast<std::size_t>(i)] = trace(elements[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace realcyc::kernels::parallel
