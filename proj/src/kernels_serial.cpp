#include "realcyc/kernels.hpp"

namespace realcyc::kernels {

Cyclotomic trace_of_square(const CycMatrix& g) {
  if (!g.is_square()) throw Error(ErrorKind::NotSquare, "trace of square");
  Cyclotomic sum(g.conductor());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g(i, j).is_zero() || g(j, i).is_zero()) continue;
      sum += g(i, j) * g(j, i);
    }
  }
  return sum;
}

namespace serial {

CycMatrix hermitian_sum(std::span<const CycMatrix> elements) {
  if (elements.empty()) throw Error(ErrorKind::InvalidArgument, "empty element list");
  const auto& first = elements.front();
  CycMatrix sum(first.conductor(), first.cols(), first.cols());
  for (const auto& h : elements) sum += transpose(h) * conj_entries(h);
  return sum;
}

CycMatrix bilinear_average(std::span<const CycMatrix> elements, const CycMatrix& seed) {
  CycMatrix sum(seed.conductor(), seed.rows(), seed.cols());
  for (const auto& g : elements) sum += transpose(g) * seed * g;
  return sum;
}

Cyclotomic trace_of_squares_sum(std::span<const CycMatrix> elements) {
  if (elements.empty()) throw Error(ErrorKind::InvalidArgument, "empty element list");
  Cyclotomic sum(elements.front().conductor());
  for (const auto& g : elements) sum += trace_of_square(g);
  return sum;
}

Cyclotomic character_pairing_sum(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b) {
  if (a.size() != b.size() || a.empty()) throw Error(ErrorKind::DimensionMismatch, "character lengths");
  Cyclotomic sum(a.front().conductor());
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i].conj();
  return sum;
}

std::vector<Cyclotomic> traces(std::span<const CycMatrix> elements) {
  std::vector<Cyclotomic> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(trace(g));
  return out;
}

}  // namespace serial
}  // namespace realcyc::kernels
