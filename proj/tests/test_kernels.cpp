#include <omp.h>

#include <random>

#include "doctest.h"
#include "realcyc/kernels.hpp"
#include "realcyc/representation.hpp"
#include "support/generators.hpp"

using namespace realcyc;

namespace {

std::vector<Representation> sample_reps() {
  std::mt19937_64 rng(8);
  return {
      dihedral(4),
      dihedral(9),
      quaternion(),
      realcyc::testing::octahedral_rotations(3),
      realcyc::testing::conjugate(realcyc::testing::symmetric5_standard(5),
                                  realcyc::testing::random_invertible(rng, 5, 4, 1)),
  };
}

}  // namespace

TEST_CASE("parallel kernels reproduce the serial reference exactly") {
  for (int threads : {1, 2, 4, 7}) {
    omp_set_num_threads(threads);
    for (const auto& rep : sample_reps()) {
      const auto c = group_closure(rep);
      const std::span<const CycMatrix> els(c.elements);
      CHECK(kernels::parallel::hermitian_sum(els) == kernels::serial::hermitian_sum(els));
      CHECK(kernels::parallel::trace_of_squares_sum(els) == kernels::serial::trace_of_squares_sum(els));
      const auto chi_s = kernels::serial::traces(els);
      CHECK(kernels::parallel::traces(els) == chi_s);
      CHECK(kernels::parallel::character_pairing_sum(chi_s, chi_s) ==
            kernels::serial::character_pairing_sum(chi_s, chi_s));
      std::mt19937_64 rng(static_cast<std::uint64_t>(threads));
      const auto seed = realcyc::testing::random_matrix(rng, rep.conductor, rep.degree, rep.degree);
      CHECK(kernels::parallel::bilinear_average(els, seed) == kernels::serial::bilinear_average(els, seed));
    }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("serial kernels against direct formulas") {
  const auto rep = dihedral(5);
  const auto c = group_closure(rep);
  CycMatrix sigma(5, 2, 2);
  Cyclotomic squares(5);
  for (const auto& h : c.elements) {
    sigma += transpose(h) * conj_entries(h);
    squares += trace(h * h);
    CHECK(kernels::trace_of_square(h) == trace(h * h));
  }
  CHECK(kernels::serial::hermitian_sum(c.elements) == sigma);
  CHECK(kernels::serial::trace_of_squares_sum(c.elements) == squares);
  // unitary generators: every h^T conj(h) is I
  CHECK(sigma == CycMatrix::scalar(Cyclotomic(5, 10L), 2));
}

TEST_CASE("empty input") {
  CHECK_THROWS_AS(kernels::parallel::hermitian_sum({}), Error);
  CHECK_THROWS_AS(kernels::serial::hermitian_sum({}), Error);
}
