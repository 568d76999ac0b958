#pragma once

// Test-only builders: extra real-type irreducibles, random field elements,
// random conjugating matrices.

#include <random>
#include <vector>

#include "realcyc/matrix.hpp"
#include "realcyc/representation.hpp"

namespace realcyc::testing {

inline Cyclotomic random_cyclotomic(std::mt19937_64& rng, int n, long range = 3, long max_den = 1) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(n)));
  for (auto& v : c) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return Cyclotomic::from_coeffs(n, c);
}

inline Cyclotomic random_nonzero(std::mt19937_64& rng, int n, long range = 3, long max_den = 1) {
  for (;;) {
    auto a = random_cyclotomic(rng, n, range, max_den);
    if (!a.is_zero()) return a;
  }
}

inline CycMatrix random_matrix(std::mt19937_64& rng, int n, std::size_t rows, std::size_t cols, long range = 2) {
  CycMatrix m(n, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_cyclotomic(rng, n, range);
  }
  return m;
}

inline CycMatrix random_invertible(std::mt19937_64& rng, int n, std::size_t d, long range = 2) {
  for (;;) {
    auto m = random_matrix(rng, n, d, d, range);
    if (!det(m).is_zero()) return m;
  }
}

/// diag(z^k_i) * S with S a random invertible integer matrix.
inline CycMatrix random_monomial_twist(std::mt19937_64& rng, int n, std::size_t d, long range = 2) {
  std::uniform_int_distribution<long> exponent(0, n - 1);
  std::uniform_int_distribution<long> entry(-range, range);
  std::vector<Cyclotomic> diag;
  for (std::size_t i = 0; i < d; ++i) diag.push_back(Cyclotomic::zeta(n, exponent(rng)));
  for (;;) {
    CycMatrix s(n, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) s(i, j) = Cyclotomic(n, entry(rng));
    }
    if (!det(s).is_zero()) return CycMatrix::diagonal(diag) * s;
  }
}

inline Representation conjugate(const Representation& rep, const CycMatrix& t) {
  const CycMatrix t_inv = inverse(t);
  std::vector<CycMatrix> gens;
  for (const auto& g : rep.generators) gens.push_back(t * g * t_inv);
  return make_representation(rep.conductor, std::move(gens), rep.closure_cap);
}

inline Representation lift(const Representation& rep, int n) {
  std::vector<CycMatrix> gens;
  for (const auto& g : rep.generators) gens.push_back(lift_conductor(g, n));
  return make_representation(n, std::move(gens), rep.closure_cap);
}

/// Rotation group of the cube: order 24, 3-dim, real type.
inline Representation octahedral_rotations(int n) {
  const auto quarter_turn = CycMatrix::from_integers(n, {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
  const auto diagonal_turn = CycMatrix::from_integers(n, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  return make_representation(n, {quarter_turn, diagonal_turn});
}

/// Standard 4-dim representation of S5 in the basis e_i - e_5.
inline Representation symmetric5_standard(int n) {
  // f_i = e_i - e_5 maps to f_perm(i) - f_perm(5), where f_5 = 0
  auto permutation_block = [n](const std::vector<std::size_t>& perm) {
    CycMatrix m(n, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      if (perm[i] != 4) m(perm[i], i) += Cyclotomic(n, 1L);
      if (perm[4] != 4) m(perm[4], i) -= Cyclotomic(n, 1L);
    }
    return m;
  };
  // (1 2) and (1 2 3 4 5) as 0-based images
  return make_representation(n, {permutation_block({1, 0, 2, 3, 4}), permutation_block({1, 2, 3, 4, 0})});
}

}  // namespace realcyc::testing
