#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "realcyc/matrix.hpp"

namespace realcyc {

enum class NormStrategy { RationalSquare, RealSqrtSearch, BoundedSearch, OddDegreeClosedForm };

std::string_view to_string(NormStrategy s) noexcept;

/// x with x * conj(x) = mu, and the strategy that produced it.
struct NormSolution {
  Cyclotomic x;
  NormStrategy strategy = NormStrategy::RationalSquare;
};

struct NormSearchOptions {
  long bound = 4;
  /// Denominators tried in order. Empty means the divisors of 2n, ascending.
  std::vector<long> denominators;
  /// Shard the coordinate searches across OpenMP threads.
  bool parallel = true;
};

/// Solves x * conj(x) = mu in Q(zeta_n), n = mu.conductor(). Cascade:
///   1. mu a rational square: x = sqrt(mu).
///   2. y in the real subfield with y^2 = mu, y = (a_0 + sum a_i (z^i + z^-i)) / D.
///   3. x = (sum a_i z^i) / D with x * conj(x) = mu.
/// Coordinates range over [-B, B] enumerated 0, 1, -1, 2, -2, ...; the first
/// hit in lexicographic (D, a_0, a_1, ...) order is returned. Both searches
/// discard candidates whose exact trace form Tr(x conj(x)) differs from
/// D^2 Tr(mu) before doing field arithmetic.
///
/// Throws NormEquationNotSolved when every strategy is exhausted. That is a
/// limit of the search box, not a proof that no solution exists.
NormSolution solve_norm(const Cyclotomic& mu, const NormSearchOptions& options = {});

/// Same, with mu lifted to conductor n and bound B.
NormSolution solve_norm(const Cyclotomic& mu, int n, long bound);

/// x = mu^-k det(P) for P * conj(P) = mu I of odd size 2k+1.
NormSolution solve_norm_odd_degree(const CycMatrix& p, const Cyclotomic& mu);

/// Exact square root of a rational, if it has one (non-negative root).
std::optional<Rational> rational_sqrt(const Rational& q);

namespace normeq_detail {

/// Strategy 2 and 3 on their own; `parallel` selects the OpenMP sharded
/// search, otherwise the serial reference runs.
std::optional<Cyclotomic> real_sqrt_search(const Cyclotomic& mu, const NormSearchOptions& options);
std::optional<Cyclotomic> bounded_search(const Cyclotomic& mu, const NormSearchOptions& options);

std::vector<long> default_denominators(int n);

}  // namespace normeq_detail

}  // namespace realcyc
