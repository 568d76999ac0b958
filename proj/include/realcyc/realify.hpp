#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "realcyc/normeq.hpp"
#include "realcyc/representation.hpp"

namespace realcyc {

enum class BilinearMethod {
  /// sum_g g^T X g over the closure for a fixed sequence of seeds X.
  Averaging,
  /// Null space of the stacked constraints g^T M g = M over the generators.
  Kernel,
};

struct RealifyOptions {
  NormSearchOptions norm;
  BilinearMethod bilinear = BilinearMethod::Averaging;
  /// When set, xi candidates are drawn from a seeded generator instead of the
  /// fixed sequence 1, z, 1+z, 1+2z, ...
  std::optional<std::uint64_t> xi_seed;
};

struct RealizationDiagnostics {
  /// Unset when a shortcut returned before the closure was built.
  std::optional<int> nu2;
  std::optional<std::size_t> group_order;
  std::optional<CycMatrix> M;
  std::optional<CycMatrix> Sigma;
  std::optional<CycMatrix> P_raw;
  std::optional<CycMatrix> P_normalized;
  std::optional<Cyclotomic> mu;
  std::optional<NormSolution> norm_solution;
  Cyclotomic xi;
  int xi_attempts = 0;
  std::vector<Cyclotomic> rejected_xi;
  /// Which early exit produced the result, if any ("conductor<=2", "degree 1").
  std::optional<std::string> shortcut;
};

struct RealizationResult {
  int conductor = 1;
  std::size_t degree = 1;
  CycMatrix Q;
  std::vector<CycMatrix> conjugated_generators;
  RealizationDiagnostics diagnostics;
};

/// Nonzero M with g^T M g = M for all g, scaled so its first nonzero entry
/// (row-major) is 1. Symmetric seeds are tried before antisymmetric ones.
CycMatrix invariant_bilinear(const Representation& rep, const GroupClosure& closure,
                             BilinearMethod method = BilinearMethod::Averaging);

/// Sigma = sum_h h^T conj(h) over the whole closure.
CycMatrix invariant_hermitian(const Representation& rep, const GroupClosure& closure);

/// P = Sigma^-1 M, checked against P g = conj(g) P for each generator.
CycMatrix compute_P(const Representation& rep, const CycMatrix& M, const CycMatrix& Sigma);

/// mu with P conj(P) = mu I and conj(mu) = mu.
Cyclotomic compute_mu(const CycMatrix& P);

struct NormalizedIntertwiner {
  CycMatrix P;  // P' = P / x, P' conj(P') = I
  NormSolution solution;
};

/// Odd size uses the determinant closed form; even size calls solve_norm.
NormalizedIntertwiner normalize_P(const CycMatrix& P, const Cyclotomic& mu, const NormSearchOptions& options = {});

struct XiChoice {
  Cyclotomic xi;
  int attempts = 0;
  std::vector<Cyclotomic> rejected;
};

/// First candidate xi whose Q = conj(xi) conj(P') + xi I is invertible.
/// Candidates whose ratio -conj(xi)/xi repeats an earlier one are skipped, so
/// at most d+1 determinants are evaluated.
XiChoice find_xi(const CycMatrix& P_normalized, int conductor, std::optional<std::uint64_t> seed = std::nullopt);

CycMatrix build_Q(const CycMatrix& P_normalized, const Cyclotomic& xi);

/// Full pipeline: closure, irreducibility, indicator, forms, normalization,
/// xi, Q, conjugation. Every intermediate identity is re-checked exactly.
RealizationResult realify(const Representation& rep, const RealifyOptions& options = {});

}  // namespace realcyc
