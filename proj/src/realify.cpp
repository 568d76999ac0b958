#include "realcyc/realify.hpp"

#include <random>
#include <string>

#include "realcyc/kernels.hpp"

namespace realcyc {

namespace {

CycMatrix scale_to_first_entry(CycMatrix m) {
  for (const auto& e : m.entries()) {
    if (!e.is_zero()) return m * e.inv();
  }
  return m;
}

void check_invariant_form(const Representation& rep, const CycMatrix& M) {
  for (const auto& g : rep.generators) {
    if (transpose(g) * M * g != M) {
      throw Error(ErrorKind::InternalInvariantViolation, "bilinear form is not invariant");
    }
  }
  if (det(M).is_zero()) {
    throw Error(ErrorKind::InternalInvariantViolation, "invariant bilinear form is singular");
  }
}

std::vector<CycMatrix> bilinear_seeds(int n, std::size_t d) {
  std::vector<CycMatrix> seeds;
  seeds.push_back(CycMatrix::identity(n, d));
  const Cyclotomic one(n, 1L);
  for (std::size_t j = 0; j < d; ++j) {
    CycMatrix x(n, d, d);
    x(j, j) = one;
    seeds.push_back(std::move(x));
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      CycMatrix x(n, d, d);
      x(j, k) = one;
      x(k, j) = one;
      seeds.push_back(std::move(x));
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      CycMatrix x(n, d, d);
      x(j, k) = one;
      x(k, j) = -one;
      seeds.push_back(std::move(x));
    }
  }
  return seeds;
}

CycMatrix bilinear_by_kernel(const Representation& rep) {
  const std::size_t d = rep.degree;
  const int n = rep.conductor;
  // unknown m_ab at column a*d + b; row (g, i, j) encodes (g^T M g - M)_ij
  CycMatrix system(n, rep.generators.size() * d * d, d * d);
  std::size_t row = 0;
  for (const auto& g : rep.generators) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j, ++row) {
        for (std::size_t a = 0; a < d; ++a) {
          if (g(a, i).is_zero()) continue;
          for (std::size_t b = 0; b < d; ++b) {
            if (g(b, j).is_zero()) continue;
            system(row, a * d + b) += g(a, i) * g(b, j);
          }
        }
        system(row, i * d + j) -= Cyclotomic(n, 1L);
      }
    }
  }
  const auto basis = kernel(system);
  if (basis.empty()) throw Error(ErrorKind::NotRealValued, "no invariant bilinear form");
  if (basis.size() != 1) {
    throw Error(ErrorKind::InternalInvariantViolation,
                "invariant bilinear forms span dimension " + std::to_string(basis.size()));
  }
  CycMatrix M(n, d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) M(a, b) = basis[0][a * d + b];
  }
  return M;
}

// Default order: 1, z, 1 + z, 1 + 2z, 1 + 3z, ...
class XiCandidates {
 public:
  XiCandidates(int n, std::optional<std::uint64_t> seed) : n_(n), seed_(seed) {
    if (seed_) rng_.seed(*seed_);
  }

  Cyclotomic next() {
    const long j = index_++;
    if (!seed_) {
      if (j == 0) return Cyclotomic(n_, 1L);
      if (j == 1) return Cyclotomic::zeta(n_, 1);
      return Cyclotomic(n_, 1L) + Cyclotomic::zeta(n_, 1) * Rational(j - 1);
    }
    std::uniform_int_distribution<long> coeff(-3, 3);
    const int phi = euler_phi(n_);
    for (;;) {
      std::vector<Rational> c(static_cast<std::size_t>(phi));
      for (auto& v : c) v = coeff(rng_);
      auto xi = Cyclotomic::from_coeffs(n_, c);
      if (!xi.is_zero()) return xi;
    }
  }

 private:
  int n_;
  std::optional<std::uint64_t> seed_;
  std::mt19937_64 rng_;
  long index_ = 0;
};

}  // namespace

CycMatrix invariant_bilinear(const Representation& rep, const GroupClosure& closure, BilinearMethod method) {
  CycMatrix M;
  if (method == BilinearMethod::Kernel) {
    M = bilinear_by_kernel(rep);
  } else {
    bool found = false;
    for (const auto& seed : bilinear_seeds(rep.conductor, rep.degree)) {
      CycMatrix avg = kernels::parallel::bilinear_average(closure.elements, seed);
      if (!avg.is_zero()) {
        M = std::move(avg);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::NotRealValued, "every seed averages to zero");
  }
  M = scale_to_first_entry(std::move(M));
  check_invariant_form(rep, M);
  return M;
}

CycMatrix invariant_hermitian(const Representation& rep, const GroupClosure& closure) {
  CycMatrix sigma = kernels::parallel::hermitian_sum(closure.elements);
  for (const auto& g : rep.generators) {
    if (transpose(g) * sigma * conj_entries(g) != sigma) {
      throw Error(ErrorKind::InternalInvariantViolation, "hermitian form is not invariant");
    }
  }
  if (transpose(conj_entries(sigma)) != sigma) {
    throw Error(ErrorKind::InternalInvariantViolation, "hermitian form is not hermitian");
  }
  return sigma;
}

CycMatrix compute_P(const Representation& rep, const CycMatrix& M, const CycMatrix& Sigma) {
  const CycMatrix P = inverse(Sigma) * M;
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    const auto& g = rep.generators[i];
    if (P * g != conj_entries(g) * P) {
      throw Error(ErrorKind::IntertwinerCheckFailed, "P g != conj(g) P for generator " + std::to_string(i));
    }
  }
  return P;
}

Cyclotomic compute_mu(const CycMatrix& P) {
  Cyclotomic mu;
  if (!(P * conj_entries(P)).is_scalar(&mu)) throw Error(ErrorKind::NotScalar, "P conj(P) is not scalar");
  if (!mu.is_real()) throw Error(ErrorKind::MuNotReal, "mu = " + mu.to_string());
  return mu;
}

NormalizedIntertwiner normalize_P(const CycMatrix& P, const Cyclotomic& mu, const NormSearchOptions& options) {
  NormSolution solution = P.rows() % 2 == 1 ? solve_norm_odd_degree(P, mu) : solve_norm(mu, options);
  CycMatrix normalized = P * solution.x.inv();
  if (!(normalized * conj_entries(normalized)).is_identity()) {
    throw Error(ErrorKind::InternalInvariantViolation, "P' conj(P') != I after normalization");
  }
  return {std::move(normalized), std::move(solution)};
}

CycMatrix build_Q(const CycMatrix& P_normalized, const Cyclotomic& xi) {
  return xi.conj() * conj_entries(P_normalized) + CycMatrix::scalar(xi, P_normalized.rows());
}

XiChoice find_xi(const CycMatrix& P_normalized, int conductor, std::optional<std::uint64_t> seed) {
  const std::size_t d = P_normalized.rows();
  const std::size_t max_tests = d + 1;
  const std::size_t max_draws = 64 * (d + 1);
  XiCandidates candidates(conductor, seed);
  std::vector<Cyclotomic> ratios;
  XiChoice choice;
  for (std::size_t draw = 0; draw < max_draws && ratios.size() < max_tests; ++draw) {
    Cyclotomic xi = candidates.next();
    const Cyclotomic ratio = -(xi.conj() / xi);
    bool repeated = false;
    for (const auto& r : ratios) repeated = repeated || r == ratio;
    if (repeated) continue;
    ratios.push_back(ratio);
    ++choice.attempts;
    if (!det(build_Q(P_normalized, xi)).is_zero()) {
      choice.xi = std::move(xi);
      return choice;
    }
    choice.rejected.push_back(std::move(xi));
  }
  throw Error(ErrorKind::XiSearchExhausted,
              "no invertible Q after " + std::to_string(choice.attempts) + " distinct-ratio candidates");
}

RealizationResult realify(const Representation& rep, const RealifyOptions& options) {
  rep.validate();
  RealizationResult result;
  result.conductor = rep.conductor;
  result.degree = rep.degree;
  result.diagnostics.xi = Cyclotomic(rep.conductor, 1L);

  auto shortcut = [&](const char* why) {
    result.Q = CycMatrix::identity(rep.conductor, rep.degree);
    result.conjugated_generators = rep.generators;
    result.diagnostics.shortcut = why;
    return result;
  };

  // Q(zeta_1) = Q(zeta_2) = Q is already real.
  if (rep.conductor <= 2) return shortcut("conductor<=2");

  const GroupClosure closure = group_closure(rep);
  result.diagnostics.group_order = closure.order();
  if (!is_irreducible(rep, closure)) throw Error(ErrorKind::NotIrreducible, "[chi,chi] != 1");
  const int nu2 = frobenius_schur(rep, closure);
  result.diagnostics.nu2 = nu2;
  if (nu2 == 0) throw Error(ErrorKind::NotRealValued, "Frobenius-Schur indicator is 0");
  if (nu2 == -1) throw Error(ErrorKind::QuaternionicType, "Frobenius-Schur indicator is -1");

  if (rep.degree == 1) {
    for (const auto& g : rep.generators) {
      if (!g.is_conj_fixed()) throw Error(ErrorKind::InternalInvariantViolation, "real 1-dim rep with complex value");
    }
    return shortcut("degree 1");
  }

  auto& diag = result.diagnostics;
  diag.M = invariant_bilinear(rep, closure, options.bilinear);
  diag.Sigma = invariant_hermitian(rep, closure);
  diag.P_raw = compute_P(rep, *diag.M, *diag.Sigma);
  diag.mu = compute_mu(*diag.P_raw);

  auto normalized = normalize_P(*diag.P_raw, *diag.mu, options.norm);
  diag.P_normalized = normalized.P;
  diag.norm_solution = normalized.solution;
  const CycMatrix& Pn = *diag.P_normalized;

  XiChoice xi = find_xi(Pn, rep.conductor, options.xi_seed);
  diag.xi = xi.xi;
  diag.xi_attempts = xi.attempts;
  diag.rejected_xi = xi.rejected;

  result.Q = build_Q(Pn, diag.xi);
  if (Pn * result.Q != conj_entries(result.Q)) {
    throw Error(ErrorKind::InternalInvariantViolation, "P' Q != conj(Q)");
  }
  const CycMatrix Qinv = inverse(result.Q);

  result.conjugated_generators.reserve(rep.generators.size());
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    const auto& g = rep.generators[i];
    CycMatrix h = Qinv * g * result.Q;
    if (!h.is_conj_fixed()) {
      throw Error(ErrorKind::InternalInvariantViolation,
                  "conjugated generator " + std::to_string(i) + " has a non-real entry");
    }
    if (trace(h) != trace(g)) {
      throw Error(ErrorKind::InternalInvariantViolation, "trace changed for generator " + std::to_string(i));
    }
    result.conjugated_generators.push_back(std::move(h));
  }
  return result;
}

}  // namespace realcyc
