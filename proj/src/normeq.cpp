#include "realcyc/normeq.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace realcyc {

std::string_view to_string(NormStrategy s) noexcept {
  switch (s) {
    case NormStrategy::RationalSquare: return "rational_square";
    case NormStrategy::RealSqrtSearch: return "real_sqrt_search";
    case NormStrategy::BoundedSearch: return "bounded_search";
    case NormStrategy::OddDegreeClosedForm: return "odd_degree_closed_form";
  }
  return "unknown";
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Integer rn;
  Integer rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

namespace normeq_detail {

std::vector<long> default_denominators(int n) {
  std::vector<long> out;
  const long m = 2L * n;
  for (long d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

namespace {

// 0, 1, -1, 2, -2, ..., B, -B
std::vector<long> value_order(long bound) {
  std::vector<long> out{0};
  for (long v = 1; v <= bound; ++v) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

long order_index(long v) { return v == 0 ? 0 : (v > 0 ? 2 * v - 1 : -2 * v); }

/// Integer points a in [-B,B]^m with a^T G a == target, visited in
/// lexicographic value order. `accept` performs the exact field check.
struct LatticeSearch {
  std::vector<std::vector<long long>> gram;
  std::vector<long> values;
  long bound = 0;
  long long target = 0;
  std::function<bool(const std::vector<long>&)> accept;

  std::size_t dim() const { return gram.size(); }

  // Depth-first search below a fixed prefix a[0..depth).
  bool descend(std::vector<long>& a, std::size_t depth, long long partial) const {
    const std::size_t m = dim();
    long long linear = 0;
    for (std::size_t j = 0; j < depth; ++j) linear += gram[depth][j] * a[j];
    const long long diag = gram[depth][depth];

    if (depth + 1 == m) {
      // Last coordinate solves diag*v^2 + 2*linear*v + partial == target.
      const long long c = partial - target;
      const long long disc = linear * linear - diag * c;
      if (disc < 0) return false;
      const auto root = static_cast<long long>(std::llround(std::sqrt(static_cast<long double>(disc))));
      long long s = -1;
      for (long long r = std::max(0LL, root - 2); r <= root + 2; ++r) {
        if (r * r == disc) {
          s = r;
          break;
        }
      }
      if (s < 0) return false;
      std::vector<long> candidates;
      for (long long num : {-linear + s, -linear - s}) {
        if (num % diag != 0) continue;
        const long long v = num / diag;
        if (v < -bound || v > bound) continue;
        if (std::find(candidates.begin(), candidates.end(), v) == candidates.end()) {
          candidates.push_back(static_cast<long>(v));
        }
      }
      std::sort(candidates.begin(), candidates.end(),
                [](long x, long y) { return order_index(x) < order_index(y); });
      for (long v : candidates) {
        a[depth] = v;
        if (accept(a)) return true;
      }
      a[depth] = 0;
      return false;
    }

    for (long v : values) {
      a[depth] = v;
      const long long next = partial + diag * v * v + 2 * linear * v;
      if (descend(a, depth + 1, next)) return true;
    }
    a[depth] = 0;
    return false;
  }

  // One shard fixes a[0] = first.
  bool run_shard(long first, std::vector<long>& a) const {
    a.assign(dim(), 0);
    a[0] = first;
    const long long partial = gram[0][0] * first * first;
    if (dim() == 1) return partial == target && accept(a);
    return descend(a, 1, partial);
  }
};

struct Shard {
  std::size_t denominator_index;
  long first;
};

// Runs every (D, a0) shard; returns the first accepted point in canonical order.
std::optional<Cyclotomic> sharded_search(const Cyclotomic& mu, const NormSearchOptions& options,
                                         const std::vector<Cyclotomic>& basis, bool squared_real) {
  const int n = mu.conductor();
  const auto denominators = options.denominators.empty() ? default_denominators(n) : options.denominators;
  const long bound = options.bound;
  if (bound < 0) throw Error(ErrorKind::InvalidArgument, "negative search bound");

  // Gram matrix of the trace form on the basis.
  const std::size_t m = basis.size();
  std::vector<std::vector<long long>> gram(m, std::vector<long long>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Cyclotomic prod = squared_real ? basis[i] * basis[j] : basis[i] * basis[j].conj();
      const Rational tr = prod.trace();
      gram[i][j] = tr.get_num().get_si();
    }
  }
  const Rational mu_trace = mu.trace();

  auto make_element = [&](const std::vector<long>& a, long denom) {
    Cyclotomic x(n);
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] != 0) x += basis[i] * Rational(a[i]);
    }
    x *= Rational(1, denom);
    return x;
  };

  std::vector<LatticeSearch> searches(denominators.size());
  std::vector<bool> usable(denominators.size(), false);
  long long max_form = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) max_form += std::llabs(gram[i][j]) * bound * bound;
  }
  for (std::size_t di = 0; di < denominators.size(); ++di) {
    const long denom = denominators[di];
    if (denom <= 0) throw Error(ErrorKind::InvalidArgument, "denominators must be positive");
    const Rational target = mu_trace * denom * denom;
    if (target.get_den() != 1 || target <= 0 || target > Rational(static_cast<long>(max_form))) continue;
    usable[di] = true;
    auto& s = searches[di];
    s.gram = gram;
    s.values = value_order(bound);
    s.bound = bound;
    s.target = target.get_num().get_si();
    s.accept = [&, denom](const std::vector<long>& a) {
      const Cyclotomic x = make_element(a, denom);
      return squared_real ? x * x == mu : x * x.conj() == mu;
    };
  }

  std::vector<Shard> shards;
  for (std::size_t di = 0; di < denominators.size(); ++di) {
    if (!usable[di]) continue;
    for (long v : value_order(bound)) shards.push_back({di, v});
  }
  if (shards.empty()) return std::nullopt;

  std::vector<std::vector<long>> hits(shards.size());
  if (!options.parallel) {
    for (std::size_t s = 0; s < shards.size(); ++s) {
      std::vector<long> a;
      if (searches[shards[s].denominator_index].run_shard(shards[s].first, a)) {
        return make_element(a, denominators[shards[s].denominator_index]);
      }
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> best{shards.size()};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(shards.size()); ++si) {
    const auto s = static_cast<std::size_t>(si);
    if (s > best.load()) continue;
    std::vector<long> a;
    if (searches[shards[s].denominator_index].run_shard(shards[s].first, a)) {
      hits[s] = a;
      std::size_t cur = best.load();
      while (s < cur && !best.compare_exchange_weak(cur, s)) {
      }
    }
  }
  const std::size_t winner = best.load();
  if (winner == shards.size()) return std::nullopt;
  return make_element(hits[winner], denominators[shards[winner].denominator_index]);
}

}  // namespace

std::optional<Cyclotomic> real_sqrt_search(const Cyclotomic& mu, const NormSearchOptions& options) {
  const int n = mu.conductor();
  std::vector<Cyclotomic> basis{Cyclotomic(n, 1L)};
  const int real_dim = n <= 2 ? 1 : mu.degree() / 2;
  for (int i = 1; i < real_dim; ++i) basis.push_back(Cyclotomic::zeta(n, i) + Cyclotomic::zeta(n, -i));
  return sharded_search(mu, options, basis, true);
}

std::optional<Cyclotomic> bounded_search(const Cyclotomic& mu, const NormSearchOptions& options) {
  const int n = mu.conductor();
  std::vector<Cyclotomic> basis;
  for (int i = 0; i < mu.degree(); ++i) basis.push_back(Cyclotomic::zeta(n, i));
  return sharded_search(mu, options, basis, false);
}

}  // namespace normeq_detail

NormSolution solve_norm(const Cyclotomic& mu, const NormSearchOptions& options) {
  if (mu.is_zero()) throw Error(ErrorKind::InvalidArgument, "norm equation with mu = 0");
  if (!mu.is_real()) throw Error(ErrorKind::MuNotReal, "mu = " + mu.to_string() + " is not conj-fixed");

  if (mu.is_rational()) {
    if (auto r = rational_sqrt(mu.rational_part())) {
      return {Cyclotomic(mu.conductor(), *r), NormStrategy::RationalSquare};
    }
  }
  if (auto y = normeq_detail::real_sqrt_search(mu, options)) return {*y, NormStrategy::RealSqrtSearch};
  if (auto x = normeq_detail::bounded_search(mu, options)) return {*x, NormStrategy::BoundedSearch};

  throw Error(ErrorKind::NormEquationNotSolved,
              "x*conj(x) = " + mu.to_string() + " in conductor " + std::to_string(mu.conductor()) +
                  " with bound B = " + std::to_string(options.bound) +
                  "; search box exhausted (solver limit, a solution may still exist)");
}

NormSolution solve_norm(const Cyclotomic& mu, int n, long bound) {
  NormSearchOptions options;
  options.bound = bound;
  return solve_norm(mu.lift(n), options);
}

NormSolution solve_norm_odd_degree(const CycMatrix& p, const Cyclotomic& mu) {
  if (!p.is_square() || p.rows() % 2 == 0) {
    throw Error(ErrorKind::InvalidArgument, "closed form needs an odd-size square matrix");
  }
  const CycMatrix ppbar = p * conj_entries(p);
  if (ppbar != CycMatrix::scalar(mu, p.rows())) {
    throw Error(ErrorKind::InvalidArgument, "P * conj(P) != mu I");
  }
  const long k = static_cast<long>(p.rows() / 2);
  const Cyclotomic x = pow(mu, -k) * det(p);
  if (x * x.conj() != mu) {
    throw Error(ErrorKind::InternalInvariantViolation, "closed-form x fails x*conj(x) = mu");
  }
  return {x, NormStrategy::OddDegreeClosedForm};
}

}  // namespace realcyc
