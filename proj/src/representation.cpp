#include "realcyc/representation.hpp"

#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "realcyc/kernels.hpp"

namespace realcyc {

void Representation::validate() const {
  if (degree < 1) throw Error(ErrorKind::InvalidArgument, "degree must be at least 1");
  if (conductor < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "at least one generator is required");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.conductor() != conductor) {
      throw Error(ErrorKind::ConductorMismatch, "generator " + std::to_string(i) + " has conductor " +
                                                    std::to_string(g.conductor()));
    }
    if (g.rows() != degree || g.cols() != degree) {
      throw Error(ErrorKind::DimensionMismatch, "generator " + std::to_string(i) + " is not " +
                                                    std::to_string(degree) + "x" + std::to_string(degree));
    }
    if (det(g).is_zero()) throw Error(ErrorKind::Singular, "generator " + std::to_string(i) + " is singular");
  }
}

Representation make_representation(int conductor, std::vector<CycMatrix> generators, std::size_t closure_cap) {
  Representation rep;
  rep.conductor = conductor;
  rep.degree = generators.empty() ? 1 : generators.front().rows();
  rep.generators = std::move(generators);
  rep.closure_cap = closure_cap;
  rep.validate();
  return rep;
}

GroupClosure group_closure(const Representation& rep) {
  GroupClosure closure;
  std::unordered_set<CycMatrix, CycMatrixHash> seen;
  std::deque<std::size_t> queue;

  auto insert = [&](CycMatrix m) {
    if (seen.contains(m)) return;
    if (closure.elements.size() >= rep.closure_cap) {
      throw Error(ErrorKind::ClosureCapExceeded,
                  "group image has more than " + std::to_string(rep.closure_cap) + " elements");
    }
    seen.insert(m);
    closure.elements.push_back(std::move(m));
    queue.push_back(closure.elements.size() - 1);
  };

  insert(CycMatrix::identity(rep.conductor, rep.degree));
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    for (const auto& g : rep.generators) insert(closure.elements[idx] * g);
  }
  return closure;
}

std::vector<Cyclotomic> character(const Representation&, const GroupClosure& closure) {
  return kernels::parallel::traces(closure.elements);
}

Cyclotomic char_inner(std::span<const Cyclotomic> chi1, std::span<const Cyclotomic> chi2, std::size_t order) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "group order is zero");
  Cyclotomic sum = kernels::parallel::character_pairing_sum(chi1, chi2);
  sum *= Rational(1, static_cast<unsigned long>(order));
  return sum;
}

bool is_irreducible(const Representation& rep, const GroupClosure& closure) {
  const auto chi = character(rep, closure);
  return char_inner(chi, chi, closure.order()).is_one();
}

bool is_irreducible(const Representation& rep) { return is_irreducible(rep, group_closure(rep)); }

int frobenius_schur(const Representation& rep, const GroupClosure& closure) {
  if (!is_irreducible(rep, closure)) throw Error(ErrorKind::NotIrreducible, "[chi,chi] != 1");
  Cyclotomic sum = kernels::parallel::trace_of_squares_sum(closure.elements);
  sum *= Rational(1, static_cast<unsigned long>(closure.order()));
  if (sum.is_rational()) {
    const Rational& v = sum.rational_part();
    if (v == 1) return 1;
    if (v == 0) return 0;
    if (v == -1) return -1;
  }
  throw Error(ErrorKind::InternalInvariantViolation, "indicator sum evaluated to " + sum.to_string());
}

Representation dihedral(int m) {
  if (m < 3) throw Error(ErrorKind::InvalidArgument, "dihedral fixture needs m >= 3");
  const auto a = CycMatrix::diagonal({Cyclotomic::zeta(m, 1), Cyclotomic::zeta(m, -1)});
  const auto b = CycMatrix::from_integers(m, {{0, 1}, {1, 0}});
  return make_representation(m, {a, b});
}

Representation quaternion() {
  const auto i = CycMatrix::diagonal({Cyclotomic::zeta(4, 1), -Cyclotomic::zeta(4, 1)});
  const auto j = CycMatrix::from_integers(4, {{0, 1}, {-1, 0}});
  return make_representation(4, {i, j});
}

Representation cyclic_linear(int m, int k) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "cyclic_linear needs m >= 1");
  CycMatrix g(m, 1, 1);
  g(0, 0) = Cyclotomic::zeta(m, k);
  return make_representation(m, {g});
}

Representation dihedral_real(int m) {
  if (m < 3) throw Error(ErrorKind::InvalidArgument, "dihedral_real fixture needs m >= 3");
  const int n = std::lcm(4, m);
  // cos(2pi/m) = (z^s + z^-s)/2 with s = n/m; sin(2pi/m) = cos(2pi(s - n/4)/n)
  const long s = n / m;
  const long t = s - n / 4;
  const Rational half(1, 2);
  const Cyclotomic c = (Cyclotomic::zeta(n, s) + Cyclotomic::zeta(n, -s)) * half;
  const Cyclotomic sn = (Cyclotomic::zeta(n, t) + Cyclotomic::zeta(n, -t)) * half;
  const auto rotation = CycMatrix::from_rows(n, {{c, -sn}, {sn, c}});
  const auto reflection = CycMatrix::from_integers(n, {{1, 0}, {0, -1}});
  return make_representation(n, {rotation, reflection});
}

Representation fixture(std::string_view name, int m, int k) {
  if (name == "dihedral") return dihedral(m);
  if (name == "quaternion") return quaternion();
  if (name == "cyclic_linear") return cyclic_linear(m, k);
  if (name == "dihedral_real") return dihedral_real(m);
  throw Error(ErrorKind::UnknownFixture, std::string(name));
}

}  // namespace realcyc
