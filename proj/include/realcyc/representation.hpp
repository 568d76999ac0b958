#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "realcyc/matrix.hpp"

namespace realcyc {

inline constexpr std::size_t kDefaultClosureCap = 100000;

/// A finite matrix group given by generators over Q(zeta_n). The group G is
/// identified with its image; every group sum in this library runs over the
/// image.
struct Representation {
  int conductor = 1;
  std::size_t degree = 1;
  std::vector<CycMatrix> generators;
  std::size_t closure_cap = kDefaultClosureCap;

  /// Checks shapes, conductors and invertibility of the generators.
  void validate() const;
};

Representation make_representation(int conductor, std::vector<CycMatrix> generators,
                                   std::size_t closure_cap = kDefaultClosureCap);

struct GroupClosure {
  std::vector<CycMatrix> elements;  // elements[0] is the identity
  std::size_t order() const noexcept { return elements.size(); }
};

/// Breadth-first closure under right multiplication by generators.
GroupClosure group_closure(const Representation& rep);

/// chi(g) = trace(g), aligned with closure.elements.
std::vector<Cyclotomic> character(const Representation& rep, const GroupClosure& closure);

/// (1/order) * sum chi1(g) conj(chi2(g)).
Cyclotomic char_inner(std::span<const Cyclotomic> chi1, std::span<const Cyclotomic> chi2, std::size_t order);

bool is_irreducible(const Representation& rep, const GroupClosure& closure);
bool is_irreducible(const Representation& rep);

/// (1/|G|) sum chi(g^2). Throws NotIrreducible unless [chi,chi] = 1.
int frobenius_schur(const Representation& rep, const GroupClosure& closure);

// Built-in representations.

/// a -> diag(z_m, z_m^-1), b -> [[0,1],[1,0]], conductor m.
Representation dihedral(int m);
/// i -> diag(z_4, -z_4), j -> [[0,1],[-1,0]], conductor 4.
Representation quaternion();
/// 1x1 representation z_m^k, conductor m.
Representation cyclic_linear(int m, int k);
/// Rotation Z_m and reflection diag(1,-1) with entries in the real subfield
/// of Q(zeta_N), N = lcm(4, m).
Representation dihedral_real(int m);

/// Lookup by name: "dihedral", "quaternion", "cyclic_linear", "dihedral_real".
Representation fixture(std::string_view name, int m = 0, int k = 1);

}  // namespace realcyc
