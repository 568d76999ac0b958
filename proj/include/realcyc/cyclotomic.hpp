#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "realcyc/error.hpp"

namespace realcyc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Euler totient.
int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Monic of degree euler_phi(n).
std::vector<Integer> cyclotomic_polynomial(int n);

namespace detail {

/// Per-conductor lookup tables. One instance per conductor lives for the
/// whole process; pointers to it are stable.
struct FieldTables {
  int n = 1;
  int phi = 1;
  std::vector<Integer> modulus;                 // Phi_n, lowest degree first
  std::vector<std::vector<long>> powers;        // zeta^k reduced, k in [0, n)
  std::vector<long> trace_of_power;             // Tr_{F/Q}(zeta^k), k in [0, n)
};

const FieldTables& field_tables(int n);

}  // namespace detail

/// Exact element of Q(zeta_n) stored in the power basis {1, z, ..., z^(phi-1)}
/// reduced modulo Phi_n. Two elements compare equal iff their conductors and
/// coefficient vectors match.
class Cyclotomic {
 public:
  /// Zero in Q (conductor 1).
  Cyclotomic();
  /// Zero in Q(zeta_n).
  explicit Cyclotomic(int conductor);
  Cyclotomic(int conductor, const Rational& value);
  Cyclotomic(int conductor, long value) : Cyclotomic(conductor, Rational(value)) {}

  /// Reduces an arbitrary-length coefficient vector (sum c_i z^i) mod Phi_n.
  static Cyclotomic from_coeffs(int conductor, const std::vector<Rational>& coeffs);
  /// zeta_n^k for any integer k.
  static Cyclotomic zeta(int conductor, long k = 1);

  int conductor() const noexcept { return tables_->n; }
  int degree() const noexcept { return tables_->phi; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Only meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  Cyclotomic conj() const;
  Cyclotomic inv() const;
  Cyclotomic lift(int new_conductor) const;
  bool is_real() const { return conj() == *this; }

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);

  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.tables_ == b.tables_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Exact Tr_{F/Q}.
  Rational trace() const;

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  Cyclotomic(const detail::FieldTables* tables, std::vector<Rational> coeffs)
      : tables_(tables), coeffs_(std::move(coeffs)) {}

  void require_same_field(const Cyclotomic& other) const;

  const detail::FieldTables* tables_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a);

// Named forms of the field operations.
inline Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
inline Cyclotomic sub(const Cyclotomic& a, const Cyclotomic& b) { return a - b; }
inline Cyclotomic mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
inline Cyclotomic neg(const Cyclotomic& a) { return -a; }
inline Cyclotomic inv(const Cyclotomic& a) { return a.inv(); }
inline Cyclotomic conj(const Cyclotomic& a) { return a.conj(); }
inline bool is_real(const Cyclotomic& a) { return a.is_real(); }
inline Cyclotomic lift_conductor(const Cyclotomic& a, int n) { return a.lift(n); }

/// Integer power, negative exponents via inv().
Cyclotomic pow(const Cyclotomic& a, long e);

struct CyclotomicHash {
  std::size_t operator()(const Cyclotomic& a) const noexcept { return a.hash(); }
};

}  // namespace realcyc
