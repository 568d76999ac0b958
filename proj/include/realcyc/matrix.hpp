#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "realcyc/cyclotomic.hpp"

namespace realcyc {

/// Dense row-major matrix over Q(zeta_n). All entries share the matrix
/// conductor.
class CycMatrix {
 public:
  CycMatrix() : CycMatrix(1, 0, 0) {}
  CycMatrix(int conductor, std::size_t rows, std::size_t cols);

  static CycMatrix identity(int conductor, std::size_t d);
  static CycMatrix scalar(const Cyclotomic& s, std::size_t d);
  static CycMatrix diagonal(const std::vector<Cyclotomic>& diag);
  /// Every entry must carry `conductor`.
  static CycMatrix from_rows(int conductor, const std::vector<std::vector<Cyclotomic>>& rows);
  /// Convenience for small rational test matrices.
  static CycMatrix from_integers(int conductor, std::initializer_list<std::initializer_list<long>> rows);

  int conductor() const noexcept { return conductor_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Cyclotomic& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Cyclotomic>& entries() const noexcept { return entries_; }

  /// Writes an entry after checking its conductor.
  void set(std::size_t i, std::size_t j, Cyclotomic value);

  bool is_zero() const;
  bool is_identity() const;
  /// Every entry fixed by complex conjugation.
  bool is_conj_fixed() const;
  /// Returns the scalar s if this equals s*I, otherwise nothing.
  bool is_scalar(Cyclotomic* value = nullptr) const;

  CycMatrix& operator+=(const CycMatrix& rhs);
  CycMatrix& operator-=(const CycMatrix& rhs);
  CycMatrix& operator*=(const Cyclotomic& s);

  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }
  friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) { return a -= b; }
  friend CycMatrix operator*(CycMatrix a, const Cyclotomic& s) { return a *= s; }
  friend CycMatrix operator*(const Cyclotomic& s, CycMatrix a) { return a *= s; }
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  CycMatrix operator-() const;

  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.conductor_ == b.conductor_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  int conductor_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Cyclotomic> entries_;
};

struct CycMatrixHash {
  std::size_t operator()(const CycMatrix& m) const noexcept { return m.hash(); }
};

std::ostream& operator<<(std::ostream& os, const CycMatrix& m);

CycMatrix matmul(const CycMatrix& a, const CycMatrix& b);
CycMatrix transpose(const CycMatrix& a);
CycMatrix conj_entries(const CycMatrix& a);
CycMatrix lift_conductor(const CycMatrix& a, int conductor);
Cyclotomic trace(const CycMatrix& a);

/// Gaussian elimination, first nonzero pivot; product of pivots with sign.
Cyclotomic det(const CycMatrix& a);

/// Gauss-Jordan on [A | I]. Throws Singular.
CycMatrix inverse(const CycMatrix& a);

/// Basis of the right null space, from the reduced row echelon form: one
/// vector per free column, with a 1 in that column.
std::vector<std::vector<Cyclotomic>> kernel(const CycMatrix& a);

std::size_t rank(const CycMatrix& a);

}  // namespace realcyc
