#include "realcyc/matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace realcyc {

namespace {

void require_conductor(const CycMatrix& a, const CycMatrix& b) {
  if (a.conductor() != b.conductor()) {
    throw Error(ErrorKind::ConductorMismatch, "matrix conductors " + std::to_string(a.conductor()) + " and " +
                                                  std::to_string(b.conductor()));
  }
}

void require_shape(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }
}

// Row reduction to reduced echelon form. Returns the pivot columns.
std::vector<std::size_t> rref(CycMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Cyclotomic scale = m(row, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * scale;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Cyclotomic f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

CycMatrix::CycMatrix(int conductor, std::size_t rows, std::size_t cols)
    : conductor_(conductor), rows_(rows), cols_(cols), entries_(rows * cols, Cyclotomic(conductor)) {}

CycMatrix CycMatrix::identity(int conductor, std::size_t d) {
  CycMatrix m(conductor, d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = Cyclotomic(conductor, 1L);
  return m;
}

CycMatrix CycMatrix::scalar(const Cyclotomic& s, std::size_t d) {
  CycMatrix m(s.conductor(), d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = s;
  return m;
}

CycMatrix CycMatrix::diagonal(const std::vector<Cyclotomic>& diag) {
  if (diag.empty()) throw Error(ErrorKind::InvalidArgument, "empty diagonal");
  CycMatrix m(diag.front().conductor(), diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

CycMatrix CycMatrix::from_rows(int conductor, const std::vector<std::vector<Cyclotomic>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  CycMatrix m(conductor, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

CycMatrix CycMatrix::from_integers(int conductor, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Cyclotomic>> out;
  for (const auto& row : rows) {
    auto& dst = out.emplace_back();
    for (long v : row) dst.emplace_back(conductor, v);
  }
  return from_rows(conductor, out);
}

void CycMatrix::set(std::size_t i, std::size_t j, Cyclotomic value) {
  if (value.conductor() != conductor_) {
    throw Error(ErrorKind::ConductorMismatch, "entry conductor " + std::to_string(value.conductor()) +
                                                  " in matrix of conductor " + std::to_string(conductor_));
  }
  (*this)(i, j) = std::move(value);
}

bool CycMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool CycMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

bool CycMatrix::is_conj_fixed() const {
  for (const auto& e : entries_) {
    if (!e.is_real()) return false;
  }
  return true;
}

bool CycMatrix::is_scalar(Cyclotomic* value) const {
  if (!is_square() || rows_ == 0) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j) {
        if ((*this)(i, i) != (*this)(0, 0)) return false;
      } else if (!(*this)(i, j).is_zero()) {
        return false;
      }
    }
  }
  if (value != nullptr) *value = (*this)(0, 0);
  return true;
}

CycMatrix& CycMatrix::operator+=(const CycMatrix& rhs) {
  require_conductor(*this, rhs);
  require_shape(*this, rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

CycMatrix& CycMatrix::operator-=(const CycMatrix& rhs) {
  require_conductor(*this, rhs);
  require_shape(*this, rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

CycMatrix& CycMatrix::operator*=(const Cyclotomic& s) {
  if (s.conductor() != conductor_) throw Error(ErrorKind::ConductorMismatch, "scalar conductor");
  for (auto& e : entries_) {
    if (!e.is_zero()) e = e * s;
  }
  return *this;
}

CycMatrix CycMatrix::operator-() const {
  CycMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  require_conductor(a, b);
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "inner dimensions " + std::to_string(a.cols()) + " and " +
                                                  std::to_string(b.rows()));
  }
  CycMatrix out(a.conductor(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Cyclotomic& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Cyclotomic& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

std::size_t CycMatrix::hash() const noexcept {
  std::size_t h = rows_ * 31 + cols_;
  for (const auto& e : entries_) h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string CycMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycMatrix& m) { return os << m.to_string(); }

CycMatrix matmul(const CycMatrix& a, const CycMatrix& b) { return a * b; }

CycMatrix transpose(const CycMatrix& a) {
  CycMatrix out(a.conductor(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

CycMatrix conj_entries(const CycMatrix& a) {
  CycMatrix out(a.conductor(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).conj();
  }
  return out;
}

CycMatrix lift_conductor(const CycMatrix& a, int conductor) {
  CycMatrix out(conductor, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).lift(conductor);
  }
  return out;
}

Cyclotomic trace(const CycMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "trace of non-square matrix");
  Cyclotomic sum(a.conductor());
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

Cyclotomic det(const CycMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "determinant of non-square matrix");
  CycMatrix m = a;
  const std::size_t d = m.rows();
  Cyclotomic result(a.conductor(), 1L);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t p = col;
    while (p < d && m(p, col).is_zero()) ++p;
    if (p == d) return Cyclotomic(a.conductor());
    if (p != col) {
      for (std::size_t j = col; j < d; ++j) std::swap(m(p, j), m(col, j));
      result = -result;
    }
    const Cyclotomic pivot = m(col, col);
    result *= pivot;
    const Cyclotomic pivot_inv = pivot.inv();
    for (std::size_t i = col + 1; i < d; ++i) {
      if (m(i, col).is_zero()) continue;
      const Cyclotomic f = m(i, col) * pivot_inv;
      for (std::size_t j = col + 1; j < d; ++j) {
        if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
      }
      m(i, col) = Cyclotomic(a.conductor());
    }
  }
  return result;
}

CycMatrix inverse(const CycMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "inverse of non-square matrix");
  const std::size_t d = a.rows();
  CycMatrix aug(a.conductor(), d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug(i, j) = a(i, j);
    aug(i, d + i) = Cyclotomic(a.conductor(), 1L);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < d || pivots[d - 1] != d - 1) throw Error(ErrorKind::Singular, "matrix is not invertible");
  CycMatrix out(a.conductor(), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out(i, j) = std::move(aug(i, d + j));
  }
  return out;
}

std::vector<std::vector<Cyclotomic>> kernel(const CycMatrix& a) {
  CycMatrix m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Cyclotomic>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Cyclotomic> v(a.cols(), Cyclotomic(a.conductor()));
    v[free] = Cyclotomic(a.conductor(), 1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const CycMatrix& a) {
  CycMatrix m = a;
  return rref(m).size();
}

}  // namespace realcyc
