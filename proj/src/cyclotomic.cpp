#include "realcyc/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace realcyc {

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Exact quotient of integer polynomials by a monic divisor (lowest degree first).
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> quot(num.size() - dn);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer c = num[k + dn];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k + j] -= c * den[j];
  }
  return quot;
}

std::vector<Integer> compute_cyclotomic_polynomial(int n) {
  std::vector<Integer> poly(static_cast<std::size_t>(n) + 1);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, detail::field_tables(d).modulus);
  }
  return poly;
}

std::unique_ptr<detail::FieldTables> build_tables(int n) {
  auto t = std::make_unique<detail::FieldTables>();
  t->n = n;
  t->phi = euler_phi(n);
  t->modulus = compute_cyclotomic_polynomial(n);

  const int phi = t->phi;
  t->powers.assign(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(phi), 0));
  std::vector<long> cur(static_cast<std::size_t>(phi), 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    t->powers[static_cast<std::size_t>(k)] = cur;
    // multiply by zeta: shift up, fold the z^phi term back with Phi_n
    const long top = cur[static_cast<std::size_t>(phi - 1)];
    for (int i = phi - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi; ++i) {
        cur[static_cast<std::size_t>(i)] -= top * t->modulus[static_cast<std::size_t>(i)].get_si();
      }
    }
  }

  // Ramanujan sums: Tr(zeta^k) = mu(n/g) phi(n)/phi(n/g), g = gcd(n, k)
  t->trace_of_power.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int g = std::gcd(n, k);
    const int m = n / g;
    t->trace_of_power[static_cast<std::size_t>(k)] = static_cast<long>(mobius(m)) * (phi / euler_phi(m));
  }
  return t;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(int n) { return detail::field_tables(n).modulus; }

namespace detail {

const FieldTables& field_tables(int n) {
  thread_local int last_n = 0;
  thread_local const FieldTables* last = nullptr;
  if (n == last_n) return *last;
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive, got " + std::to_string(n));
  static std::recursive_mutex mutex;
  static std::map<int, std::unique_ptr<FieldTables>> cache;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_tables(n)).first;
  last_n = n;
  last = it->second.get();
  return *last;
}

}  // namespace detail

Cyclotomic::Cyclotomic() : Cyclotomic(1) {}

Cyclotomic::Cyclotomic(int conductor)
    : tables_(&detail::field_tables(conductor)),
      coeffs_(static_cast<std::size_t>(tables_->phi)) {}

Cyclotomic::Cyclotomic(int conductor, const Rational& value) : Cyclotomic(conductor) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

Cyclotomic Cyclotomic::from_coeffs(int conductor, const std::vector<Rational>& coeffs) {
  const auto& t = detail::field_tables(conductor);
  std::vector<Rational> out(static_cast<std::size_t>(t.phi));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Rational c = coeffs[k];
    c.canonicalize();
    if (c == 0) continue;
    const auto& row = t.powers[k % static_cast<std::size_t>(t.n)];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != 0) out[i] += c * row[i];
    }
  }
  return Cyclotomic(&t, std::move(out));
}

Cyclotomic Cyclotomic::zeta(int conductor, long k) {
  const auto& t = detail::field_tables(conductor);
  long e = k % t.n;
  if (e < 0) e += t.n;
  const auto& row = t.powers[static_cast<std::size_t>(e)];
  std::vector<Rational> out(row.begin(), row.end());
  return Cyclotomic(&t, std::move(out));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

void Cyclotomic::require_same_field(const Cyclotomic& other) const {
  if (tables_ != other.tables_) {
    throw Error(ErrorKind::ConductorMismatch, "conductors " + std::to_string(conductor()) + " and " +
                                                  std::to_string(other.conductor()));
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this = *this / rhs; }

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  Rational r = rhs;
  r.canonicalize();
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.require_same_field(b);
  const auto& t = *a.tables_;
  const std::size_t phi = static_cast<std::size_t>(t.phi);
  if (phi == 1) return Cyclotomic(a.tables_, {a.coeffs_[0] * b.coeffs_[0]});

  std::vector<Rational> prod(2 * phi - 1);
  bool any = false;
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
      any = true;
    }
  }
  std::vector<Rational> out(phi);
  if (!any) return Cyclotomic(a.tables_, std::move(out));
  for (std::size_t i = 0; i < phi; ++i) out[i] = std::move(prod[i]);
  const std::size_t n = static_cast<std::size_t>(t.n);
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& row = t.powers[k % n];
    for (std::size_t i = 0; i < phi; ++i) {
      if (row[i] != 0) out[i] += prod[k] * row[i];
    }
  }
  return Cyclotomic(a.tables_, std::move(out));
}

Cyclotomic Cyclotomic::conj() const {
  const auto& t = *tables_;
  const std::size_t n = static_cast<std::size_t>(t.n);
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = t.powers[(n - i) % n];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) out[k] += coeffs_[i] * row[k];
    }
  }
  return Cyclotomic(tables_, std::move(out));
}

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p <- p - c * x^shift * q
void sub_scaled(Poly& p, const Poly& q, const Rational& c, std::size_t shift) {
  if (p.size() < q.size() + shift) p.resize(q.size() + shift);
  for (std::size_t i = 0; i < q.size(); ++i) p[i + shift] -= c * q[i];
}

Poly mul_poly(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) return Cyclotomic(tables_, [&] {
      std::vector<Rational> out(coeffs_.size());
      out[0] = 1 / coeffs_[0];
      return out;
    }());

  // Extended Euclid in Q[x] on (Phi_n, a): track s with s*a == r (mod Phi_n).
  Poly r0(tables_->modulus.begin(), tables_->modulus.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    Poly rem = r0;
    Poly quot;
    trim(rem);
    while (rem.size() >= r1.size()) {
      const std::size_t shift = rem.size() - r1.size();
      const Rational c = rem.back() / r1.back();
      if (quot.size() <= shift) quot.resize(shift + 1);
      quot[shift] += c;
      sub_scaled(rem, r1, c, shift);
      trim(rem);
    }
    Poly s_next = s0;
    sub_scaled(s_next, mul_poly(quot, s1), Rational(1), 0);
    trim(s_next);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_next);
  }
  // r0 is a nonzero constant because Phi_n is irreducible.
  if (r0.size() != 1) {
    throw Error(ErrorKind::InternalInvariantViolation, "gcd with cyclotomic polynomial is not constant");
  }
  const Rational scale = 1 / r0[0];
  for (auto& c : s0) c *= scale;
  return from_coeffs(conductor(), s0);
}

Cyclotomic Cyclotomic::lift(int new_conductor) const {
  const int n = conductor();
  if (new_conductor < 1 || new_conductor % n != 0) {
    throw Error(ErrorKind::NotDivisible,
                "conductor " + std::to_string(n) + " does not divide " + std::to_string(new_conductor));
  }
  if (new_conductor == n) return *this;
  const auto& t = detail::field_tables(new_conductor);
  const std::size_t step = static_cast<std::size_t>(new_conductor / n);
  std::vector<Rational> out(static_cast<std::size_t>(t.phi));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = t.powers[(i * step) % static_cast<std::size_t>(new_conductor)];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) out[k] += coeffs_[i] * row[k];
    }
  }
  return Cyclotomic(&t, std::move(out));
}

Rational Cyclotomic::trace() const {
  Rational out = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out += coeffs_[i] * tables_->trace_of_power[i];
  }
  return out;
}

namespace {

std::size_t hash_mpz(mpz_srcptr z) noexcept {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x9e3779b97f4a7c15ULL;
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

}  // namespace

std::size_t Cyclotomic::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(tables_->n);
  for (const auto& c : coeffs_) {
    h ^= hash_mpz(c.get_num_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= hash_mpz(c.get_den_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Rational c = coeffs_[i];
    if (c == 0) continue;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c == -1) {
      os << "-";
    } else if (c != 1) {
      os << c << "*";
    }
    os << "z" << conductor();
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.to_string(); }

Cyclotomic pow(const Cyclotomic& a, long e) {
  if (e < 0) return pow(a.inv(), -e);
  Cyclotomic result(a.conductor(), 1L);
  Cyclotomic base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace realcyc
