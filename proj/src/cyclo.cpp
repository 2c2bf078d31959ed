#include "exbraid/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "exbraid/error.hpp"

namespace exbraid {

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

struct Field {
  std::uint32_t n = 1;
  std::uint32_t phi = 1;
  std::vector<long> poly;                 // Phi_n, constant term first, monic
  std::vector<std::vector<long>> powers;  // powers[k] = x^k mod Phi_n, k < n
  std::vector<std::uint32_t> primes;      // distinct prime factors of n
};

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> ps;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

long to_long_checked(const mpz_class& v) {
  if (!v.fits_slong_p()) throw InternalError("cyclotomic table coefficient overflow");
  return v.get_si();
}

class FieldCache {
 public:
  const Field& get(std::uint32_t n) {
    {
      std::shared_lock lock(mutex_);
      auto it = fields_.find(n);
      if (it != fields_.end()) return *it->second;
    }
    // Build outside the lock; divisors may recurse into get().
    auto built = build(n);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = fields_.emplace(n, std::move(built));
    return *it->second;
  }

 private:
  std::unique_ptr<Field> build(std::uint32_t n) {
    auto f = std::make_unique<Field>();
    f->n = n;
    f->primes = prime_factors(n);

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    ZPoly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      const auto& div = get(d).poly;
      const std::size_t dd = div.size() - 1;
      const std::size_t dn = num.size() - 1;
      ZPoly quot(dn - dd + 1, 0);
      for (std::size_t k = dn + 1; k-- > dd;) {
        mpz_class c = num[k];
        quot[k - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * div[j];
      }
      for (std::size_t j = 0; j < dd; ++j) {
        if (num[j] != 0) throw InternalError("cyclotomic division left a remainder");
      }
      num = std::move(quot);
    }
    f->poly.reserve(num.size());
    for (const auto& c : num) f->poly.push_back(to_long_checked(c));
    f->phi = static_cast<std::uint32_t>(f->poly.size() - 1);

    // x^k mod Phi_n for k < n.
    const std::uint32_t phi = f->phi;
    f->powers.assign(n, std::vector<long>(phi, 0));
    ZPoly cur(phi, 0);
    cur[0] = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
      for (std::uint32_t i = 0; i < phi; ++i) f->powers[k][i] = to_long_checked(cur[i]);
      // multiply by x
      mpz_class top = cur[phi - 1];
      for (std::uint32_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (std::uint32_t i = 0; i < phi; ++i) cur[i] -= top * f->poly[i];
      }
    }
    return f;
  }

  std::shared_mutex mutex_;
  std::map<std::uint32_t, std::unique_ptr<Field>> fields_;
};

FieldCache& field_cache() {
  static FieldCache cache;
  return cache;
}

const Field& field(std::uint32_t n) { return field_cache().get(n); }

// Reduce a dense vector indexed by exponent mod n to the power basis.
ZPoly reduce_dense(const Field& f, const ZPoly& dense) {
  ZPoly out(f.phi, 0);
  for (std::uint32_t k = 0; k < f.phi; ++k) out[k] = dense[k];
  for (std::uint32_t k = f.phi; k < f.n; ++k) {
    const mpz_class& c = dense[k];
    if (c == 0) continue;
    const auto& row = f.powers[k];
    for (std::uint32_t i = 0; i < f.phi; ++i) {
      if (row[i] != 0) out[i] += c * row[i];
    }
  }
  return out;
}

bool all_zero(const ZPoly& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& c) { return c == 0; });
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  for (std::uint64_t x = 1; x < m; ++x) {
    if ((a * x) % m == 1) return x;
  }
  throw InternalError("no modular inverse");
}

// Try to express the element of Q(zeta_n) given by num in Q(zeta_{n/p}).
std::optional<ZPoly> descend(std::uint32_t n, const ZPoly& num, std::uint32_t p) {
  const std::uint32_t m = n / p;
  if (m % p == 0) {
    // Phi_n(x) = Phi_m(x^p): the basis splits by exponent mod p.
    ZPoly out(num.size() / p, 0);
    for (std::size_t i = 0; i < num.size(); ++i) {
      if (i % p != 0) {
        if (num[i] != 0) return std::nullopt;
      } else {
        out[i / p] = num[i];
      }
    }
    return out;
  }
  // zeta_n = zeta_m^a * zeta_p^b with a*p + b*m = 1 (mod n).
  const std::uint64_t a = inverse_mod(p % m == 0 ? 0 : p % m, m);
  const std::uint64_t b = inverse_mod(m % p, p);
  const Field& fm = field(m);
  std::vector<ZPoly> bucket(p, ZPoly(m, 0));
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    bucket[(b * i) % p][(a * i) % m] += num[i];
  }
  if (p == 2) {
    ZPoly dense(m, 0);
    for (std::uint32_t k = 0; k < m; ++k) dense[k] = bucket[0][k] - bucket[1][k];
    return reduce_dense(fm, dense);
  }
  // 1, zeta_p, ..., zeta_p^(p-2) is a basis over Q(zeta_m).
  for (std::uint32_t r = 1; r + 1 < p; ++r) {
    ZPoly dense(m, 0);
    for (std::uint32_t k = 0; k < m; ++k) dense[k] = bucket[r][k] - bucket[p - 1][k];
    if (!all_zero(reduce_dense(fm, dense))) return std::nullopt;
  }
  ZPoly dense(m, 0);
  for (std::uint32_t k = 0; k < m; ++k) dense[k] = bucket[0][k] - bucket[p - 1][k];
  return reduce_dense(fm, dense);
}

ZPoly lift(std::uint32_t from, const ZPoly& num, std::uint32_t to) {
  if (from == to) return num;
  const Field& f = field(to);
  const std::uint32_t step = to / from;
  ZPoly dense(to, 0);
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] != 0) dense[(i * step) % to] += num[i];
  }
  return reduce_dense(f, dense);
}

// ---- rational polynomial helpers for inversion ----

void trim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

// r0 := r0 mod r1, returns quotient.
QPoly divmod_inplace(QPoly& r0, const QPoly& r1) {
  const int d1 = degree(r1);
  int d0 = degree(r0);
  QPoly quot(std::max(d0 - d1 + 1, 1), 0);
  const mpq_class lead = r1[d1];
  while (d0 >= d1) {
    mpq_class c = r0[d0] / lead;
    quot[d0 - d1] = c;
    for (int j = 0; j <= d1; ++j) r0[d0 - d1 + j] -= c * r1[j];
    d0 = degree(r0);
  }
  trim(r0);
  return quot;
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out(std::max(a.size(), q.size() + b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

const std::vector<long>& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw PreconditionError("cyclotomic_polynomial: n must be positive");
  return field(n).poly;
}

CycloNumber::CycloNumber() : n_(1), num_{0}, den_(1) {}

CycloNumber::CycloNumber(long value) : n_(1), num_{mpz_class(value)}, den_(1) {}

CycloNumber::CycloNumber(const mpq_class& value)
    : n_(1), num_{value.get_num()}, den_(value.get_den()) {}

CycloNumber::CycloNumber(std::uint32_t n, std::vector<mpz_class> num, mpz_class den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycloNumber CycloNumber::from_coeffs(std::uint32_t n, const std::vector<mpq_class>& coeffs) {
  if (n == 0) throw PreconditionError("conductor must be positive");
  mpz_class den = 1;
  for (const auto& c : coeffs) den = lcm(den, mpz_class(c.get_den()));
  ZPoly dense(n, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    mpq_class scaled = coeffs[i] * den;
    dense[i % n] += scaled.get_num();
  }
  return CycloNumber(n, reduce_dense(field(n), dense), den);
}

void CycloNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (all_zero(num_)) {
    n_ = 1;
    num_.assign(1, 0);
    den_ = 1;
    return;
  }
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    for (std::uint32_t p : field(n_).primes) {
      if (auto r = descend(n_, num_, p)) {
        n_ /= p;
        num_ = std::move(*r);
        changed = true;
        break;
      }
    }
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) g = gcd(g, c);
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
}

std::vector<mpq_class> CycloNumber::coeffs() const { return coeffs_in(n_); }

mpq_class CycloNumber::coeff(std::size_t i) const {
  if (i >= num_.size()) throw PreconditionError("coefficient index out of range");
  mpq_class c(num_[i], den_);
  c.canonicalize();
  return c;
}

std::vector<mpq_class> CycloNumber::coeffs_in(std::uint32_t n) const {
  if (n == 0 || n % n_ != 0) throw PreconditionError("target conductor must be a multiple");
  ZPoly lifted = lift(n_, num_, n);
  std::vector<mpq_class> out;
  out.reserve(lifted.size());
  for (auto& c : lifted) {
    mpq_class q(c, den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

bool CycloNumber::is_zero() const { return n_ == 1 && num_[0] == 0; }

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  const auto n = static_cast<std::uint32_t>(lcm_u64(n_, o.n_));
  ZPoly a = lift(n_, num_, n);
  ZPoly b = lift(o.n_, o.num_, n);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] * o.den_ + b[i] * den_;
  *this = CycloNumber(n, std::move(a), den_ * o.den_);
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  const auto n = static_cast<std::uint32_t>(lcm_u64(n_, o.n_));
  const ZPoly a = lift(n_, num_, n);
  const ZPoly b = lift(o.n_, o.num_, n);
  ZPoly dense(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= n) k -= n;
      dense[k] += a[i] * b[j];
    }
  }
  *this = CycloNumber(n, reduce_dense(field(n), dense), den_ * o.den_);
  return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) { return *this *= inv(o); }

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
}

std::string CycloNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff(i).get_str() << ")";
    if (i > 0) os << "*z" << n_ << "^" << i;
  }
  return os.str();
}

CycloNumber make_root_of_unity(std::uint32_t n, long k) {
  if (n == 0) throw PreconditionError("make_root_of_unity: n must be positive");
  long e = k % static_cast<long>(n);
  if (e < 0) e += n;
  std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1, 0);
  c[e] = 1;
  return CycloNumber::from_coeffs(n, c);
}

CycloNumber inv(const CycloNumber& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero in a cyclotomic field");
  const std::uint32_t n = a.n_;
  // Monomial shortcut: (c z^k)^-1 = c^-1 z^-k.
  std::size_t nonzero = 0, at = 0;
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] != 0) {
      ++nonzero;
      at = i;
    }
  }
  if (nonzero == 1) {
    mpq_class c(a.num_[at], a.den_);
    c.canonicalize();
    return CycloNumber(mpq_class(1 / c)) * make_root_of_unity(n, -static_cast<long>(at));
  }
  // Extended Euclid with Phi_n.
  const auto& phi_poly = field(n).poly;
  QPoly r0(phi_poly.begin(), phi_poly.end());
  QPoly r1(a.num_.begin(), a.num_.end());
  trim(r1);
  QPoly s0{0}, s1{1};
  while (degree(r1) > 0) {
    QPoly q = divmod_inplace(r0, r1);
    QPoly s2 = sub_mul(s0, q, s1);
    std::swap(r0, r1);  // r1 now holds the remainder
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r1) < 0) throw InternalError("cyclotomic inverse: unexpected common factor");
  const mpq_class c = r1[0];
  std::vector<mpq_class> coeffs(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) coeffs[i] = s1[i] / c * mpq_class(a.den_);
  return CycloNumber::from_coeffs(n, coeffs);
}

CycloNumber pow(const CycloNumber& a, long e) {
  if (e < 0) return pow(inv(a), -e);
  CycloNumber result(1L), base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<mpq_class> is_rational(const CycloNumber& a) {
  if (a.conductor() != 1) return std::nullopt;
  return a.coeff(0);
}

std::optional<mpz_class> as_integer(const CycloNumber& a) {
  auto r = is_rational(a);
  if (!r || r->get_den() != 1) return std::nullopt;
  return mpz_class(r->get_num());
}

std::optional<std::uint64_t> root_of_unity_order(const CycloNumber& a) {
  if (a.is_zero()) throw PreconditionError("root_of_unity_order of zero");
  if (a.den_ != 1) return std::nullopt;
  // Every root of unity in Q(zeta_n) is +-zeta_n^k.
  const std::uint32_t n = a.n_;
  const Field& f = field(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const auto& row = f.powers[k];
    bool plus = true, minus = true;
    for (std::uint32_t i = 0; i < f.phi && (plus || minus); ++i) {
      if (a.num_[i] != row[i]) plus = false;
      if (a.num_[i] != -row[i]) minus = false;
    }
    if (plus) return n / std::gcd<std::uint64_t>(n, k);
    if (minus) {
      const std::uint64_t n2 = 2ULL * n, e = 2ULL * k + n;
      return n2 / std::gcd(n2, e);
    }
  }
  return std::nullopt;
}

CycloNumber galois_apply(const CycloNumber& a, long j) {
  const std::uint32_t n = a.n_;
  long jj = j % static_cast<long>(n);
  if (jj < 0) jj += n;
  if (std::gcd<std::uint64_t>(static_cast<std::uint64_t>(jj), n) != 1 && n > 1) {
    throw PreconditionError("galois_apply: exponent not coprime to the conductor");
  }
  ZPoly dense(n, 0);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] != 0) dense[(i * static_cast<std::uint64_t>(jj)) % n] += a.num_[i];
  }
  return CycloNumber(n, reduce_dense(field(n), dense), a.den_);
}

CycloNumber conj(const CycloNumber& a) { return galois_apply(a, -1); }

std::complex<double> embed_complex(const CycloNumber& a) {
  const auto c = a.coeffs();
  const double n = a.conductor();
  long double re = 0, im = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const long double v = c[i].get_d();
    const long double ang = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(i) / n;
    re += v * std::cos(ang);
    im += v * std::sin(ang);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace exbraid
