#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycloNumber is stored in the power basis 1, z, ..., z^(phi(N)-1) of
// Q(zeta_N) modulo the N-th cyclotomic polynomial, with integer numerators
// over one positive common denominator. After every operation the value is
// moved to its minimal conductor (never congruent to 2 mod 4), so equal
// values have identical representations.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace exbraid {

class CycloNumber {
 public:
  CycloNumber();  // zero
  CycloNumber(long value);  // NOLINT: rational integers convert implicitly
  explicit CycloNumber(const mpq_class& value);

  // Sum of coeffs[i] * zeta_n^i; any length is accepted, indices are taken
  // mod n and the result is reduced.
  static CycloNumber from_coeffs(std::uint32_t n, const std::vector<mpq_class>& coeffs);

  std::uint32_t conductor() const { return n_; }
  // Length phi(conductor()).
  std::vector<mpq_class> coeffs() const;
  mpq_class coeff(std::size_t i) const;
  bool is_zero() const;

  // Coefficients in the power basis of Q(zeta_n) for a multiple n of the
  // conductor.
  std::vector<mpq_class> coeffs_in(std::uint32_t n) const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  std::string to_string() const;

 private:
  friend CycloNumber inv(const CycloNumber& a);
  friend CycloNumber galois_apply(const CycloNumber& a, long j);
  friend std::optional<std::uint64_t> root_of_unity_order(const CycloNumber& a);

  CycloNumber(std::uint32_t n, std::vector<mpz_class> num, mpz_class den);
  void normalize();

  std::uint32_t n_ = 1;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

// zeta_n^k, n >= 1, any integer k.
CycloNumber make_root_of_unity(std::uint32_t n, long k);

// Throws DivisionByZero on zero.
CycloNumber inv(const CycloNumber& a);
CycloNumber pow(const CycloNumber& a, long e);

std::optional<mpq_class> is_rational(const CycloNumber& a);
// Rational integer value, if any.
std::optional<mpz_class> as_integer(const CycloNumber& a);

// Multiplicative order when a is a root of unity. Precondition: a != 0.
std::optional<std::uint64_t> root_of_unity_order(const CycloNumber& a);

// zeta_N -> zeta_N^j. gcd(j, conductor) must be 1.
CycloNumber galois_apply(const CycloNumber& a, long j);
// Complex conjugation, zeta -> zeta^-1.
CycloNumber conj(const CycloNumber& a);

std::complex<double> embed_complex(const CycloNumber& a);

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(std::uint32_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace exbraid
