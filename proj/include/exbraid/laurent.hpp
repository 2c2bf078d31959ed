#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace exbraid {

// Integer Laurent polynomial sum_k coeffs[k] q^(low + k) in an indeterminate q.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long low, std::vector<mpz_class> coeffs);

  static LaurentPoly monomial(long exponent, mpz_class c = 1);
  // q^n - q^-n
  static LaurentPoly q_difference(long n);
  // [n] = (q^n - q^-n) / (q - q^-1)
  static LaurentPoly qnumber(long n);

  bool is_zero() const { return coeffs_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  // Coefficient of q^e (zero outside the support).
  mpz_class coeff(long e) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const = default;

  // Exact quotient; throws InternalError when the division leaves a remainder.
  // The divisor's extreme coefficients must be +-1.
  LaurentPoly exact_div(const LaurentPoly& d) const;

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();

  long low_ = 0;
  std::vector<mpz_class> coeffs_;
};

}  // namespace exbraid
