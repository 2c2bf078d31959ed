#include "exbraid/laurent.hpp"

#include <sstream>

#include "exbraid/error.hpp"

namespace exbraid {

LaurentPoly::LaurentPoly(long low, std::vector<mpz_class> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::monomial(long exponent, mpz_class c) { return LaurentPoly(exponent, {std::move(c)}); }

LaurentPoly LaurentPoly::q_difference(long n) { return monomial(n) - monomial(-n); }

LaurentPoly LaurentPoly::qnumber(long n) {
  if (n == 0) return {};
  if (n < 0) return LaurentPoly() - qnumber(-n);
  std::vector<mpz_class> c(2 * n - 1, 0);
  for (long j = 0; j < n; ++j) c[2 * j] = 1;
  return LaurentPoly(-(n - 1), std::move(c));
}

mpz_class LaurentPoly::coeff(long e) const {
  if (coeffs_.empty() || e < low_ || e > high()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return LaurentPoly(low_ + o.low_, std::move(c));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const long lo = std::min(low_, o.low_);
  const long hi = std::max(high(), o.high());
  std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (long e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = coeff(e) + o.coeff(e);
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly neg = o;
  for (auto& c : neg.coeffs_) c = -c;
  return *this + neg;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("Laurent division by zero");
  if (is_zero()) return {};
  const mpz_class& lead = d.coeffs_.back();
  if (lead != 1 && lead != -1) throw PreconditionError("Laurent divisor must have unit leading coefficient");
  std::vector<mpz_class> rem = coeffs_;
  const std::size_t dd = d.coeffs_.size() - 1;
  if (rem.size() < dd + 1) throw InternalError("Laurent division left a remainder");
  std::vector<mpz_class> quot(rem.size() - dd, 0);
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    mpz_class c = rem[k] * lead;  // lead is +-1
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * d.coeffs_[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw InternalError("Laurent division left a remainder");
  }
  return LaurentPoly(low_ - d.low_, std::move(quot));
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = high(); e >= low_; --e) {
    mpz_class c = coeff(e);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    mpz_class a = abs(c);
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace exbraid
