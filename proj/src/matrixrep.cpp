#include "exbraid/matrixrep.hpp"

#include <sstream>

#include "exbraid/error.hpp"

namespace exbraid {

CycloMatrix::CycloMatrix(std::size_t n) : n_(n), e_(n * n) {}

CycloMatrix CycloMatrix::identity(std::size_t n) { return scalar(n, CycloNumber(1)); }

CycloMatrix CycloMatrix::scalar(std::size_t n, const CycloNumber& c) {
  CycloMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  if (n_ != o.n_) throw PreconditionError("matrix size mismatch");
  CycloMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const CycloNumber& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

bool CycloMatrix::operator==(const CycloMatrix& o) const {
  if (n_ != o.n_) return false;
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (!(e_[k] == o.e_[k])) return false;
  return true;
}

CycloMatrix CycloMatrix::inverse() const {
  CycloMatrix a(*this), inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (piv < n_ && a.at(piv, col).is_zero()) ++piv;
    if (piv == n_) throw DivisionByZero("matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    const CycloNumber p = exbraid::inv(a.at(col, col));
    for (std::size_t j = 0; j < n_; ++j) {
      a.at(col, j) *= p;
      inv.at(col, j) *= p;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      const CycloNumber f = a.at(r, col);
      for (std::size_t j = 0; j < n_; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

CycloNumber CycloMatrix::determinant() const {
  CycloMatrix a(*this);
  CycloNumber det(1);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (piv < n_ && a.at(piv, col).is_zero()) ++piv;
    if (piv == n_) return CycloNumber();
    if (piv != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a.at(piv, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    const CycloNumber p = exbraid::inv(a.at(col, col));
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (a.at(r, col).is_zero()) continue;
      const CycloNumber f = a.at(r, col) * p;
      for (std::size_t j = col; j < n_; ++j) a.at(r, j) -= f * a.at(col, j);
    }
  }
  return det;
}

std::optional<CycloNumber> CycloMatrix::scalar_value() const {
  if (n_ == 0) return std::nullopt;
  const CycloNumber& c = at(0, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j) {
        if (!(at(i, j) == c)) return std::nullopt;
      } else if (!at(i, j).is_zero()) {
        return std::nullopt;
      }
    }
  return c;
}

std::vector<CycloNumber> CycloMatrix::diagonal() const {
  std::vector<CycloNumber> d;
  for (std::size_t i = 0; i < n_; ++i) d.push_back(at(i, i));
  return d;
}

bool CycloMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool CycloMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

std::uint32_t CycloMatrix::conductor() const {
  std::uint64_t n = 1;
  for (const auto& x : e_) n = lcm_u64(n, x.conductor());
  return static_cast<std::uint32_t>(n);
}

std::string CycloMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

BraidPair build_AB(int ell) {
  if (ell < 2) throw PreconditionError("l must be at least 2");
  const std::uint32_t n = 2 * static_cast<std::uint32_t>(ell);
  auto q = [n](long k) { return make_root_of_unity(n, k); };
  const CycloNumber p = q(8) + q(4) + CycloNumber(1);  // q^8 + q^4 + 1
  BraidPair bp{ell, CycloMatrix(4), CycloMatrix(4)};
  CycloMatrix& a = bp.a;
  a.at(0, 0) = q(-12);
  a.at(0, 1) = p * q(-6);
  a.at(0, 2) = -(p * q(-14));
  a.at(0, 3) = -1;
  a.at(1, 1) = q(2);
  // printed as -(q^4 - 1)/q^10; only q^4 + 1 satisfies ABA = BAB
  a.at(1, 2) = -((q(4) + CycloNumber(1)) * q(-10));
  a.at(1, 3) = -1;
  a.at(2, 2) = -q(-6);
  a.at(2, 3) = -1;
  a.at(3, 3) = -1;
  CycloMatrix& b = bp.b;
  b.at(0, 0) = -1;
  b.at(1, 0) = q(-6);
  b.at(1, 1) = -q(-6);
  b.at(2, 0) = q(6);
  b.at(2, 1) = -((q(4) + CycloNumber(1)) * q(2));
  b.at(2, 2) = q(2);
  b.at(3, 0) = -1;
  b.at(3, 1) = p * q(-8);
  b.at(3, 2) = -(p * q(-12));
  b.at(3, 3) = q(-12);
  return bp;
}

bool braid_relation_holds(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.size() != b.size()) throw PreconditionError("matrix size mismatch");
  return a * b * a == b * a * b;
}

std::optional<int> proportional_power_check(const CycloMatrix& c, int jmax) {
  CycloMatrix p = c;
  for (int j = 1; j <= jmax; ++j) {
    if (p.scalar_value()) return j;
    if (j < jmax) p = p * c;
  }
  return std::nullopt;
}

int default_jmax(int ell) { return std::max(24, ell); }

std::string MatrixCertificate::result() const {
  return first_scalar_power ? "proportional-power-found" : "no-proportional-power";
}

MatrixCertificate verify_matrix(int ell, std::optional<int> jmax) {
  BraidPair bp = build_AB(ell);
  MatrixCertificate cert;
  cert.ell = ell;
  cert.jmax = jmax.value_or(default_jmax(ell));
  cert.braid_relation = braid_relation_holds(bp.a, bp.b);
  CycloMatrix c = bp.a * bp.b.inverse();
  cert.conductor = c.conductor();
  cert.first_scalar_power = proportional_power_check(c, cert.jmax);
  return cert;
}

}  // namespace exbraid
