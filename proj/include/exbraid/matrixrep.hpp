#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exbraid/cyclo.hpp"

namespace exbraid {

class CycloMatrix {
 public:
  CycloMatrix() = default;
  explicit CycloMatrix(std::size_t n);  // zero matrix
  static CycloMatrix identity(std::size_t n);
  static CycloMatrix scalar(std::size_t n, const CycloNumber& c);

  std::size_t size() const { return n_; }
  CycloNumber& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const CycloNumber& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  CycloMatrix operator*(const CycloMatrix& o) const;
  bool operator==(const CycloMatrix& o) const;

  // Exact Gauss-Jordan; throws DivisionByZero when singular.
  CycloMatrix inverse() const;
  CycloNumber determinant() const;
  // The scalar c when this equals c * I.
  std::optional<CycloNumber> scalar_value() const;
  std::vector<CycloNumber> diagonal() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  // Smallest common conductor of the entries.
  std::uint32_t conductor() const;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<CycloNumber> e_;
};

struct BraidPair {
  int ell;
  CycloMatrix a;  // image of sigma_1
  CycloMatrix b;  // image of sigma_2
};

// The explicit 4-dimensional representation at q = zeta_{2l}.
BraidPair build_AB(int ell);

bool braid_relation_holds(const CycloMatrix& a, const CycloMatrix& b);

// First j in 1..jmax with C^j a scalar matrix.
std::optional<int> proportional_power_check(const CycloMatrix& c, int jmax);

int default_jmax(int ell);  // max(24, l)

struct MatrixCertificate {
  int ell;
  int jmax;
  bool braid_relation;
  std::optional<int> first_scalar_power;
  std::uint32_t conductor;
  // "no-proportional-power" or "proportional-power-found"
  std::string result() const;
};

MatrixCertificate verify_matrix(int ell, std::optional<int> jmax = std::nullopt);

}  // namespace exbraid
