#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exbraid/category.hpp"
#include "exbraid/cyclo.hpp"
#include "exbraid/fusion.hpp"

namespace exbraid {

// One eigenvalue sign * q^exponent, kept both symbolically and exactly.
struct Eigenvalue {
  int sign = 1;
  mpq_class exponent = 0;
  CycloNumber value;
  std::optional<Weight> summand;  // provenance
  Parity parity = Parity::Unsplit;

  std::string to_string() const;  // "-q^6", "q^(26/3)", "1"
};

enum class Normalization { Raw, RatioNormalized };
std::string normalization_name(Normalization n);

struct Spectrum {
  int ell = 0;
  std::vector<Eigenvalue> values;
  Normalization normalization = Normalization::Raw;
  std::string source;  // "fusion", "formula"

  std::size_t size() const { return values.size(); }
  std::vector<CycloNumber> exact() const;
  bool distinct() const;
  std::string to_string() const;  // "{1, -q^6, -q^12, q^14}"
};

// sign * q^(num/den) at q = zeta_{2l}
Eigenvalue make_eigenvalue(int ell, int sign, const mpq_class& exponent);

// theta_mu = q^<mu + 2 rho, mu>
CycloNumber twist(const CategorySpec& spec, const Weight& mu);
mpq_class twist_exponent(const RootSystem& rs, const Weight& mu);

// Eigenvalues of c_{V,V} on the summands of the truncated V (x) V, global
// factor dropped. Requires multiplicity-free with known parities.
Spectrum sigma_spectrum(const CategorySpec& spec, const Weight& v);
Spectrum sigma_spectrum(const CategorySpec& spec, const Weight& v, const FusionDecomposition& square);

// Eigenvalues on Hom(target, V^{(x)3}) assembled from fusion: the value on Y
// repeated [target : Y (x) V] times, for each summand Y of V (x) V.
Spectrum restricted_spectrum(const CategorySpec& spec, const Weight& v, const Weight& target);

// {q, -q^-1, q^(3-2N)} for the E-series; requires the stable range.
Spectrum en_series_spectrum(const CategorySpec& spec);
// V and lambda_1 + lambda_N of the E-series construction (internal labels).
Weight en_vector_weight(Algebra a);
Weight en_target_weight(Algebra a);
bool en_stable_range(const CategorySpec& spec);

// Rescale so the antisymmetric value of largest exponent becomes -1 (or,
// without antisymmetric values, the symmetric value of largest exponent
// becomes 1). Order is preserved.
Spectrum normalize_ratios(const Spectrum& s);

// Multiply every value by sign * q^exponent.
Spectrum rescale(const Spectrum& s, int sign, const mpq_class& exponent);

// Whether a and b agree as sets after multiplying a by one common scalar;
// returns that scalar.
std::optional<CycloNumber> equal_up_to_scale(const std::vector<CycloNumber>& a,
                                             const std::vector<CycloNumber>& b);

// Spectrum from a symbolic list such as {(1,0),(-1,6),(-1,12),(1,14)}.
Spectrum spectrum_from_terms(int ell, const std::vector<std::pair<int, mpq_class>>& terms);

}  // namespace exbraid
