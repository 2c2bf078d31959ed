#include "exbraid/braid.hpp"

#include <algorithm>
#include <sstream>

#include "exbraid/error.hpp"

namespace exbraid {

std::string Eigenvalue::to_string() const {
  std::string s = sign < 0 ? "-" : "";
  if (exponent == 0) return s + "1";
  s += "q";
  if (exponent == 1) return s;
  if (exponent.get_den() == 1) return s + "^" + exponent.get_num().get_str();
  return s + "^(" + exponent.get_str() + ")";
}

std::string normalization_name(Normalization n) {
  return n == Normalization::Raw ? "raw-up-to-global-scale" : "ratio-normalized";
}

std::vector<CycloNumber> Spectrum::exact() const {
  std::vector<CycloNumber> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.value);
  return out;
}

bool Spectrum::distinct() const {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i].value == values[j].value) return false;
  return true;
}

std::string Spectrum::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i].to_string();
  os << "}";
  return os.str();
}

Eigenvalue make_eigenvalue(int ell, int sign, const mpq_class& exponent) {
  Eigenvalue e;
  e.sign = sign;
  e.exponent = exponent;
  e.exponent.canonicalize();
  const std::uint32_t den = static_cast<std::uint32_t>(e.exponent.get_den().get_ui());
  const long num = e.exponent.get_num().get_si();
  e.value = make_root_of_unity(2 * static_cast<std::uint32_t>(ell) * den, num);
  if (sign < 0) e.value = -e.value;
  return e;
}

mpq_class twist_exponent(const RootSystem& rs, const Weight& mu) {
  const Weight two_rho = rs.rho() * 2;
  return rs.form(mu + two_rho, mu);
}

CycloNumber twist(const CategorySpec& spec, const Weight& mu) {
  return make_eigenvalue(spec.ell(), 1, twist_exponent(spec.rs(), mu)).value;
}

Spectrum sigma_spectrum(const CategorySpec& spec, const Weight& v) {
  return sigma_spectrum(spec, v, tensor_square_truncated(spec, v));
}

Spectrum sigma_spectrum(const CategorySpec& spec, const Weight& v, const FusionDecomposition& square) {
  if (!square.multiplicity_free())
    throw PreconditionError("V (x) V is not multiplicity free for V = " + v.to_string());
  Spectrum s;
  s.ell = spec.ell();
  s.source = "fusion";
  for (const auto& sm : square.summands) {
    if (sm.parity == Parity::Unsplit)
      throw PreconditionError("parity of summand " + sm.weight.to_string() + " is undetermined");
    Eigenvalue e = make_eigenvalue(spec.ell(), sm.parity == Parity::Symmetric ? 1 : -1,
                                   twist_exponent(spec.rs(), sm.weight) / 2);
    e.summand = sm.weight;
    e.parity = sm.parity;
    s.values.push_back(std::move(e));
  }
  return s;
}

Spectrum restricted_spectrum(const CategorySpec& spec, const Weight& v, const Weight& target) {
  FusionDecomposition square = tensor_square_truncated(spec, v);
  Spectrum full = sigma_spectrum(spec, v, square);
  Spectrum s;
  s.ell = spec.ell();
  s.source = "fusion";
  for (const auto& e : full.values) {
    long k = tensor_product_truncated(spec, *e.summand, v).multiplicity(target);
    for (long i = 0; i < k; ++i) s.values.push_back(e);
  }
  return s;
}

Weight en_vector_weight(Algebra a) {
  switch (a) {
    case Algebra::E6: return Weight::fundamental(6, 1);
    case Algebra::E7: return Weight::fundamental(7, 7);
    case Algebra::E8: return Weight::fundamental(8, 8);
    default: throw PreconditionError("E-series construction needs e6, e7 or e8");
  }
}

// E6: lambda_1 + lambda_6; E7, E8: V + lambda_1.
Weight en_target_weight(Algebra a) {
  Weight v = en_vector_weight(a);
  if (a == Algebra::E6)
    v.c[5] += 1;
  else
    v.c[0] += 1;
  return v;
}

bool en_stable_range(const CategorySpec& spec) {
  return in_alcove(spec, en_target_weight(spec.algebra()));
}

Spectrum en_series_spectrum(const CategorySpec& spec) {
  const int n = static_cast<int>(spec.rs().rank());
  (void)en_vector_weight(spec.algebra());
  if (!en_stable_range(spec))
    throw PreconditionError(spec.to_string() + " is outside the stable range (lambda_1 + lambda_N not in the alcove)");
  Spectrum s = spectrum_from_terms(spec.ell(), {{1, 1}, {-1, -1}, {1, 3 - 2 * n}});
  s.source = "formula";
  return s;
}

Spectrum rescale(const Spectrum& s, int sign, const mpq_class& exponent) {
  Spectrum out = s;
  for (auto& e : out.values) {
    Eigenvalue r = make_eigenvalue(s.ell, e.sign * sign, e.exponent + exponent);
    r.summand = e.summand;
    r.parity = e.parity;
    e = std::move(r);
  }
  return out;
}

Spectrum normalize_ratios(const Spectrum& s) {
  if (s.values.empty()) return s;
  const Eigenvalue* ref = nullptr;
  for (const auto& e : s.values)
    if (e.parity == Parity::Antisymmetric && (!ref || e.exponent > ref->exponent)) ref = &e;
  if (!ref)
    for (const auto& e : s.values)
      if (!ref || e.exponent > ref->exponent) ref = &e;
  // Reference becomes -1 when antisymmetric, +1 otherwise.
  const int target_sign = ref->parity == Parity::Antisymmetric ? -1 : 1;
  Spectrum out = rescale(s, ref->sign * target_sign, -ref->exponent);
  out.normalization = Normalization::RatioNormalized;
  return out;
}

std::optional<CycloNumber> equal_up_to_scale(const std::vector<CycloNumber>& a,
                                             const std::vector<CycloNumber>& b) {
  if (a.size() != b.size() || a.empty()) return std::nullopt;
  for (const auto& target : b) {
    CycloNumber c = target / a[0];
    std::vector<bool> used(b.size(), false);
    bool ok = true;
    for (const auto& x : a) {
      CycloNumber y = c * x;
      bool found = false;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!used[j] && b[j] == y) {
          used[j] = true;
          found = true;
          break;
        }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  return std::nullopt;
}

Spectrum spectrum_from_terms(int ell, const std::vector<std::pair<int, mpq_class>>& terms) {
  Spectrum s;
  s.ell = ell;
  s.source = "formula";
  for (const auto& [sign, e] : terms) s.values.push_back(make_eigenvalue(ell, sign, e));
  return s;
}

}  // namespace exbraid
