#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exbraid/cyclo.hpp"
#include "exbraid/laurent.hpp"
#include "exbraid/rootdata.hpp"

namespace exbraid {

// C(g, q, l) with q = zeta_{2l} under the principal embedding.
class CategorySpec {
 public:
  // Throws PreconditionError unless l >= 2 and the alcove contains 0.
  CategorySpec(Algebra a, int ell);
  static bool nonempty(Algebra a, int ell);

  Algebra algebra() const { return algebra_; }
  int ell() const { return ell_; }
  const RootSystem& rs() const { return *rs_; }
  CycloNumber q() const { return make_root_of_unity(2 * static_cast<std::uint32_t>(ell_), 1); }
  // q^e for a rational exponent e = num/den.
  CycloNumber q_power(long num, long den = 1) const;
  // True when the lacing number divides l; selects theta0 and roots,
  // otherwise theta1 and coroots.
  bool m_divides() const { return ell_ % rs_->m() == 0; }
  const Root& theta() const { return m_divides() ? rs_->theta0() : rs_->theta1(); }

  std::string to_string() const;

 private:
  Algebra algebra_;
  int ell_;
  const RootSystem* rs_;
};

CycloNumber qnumber(const CategorySpec& spec, long n);

bool in_alcove(const CategorySpec& spec, const Weight& lambda);
// Deterministic order: by coordinate sum, then lexicographically descending.
std::vector<Weight> alcove(const CategorySpec& spec);
std::size_t alcove_rank(const CategorySpec& spec);
// Whether some nonzero weight lies in the alcove (equivalently rank >= 2).
bool has_nonzero_label(const CategorySpec& spec);

// Exact FP-dimension. Throws DivisionByZero when a denominator vanishes
// (only possible outside the alcove).
CycloNumber fpdim(const CategorySpec& spec, const Weight& lambda);

struct WeakIntegrality {
  bool weakly_integral;
  std::optional<Weight> witness;  // first label with FPdim^2 not in Z
  mpz_class global_dim;           // sum of FPdim^2 when integral, else 0
};
// Throws InternalError if the per-object and total-sum tests disagree.
WeakIntegrality is_weakly_integral(const CategorySpec& spec);
bool is_pointed(const CategorySpec& spec);

// Rows of the non-integral witness table.
enum class WitnessRow { E6, E7, E8, F4Even, F4Odd, G2Div3, G2NotDiv3 };
const std::vector<WitnessRow>& all_witness_rows();
std::string witness_row_name(WitnessRow r);
Algebra witness_row_algebra(WitnessRow r);
bool witness_row_applies(WitnessRow r, int ell);
WitnessRow witness_row_for(Algebra a, int ell);

struct WitnessData {
  WitnessRow row;
  Weight nu;  // witness object (internal numbering)
  Weight mu;  // V_nu is a summand of V_mu (x) V_mu^*
  std::vector<long> num_qnumbers;  // FPdim(V_nu) as prod [a] / prod [b]
  std::vector<long> den_qnumbers;
};
WitnessData witness_data(WitnessRow r);

// The closed-form FP-dimension of the witness, recomputed from the root
// data as a reduced ratio of q-numbers.
std::pair<std::vector<long>, std::vector<long>> fpdim_qnumber_ratio(const RootSystem& rs,
                                                                     const Weight& lambda,
                                                                     bool use_coroots);

struct TotientBound {
  WitnessRow row;
  LaurentPoly quotient;   // the FP-dimension as a Laurent polynomial in q
  LaurentPoly relation;   // q^-low * (quotient - k), with k shown as the
                          // constant term marker in relation_string
  std::string relation_string;  // e.g. "q^20 + q^18 + ... + (1-k)*q^10 + ..."
  long degree;            // span of the relation
  int max_ell;            // largest l in the row's class with phi(2l) <= degree
};
TotientBound totient_bound(WitnessRow r);

struct ClassifyRow {
  int ell;
  std::size_t rank;
  bool pointed;
};

struct ClassifyStats {
  int first_ell = 0;  // smallest l scanned for each residue class, min
  int last_ell = 0;
  std::size_t scanned = 0;
  std::size_t witness_rejected = 0;
  std::size_t full_checks = 0;
};

// Weakly integral cases of rank >= 2, increasing l. Uses up to
// `threads` workers (0 = hardware concurrency).
std::vector<ClassifyRow> classify_weakly_integral(Algebra a, ClassifyStats* stats = nullptr,
                                                  unsigned threads = 0);

// Smallest l with a nonzero label among l satisfying the row's residue test.
int smallest_nontrivial_ell(WitnessRow r);

}  // namespace exbraid
