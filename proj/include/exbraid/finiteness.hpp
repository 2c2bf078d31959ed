#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exbraid/braid.hpp"
#include "exbraid/category.hpp"
#include "exbraid/cyclo.hpp"
#include "exbraid/fusion.hpp"
#include "exbraid/matrixrep.hpp"

namespace exbraid {

enum class Outcome { Finite, Infinite, Inconclusive };
std::string outcome_name(Outcome o);  // "Finite", "Infinite", "Inconclusive"

// Certificate vocabulary (docs/conventions.md). "RT(..)" are clauses of the
// low-dimensional B3 finiteness criterion.
namespace tag {
inline constexpr const char* kRTa = "RT(a)";
inline constexpr const char* kRTb = "RT(b)";
inline constexpr const char* kRTci = "RT(c)(i)";
inline constexpr const char* kRTcii = "RT(c)(ii)";
inline constexpr const char* kRTcExcluded = "RT(c)-excluded";
inline constexpr const char* kRTdi = "RT(d)(i)";
inline constexpr const char* kRTdii = "RT(d)(ii)";
inline constexpr const char* kRTdiii = "RT(d)(iii)";
inline constexpr const char* kRTdiv = "RT(d)(iv)";
inline constexpr const char* kTW = "TW-irreducibility";
inline constexpr const char* kMatrix = "matrix-escalation";
inline constexpr const char* kSpectrumMatch = "spectrum-match:g2-family";
inline constexpr const char* kFibonacci = "citation:fibonacci";
inline constexpr const char* kFibIsing = "citation:fibonacci-ising";
inline constexpr const char* kReductionF4 = "reduction:f4-22";
inline constexpr const char* kWenzlBCD = "citation:bmw-irreducibility";
inline constexpr const char* kFallback = "fallback-object";

inline constexpr const char* kIrrTW = "irreducibility: TW-verified";
inline constexpr const char* kIrrCited = "irreducibility: cited";
inline constexpr const char* kPrimExcluded = "primitivity: pattern-excluded";
inline constexpr const char* kPrimUndetermined = "primitivity: undetermined";
}  // namespace tag

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  std::vector<std::string> certificate;
  std::vector<std::string> assumptions;
  std::string reason;  // set for Inconclusive, e.g. "escalate-to-matrix"
  std::optional<std::uint64_t> po;

  std::string to_string() const;
};

// nullopt is the infinite marker (some ratio is not a root of unity).
std::optional<std::uint64_t> projective_order(const std::vector<CycloNumber>& values);
std::optional<std::uint64_t> projective_order(const Spectrum& s);

enum class FormKind { PlusMinusChiAlpha, ChiOmegaAlpha, PlusMinusRS };
std::string form_name(FormKind k);  // "{+-chi,alpha}", "chi{1,w,w^2}+{alpha}", "{+-r,+-s}"

struct FormMatch {
  FormKind kind;
  CycloNumber chi, alpha, r, s, u;  // only the fields relevant to kind are set
  std::uint64_t o_u = 0;            // form {+-r,+-s} only
};
struct FormReport {
  std::vector<FormMatch> matches;
  bool any() const { return !matches.empty(); }
};
// Precondition: 2 <= |S| <= 5 and distinct values.
FormReport match_imprimitive_forms(const std::vector<CycloNumber>& values);

enum class GaloisClass { EvenK, OddK, NotApplicable };
std::string galois_class_name(GaloisClass g);
GaloisClass galois_class_po7(const std::vector<CycloNumber>& values);

struct TWResult {
  bool certified = false;
  std::size_t d = 0;
  std::string refusal;  // failing hypothesis
  std::optional<FusionDecomposition> square;
  std::optional<Spectrum> spectrum;
};
TWResult tw_irreducibility(const CategorySpec& spec, const Weight& z);

enum class Evidence { None, TWVerified, Cited };

// The ordered cascade. Throws PreconditionError for d outside 2..5 or
// missing evidence.
Verdict decide(const std::vector<CycloNumber>& values, std::size_t d, Evidence evidence);
Verdict decide(const Spectrum& s, std::size_t d, Evidence evidence);

struct CaseReport {
  Algebra algebra;
  int ell;
  std::size_t rank = 0;
  bool verdict_sought = true;
  std::string note;             // why no verdict, or reduction details
  std::optional<Weight> object;
  std::optional<Weight> target;  // Hom(target, V^3); defaults to the object
  std::size_t d = 0;
  std::optional<Spectrum> spectrum;
  std::optional<MatrixCertificate> matrix;
  Verdict verdict;
};

// One verdict for C(g, l) following the case plans of the exceptional types.
CaseReport analyze(const CategorySpec& spec, std::optional<int> jmax = std::nullopt);
// Parallel map over l in [lo, hi] (skipping empty alcoves), ordered by l.
std::vector<CaseReport> analyze_range(Algebra a, int lo, int hi, unsigned threads = 0,
                                      std::optional<int> jmax = std::nullopt);

}  // namespace exbraid
