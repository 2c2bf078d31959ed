#pragma once

#include <memory>
#include <string>
#include <vector>

#include "exbraid/category.hpp"
#include "exbraid/rootdata.hpp"

namespace exbraid {

enum class Parity { Symmetric, Antisymmetric, Unsplit };
std::string parity_name(Parity p);  // "symmetric", "antisymmetric", "unsplit"
Parity parse_parity(const std::string& s);

struct Summand {
  Weight weight;
  long multiplicity;
  Parity parity;
};

struct Discarded {
  Weight weight;       // classical summand that did not survive
  long multiplicity;
  std::string reason;  // "wall" or "cancelled"
};

struct FusionDecomposition {
  Weight left, right;
  std::vector<Summand> summands;  // sorted by weight (descending), then parity
  bool truncated = false;
  int ell = 0;  // level when truncated
  std::vector<Discarded> discarded;

  // Total multiplicity of a weight over all parities.
  long multiplicity(const Weight& w) const;
  // Distinct weights with their total multiplicities.
  std::vector<std::pair<Weight, long>> totals() const;
  bool multiplicity_free() const;
};

struct AffineReduction {
  Weight weight;  // alcove representative (meaningless on a wall)
  int sign;
  bool on_wall;
};
// Dot action of the level-l affine Weyl group (reflection hyperplane
// <x, theta> = l with theta chosen as for the alcove).
AffineReduction affine_reduce(const CategorySpec& spec, const Weight& w);

// Brauer-Klimyk over the weights of the smaller factor; unsplit.
FusionDecomposition tensor_product_classical(const RootSystem& rs, const Weight& a, const Weight& b,
                                             std::size_t bound = 100000);
// V (x) V with symmetric / antisymmetric parts.
FusionDecomposition tensor_square_classical(const RootSystem& rs, const Weight& lambda,
                                            std::size_t bound = 100000);
FusionDecomposition tensor_with_dual_classical(const RootSystem& rs, const Weight& mu,
                                               std::size_t bound = 100000);

// Classical decomposition pushed through affine reduction.
FusionDecomposition truncate(const CategorySpec& spec, const FusionDecomposition& classical);
FusionDecomposition tensor_square_truncated(const CategorySpec& spec, const Weight& lambda);
FusionDecomposition tensor_product_truncated(const CategorySpec& spec, const Weight& a, const Weight& b);

// sum over Y in V (x) V of [Y] * [target : V (x) Y]
long hom_dim_cube(const CategorySpec& spec, const Weight& v, const Weight& target);

// Optional persistent store for truncated tensor squares (installed by the CLI).
class FusionStore {
 public:
  virtual ~FusionStore() = default;
  virtual std::shared_ptr<const FusionDecomposition> load(const CategorySpec& spec, const Weight& lambda) = 0;
  virtual void store(const CategorySpec& spec, const FusionDecomposition& fd) = 0;
};
void set_fusion_store(FusionStore* store);

}  // namespace exbraid
