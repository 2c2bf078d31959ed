#pragma once

// Root systems of exceptional type with Bourbaki node numbering (see
// docs/conventions.md). Weights live in the fundamental-weight basis, roots
// in the simple-root basis. The bilinear form is normalized so that short
// roots have squared length 2.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace exbraid {

enum class Algebra { G2, F4, E6, E7, E8 };

std::string algebra_name(Algebra a);  // "g2", "f4", ...
Algebra parse_algebra(std::string_view s);  // accepts g2/G2 etc.
const std::vector<Algebra>& all_algebras();

struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::size_t rank) : c(rank, 0) {}
  Weight(std::initializer_list<int> xs) : c(xs) {}
  explicit Weight(std::vector<int> xs) : c(std::move(xs)) {}

  std::size_t rank() const { return c.size(); }
  int operator[](std::size_t i) const { return c[i]; }
  int& operator[](std::size_t i) { return c[i]; }
  bool is_dominant() const;
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(int k) const;

  auto operator<=>(const Weight& o) const = default;
  bool operator==(const Weight& o) const = default;

  // "(1,0,0,2)"
  std::string to_string() const;
  static Weight fundamental(std::size_t rank, std::size_t i);  // i is 1-based
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

struct Root {
  std::vector<int> simple;  // coefficients on simple roots
  Weight weight;            // same root in fundamental-weight coordinates
  int norm;                 // <a,a>: 2 for short roots, 2m for long roots
  int height;
};

// Dominant weights of an irreducible module with multiplicities. Orbits are
// expanded on request.
struct WeightSystem {
  Weight highest;
  std::vector<std::pair<Weight, long>> dominant;  // decreasing height
  mpz_class dim;
};

struct DotReduction {
  Weight weight;  // dominant representative (meaningless when on_wall)
  int sign;
  bool on_wall;
};

class RootSystem {
 public:
  static const RootSystem& get(Algebra a);

  Algebra algebra() const { return algebra_; }
  std::size_t rank() const { return n_; }
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  // |alpha_i|^2 / 2, 1 for short simple roots
  int d(std::size_t i) const { return d_[i]; }
  int m() const { return m_; }

  const std::vector<Root>& positive_roots() const { return pos_; }
  const Root& theta0() const { return pos_[theta0_]; }
  const Root& theta1() const { return pos_[theta1_]; }
  const Root& simple_root(std::size_t i) const { return pos_[simple_idx_[i]]; }
  Weight rho() const { return Weight(std::vector<int>(n_, 1)); }

  // <x, a> for a root a (always an integer for integral weights).
  long pair(const Weight& x, const Root& a) const;
  // <x, a^vee> = 2<x,a>/<a,a>.
  long pair_coroot(const Weight& x, const Root& a) const;
  // <x, y> on weights; exact rational.
  mpq_class form(const Weight& x, const Weight& y) const;
  // form(x,y) * form_denominator(), an integer.
  long form_num(const Weight& x, const Weight& y) const;
  long form_denominator() const { return form_den_; }

  // Root-lattice coordinates of a root in fundamental-weight coordinates.
  Weight root_to_weight(const std::vector<int>& simple_coeffs) const;

  mpz_class weyl_dim(const Weight& lambda) const;

  // Dominant conjugate under the ordinary (linear) Weyl action.
  Weight dominant_conjugate(const Weight& w) const;
  // Dominant representative of w under the rho-shifted action, with sign.
  DotReduction to_dominant(const Weight& w) const;
  Weight reflect(const Weight& x, std::size_t i) const;  // s_i(x), linear
  // Highest weight of the dual module: dominant conjugate of -lambda.
  Weight dual(const Weight& lambda) const;

  // Orbit size |W|/|W_J| where J is the set of zero coordinates.
  mpz_class orbit_size(const Weight& dominant) const;
  // Explicit orbit, sorted. Throws SizeBoundExceeded above bound.
  std::vector<Weight> orbit(const Weight& dominant, std::size_t bound = 100000) const;
  mpz_class weyl_group_order() const;

  // Freudenthal multiplicities. Memoized; the result object is shared.
  std::shared_ptr<const WeightSystem> weight_system(const Weight& lambda,
                                                    std::size_t bound = 100000) const;
  // Every weight with multiplicity, orbits expanded. Sorted.
  std::vector<std::pair<Weight, long>> expanded_weights(const Weight& lambda,
                                                        std::size_t bound = 100000) const;

  // Positive roots regenerated as the orbit of the simple roots; an
  // independent check of the string construction.
  std::vector<std::vector<int>> positive_roots_by_orbit() const;

  // <w, rho> * form_denominator(); strictly increases along positive roots.
  long level(const Weight& w) const;

 private:
  explicit RootSystem(Algebra a);
  void build_roots();
  std::shared_ptr<const WeightSystem> freudenthal(const Weight& lambda) const;

  Algebra algebra_;
  std::size_t n_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  int m_ = 1;
  std::vector<Root> pos_;
  std::vector<std::size_t> simple_idx_;
  std::size_t theta0_ = 0, theta1_ = 0;
  std::vector<std::vector<long>> form_mat_;  // times form_den_
  long form_den_ = 1;

  mutable std::shared_mutex ws_mutex_;
  mutable std::map<Weight, std::shared_ptr<const WeightSystem>> ws_memo_;
};

// Optional persistent store consulted by weight_system(); installed by the
// CLI when a cache directory is configured.
class WeightSystemStore {
 public:
  virtual ~WeightSystemStore() = default;
  virtual std::shared_ptr<const WeightSystem> load(Algebra a, const Weight& lambda) = 0;
  virtual void store(Algebra a, const WeightSystem& ws) = 0;
};
void set_weight_system_store(WeightSystemStore* store);

}  // namespace exbraid
