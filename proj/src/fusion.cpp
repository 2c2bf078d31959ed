#include "exbraid/fusion.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>

#include "exbraid/error.hpp"

namespace exbraid {

namespace {

std::atomic<FusionStore*> g_fusion_store{nullptr};

// Graded order used for highest-weight peeling: level first, then lex.
struct HigherFirst {
  const RootSystem* rs;
  bool operator()(const Weight& a, const Weight& b) const {
    long la = rs->level(a), lb = rs->level(b);
    if (la != lb) return la > lb;
    return a > b;
  }
};

void sort_summands(std::vector<Summand>& s) {
  std::sort(s.begin(), s.end(), [](const Summand& a, const Summand& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return static_cast<int>(a.parity) < static_cast<int>(b.parity);
  });
}

std::map<Weight, long> brauer_klimyk(const RootSystem& rs, const Weight& a, const Weight& b,
                                     std::size_t bound) {
  // Iterate over the weights of the smaller factor.
  const bool swap = rs.weyl_dim(b) > rs.weyl_dim(a);
  const Weight& big = swap ? b : a;
  const Weight& small = swap ? a : b;
  std::map<Weight, long> acc;
  for (const auto& [nu, m] : rs.expanded_weights(small, bound)) {
    DotReduction r = rs.to_dominant(big + nu);
    if (r.on_wall) continue;
    acc[r.weight] += r.sign * m;
  }
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second < 0) throw InternalError("negative Brauer-Klimyk multiplicity at " + it->first.to_string());
    if (it->second == 0) it = acc.erase(it);
    else ++it;
  }
  return acc;
}

// Decompose a character given by its dominant-weight multiplicities.
std::map<Weight, long> peel(const RootSystem& rs, std::map<Weight, long> dom, std::size_t bound) {
  std::map<Weight, long> out;
  HigherFirst cmp{&rs};
  while (!dom.empty()) {
    auto top = std::min_element(dom.begin(), dom.end(),
                                [&](const auto& x, const auto& y) { return cmp(x.first, y.first); });
    const Weight mu = top->first;
    const long c = top->second;
    if (c < 0) throw InternalError("negative multiplicity while peeling at " + mu.to_string());
    out[mu] = c;
    for (const auto& [w, m] : rs.weight_system(mu, bound)->dominant) {
      auto it = dom.find(w);
      if (it == dom.end()) throw InternalError("peeling reached a weight not in the character");
      it->second -= c * m;
    }
    for (auto it = dom.begin(); it != dom.end();) {
      if (it->second == 0) it = dom.erase(it);
      else ++it;
    }
  }
  return out;
}

}  // namespace

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::Symmetric: return "symmetric";
    case Parity::Antisymmetric: return "antisymmetric";
    case Parity::Unsplit: return "unsplit";
  }
  return "?";
}

Parity parse_parity(const std::string& s) {
  if (s == "symmetric") return Parity::Symmetric;
  if (s == "antisymmetric") return Parity::Antisymmetric;
  if (s == "unsplit") return Parity::Unsplit;
  throw PreconditionError("unknown parity '" + s + "'");
}

long FusionDecomposition::multiplicity(const Weight& w) const {
  long t = 0;
  for (const auto& s : summands)
    if (s.weight == w) t += s.multiplicity;
  return t;
}

std::vector<std::pair<Weight, long>> FusionDecomposition::totals() const {
  std::map<Weight, long> m;
  for (const auto& s : summands) m[s.weight] += s.multiplicity;
  std::vector<std::pair<Weight, long>> out(m.rbegin(), m.rend());
  return out;
}

bool FusionDecomposition::multiplicity_free() const {
  for (const auto& [w, m] : totals())
    if (m != 1) return false;
  return true;
}

AffineReduction affine_reduce(const CategorySpec& spec, const Weight& w) {
  const RootSystem& rs = spec.rs();
  const Root& theta = spec.theta();
  const long ell = spec.ell();
  Weight x = w + rs.rho();
  int sign = 1;
  for (int iter = 0; iter < 100000; ++iter) {
    std::size_t i = 0;
    while (i < rs.rank() && x.c[i] > 0) ++i;
    if (i < rs.rank()) {
      if (x.c[i] == 0) return {x - rs.rho(), 0, true};
      x = rs.reflect(x, i);
      sign = -sign;
      continue;
    }
    const long t = rs.pair(x, theta);
    if (t < ell) return {x - rs.rho(), sign, false};
    if (t == ell) return {x - rs.rho(), 0, true};
    const long k2 = 2 * (t - ell);
    if (k2 % theta.norm != 0) throw InternalError("affine reflection leaves the weight lattice");
    x = x - theta.weight * static_cast<int>(k2 / theta.norm);
    sign = -sign;
  }
  throw InternalError("affine reduction did not terminate");
}

FusionDecomposition tensor_product_classical(const RootSystem& rs, const Weight& a, const Weight& b,
                                             std::size_t bound) {
  if (!a.is_dominant() || !b.is_dominant()) throw PreconditionError("tensor factors must be dominant");
  FusionDecomposition fd;
  fd.left = a;
  fd.right = b;
  for (const auto& [w, m] : brauer_klimyk(rs, a, b, bound)) fd.summands.push_back({w, m, Parity::Unsplit});
  sort_summands(fd.summands);
  return fd;
}

FusionDecomposition tensor_square_classical(const RootSystem& rs, const Weight& lambda, std::size_t bound) {
  if (!lambda.is_dominant()) throw PreconditionError("tensor factor must be dominant");
  const auto weights = rs.expanded_weights(lambda, bound);
  std::map<Weight, long> sym, alt;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto& [wi, mi] = weights[i];
    Weight twice = wi * 2;
    if (twice.is_dominant()) {
      sym[twice] += mi * (mi + 1) / 2;
      if (mi > 1) alt[twice] += mi * (mi - 1) / 2;
    }
    for (std::size_t j = i + 1; j < weights.size(); ++j) {
      Weight s = wi + weights[j].first;
      if (!s.is_dominant()) continue;
      sym[s] += mi * weights[j].second;
      alt[s] += mi * weights[j].second;
    }
  }
  auto symd = peel(rs, sym, bound);
  auto altd = peel(rs, alt, bound);
  auto full = brauer_klimyk(rs, lambda, lambda, bound);
  std::map<Weight, long> check;
  for (const auto& [w, m] : symd) check[w] += m;
  for (const auto& [w, m] : altd) check[w] += m;
  if (check != full) throw InternalError("parity split disagrees with Brauer-Klimyk for " + lambda.to_string());

  FusionDecomposition fd;
  fd.left = lambda;
  fd.right = lambda;
  for (const auto& [w, m] : symd) fd.summands.push_back({w, m, Parity::Symmetric});
  for (const auto& [w, m] : altd) fd.summands.push_back({w, m, Parity::Antisymmetric});
  sort_summands(fd.summands);
  return fd;
}

FusionDecomposition tensor_with_dual_classical(const RootSystem& rs, const Weight& mu, std::size_t bound) {
  return tensor_product_classical(rs, mu, rs.dual(mu), bound);
}

FusionDecomposition truncate(const CategorySpec& spec, const FusionDecomposition& classical) {
  struct Acc {
    long by_parity[3] = {0, 0, 0};
  };
  std::map<Weight, Acc> acc;
  FusionDecomposition fd;
  fd.left = classical.left;
  fd.right = classical.right;
  fd.truncated = true;
  fd.ell = spec.ell();
  for (const auto& s : classical.summands) {
    AffineReduction r = affine_reduce(spec, s.weight);
    if (r.on_wall) {
      fd.discarded.push_back({s.weight, s.multiplicity, "wall"});
      continue;
    }
    if (r.sign < 0) fd.discarded.push_back({s.weight, s.multiplicity, "cancelled"});
    acc[r.weight].by_parity[static_cast<int>(s.parity)] += r.sign * s.multiplicity;
  }
  for (const auto& [w, a] : acc) {
    long total = a.by_parity[0] + a.by_parity[1] + a.by_parity[2];
    if (total < 0) throw InternalError("negative truncated multiplicity at " + w.to_string());
    if (total == 0) continue;
    bool clean = a.by_parity[0] >= 0 && a.by_parity[1] >= 0 && a.by_parity[2] >= 0;
    if (clean) {
      for (int p = 0; p < 3; ++p)
        if (a.by_parity[p] > 0) fd.summands.push_back({w, a.by_parity[p], static_cast<Parity>(p)});
    } else {
      // Cancellation across parities: the parity of the survivor is not
      // determined classically.
      fd.summands.push_back({w, total, Parity::Unsplit});
    }
  }
  sort_summands(fd.summands);
  return fd;
}

FusionDecomposition tensor_square_truncated(const CategorySpec& spec, const Weight& lambda) {
  if (!in_alcove(spec, lambda))
    throw PreconditionError(lambda.to_string() + " is not in the alcove of " + spec.to_string());
  FusionStore* store = g_fusion_store.load();
  if (store) {
    if (auto hit = store->load(spec, lambda)) return *hit;
  }
  FusionDecomposition fd = truncate(spec, tensor_square_classical(spec.rs(), lambda));
  if (store) store->store(spec, fd);
  return fd;
}

FusionDecomposition tensor_product_truncated(const CategorySpec& spec, const Weight& a, const Weight& b) {
  if (!in_alcove(spec, a) || !in_alcove(spec, b))
    throw PreconditionError("tensor factors must lie in the alcove of " + spec.to_string());
  return truncate(spec, tensor_product_classical(spec.rs(), a, b));
}

long hom_dim_cube(const CategorySpec& spec, const Weight& v, const Weight& target) {
  if (!in_alcove(spec, target)) throw PreconditionError("target is not in the alcove");
  long total = 0;
  for (const auto& [y, m] : tensor_square_truncated(spec, v).totals())
    total += m * tensor_product_truncated(spec, v, y).multiplicity(target);
  return total;
}

void set_fusion_store(FusionStore* store) { g_fusion_store.store(store); }

}  // namespace exbraid
