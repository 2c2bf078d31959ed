#include "exbraid/rootdata.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "exbraid/error.hpp"

namespace exbraid {

namespace {

std::atomic<WeightSystemStore*> g_store{nullptr};

std::vector<std::vector<int>> cartan_for(Algebra a) {
  switch (a) {
    case Algebra::G2:
      return {{2, -1}, {-3, 2}};
    case Algebra::F4:
      return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    default:
      break;
  }
  const std::size_t n = a == Algebra::E6 ? 6 : a == Algebra::E7 ? 7 : 8;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  auto edge = [&](std::size_t i, std::size_t j) {
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  edge(1, 3);
  edge(3, 4);
  edge(2, 4);
  for (std::size_t i = 4; i < n; ++i) edge(i, i + 1);
  return c;
}

std::vector<int> symmetrizer_for(Algebra a, std::size_t n) {
  if (a == Algebra::G2) return {1, 3};
  if (a == Algebra::F4) return {2, 2, 1, 1};
  return std::vector<int>(n, 1);
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Order of an irreducible Weyl group identified by rank, number of positive
// roots and whether it is simply laced.
mpz_class irreducible_weyl_order(std::size_t r, std::size_t npos, bool simply_laced) {
  if (npos == r * (r + 1) / 2 && simply_laced) return factorial(r + 1);  // A_r
  if (r == 2 && npos == 6) return 12;                                    // G2
  if (r == 4 && npos == 24) return 1152;                                 // F4
  if (npos == r * r && !simply_laced) {                                   // B_r, C_r
    mpz_class two_r;
    mpz_ui_pow_ui(two_r.get_mpz_t(), 2, r);
    return two_r * factorial(r);
  }
  if (simply_laced && r == 6 && npos == 36) return 51840;
  if (simply_laced && r == 7 && npos == 63) return 2903040;
  if (simply_laced && r == 8 && npos == 120) return 696729600;
  if (simply_laced && npos == r * (r - 1)) {  // D_r
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, r - 1);
    return p * factorial(r);
  }
  throw InternalError("unrecognized parabolic component");
}

}  // namespace

std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::G2: return "g2";
    case Algebra::F4: return "f4";
    case Algebra::E6: return "e6";
    case Algebra::E7: return "e7";
    case Algebra::E8: return "e8";
  }
  return "?";
}

Algebra parse_algebra(std::string_view s) {
  std::string t(s);
  for (auto& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (Algebra a : all_algebras())
    if (algebra_name(a) == t) return a;
  throw PreconditionError("unknown algebra '" + std::string(s) + "' (expected g2, f4, e6, e7 or e8)");
}

const std::vector<Algebra>& all_algebras() {
  static const std::vector<Algebra> v{Algebra::E6, Algebra::E7, Algebra::E8, Algebra::F4, Algebra::G2};
  return v;
}

// ---- Weight ----

bool Weight::is_dominant() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

Weight Weight::operator+(const Weight& o) const {
  Weight r(*this);
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r(*this);
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r(*this);
  for (auto& x : r.c) x = -x;
  return r;
}

Weight Weight::operator*(int k) const {
  Weight r(*this);
  for (auto& x : r.c) x *= k;
  return r;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
  if (i < 1 || i > rank) throw PreconditionError("fundamental weight index out of range");
  Weight w(rank);
  w.c[i - 1] = 1;
  return w;
}

std::size_t WeightHash::operator()(const Weight& w) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : w.c) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ull;
  return h;
}

// ---- RootSystem ----

const RootSystem& RootSystem::get(Algebra a) {
  static const RootSystem g2(Algebra::G2), f4(Algebra::F4), e6(Algebra::E6), e7(Algebra::E7),
      e8(Algebra::E8);
  switch (a) {
    case Algebra::G2: return g2;
    case Algebra::F4: return f4;
    case Algebra::E6: return e6;
    case Algebra::E7: return e7;
    case Algebra::E8: return e8;
  }
  throw InternalError("bad algebra tag");
}

RootSystem::RootSystem(Algebra a) : algebra_(a) {
  cartan_ = cartan_for(a);
  n_ = cartan_.size();
  d_ = symmetrizer_for(a, n_);
  m_ = *std::max_element(d_.begin(), d_.end()) / *std::min_element(d_.begin(), d_.end());

  // Inverse Cartan matrix over Q; <l_i, l_j> = (A^-1)_ij d_j.
  std::vector<std::vector<mpq_class>> m(n_, std::vector<mpq_class>(2 * n_, 0));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = cartan_[i][j];
    m[i][n_ + i] = 1;
  }
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    mpq_class inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (std::size_t k = 0; k < 2 * n_; ++k) m[r][k] -= f * m[col][k];
    }
  }
  mpz_class den = 1;
  std::vector<std::vector<mpq_class>> g(n_, std::vector<mpq_class>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      g[i][j] = m[i][n_ + j] * d_[j];
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g[i][j].get_den_mpz_t());
    }
  form_den_ = den.get_si();
  form_mat_.assign(n_, std::vector<long>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      mpq_class v = g[i][j] * den;
      if (v.get_den() != 1 || g[i][j] != g[j][i]) throw InternalError("form is not integral/symmetric");
      form_mat_[i][j] = v.get_num().get_si();
    }
  build_roots();
}

Weight RootSystem::root_to_weight(const std::vector<int>& s) const {
  Weight w(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (s[j] == 0) continue;
    for (std::size_t k = 0; k < n_; ++k) w.c[k] += s[j] * cartan_[j][k];
  }
  return w;
}

void RootSystem::build_roots() {
  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // where p is the length of the string below beta.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < n_; ++i) {
    std::vector<int> s(n_, 0);
    s[i] = 1;
    layer.push_back(s);
    known.insert(s);
  }
  std::vector<std::vector<int>> all = layer;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n_; ++i) {
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < n_; ++j) pairing += beta[j] * cartan_[j][i];
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      known.insert(r);
      all.push_back(r);
    }
  }
  pos_.clear();
  for (const auto& s : all) {
    Root r;
    r.simple = s;
    r.weight = root_to_weight(s);
    long len = 0;  // <a,a> = sum_i s_i d_i <a, alpha_i^vee>
    for (std::size_t i = 0; i < n_; ++i) len += static_cast<long>(s[i]) * d_[i] * r.weight.c[i];
    r.norm = static_cast<int>(len);
    r.height = std::accumulate(s.begin(), s.end(), 0);
    pos_.push_back(r);
  }
  std::stable_sort(pos_.begin(), pos_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple > b.simple;
  });
  simple_idx_.assign(n_, 0);
  for (std::size_t k = 0; k < pos_.size(); ++k) {
    if (pos_[k].height != 1) continue;
    for (std::size_t i = 0; i < n_; ++i)
      if (pos_[k].simple[i] == 1) simple_idx_[i] = k;
  }
  theta0_ = 0;
  theta1_ = 0;
  bool have_short = false;
  for (std::size_t k = 0; k < pos_.size(); ++k) {
    if (pos_[k].height > pos_[theta0_].height) theta0_ = k;
    if (pos_[k].norm == 2 && (!have_short || pos_[k].height > pos_[theta1_].height)) {
      theta1_ = k;
      have_short = true;
    }
  }
}

long RootSystem::pair(const Weight& x, const Root& a) const {
  long s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += static_cast<long>(a.simple[i]) * d_[i] * x.c[i];
  return s;
}

long RootSystem::pair_coroot(const Weight& x, const Root& a) const {
  long p = 2 * pair(x, a);
  if (p % a.norm != 0) throw InternalError("non-integral coroot pairing");
  return p / a.norm;
}

long RootSystem::form_num(const Weight& x, const Weight& y) const {
  long s = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x.c[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) s += static_cast<long>(x.c[i]) * form_mat_[i][j] * y.c[j];
  }
  return s;
}

mpq_class RootSystem::form(const Weight& x, const Weight& y) const {
  mpq_class r(form_num(x, y), form_den_);
  r.canonicalize();
  return r;
}

long RootSystem::level(const Weight& w) const { return form_num(w, rho()); }

mpz_class RootSystem::weyl_dim(const Weight& lambda) const {
  if (lambda.rank() != n_) throw PreconditionError("weight has wrong rank");
  if (!lambda.is_dominant()) throw PreconditionError("weyl_dim needs a dominant weight");
  const Weight lr = lambda + rho();
  mpz_class num = 1, den = 1;
  for (const auto& a : pos_) {
    num *= pair(lr, a);
    den *= pair(rho(), a);
  }
  if (num % den != 0) throw InternalError("Weyl dimension is not an integer");
  return num / den;
}

Weight RootSystem::reflect(const Weight& x, std::size_t i) const {
  Weight r(x);
  const int k = x.c[i];
  if (k == 0) return r;
  for (std::size_t j = 0; j < n_; ++j) r.c[j] -= k * cartan_[i][j];
  return r;
}

Weight RootSystem::dominant_conjugate(const Weight& w) const {
  Weight x(w);
  for (;;) {
    std::size_t i = 0;
    while (i < n_ && x.c[i] >= 0) ++i;
    if (i == n_) return x;
    x = reflect(x, i);
  }
}

DotReduction RootSystem::to_dominant(const Weight& w) const {
  Weight x = w + rho();
  int sign = 1;
  for (;;) {
    std::size_t i = 0;
    while (i < n_ && x.c[i] > 0) ++i;
    if (i == n_) return {x - rho(), sign, false};
    if (x.c[i] == 0) return {x - rho(), 0, true};
    x = reflect(x, i);
    sign = -sign;
  }
}

Weight RootSystem::dual(const Weight& lambda) const { return dominant_conjugate(-lambda); }

mpz_class RootSystem::weyl_group_order() const {
  return irreducible_weyl_order(n_, pos_.size(), m_ == 1);
}

mpz_class RootSystem::orbit_size(const Weight& dom) const {
  if (!dom.is_dominant()) throw PreconditionError("orbit_size needs a dominant weight");
  std::vector<bool> in_j(n_);
  for (std::size_t i = 0; i < n_; ++i) in_j[i] = dom.c[i] == 0;
  std::vector<int> comp(n_, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < n_; ++s) {
    if (!in_j[s] || comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n_; ++v)
        if (in_j[v] && comp[v] < 0 && cartan_[u][v] != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  mpz_class stab = 1;
  for (int c = 0; c < ncomp; ++c) {
    std::size_t r = 0;
    int dmin = 1 << 20, dmax = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (comp[i] == c) {
        ++r;
        dmin = std::min(dmin, d_[i]);
        dmax = std::max(dmax, d_[i]);
      }
    std::size_t npos = 0;
    for (const auto& a : pos_) {
      bool inside = true;
      for (std::size_t i = 0; i < n_ && inside; ++i)
        if (a.simple[i] != 0 && comp[i] != c) inside = false;
      if (inside) ++npos;
    }
    stab *= irreducible_weyl_order(r, npos, dmin == dmax);
  }
  return weyl_group_order() / stab;
}

std::vector<Weight> RootSystem::orbit(const Weight& dom, std::size_t bound) const {
  std::unordered_set<Weight, WeightHash> seen{dom};
  std::vector<Weight> todo{dom};
  while (!todo.empty()) {
    Weight x = std::move(todo.back());
    todo.pop_back();
    for (std::size_t i = 0; i < n_; ++i) {
      if (x.c[i] == 0) continue;
      Weight y = reflect(x, i);
      if (seen.insert(y).second) {
        if (seen.size() > bound) throw SizeBoundExceeded("Weyl orbit exceeds size bound");
        todo.push_back(std::move(y));
      }
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> RootSystem::positive_roots_by_orbit() const {
  std::set<Weight> roots;
  for (std::size_t i = 0; i < n_; ++i) {
    Weight a = root_to_weight(simple_root(i).simple);
    std::vector<Weight> todo{a};
    roots.insert(a);
    while (!todo.empty()) {
      Weight x = todo.back();
      todo.pop_back();
      for (std::size_t j = 0; j < n_; ++j) {
        Weight y = reflect(x, j);
        if (roots.insert(y).second) todo.push_back(y);
      }
    }
  }
  // Coefficient of alpha_j in w is <w, l_j> / d_j.
  std::vector<std::vector<int>> out;
  for (const auto& w : roots) {
    std::vector<int> s(n_);
    bool nonneg = true;
    for (std::size_t j = 0; j < n_; ++j) {
      mpq_class c = form(w, Weight::fundamental(n_, j + 1)) / d_[j];
      if (c.get_den() != 1) throw InternalError("orbit root not in root lattice");
      s[j] = static_cast<int>(c.get_num().get_si());
      if (s[j] < 0) nonneg = false;
    }
    if (nonneg) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::shared_ptr<const WeightSystem> RootSystem::weight_system(const Weight& lambda,
                                                               std::size_t bound) const {
  if (lambda.rank() != n_) throw PreconditionError("weight has wrong rank");
  if (!lambda.is_dominant()) throw PreconditionError("weight system needs a dominant weight");
  if (weyl_dim(lambda) > bound) throw SizeBoundExceeded("module dimension exceeds size bound");
  {
    std::shared_lock lock(ws_mutex_);
    auto it = ws_memo_.find(lambda);
    if (it != ws_memo_.end()) return it->second;
  }
  std::shared_ptr<const WeightSystem> ws;
  WeightSystemStore* store = g_store.load();
  if (store) ws = store->load(algebra_, lambda);
  if (ws) {
    // a stale or foreign entry is recomputed rather than trusted
    mpz_class total = 0;
    for (const auto& [w, m] : ws->dominant) total += orbit_size(w) * m;
    if (total != weyl_dim(lambda) || ws->dim != total) ws.reset();
  }
  if (!ws) {
    ws = freudenthal(lambda);
    if (store) store->store(algebra_, *ws);
  }
  std::unique_lock lock(ws_mutex_);
  return ws_memo_.emplace(lambda, ws).first->second;
}

std::shared_ptr<const WeightSystem> RootSystem::freudenthal(const Weight& lambda) const {
  // Dominant weights below lambda are connected through subtraction of
  // positive roots, so a closure from lambda finds all of them.
  std::set<Weight> doms{lambda};
  std::vector<Weight> todo{lambda};
  while (!todo.empty()) {
    Weight mu = todo.back();
    todo.pop_back();
    for (const auto& a : pos_) {
      Weight nu = mu - a.weight;
      if (nu.is_dominant() && doms.insert(nu).second) todo.push_back(nu);
    }
  }
  std::vector<Weight> order(doms.begin(), doms.end());
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    long la = level(a), lb = level(b);
    if (la != lb) return la > lb;
    return a > b;
  });

  std::unordered_map<Weight, long, WeightHash> mult;
  auto lookup = [&](const Weight& w) -> long {
    auto it = mult.find(dominant_conjugate(w));
    return it == mult.end() ? -1 : it->second;
  };
  const Weight lr = lambda + rho();
  const long top = form_num(lr, lr);
  mpz_class dim = 0;
  auto ws = std::make_shared<WeightSystem>();
  ws->highest = lambda;
  for (const auto& mu : order) {
    long value;
    if (mu == lambda) {
      value = 1;
    } else {
      const Weight mr = mu + rho();
      const long denom = top - form_num(mr, mr);
      if (denom <= 0) throw InternalError("Freudenthal denominator not positive");
      mpz_class acc = 0;
      for (const auto& a : pos_) {
        Weight x = mu + a.weight;
        for (;;) {
          long mx = lookup(x);
          if (mx < 0) break;
          acc += mpz_class(mx) * pair(x, a);
          x = x + a.weight;
        }
      }
      acc *= 2 * form_den_;
      if (acc % denom != 0) throw InternalError("Freudenthal quotient not integral");
      value = mpz_class(acc / denom).get_si();
    }
    mult[mu] = value;
    if (value > 0) ws->dominant.emplace_back(mu, value);
    dim += orbit_size(mu) * value;
  }
  ws->dim = dim;
  if (dim != weyl_dim(lambda)) throw InternalError("Freudenthal total disagrees with Weyl dimension");
  return ws;
}

std::vector<std::pair<Weight, long>> RootSystem::expanded_weights(const Weight& lambda,
                                                                  std::size_t bound) const {
  auto ws = weight_system(lambda, bound);
  std::vector<std::pair<Weight, long>> out;
  for (const auto& [mu, mlt] : ws->dominant)
    for (auto& w : orbit(mu, bound)) out.emplace_back(std::move(w), mlt);
  std::sort(out.begin(), out.end());
  return out;
}

void set_weight_system_store(WeightSystemStore* store) { g_store.store(store); }

}  // namespace exbraid
