#include "schubert/nilcox.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "schubert/error.hpp"
#include "schubert/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schubert {

// ---- GroupTable ----

GroupTable::GroupTable(Group g, int n) : g_(g), n_(n) {
  elems_ = all_elements(g, n);
  letters_ = simple_letters(g, n);
  for (int i = 0; i < size(); ++i) {
    idx_.emplace(elems_[i], i);
    len_.push_back(schubert::length(elems_[i]));
  }
  rmul_.assign(size(), std::vector<int>(letters_.size(), -1));
  for (int i = 0; i < size(); ++i)
    for (std::size_t s = 0; s < letters_.size(); ++s) {
      auto f = elems_[i].right_simple(letters_[s]);
      int j = idx_.at(f);
      if (len_[j] > len_[i]) rmul_[i][s] = j;
    }
  for (int i = 0; i < size(); ++i) {
    std::vector<int> w;
    for (int a : reduced_word(elems_[i])) w.push_back(slot(a));
    words_.push_back(std::move(w));
  }
}

const GroupTable& GroupTable::get(Group g, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<GroupTable>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = cache[{int(g), n}];
  if (!slot) slot.reset(new GroupTable(g, n));
  return *slot;
}

int GroupTable::slot(int a) const {
  for (std::size_t s = 0; s < letters_.size(); ++s)
    if (letters_[s] == a) return int(s);
  throw InternalError("letter " + std::to_string(a) + " not in this group");
}

int GroupTable::index(const SignedPermutation& w) const {
  auto it = idx_.find(w.with_group(g_));
  if (it == idx_.end()) throw ValidationError(w.str() + " is not in the rank " + std::to_string(n_) + " group");
  return it->second;
}

int GroupTable::right_mul(int e, int a) const { return rmul_[e][slot(a)]; }

int GroupTable::product(int v, int w) const {
  int cur = v;
  for (int s : words_[w]) {
    cur = rmul_[cur][s];
    if (cur < 0) return -1;
  }
  return cur;
}

// ---- NCElement ----

NCElement::NCElement(const GroupTable& t) : t_(&t), c_(t.size()) {}

NCElement NCElement::one(const GroupTable& t) {
  NCElement e(t);
  e.c_[t.identity()] = Poly(1);
  return e;
}

NCElement NCElement::generator(const GroupTable& t, int letter, const Poly& coef) {
  NCElement e(t);
  e.c_[t.right_mul(t.identity(), letter)] = coef;
  return e;
}

Poly NCElement::coeff(const SignedPermutation& w) const { return c_[t_->index(w.with_rank(std::max(w.rank(), t_->rank())))]; }

std::size_t NCElement::support_size() const {
  std::size_t s = 0;
  for (const auto& p : c_)
    if (!p.is_zero()) ++s;
  return s;
}

void NCElement::times_factor(int letter, const Poly& t, const std::vector<char>* mask) {
  if (t.is_zero()) return;
  // Longest first: targets are longer than sources, so in-place is safe.
  for (int e = t_->size() - 1; e >= 0; --e) {
    if (c_[e].is_zero()) continue;
    int f = t_->right_mul(e, letter);
    if (f < 0 || (mask && !(*mask)[f])) continue;
    c_[f] += c_[e] * t;
  }
}

NCElement nc_multiply_serial(const NCElement& a, const NCElement& b, const std::vector<char>* mask) {
  const GroupTable& T = a.table();
  if (&T != &b.table()) throw ValidationError("nilCoxeter product of elements from different algebras");
  NCElement r(T);
  for (int v = 0; v < T.size(); ++v) {
    if (a.coeff(v).is_zero()) continue;
    for (int w = 0; w < T.size(); ++w) {
      if (b.coeff(w).is_zero()) continue;
      int vw = T.product(v, w);
      if (vw < 0 || (mask && !(*mask)[vw])) continue;
      r.add(vw, a.coeff(v) * b.coeff(w));
    }
  }
  return r;
}

NCElement nc_multiply(const NCElement& a, const NCElement& b, const std::vector<char>* mask) {
  const GroupTable& T = a.table();
  if (&T != &b.table()) throw ValidationError("nilCoxeter product of elements from different algebras");
  int threads = kernels::max_threads();
  if (threads <= 1 || a.support_size() * b.support_size() < 256) return nc_multiply_serial(a, b, mask);
  std::vector<int> left;
  for (int v = 0; v < T.size(); ++v)
    if (!a.coeff(v).is_zero()) left.push_back(v);
  std::vector<std::vector<PolyBuilder>> acc(threads, std::vector<PolyBuilder>(T.size()));
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t i = 0; i < left.size(); ++i) {
    int tid = 0;
#ifdef _OPENMP
    tid = omp_get_thread_num();
#endif
    int v = left[i];
    for (int w = 0; w < T.size(); ++w) {
      if (b.coeff(w).is_zero()) continue;
      int vw = T.product(v, w);
      if (vw < 0 || (mask && !(*mask)[vw])) continue;
      acc[tid][vw].add(kernels::mul_serial(a.coeff(v), b.coeff(w)));
    }
  }
  NCElement r(T);
  for (int e = 0; e < T.size(); ++e) {
    PolyBuilder sum;
    for (int t = 0; t < threads; ++t) sum.merge(std::move(acc[t][e]));
    r.set(e, sum.build());
  }
  return r;
}

namespace {

std::vector<int> factor_letters(Group g, int n) {
  std::vector<int> out;
  if (g == Group::A) throw InternalError("no X factor in type A");
  for (int i = n - 1; i >= 1; --i) out.push_back(i);
  if (g == Group::BC) {
    out.push_back(0);
    out.push_back(0);
    for (int i = 1; i <= n - 1; ++i) out.push_back(i);
  } else {
    out.push_back(kBox);
    for (int i = 2; i <= n - 1; ++i) out.push_back(i);
  }
  return out;
}

}  // namespace

NCElement factor_C(const GroupTable& t, const Poly& param) {
  NCElement e = NCElement::one(t);
  for (int a : factor_letters(t.group(), t.rank())) e.times_factor(a, param);
  return e;
}

const NCElement& factor_X_stable(Group g, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<NCElement>> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({int(g), n});
    if (it != cache.end()) return *it->second;
  }
  const GroupTable& T = GroupTable::get(g, n);
  int maxlen = 0;
  for (int i = 0; i < T.size(); ++i) maxlen = std::max(maxlen, T.length(i));
  // N = C(1) - 1, log C(1) = N - N^2/2 + N^3/3 - ...
  NCElement N = factor_C(T, Poly(1));
  N.set(T.identity(), Poly());
  NCElement L(T), Np = N;
  for (int j = 1; j <= maxlen; ++j) {
    Rational s(j % 2 ? 1 : -1, j);
    s.canonicalize();
    for (int e = 0; e < T.size(); ++e)
      if (!Np.coeff(e).is_zero()) L.add(e, Np.coeff(e) * s);
    Np = nc_multiply_serial(Np, N);
  }
  // log C(x_i) is homogeneous: u_v carries x_i^l(v); summing over i gives p_l(v).
  NCElement LX(T);
  for (int e = 0; e < T.size(); ++e) {
    const Poly& c = L.coeff(e);
    if (c.is_zero()) continue;
    if (T.length(e) % 2 == 0) throw InternalError("even-length term in the log of the X factor");
    LX.set(e, c * Poly::var(Sym::p, T.length(e)));
  }
  NCElement E = NCElement::one(T), P = NCElement::one(T);
  Rational fact(1);
  for (int j = 1; j <= maxlen; ++j) {
    P = nc_multiply(P, LX);
    fact *= j;
    Rational inv = 1 / fact;
    for (int e = 0; e < T.size(); ++e)
      if (!P.coeff(e).is_zero()) E.add(e, P.coeff(e) * inv);
  }
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = cache[{int(g), n}];
  if (!slot) slot.reset(new NCElement(std::move(E)));
  return *slot;
}

namespace {

struct Setup {
  Group g;
  int n;
  SignedPermutation w;
};

Setup prepare(const SignedPermutation& w0, LieType t, int rank) {
  Group g = group_of(t);
  if (t == LieType::A && w0.negatives() > 0) throw ValidationError("type A needs an unsigned permutation: " + w0.str());
  SignedPermutation w = w0.with_group(g).canonical();
  int n = std::max(w.rank(), g == Group::D ? 2 : 1);
  if (rank > 0) {
    if (rank < n) throw ValidationError("rank " + std::to_string(rank) + " is too small for " + w0.str());
    n = rank;
  }
  return {g, n, w.with_rank(n)};
}

std::vector<char> left_factor_mask(const GroupTable& T, const SignedPermutation& w) {
  std::vector<char> mask(T.size(), 0);
  int lw = length(w);
  for (int e = 0; e < T.size(); ++e) {
    const auto& u = T.element(e);
    if (T.length(e) > lw) continue;
    if (length(u.inverse() * w) == lw - T.length(e)) mask[e] = 1;
  }
  return mask;
}

Rational type_b_scale(const SignedPermutation& w) {
  Rational s(1);
  for (int i = 0; i < w.negatives(); ++i) s /= 2;
  return s;
}

}  // namespace

namespace {

// Elements indexed densely; products of basis elements looked up by hashing.
struct Frame {
  int n = 0;
  std::vector<SignedPermutation> el;
  std::vector<int> len;
  std::unordered_map<SignedPermutation, int, SignedPermutationHash> id;

  int add(const SignedPermutation& w) {
    auto c = w.canonical();
    auto it = id.find(c);
    if (it != id.end()) return it->second;
    int i = int(el.size());
    id.emplace(c, i);
    el.push_back(c.with_rank(n));
    len.push_back(length(c));
    return i;
  }
  int find(const SignedPermutation& w) const {
    auto it = id.find(w.canonical());
    return it == id.end() ? -1 : it->second;
  }
  int size() const { return int(el.size()); }
};

using Sparse = std::vector<Poly>;

// Index in `to` of from.el[x] * by.el[y] when the lengths add, else -1.
int frame_product(const Frame& from, int x, const Frame& by, int y, const Frame& to) {
  int j = to.find(from.el[x] * by.el[y]);
  if (j < 0 || to.len[j] != from.len[x] + by.len[y]) return -1;
  return j;
}

void frame_times_factor(const Frame& F, Sparse& c, int letter, const Poly& t) {
  if (t.is_zero()) return;
  std::vector<int> order(F.size());
  for (int i = 0; i < F.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return F.len[a] > F.len[b]; });
  for (int e : order) {
    if (c[e].is_zero()) continue;
    int f = F.find(F.el[e].right_simple(letter));
    if (f < 0 || F.len[f] != F.len[e] + 1) continue;
    c[f] += c[e] * t;
  }
}

Sparse frame_multiply(const Frame& A, const Sparse& a, const Frame& B, const Sparse& b, const Frame& to) {
  std::vector<int> left;
  for (int x = 0; x < A.size(); ++x)
    if (!a[x].is_zero()) left.push_back(x);
  int threads = kernels::max_threads();
  if (threads < 1 || left.size() < 64) threads = 1;
  std::vector<std::vector<PolyBuilder>> acc(threads, std::vector<PolyBuilder>(to.size()));
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (std::size_t i = 0; i < left.size(); ++i) {
    int tid = 0;
#ifdef _OPENMP
    tid = omp_get_thread_num();
#endif
    int x = left[i];
    for (int y = 0; y < B.size(); ++y) {
      if (b[y].is_zero()) continue;
      int z = frame_product(A, x, B, y, to);
      if (z >= 0) acc[tid][z].add(kernels::mul_serial(a[x], b[y]));
    }
  }
  Sparse r(to.size());
  for (int z = 0; z < to.size(); ++z) {
    PolyBuilder sum;
    for (int t = 0; t < threads; ++t) sum.merge(std::move(acc[t][z]));
    r[z] = sum.build();
  }
  return r;
}

// acc * C(X) restricted to the left factors M of w.  The log of the single
// factor is only needed on V = { x^-1 y : x <= y in M }, which is closed
// under left factors, so every product below can be truncated to V or M.
Sparse times_X_stable(const Frame& M, const Sparse& acc, Group g, int n) {
  Frame V;
  V.n = n;
  V.add(SignedPermutation::identity(g, n));
  for (int x = 0; x < M.size(); ++x) {
    auto xi = M.el[x].inverse();
    for (int y = 0; y < M.size(); ++y) {
      if (M.len[y] <= M.len[x]) continue;
      auto v = xi * M.el[y];
      if (length(v) == M.len[y] - M.len[x]) V.add(v);
    }
  }
  int maxlen = *std::max_element(M.len.begin(), M.len.end());
  Sparse N(V.size());
  N[V.find(SignedPermutation::identity(g, n))] = Poly(1);
  for (int a : factor_letters(g, n)) frame_times_factor(V, N, a, Poly(1));
  N[V.find(SignedPermutation::identity(g, n))] = Poly();
  Sparse L(V.size()), Np = N;
  for (int j = 1; j <= maxlen; ++j) {
    Rational s(j % 2 ? 1 : -1, j);
    s.canonicalize();
    for (int e = 0; e < V.size(); ++e)
      if (!Np[e].is_zero()) L[e] += Np[e] * s;
    if (j < maxlen) Np = frame_multiply(V, Np, V, N, V);
  }
  for (int e = 0; e < V.size(); ++e) {
    if (L[e].is_zero()) continue;
    if (V.len[e] % 2 == 0) throw InternalError("even-length term in the log of the X factor");
    L[e] = L[e] * Poly::var(Sym::p, V.len[e]);
  }
  Sparse out = acc, T = acc;
  Rational fact(1);
  for (int j = 1; j <= maxlen; ++j) {
    T = frame_multiply(M, T, V, L, M);
    fact *= j;
    Rational inv = 1 / fact;
    bool any = false;
    for (int e = 0; e < M.size(); ++e)
      if (!T[e].is_zero()) out[e] += T[e] * inv, any = true;
    if (!any) break;
  }
  return out;
}

}  // namespace

Poly double_schubert(const SignedPermutation& w0, LieType t, const SchubertOptions& o) {
  Setup S = prepare(w0, t, o.rank);
  bool use_x = o.x && t != LieType::A;
  using Key = std::tuple<std::string, int, bool, bool, bool, int>;
  static std::mutex mu;
  static std::map<Key, Poly> cache;
  Key key{S.w.canonical().str(), int(S.g), use_x, o.y, o.z, S.n};
  Poly res;
  bool hit = false;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      res = it->second;
      hit = true;
    }
  }
  if (!hit) {
    Frame M;
    M.n = S.n;
    M.add(SignedPermutation::identity(S.g, S.n));
    for (const auto& [u, v] : left_factors(S.w)) M.add(u);
    Sparse acc(M.size());
    acc[M.find(SignedPermutation::identity(S.g, S.n))] = Poly(1);
    int n = S.n;
    if (o.z)
      for (int i = n - 1; i >= 1; --i)
        for (int j = i; j <= n - 1; ++j) frame_times_factor(M, acc, j, -Poly::var(Sym::z, i));
    if (use_x) acc = times_X_stable(M, acc, S.g, n);
    if (o.y)
      for (int i = 1; i <= n - 1; ++i)
        for (int j = n - 1; j >= i; --j) frame_times_factor(M, acc, j, Poly::var(Sym::y, i));
    res = acc[M.find(S.w)];
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(key, res);
  }
  if (t == LieType::B) res *= type_b_scale(S.w);
  if (o.m >= 0 && use_x) {
    if (o.m < length(S.w)) throw FidelityError("need at least l(w) = " + std::to_string(length(S.w)) + " x-variables");
    res = to_concrete(res, o.m);
  }
  return res;
}

Poly stanley_function(const SignedPermutation& w, int m) {
  LieType t = w.group() == Group::D ? LieType::D : LieType::C;
  SchubertOptions o;
  o.y = o.z = false;
  o.m = m;
  return double_schubert(w, t, o);
}

Poly double_schubert_concrete(const SignedPermutation& w0, LieType t, int m, bool y, bool z, int rank) {
  Setup S = prepare(w0, t, rank);
  const GroupTable& T = GroupTable::get(S.g, S.n);
  auto mask = left_factor_mask(T, S.w);
  NCElement acc = NCElement::one(T);
  int n = S.n;
  if (z)
    for (int i = n - 1; i >= 1; --i)
      for (int j = i; j <= n - 1; ++j) acc.times_factor(j, -Poly::var(Sym::z, i), &mask);
  if (t != LieType::A)
    for (int i = 1; i <= m; ++i)
      for (int a : factor_letters(S.g, n)) acc.times_factor(a, Poly::var(Sym::x, i), &mask);
  if (y)
    for (int i = 1; i <= n - 1; ++i)
      for (int j = n - 1; j >= i; --j) acc.times_factor(j, Poly::var(Sym::y, i), &mask);
  Poly res = acc.coeff(T.index(S.w));
  if (t == LieType::B) res *= type_b_scale(S.w);
  return res;
}

Poly stanley_function_concrete(const SignedPermutation& w, int m) {
  return double_schubert_concrete(w, w.group() == Group::D ? LieType::D : LieType::C, m, false, false);
}

}  // namespace schubert
