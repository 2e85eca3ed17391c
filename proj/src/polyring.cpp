#include "schubert/polyring.hpp"

#include <mutex>

#include "schubert/error.hpp"

namespace schubert {

Alphabet alphabet(Sym s, int from, int to, int sign) {
  Alphabet a;
  for (int i = from; i <= to; ++i) a.push_back(sign > 0 ? Poly::var(s, i) : -Poly::var(s, i));
  return a;
}

Alphabet concat(Alphabet a, const Alphabet& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Poly elementary(int r, const Alphabet& a) {
  if (r < 0 || r > int(a.size())) return Poly();
  // e[j] over a growing prefix
  std::vector<Poly> e(r + 1);
  e[0] = Poly(1);
  for (const auto& x : a)
    for (int j = r; j >= 1; --j)
      if (!e[j - 1].is_zero()) e[j] += e[j - 1] * x;
  return e[r];
}

Poly complete(int r, const Alphabet& a) {
  if (r < 0) return Poly();
  std::vector<Poly> h(r + 1);
  h[0] = Poly(1);
  for (const auto& x : a)
    for (int j = 1; j <= r; ++j) h[j] += h[j - 1] * x;
  return h[r];
}

namespace {

std::mutex cache_mu;

void odd_partitions(int left, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int x = std::min(left, hi); x >= 1; --x) {
    if (x % 2 == 0) continue;
    cur.push_back(x);
    odd_partitions(left - x, x, cur, out);
    cur.pop_back();
  }
}

Poly q_stable_uncached(int r) {
  std::vector<std::vector<int>> rhos;
  std::vector<int> cur;
  odd_partitions(r, r, cur, rhos);
  PolyBuilder b;
  for (const auto& rho : rhos) {
    mpz_class z = 1;
    std::map<int, int> mult;
    for (int x : rho) ++mult[x];
    std::vector<std::pair<Var, int>> fac;
    for (auto [part, mcount] : mult) {
      for (int i = 0; i < mcount; ++i) z *= part;
      for (int i = 2; i <= mcount; ++i) z *= i;
      fac.push_back({Var{Sym::p, part}, mcount});
    }
    mpz_class two = 1;
    two <<= int(rho.size());
    Rational c(two, z);
    c.canonicalize();
    b.add(Monomial::from_pairs(fac), c);
  }
  return b.build();
}

}  // namespace

Poly q_stable(int r) {
  if (r < 0) return Poly();
  if (r == 0) return Poly(1);
  static std::map<int, Poly> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
  }
  Poly q = q_stable_uncached(r);
  std::lock_guard<std::mutex> lk(cache_mu);
  return cache.emplace(r, q).first->second;
}

Poly gen_q(int r, int m) {
  if (r < 0) return Poly();
  // prod_i (1 + 2 x_i t + 2 x_i^2 t^2 + ...), truncated at t^r
  std::vector<Poly> s(r + 1);
  s[0] = Poly(1);
  for (int i = 1; i <= m; ++i) {
    std::vector<Poly> next(r + 1);
    for (int a = 0; a <= r; ++a) {
      if (s[a].is_zero()) continue;
      next[a] += s[a];
      for (int j = 1; a + j <= r; ++j) next[a + j] += s[a] * (Poly::var(Var{Sym::x, i}, j) * Rational(2));
    }
    s = std::move(next);
  }
  return s[r];
}

Poly to_concrete(const Poly& f, int m) {
  if (m < 0) return f;
  return f.subs([&](Var v) -> std::optional<Poly> {
    if (v.sym != Sym::p) return std::nullopt;
    Poly s;
    for (int i = 1; i <= m; ++i) s += Poly::var(Var{Sym::x, i}, v.index);
    return s;
  });
}

Poly q_of(int r, int m) { return m < 0 ? q_stable(r) : to_concrete(q_stable(r), m); }

Poly prepend_to_x(const Poly& f, const Alphabet& a) {
  return f.subs([&](Var v) -> std::optional<Poly> {
    if (v.sym != Sym::p) return std::nullopt;
    Poly s = Poly::var(v);
    for (const auto& x : a) s += x.pow(v.index);
    return s;
  });
}

Poly theta_gen(int r, int m, const Alphabet& y) {
  Poly acc;
  for (int i = 0; i <= std::min<int>(r, int(y.size())); ++i) acc += q_of(r - i, m) * elementary(i, y);
  return acc;
}

Poly gen_theta_series(int r, int m, int k) { return theta_gen(r, m, alphabet(Sym::y, 1, k)); }

std::pair<Poly, Poly> eta_generators(int k, int m, const Alphabet& y) {
  Poly th = theta_gen(k, m, y), e = elementary(k, y);
  Rational half(1, 2);
  return {(th + e) * half, (th - e) * half};
}

std::pair<Poly, Poly> eta_generators(int k, int m) { return eta_generators(k, m, alphabet(Sym::y, 1, k)); }

Poly supersym_h(int r, const Alphabet& y, const Alphabet& z) {
  Poly acc;
  for (int i = 0; i <= std::min<int>(r, int(z.size())); ++i) {
    Poly t = complete(r - i, y) * elementary(i, z);
    if (i % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

Poly supersym_h(int r, int m, int n) { return supersym_h(r, alphabet(Sym::y, 1, m), alphabet(Sym::z, 1, n)); }

Poly schur_super(const Shape& la, const Alphabet& y, const Alphabet& z) {
  int l = la.length();
  std::map<int, Poly> h;
  auto H = [&](int r) -> const Poly& {
    auto it = h.find(r);
    if (it == h.end()) it = h.emplace(r, supersym_h(r, y, z)).first;
    return it->second;
  };
  PolyMatrix mat(l, std::vector<Poly>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) mat[i][j] = H(la.parts[i] + j - i);
  return determinant(mat);
}

Poly schur_super(const Shape& la, int m, int n) { return schur_super(la, alphabet(Sym::y, 1, m), alphabet(Sym::z, 1, n)); }

Poly alternant_schur_oracle(const Shape& mu, int d) {
  if (mu.length() > d) return Poly();
  PolyMatrix num(d, std::vector<Poly>(d)), den(d, std::vector<Poly>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      num[i][j] = Poly::var(Var{Sym::y, i + 1}, mu.part(j + 1) + d - (j + 1));
      den[i][j] = Poly::var(Var{Sym::y, i + 1}, d - (j + 1));
    }
  return determinant(num).divide_exact(determinant(den));
}

Poly specialize(const FormalPoly& f, const std::function<std::optional<Poly>(Var)>& assignment) {
  return f.subs([&](Var v) -> std::optional<Poly> {
    auto img = assignment(v);
    if (!img) throw ValidationError("no value assigned to symbol " + var_name(v));
    return img;
  });
}

namespace {

Poly Q_stable_cached(const Shape& la) {
  static std::map<std::vector<int>, Poly> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = cache.find(la.parts);
    if (it != cache.end()) return it->second;
  }
  Poly q = specialize(theta_formal(Shape(la.parts, 0)), [](Var v) -> std::optional<Poly> {
    if (v.sym == Sym::c) return q_stable(v.index);
    return std::nullopt;
  });
  std::lock_guard<std::mutex> lk(cache_mu);
  return cache.emplace(la.parts, q).first->second;
}

}  // namespace

Poly Q_poly(const Shape& la, int m) {
  if (!Shape(la.parts, 0).is_k_strict()) throw ValidationError("Q-functions need a strict partition: " + la.str());
  return to_concrete(Q_stable_cached(la), m);
}

Poly P_poly(const Shape& la, int m) {
  Rational s(1);
  for (int i = 0; i < la.length(); ++i) s /= 2;
  return Q_poly(la, m) * s;
}

Poly theta_from_series(const Shape& la, const std::function<Poly(int)>& g) {
  std::map<int, Poly> th;
  return specialize(theta_formal(la), [&](Var v) -> std::optional<Poly> {
    if (v.sym != Sym::c) return std::nullopt;
    auto it = th.find(v.index);
    if (it == th.end()) it = th.emplace(v.index, g(v.index)).first;
    return it->second;
  });
}

Poly eta_from_series(const Shape& la, const std::function<Poly(int)>& g, const Poly& tau_k, const Poly& taup_k) {
  la.validate(la.k > 0);
  int k = la.kk();
  RaisingSpec spec;
  spec.rows = la.length();
  spec.double_pairs = order_ideal(la, IdealVariant::Cprime);
  spec.k = k;
  if (la.type > 0) {
    for (int d = 1; d <= la.length(); ++d)
      if (la.part(d) == k) {
        spec.star_row = d;
        break;
      }
    spec.star_type = la.type;
  }
  Poly raw = expand_raising(spec, la.parts);
  std::map<int, Poly> th;
  Poly f = specialize(raw, [&](Var v) -> std::optional<Poly> {
    if (v.sym == Sym::tau && v.index == k) return tau_k;
    if (v.sym == Sym::taup && v.index == k) return taup_k;
    if (v.sym != Sym::c) return std::nullopt;
    auto it = th.find(v.index);
    if (it == th.end()) it = th.emplace(v.index, g(v.index)).first;
    return it->second;
  });
  Rational s(1);
  for (int i = 0; i < la.ell_k(); ++i) s /= 2;
  return f * s;
}

Poly theta_poly(const Shape& la, int m, const Alphabet& y) {
  return theta_from_series(la, [&](int r) { return theta_gen(r, m, y); });
}

Poly eta_poly(const Shape& la, int m, const Alphabet& y) {
  la.validate(la.k > 0);
  std::pair<Poly, Poly> eta;
  if (la.kk() > 0) eta = eta_generators(la.kk(), m, y);
  return eta_from_series(la, [&](int r) { return theta_gen(r, m, y); }, eta.first, eta.second);
}

std::map<Shape, Rational> q_basis_expand(const Poly& f, int m) {
  std::map<Shape, Rational> out;
  int d = f.degree();
  if (f.is_zero()) return out;
  if (m < d) throw FidelityError("need at least as many x-variables as the degree");
  Poly rest = f;
  std::map<std::vector<int>, Poly> qcache;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading();
    std::vector<int> ex(m, 0);
    for (std::size_t i = 0; i < lt.m.size(); ++i) {
      Var v = lt.m.var_at(i);
      if (v.sym != Sym::x || v.index > m) throw ValidationError("q_basis_expand: polynomial is not in x_1..x_m only");
      ex[v.index - 1] = lt.m.exp_at(i);
    }
    Shape la(ex, 0);
    bool strict = true;
    for (int i = 0; i + 1 < m; ++i)
      if (ex[i] < ex[i + 1] || (ex[i] == ex[i + 1] && ex[i] > 0)) strict = false;
    if (!strict) throw ValidationError("polynomial is not in the span of the Q-functions");
    Rational a = lt.c;
    for (int i = 0; i < la.length(); ++i) a /= 2;
    auto it = qcache.find(la.parts);
    if (it == qcache.end()) it = qcache.emplace(la.parts, Q_poly(la, m)).first;
    rest -= it->second * a;
    out[la] += a;
  }
  return out;
}

SpanSolution solve_in_span(const Poly& f, const std::vector<Poly>& B) {
  // rows indexed by monomials
  std::map<std::vector<std::uint32_t>, int> row_of;
  auto row = [&](const Monomial& mo) {
    return row_of.emplace(mo.raw(), int(row_of.size())).first->second;
  };
  for (const auto& b : B)
    for (const auto& t : b.terms()) row(t.m);
  for (const auto& t : f.terms()) row(t.m);
  int R = int(row_of.size()), C = int(B.size());
  std::vector<std::vector<Rational>> M(R, std::vector<Rational>(C + 1, Rational(0)));
  for (int c = 0; c < C; ++c)
    for (const auto& t : B[c].terms()) M[row(t.m)][c] = t.c;
  for (const auto& t : f.terms()) M[row(t.m)][C] = t.c;
  // Gauss-Jordan
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = r;
    while (p < R && M[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(M[p], M[r]);
    Rational inv = 1 / M[r][c];
    for (int j = c; j <= C; ++j) M[r][j] *= inv;
    for (int i = 0; i < R; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational fct = M[i][c];
      for (int j = c; j <= C; ++j) M[i][j] -= fct * M[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  SpanSolution sol;
  sol.rank = r;
  sol.in_span = true;
  for (int i = r; i < R; ++i)
    if (M[i][C] != 0) sol.in_span = false;
  sol.coords.assign(C, Rational(0));
  for (int i = 0; i < r; ++i) sol.coords[pivot_col[i]] = M[i][C];
  return sol;
}

namespace {

// Solve f = sum a_lambda B_lambda over strict lambda, degree by degree.
std::map<Shape, Rational> stable_expand(const Poly& f, const std::function<Poly(const Shape&)>& basis) {
  std::map<Shape, Rational> out;
  std::map<int, PolyBuilder> by_degree;
  for (const auto& t : f.terms()) {
    int w = 0;
    for (std::size_t i = 0; i < t.m.size(); ++i) {
      Var v = t.m.var_at(i);
      if (v.sym != Sym::p) throw ValidationError("stable basis expansion: polynomial must be in power sums only");
      if (v.index % 2 == 0) throw ValidationError("polynomial is not in the span of the Q-functions (even power sum)");
      w += v.index * t.m.exp_at(i);
    }
    by_degree[w].add(t.m, t.c);
  }
  for (auto& [d, pb] : by_degree) {
    Poly fd = pb.build();
    if (d == 0) {
      out[Shape()] = fd.constant_term();
      continue;
    }
    auto lams = strict_partitions(d);
    std::vector<Poly> B;
    for (const auto& la : lams) B.push_back(basis(la));
    auto sol = solve_in_span(fd, B);
    if (sol.rank != int(B.size())) throw InternalError("basis functions are not independent");
    if (!sol.in_span) throw ValidationError("polynomial is not in the span of the Q-functions");
    for (std::size_t i = 0; i < lams.size(); ++i)
      if (sol.coords[i] != 0) out[lams[i]] = sol.coords[i];
  }
  return out;
}

}  // namespace

std::map<Shape, Rational> q_basis_expand_stable(const Poly& f) {
  return stable_expand(f, [](const Shape& la) { return Q_poly(la, kStable); });
}

std::map<Shape, Rational> p_basis_expand_stable(const Poly& f) {
  return stable_expand(f, [](const Shape& la) { return P_poly(la, kStable); });
}

}  // namespace schubert
