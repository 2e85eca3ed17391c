#include "schubert/formal.hpp"

#include <functional>
#include <map>

#include "schubert/error.hpp"

namespace schubert {

namespace {

struct Expander {
  const RaisingSpec& spec;
  std::vector<int> alpha;
  int rows;
  std::vector<std::vector<int>> m;  // exponent of R_ij
  std::vector<int> beta;
  PolyBuilder out;

  Expander(const RaisingSpec& s, std::vector<int> a) : spec(s), alpha(std::move(a)), rows(s.rows) {
    m.assign(rows + 1, std::vector<int>(rows + 1, 0));
    beta.assign(rows + 1, 0);
  }

  bool is_double(int i, int j) const { return spec.double_pairs.contains(i, j); }

  void emit(const Rational& coef) {
    bool touched = false;
    int d = spec.star_row;
    if (d > 0) {
      for (int i = 1; i <= rows; ++i)
        if ((i < d && m[i][d]) || (i > d && m[d][i])) touched = true;
    }
    std::vector<std::pair<Var, int>> fac;
    Rational c = coef;
    for (int r = 1; r <= rows; ++r) {
      if (d > 0 && !touched && r == d) continue;
      if (beta[r] > 0) fac.push_back({Var{Sym::c, beta[r]}, 1});
    }
    if (d > 0) {
      if (touched) c /= 2;
      else fac.push_back({Var{spec.star_type == 1 ? Sym::tau : Sym::taup, spec.k}, 1});
    }
    out.add(Monomial::from_pairs(std::move(fac)), c);
  }

  // Row j (processed bottom-up) has received inflow from rows below; choose
  // outflows m[i][j] for i < j, with `avail` units left.
  void choose(int j, int i, int avail, const Rational& coef) {
    if (i == j) {
      if (avail < 0) return;
      beta[j] = avail;
      if (j == 1) {
        emit(coef);
        return;
      }
      int inflow = 0;
      for (int l = j; l <= rows; ++l) inflow += m[j - 1][l];
      choose(j - 1, 1, alpha[j - 2] + inflow, coef);
      return;
    }
    // m[i][j] also feeds row i, which is unconstrained above.
    int cap = is_double(i, j) ? avail : std::min(avail, 1);
    for (int e = 0; e <= cap; ++e) {
      m[i][j] = e;
      Rational c = coef;
      if (e > 0) c *= is_double(i, j) ? Rational(e % 2 ? -2 : 2) : Rational(-1);
      choose(j, i + 1, avail - e, c);
    }
    m[i][j] = 0;
  }

  Poly run() {
    if (rows == 0) return Poly(1);
    // j = rows has no inflow
    if (alpha[rows - 1] < 0) return Poly();
    choose(rows, 1, alpha[rows - 1], Rational(1));
    return out.build();
  }
};

}  // namespace

FormalPoly expand_raising(const RaisingSpec& spec, const std::vector<int>& alpha) {
  if (int(alpha.size()) != spec.rows) throw ValidationError("raising expansion: length of alpha must equal rows");
  for (auto [i, j] : spec.double_pairs.pairs)
    if (i < 1 || i >= j) throw ValidationError("raising expansion: bad pair");
  if (spec.star_row < 0 || spec.star_row > spec.rows) throw ValidationError("raising expansion: bad star row");
  Expander ex(spec, alpha);
  return ex.run();
}

FormalPoly theta_formal(const Shape& la) {
  la.validate(false);
  RaisingSpec spec;
  spec.rows = la.length();
  spec.double_pairs = order_ideal(la, IdealVariant::C);
  spec.k = la.kk();
  return expand_raising(spec, la.parts);
}

FormalPoly c_to_tau(const FormalPoly& f, int k) {
  return f.subs([&](Var v) -> std::optional<Poly> {
    if (v.sym != Sym::c) return std::nullopt;
    int r = v.index;
    if (r < k) return Poly::var(Sym::tau, r);
    if (r == k) return Poly::var(Sym::tau, r) + Poly::var(Sym::taup, r);
    return Poly::var(Sym::tau, r) * Rational(2);
  });
}

FormalPoly eta_formal(const Shape& la) {
  bool typed = la.k > 0;
  la.validate(typed);
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
  Poly f = expand_raising(spec, la.parts);
  Rational scale(1);
  for (int i = 0; i < la.ell_k(); ++i) scale /= 2;
  if (k == 0) {
    // maximal orthogonal case: P-polynomials in c
    return f * scale;
  }
  return c_to_tau(f, k) * scale;
}

FormalPoly q_two_row(int a, int b) {
  RaisingSpec spec;
  spec.rows = 2;
  spec.double_pairs.pairs.insert({1, 2});
  return expand_raising(spec, {a, b});
}

FormalPoly q_pfaffian(const Shape& la) {
  if (!Shape(la.parts, 0).is_k_strict()) throw ValidationError("Q-polynomials need a strict partition: " + la.str());
  int l = la.length();
  if (l <= 2) return q_two_row(la.part(1), la.part(2));
  int L = l % 2 ? l + 1 : l;
  PolyMatrix up(L, std::vector<Poly>(L));
  for (int i = 0; i < L; ++i)
    for (int j = i + 1; j < L; ++j) up[i][j] = q_two_row(la.part(i + 1), la.part(j + 1));
  return pfaffian(up);
}

std::vector<FormalPoly> difference_series(DiffSeries which, int degree) {
  std::vector<FormalPoly> out;
  if (degree < 0) return out;
  auto sgn = [](int i) { return Rational(i % 2 ? -1 : 1); };
  // inverse of the series in the denominator
  std::vector<Poly> inv(degree + 1);
  inv[0] = Poly(1);
  for (int r = 1; r <= degree; ++r) {
    Poly acc;
    for (int i = 1; i <= r; ++i) {
      Poly a = which == DiffSeries::g ? dsym(i) : csym(i) * sgn(i);
      acc -= a * inv[r - i];
    }
    inv[r] = acc;
  }
  for (int r = 0; r <= degree; ++r) {
    Poly acc;
    for (int i = 0; i <= r; ++i) {
      Poly num = which == DiffSeries::g ? csym(i) : dsym(i) * sgn(i);
      acc += num * inv[r - i];
    }
    out.push_back(acc);
  }
  return out;
}

Poly determinant(const PolyMatrix& a) {
  int n = int(a.size());
  if (n == 0) return Poly(1);
  if (n > 20) throw UnsupportedError("determinant too large");
  // Laplace expansion down the rows, memoised on the set of used columns.
  std::map<unsigned, Poly> memo;
  std::function<Poly(int, unsigned)> rec = [&](int row, unsigned used) -> Poly {
    if (row == n) return Poly(1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Poly acc;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (!a[row][c].is_zero()) {
        Poly sub = rec(row + 1, used | (1u << c));
        if (!sub.is_zero()) {
          Poly t = a[row][c] * sub;
          if (sign > 0) acc += t;
          else acc -= t;
        }
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(0, 0);
}

Poly pfaffian(const PolyMatrix& up) {
  int n = int(up.size());
  if (n % 2) return Poly();
  if (n == 0) return Poly(1);
  std::map<unsigned, Poly> memo;
  std::function<Poly(unsigned)> rec = [&](unsigned left) -> Poly {
    if (left == 0) return Poly(1);
    auto it = memo.find(left);
    if (it != memo.end()) return it->second;
    int first = __builtin_ctz(left);
    unsigned rest = left & ~(1u << first);
    Poly acc;
    int sign = 1;
    for (int j = first + 1; j < n; ++j) {
      if (!(rest & (1u << j))) continue;
      if (!up[first][j].is_zero()) {
        Poly t = up[first][j] * rec(rest & ~(1u << j));
        if (sign > 0) acc += t;
        else acc -= t;
      }
      sign = -sign;
    }
    memo.emplace(left, acc);
    return acc;
  };
  return rec((n >= 32 ? 0u : (1u << n)) - 1u);
}

FormalPoly jacobi_trudi(const std::vector<int>& alpha) {
  int n = int(alpha.size());
  PolyMatrix m(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = csym(alpha[i] + j - i);
  return determinant(m);
}

}  // namespace schubert
