#include "schubert/verify.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "schubert/error.hpp"
#include "schubert/formal.hpp"
#include "schubert/locus.hpp"
#include "schubert/nilcox.hpp"
#include "schubert/polyring.hpp"
#include "schubert/schubops.hpp"
#include "schubert/shapes.hpp"
#include "schubert/split.hpp"
#include "schubert/transition.hpp"

namespace schubert {

namespace {

struct Ctx {
  SuiteResult& r;
  void check(bool ok, const std::string& what) {
    ++r.checks;
    if (ok) return;
    ++r.failures;
    r.pass = false;
    if (r.detail.size() < 20) r.detail.push_back(what);
  }
};

Poly yv(int i) { return Poly::var(Sym::y, i); }
Poly zv(int i) { return Poly::var(Sym::z, i); }
Poly cv(int r) { return csym(r); }
Poly tau(int r) { return Poly::var(Sym::tau, r); }
Poly taup(int r) { return Poly::var(Sym::taup, r); }

SignedPermutation P(Group g, const std::string& s) { return SignedPermutation::parse(g, s); }

LieType lie_of(Group g) { return g == Group::A ? LieType::A : g == Group::D ? LieType::D : LieType::C; }

Poly kill_y_above(const Poly& f, int k) {
  return f.subs([&](Var v) -> std::optional<Poly> {
    if (v.sym == Sym::y && v.index > k) return Poly();
    return std::nullopt;
  });
}

Poly swap_x(const Poly& f, int i) {
  return f.rename([&](Var v) {
    if (v.sym == Sym::x && v.index == i) return std::make_pair(1, Var{Sym::x, i + 1});
    if (v.sym == Sym::x && v.index == i + 1) return std::make_pair(1, Var{Sym::x, i});
    return std::make_pair(1, v);
  });
}

Poly th(std::vector<int> parts, int k) { return theta_poly(Shape(std::move(parts), k), kStable, alphabet(Sym::y, 1, k)); }
Poly Q(std::vector<int> parts) { return Q_poly(Shape(std::move(parts)), kStable); }

void goldens(Ctx& c, int n) {
  Poly want = cv(5) * cv(4) * cv(2) - cv(6) * cv(3) * cv(2) - cv(5) * cv(5) * cv(1) + cv(7) * cv(3) * cv(1) +
              cv(6) * cv(5) - cv(7) * cv(4);
  c.check(jacobi_trudi({5, 4, 2}) == want, "determinant (5,4,2)");
  RaisingSpec plain;
  plain.rows = 3;
  c.check(expand_raising(plain, {5, 4, 2}) == want, "raising (5,4,2)");
  c.check(theta_formal(Shape({3, 1, 1}, 1)) == cv(3) * cv(1) * cv(1) - cv(4) * cv(1) - cv(3) * cv(2), "theta (3,1,1) k=1");
  c.check(eta_formal(Shape({3, 1, 1}, 1, 2)) ==
              tau(3) * taup(1) * (tau(1) + taup(1)) - 2 * tau(4) * taup(1) - tau(3) * tau(2) + tau(5),
          "eta (3,1,1) k=1");

  c.check(double_schubert(P(Group::A, "3,2,1"), LieType::A) == (yv(1) - zv(1)) * (yv(1) - zv(2)) * (yv(2) - zv(1)),
          "A_321");
  for (int m = 1; m <= std::max(5, n); ++m) {
    Poly prod(1);
    for (int i = 1; i < m; ++i)
      for (int j = 1; i + j <= m; ++j) prod *= yv(i) - zv(j);
    c.check(double_schubert(longest_element(Group::A, m), LieType::A) == prod, "A_w0 n=" + std::to_string(m));
  }

  // splitting of 3,-1,-2 with b = (0,1)
  auto wa = P(Group::BC, "3,-1,-2");
  Poly ca = double_schubert(wa, LieType::C);
  c.check(ca == th({4, 2}, 1) + th({3, 2}, 1) * yv(2) - zv(1) * th({3, 2}, 1), "3,-1,-2 expansion, a=(1,2)");
  Poly tail = Q({3, 2}) + Q({3, 1}) * yv(1) + Q({2, 1}) * yv(1) * yv(1);
  c.check(ca == Q({4, 2}) + Q({4, 1}) * yv(1) + Q({3, 2}) * yv(1) + Q({3, 1}) * yv(1) * yv(1) + tail * yv(2) -
                    zv(1) * tail,
          "3,-1,-2 expansion, a=(0,1,2)");
  std::map<ShapeSeq, long> want_a{{{Shape(), Shape({4, 2}, 1), Shape()}, 1},
                                  {{Shape(), Shape({3, 2}, 1), Shape({1})}, 1},
                                  {{Shape({1}), Shape({3, 2}, 1), Shape()}, 1}};
  c.check(split_coefficients({wa, LieType::C, {1, 2}, {0, 1}}) == want_a, "3,-1,-2 coefficients");
  for (auto a : std::vector<std::vector<int>>{{1, 2}, {0, 1, 2}})
    c.check(split_formula({wa, LieType::C, a, {0, 1}}) == ca, "3,-1,-2 split a=" + seq_str(a));

  // splitting of 1,2,-3 with b = (0,2)
  auto wb = P(Group::BC, "1,2,-3");
  Poly cb = double_schubert(wb, LieType::C);
  auto Y2 = alphabet(Sym::y, 1, 2), Z2 = alphabet(Sym::z, 1, 2);
  Poly e1y = elementary(1, Y2), e2y = elementary(2, Y2), e1z = elementary(1, Z2), e2z = elementary(2, Z2);
  c.check(cb == th({5}, 2) - e1z * th({4}, 2) + e2z * th({3}, 2), "1,2,-3 expansion, a=(2)");
  c.check(cb == th({5}, 1) + th({4}, 1) * yv(2) - e1z * (th({4}, 1) + th({3}, 1) * yv(2)) +
                    e2z * (th({3}, 1) + th({2}, 1) * yv(2)),
          "1,2,-3 expansion, a=(1,2)");
  c.check(cb == Q({5}) + Q({4}) * e1y + Q({3}) * e2y - e1z * (Q({4}) + Q({3}) * e1y + Q({2}) * e2y) +
                    e2z * (Q({3}) + Q({2}) * e1y + Q({1}) * e2y),
          "1,2,-3 expansion, a=(0,2)");
  for (auto a : std::vector<std::vector<int>>{{2}, {1, 2}, {0, 2}})
    c.check(split_formula({wb, LieType::C, a, {0, 2}}) == cb, "1,2,-3 split a=" + seq_str(a));

  // the tree example with one y variable
  SchubertOptions noz;
  noz.z = false;
  Poly lhs = kill_y_above(double_schubert(P(Group::BC, "3,-1,2,6,4,5"), LieType::C, noz), 1);
  c.check(lhs == th({2, 1, 1, 1}, 1) + th({5}, 1) + 2 * th({3, 1, 1}, 1) + th({4, 1}, 1) + th({3, 2}, 1),
          "C_{3,-1,2,6,4,5}(X;Y_(1))");
}

void bijection(Ctx& c, int n) {
  auto w = P(Group::BC, "3,5,8,-4,-1,2,6,7");
  c.check(grassmannian_to_shape(w, 3) == Shape({7, 4, 3, 1, 1}, 3), "example C to shape");
  c.check(shape_to_grassmannian(Shape({7, 4, 3, 1, 1}, 3), LieType::C, 8) == w, "example C to element");
  auto v = P(Group::D, "-2,6,7,-5,-3,-1,4,8");
  c.check(grassmannian_to_shape(v, 3) == Shape({7, 5, 3, 2}, 3, 2), "example D to shape");
  c.check(shape_to_grassmannian(Shape({7, 5, 3, 2}, 3, 2), LieType::D, 8) == v, "example D to element");
  for (int r = 1; r <= n; ++r) {
    auto run = [&](LieType t, Group g, int k) {
      auto shapes = shapes_in_rectangle(t, r, k);
      long count = 0;
      for (const auto& e : all_elements(g, r))
        if (is_grassmannian(e, k)) ++count;
      c.check(long(shapes.size()) == count, std::string(1, lie_char(t)) + " count n=" + std::to_string(r));
      for (const auto& la : shapes) {
        auto e = shape_to_grassmannian(la, t, r);
        std::string tag = std::string(1, lie_char(t)) + " " + la.str();
        c.check(is_grassmannian(e, k), tag + " grassmannian");
        c.check(length(e) == la.weight(), tag + " length");
        c.check(grassmannian_to_shape(e, k) == la, tag + " roundtrip");
      }
    };
    for (int k = 0; k <= r; ++k) run(LieType::C, Group::BC, k);
    if (r >= 2) {
      run(LieType::D, Group::D, kBox);
      for (int k = 1; k <= r; ++k) run(LieType::D, Group::D, k);
    }
  }
}

// Power sums of degree <= m are faithful in m variables, so the stable
// comparison is the m = |la| comparison; explicit variables up to this weight.
constexpr int kExplicitX = 9;

void xtoy(Ctx& c, int n) {
  for (int k = 0; k < n; ++k)
    for (const auto& la : shapes_in_rectangle(LieType::C, n, k)) {
      auto w = shape_to_grassmannian(la, LieType::C, n);
      auto y = alphabet(Sym::y, 1, k);
      SchubertOptions o;
      o.z = false;
      Poly f = double_schubert(w, LieType::C, o);
      c.check(f == theta_poly(la, kStable, y), "C " + la.str());
      if (la.weight() <= kExplicitX)
        c.check(to_concrete(f, la.weight()) == theta_poly(la, la.weight(), y), "C " + la.str() + " explicit");
    }
  if (n < 2) return;
  std::vector<int> ks{kBox};
  for (int k = 1; k < n; ++k) ks.push_back(k);
  for (int k : ks)
    for (const auto& la : shapes_in_rectangle(LieType::D, n, k)) {
      auto w = shape_to_grassmannian(la, LieType::D, n);
      auto y = alphabet(Sym::y, 1, std::max(k, 0));
      SchubertOptions o;
      o.z = false;
      Poly f = double_schubert(w, LieType::D, o);
      c.check(f == eta_poly(la, kStable, y), "D " + la.str());
      if (la.weight() <= kExplicitX)
        c.check(to_concrete(f, la.weight()) == eta_poly(la, la.weight(), y), "D " + la.str() + " explicit");
    }
}

void uniq_group(Ctx& c, Group g, int n) {
  LieType t = lie_of(g);
  for (const auto& w : all_elements(g, n)) {
    Poly f = double_schubert(w, t);
    c.check(f.constant_term() == (w.is_identity() ? 1 : 0), w.str() + " constant term");
    for (int a : simple_letters(g, n)) {
      auto ws = w.right_simple(a), sw = w.left_simple(a);
      Poly want_y = length(ws) < length(w) ? double_schubert(ws, t) : Poly();
      Poly want_z = length(sw) < length(w) ? double_schubert(sw, t) : Poly();
      c.check(divided_difference(f, Axis::y, a) == want_y, w.str() + " d^y_" + std::to_string(a));
      c.check(divided_difference(f, Axis::z, a) == want_z, w.str() + " d^z_" + std::to_string(a));
    }
  }
}

void uniq(Ctx& c, int n) {
  uniq_group(c, Group::BC, n);
  uniq_group(c, Group::A, n + 1);
  if (n >= 2) uniq_group(c, Group::D, n);
}

void split(Ctx& c, int n) {
  for (const auto& w : all_elements(Group::BC, n))
    for (const auto& a : admissible_a(w, LieType::C, n)) {
      SplitProblem pr{w, LieType::C, a, minimal_b(w, LieType::C)};
      c.check(split_formula(pr) == double_schubert(w, LieType::C), "C " + w.str() + " a=" + seq_str(a));
    }
  for (const auto& w : all_elements(Group::A, n + 1)) {
    SplitProblem pr{w, LieType::A, minimal_a(w, LieType::A), minimal_b(w, LieType::A)};
    c.check(split_formula(pr) == double_schubert(w, LieType::A), "A " + w.str());
  }
  if (n < 2) return;
  for (const auto& w : all_elements(Group::D, n))
    for (const auto& a : admissible_a(w, LieType::D, n)) {
      SplitProblem pr{w, LieType::D, a, minimal_b(w, LieType::D)};
      c.check(split_formula(pr) == double_schubert(w, LieType::D), "D " + w.str() + " a=" + seq_str(a));
    }
}

void transition(Ctx& c, int n) {
  for (const auto& w : all_elements(Group::BC, n)) {
    std::map<Shape, Rational> want;
    for (const auto& [la, m] : stanley_coeffs(w, TreeKind::C, 0)) want[Shape(la.parts)] = m;
    c.check(q_basis_expand_stable(stanley_function(w)) == want, "F to Q " + w.str());
    for (const auto& la : strict_partitions(length(w))) {
      auto it = want.find(Shape(la.parts));
      long e = it == want.end() ? 0 : it->second.get_num().get_si();
      c.check(kraskiewicz_count(w, la) == e, "Kraskiewicz " + w.str() + " " + la.parts_str());
    }
  }
  if (n >= 2)
    for (const auto& w : all_elements(Group::D, n)) {
      std::map<Shape, Rational> want;
      for (const auto& [la, m] : stanley_coeffs(w, TreeKind::D, kBox)) want[Shape(la.parts)] = m;
      c.check(p_basis_expand_stable(stanley_function(w)) == want, "E to P " + w.str());
    }
  for (const auto& w : all_elements(Group::A, n + 2)) {
    auto cw = stanley_coeffs(w, TreeKind::A);
    for (const auto& la : partitions(length(w))) {
      long want = cw.count(la) ? cw.at(la) : 0;
      c.check(fg_tableau_count(w, la) == want, "Fomin-Greene " + w.str() + " " + la.parts_str());
    }
  }
}

void relations(Ctx& c, int n) {
  int vars = 2 * n + 2;
  for (int r = 1; r <= 2 * n; ++r) {
    Poly rel = gen_q(r, vars) * gen_q(r, vars);
    for (int i = 1; i <= r; ++i) rel += gen_q(r + i, vars) * gen_q(r - i, vars) * (i % 2 ? -2 : 2);
    c.check(rel.is_zero(), "q relation r=" + std::to_string(r));
  }
  for (int w = 1; w <= 10; ++w)
    for (const auto& la : strict_partitions(w)) {
      if (la.length() > 4) continue;
      c.check(theta_formal(la) == q_pfaffian(la), "Pfaffian " + la.parts_str());
    }
  for (int k = 1; k <= 3; ++k)
    for (int w = 1; w <= 7; ++w)
      for (const auto& la : partitions(w, 4)) {
        if (la.part(1) > k) continue;
        c.check(theta_formal(Shape(la.parts, k)) == jacobi_trudi(la.parts), "determinant regime " + la.parts_str());
      }
  for (int k = 1; k <= 2; ++k)
    for (int w = 1; w <= 12; ++w)
      for (const auto& la : strict_partitions(w)) {
        if (la.length() > 4 || la.parts.back() <= k) continue;
        c.check(theta_formal(Shape(la.parts, k)) == q_pfaffian(la), "Pfaffian regime " + la.parts_str());
      }
}

void geometrization(Ctx& c, int n) {
  auto run = [&](Group g, LieType t, int r) {
    for (const auto& w : all_elements(g, r)) {
      auto a = minimal_a(w, t), b = minimal_b(w, t);
      auto f = emit_locus(w, t, r, a, b);
      auto roots = chern_roots(t, r, a, b);
      Poly lhs = evaluate_locus(f, roots);
      Poly rhs = geometrize(double_schubert(w, t), t, r);
      std::string tag = std::string(1, lie_char(t)) + " " + w.str();
      c.check(ideal_equal(lhs, rhs, t, r), tag);
      if (t != LieType::A)
        c.check(ideal_equal(evaluate_locus(f, roots, LocusForm::quotient), lhs, t, r), tag + " quotient form");
    }
  };
  run(Group::BC, LieType::C, n);
  if (n >= 2) run(Group::D, LieType::D, n);
  run(Group::A, LieType::A, n + 1);
}

void stability(Ctx& c, int n) {
  auto run = [&](Group g, int r) {
    LieType t = lie_of(g);
    for (const auto& w : all_elements(g, r)) {
      int m = t == LieType::A ? 0 : std::max(2, length(w));
      SchubertOptions o;
      o.m = m;
      Poly f = double_schubert(w, t, o);
      std::string tag = std::string(1, lie_char(t)) + " " + w.str();
      c.check(double_schubert_concrete(w, t, m, true, true, r) == f, tag + " in rank " + std::to_string(r));
      c.check(double_schubert_concrete(w, t, m, true, true, r + 1) == f, tag + " in rank " + std::to_string(r + 1));
      for (int i = 1; i < m; ++i) c.check(swap_x(f, i) == f, tag + " x transposition " + std::to_string(i));
      SchubertOptions lo, hi;
      lo.rank = r;
      hi.rank = r + 1;
      c.check(double_schubert(w, t, lo) == double_schubert(w, t, hi), tag + " stable form");
    }
  };
  run(Group::BC, n);
  if (n >= 2) run(Group::D, n);
  run(Group::A, n + 1);
}

struct Entry {
  std::string name;
  int def;
  int max;
  std::function<void(Ctx&, int)> fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r{{"goldens", 5, 7, goldens},          {"bijection", 5, 7, bijection},
                                    {"xtoy", 4, 5, xtoy},                {"uniq", 3, 4, uniq},
                                    {"split", 3, 4, split},              {"transition", 3, 4, transition},
                                    {"relations", 3, 5, relations},      {"geometrization", 3, 4, geometrization},
                                    {"stability", 3, 4, stability}};
  return r;
}

const Entry& find_entry(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return e;
  throw ValidationError("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.name);
    return v;
  }();
  return names;
}

int default_suite_n(const std::string& name) { return find_entry(name).def; }

SuiteResult run_suite(const std::string& name, int n) {
  const Entry& e = find_entry(name);
  if (n == 0) n = e.def;
  if (n < 1 || n > e.max)
    throw ValidationError("suite " + name + " takes n in 1.." + std::to_string(e.max));
  SuiteResult r;
  r.name = name;
  Ctx c{r};
  auto t0 = std::chrono::steady_clock::now();
  try {
    e.fn(c, n);
  } catch (const std::exception& ex) {
    r.pass = false;
    ++r.failures;
    r.detail.push_back(std::string("exception: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace schubert
