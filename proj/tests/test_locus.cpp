#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schubert/error.hpp"
#include "schubert/locus.hpp"
#include "schubert/nilcox.hpp"
#include "schubert/schubops.hpp"
#include "schubert/split.hpp"
#include "schubert/transition.hpp"

using namespace schubert;

namespace {

SignedPermutation P(Group g, const std::string& s) { return SignedPermutation::parse(g, s); }

Shape middle_shape(const LocusTerm& t, int q) { return t.factors[q - 1].shape; }

}  // namespace

TEST_CASE("rank conditions") {
  auto d = rank_conditions(P(Group::BC, "-1"), LieType::C, 1, {0});
  CHECK(d[0][0] == 1);
  CHECK(d[0][1] == 1);
  // identity: generic intersection dimensions
  for (int n : {2, 3}) {
    auto id = SignedPermutation::identity(Group::BC, n);
    auto c = rank_conditions(id, LieType::C, n, {0, 1});
    for (int r = 0; r < 2; ++r)
      for (int s = 1; s <= 2 * n; ++s) CHECK(c[r][s - 1] == std::max(0, (n - r) + s - 2 * n));
    auto a = rank_conditions(SignedPermutation::identity(Group::A, n + 1), LieType::A, n + 1, {1, 2});
    for (int r = 0; r < 2; ++r)
      for (int s = 1; s <= n + 1; ++s) CHECK(a[r][s - 1] == std::max(0, (r + 1) + s - (n + 1)));
  }
  CHECK_THROWS_AS(rank_conditions(P(Group::BC, "2,1"), LieType::C, 2, {0}), PreconditionError);
  CHECK_THROWS_AS(rank_conditions(P(Group::A, "3,1,2"), LieType::A, 2, {1}), ValidationError);
}

TEST_CASE("Grassmannian rank tables") {
  // dim(Sigma cap F_{d+j-la_j}) >= j in G(m, N)
  int N = 5;
  for (const auto& w : all_elements(Group::A, N)) {
    if (!is_grassmannian_perm(w) || w.is_identity()) continue;
    int m = 0;
    for (int i = 1; i < N; ++i)
      if (w.at(i) > w.at(i + 1)) m = i;
    auto la = grassmannian_perm_shape(w);
    int dd = N - m;
    auto tab = rank_conditions(w, LieType::A, N, {m});
    for (int s = 1; s <= N; ++s) {
      int want = std::max(0, m + s - N);
      for (int j = 1; j <= m; ++j)
        if (dd + j - la.part(j) <= s) want = std::max(want, j);
      CHECK_MESSAGE(tab[0][s - 1] == want, w.str());
    }
  }
  // special Schubert loci Sigma cap F_{n+k+1-r} != 0: first s exceeding the generic bound
  int n = 3;
  for (int k = 0; k < n; ++k)
    for (int r = 1; r <= n + k; ++r) {
      auto w = shape_to_grassmannian(Shape({r}, k), LieType::C);
      auto tab = rank_conditions(w, LieType::C, n, {k});
      int first = 0;
      for (int s = 2 * n; s >= 1; --s)
        if (tab[0][s - 1] > std::max(0, (n - k) + s - 2 * n)) first = s;
      CHECK_MESSAGE(first == n + k + 1 - r, (w.str() + " k=" + std::to_string(k)));
      CHECK(tab[0][first - 1] == 1);
    }
}

TEST_CASE("locus of 3,-1,-2 with a = (1,2), b = (0,1)") {
  auto w = P(Group::BC, "3,-1,-2");
  auto f = emit_locus(w, LieType::C, 3, {1, 2}, {0, 1});
  REQUIRE(f.terms.size() == 3);
  std::map<Shape, int> mids;
  for (const auto& t : f.terms) {
    CHECK(t.coeff == 1);
    CHECK(t.factors.size() == 3);
    ++mids[middle_shape(t, 2)];
  }
  CHECK(mids == std::map<Shape, int>{{Shape({4, 2}, 1), 1}, {Shape({3, 2}, 1), 2}});
  auto tex = locus_latex(f);
  CHECK(tex.find("\\Theta_{(4,2)}(E-E_{1}-F_{3})") != std::string::npos);
  CHECK(tex.find("s_{(1)}(F_{3}-F_{4})") != std::string::npos);
  CHECK(locus_latex(f, LocusForm::quotient).find("s_{\\widetilde{(1)}}(\\widehat{Q}_{2})") != std::string::npos);
  // the z-term carries the sign: s_1 of Qh_2 is -by_1
  auto roots = chern_roots(LieType::C, 3, {1, 2}, {0, 1});
  for (const auto& t : f.terms)
    if (t.factors[0].shape.weight() == 1) {
      LocusFormula one = f;
      one.terms = {t};
      one.terms[0].factors[1].shape = Shape({}, 1);
      CHECK(evaluate_locus(one, roots) == -Poly::var(Sym::by, 1));
    }
}

TEST_CASE("p = 1 gives the Giambelli formulas") {
  int n = 4;
  for (const auto& la : {Shape({4, 2, 1}, 1), Shape({3, 1}, 0), Shape({5, 2}, 2)}) {
    auto w = shape_to_grassmannian(la, LieType::C);
    auto f = emit_locus(w, LieType::C, n, {la.k}, minimal_b(w, LieType::C));
    int q = int(f.b.size());
    std::vector<LocusTerm> kept;
    for (const auto& t : f.terms) {
      bool trivial_f = true;
      for (int j = 0; j + 1 < q; ++j) trivial_f = trivial_f && t.factors[j].shape.weight() == 0;
      if (trivial_f) kept.push_back(t);
    }
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].coeff == 1);
    CHECK(kept[0].factors.back().shape == la);
    CHECK(kept[0].factors.back().kind == FactorKind::theta);
    CHECK(kept[0].factors.back().difference.str() == "E - E_1 - F_" + std::to_string(n));
  }
  // type A: s of the conjugate shape on E - E_1 - F, trivial F
  auto om = P(Group::A, "1,3,5,2,4");
  auto f = emit_locus(om, LieType::A, 5, {3}, minimal_b(om, LieType::A));
  LocusFormula kept = f;
  kept.terms.clear();
  for (const auto& t : f.terms)
    if (t.factors[0].shape.weight() == 0) kept.terms.push_back(t);
  REQUIRE(kept.terms.size() == 1);
  CHECK(kept.terms[0].factors[1].shape == grassmannian_perm_shape(om));
  CHECK(locus_latex(kept) == "[\\mathfrak{X}_{13524}] = s_{\\widetilde{(2,1)}}(E-E_{1}-F_{3})");
}

TEST_CASE("loci evaluate to geometrized Schubert polynomials") {
  int n = 3;
  for (const auto& w : all_elements(Group::BC, n)) {
    auto a = minimal_a(w, LieType::C), b = minimal_b(w, LieType::C);
    auto f = emit_locus(w, LieType::C, n, a, b);
    auto roots = chern_roots(LieType::C, n, a, b);
    Poly lhs = evaluate_locus(f, roots), rhs = geometrize(double_schubert(w, LieType::C), LieType::C, n);
    CHECK_MESSAGE(ideal_equal(lhs, rhs, LieType::C, n), w.str());
    CHECK_MESSAGE(ideal_equal(evaluate_locus(f, roots, LocusForm::quotient), lhs, LieType::C, n), w.str());
  }
  for (const auto& w : all_elements(Group::D, n)) {
    auto a = minimal_a(w, LieType::D), b = minimal_b(w, LieType::D);
    auto f = emit_locus(w, LieType::D, n, a, b);
    auto roots = chern_roots(LieType::D, n, a, b);
    Poly lhs = evaluate_locus(f, roots), rhs = geometrize(double_schubert(w, LieType::D), LieType::D, n);
    CHECK_MESSAGE(ideal_equal(lhs, rhs, LieType::D, n), w.str());
    CHECK_MESSAGE(ideal_equal(evaluate_locus(f, roots, LocusForm::quotient), lhs, LieType::D, n), w.str());
  }
  for (const auto& w : all_elements(Group::A, 4)) {
    auto a = minimal_a(w, LieType::A), b = minimal_b(w, LieType::A);
    auto f = emit_locus(w, LieType::A, 4, a, b);
    Poly lhs = evaluate_locus(f, chern_roots(LieType::A, 4, a, b));
    CHECK_MESSAGE(ideal_equal(lhs, geometrize(double_schubert(w, LieType::A), LieType::A, 4), LieType::A, 4), w.str());
  }
}

TEST_CASE("type B scaling") {
  int n = 3;
  for (const auto& w : all_elements(Group::BC, n)) {
    auto a = minimal_a(w, LieType::C), b = minimal_b(w, LieType::C);
    auto fb = emit_locus(w, LieType::B, n, a, b);
    auto fc = emit_locus(w, LieType::C, n, a, b);
    Rational s(1);
    for (int i = 0; i < w.negatives(); ++i) s /= 2;
    CHECK(fb.theta_scale == s);
    Poly eb = evaluate_locus(fb, chern_roots(LieType::B, n, a, b));
    Poly ec = evaluate_locus(fc, chern_roots(LieType::C, n, a, b));
    CHECK_MESSAGE(eb == ec * s, w.str());
    // every contributing middle factor has the negatives of w
    for (const auto& fac : reduced_factorizations(w, int(a.size() + b.size()) - 1)) {
      bool unsigned_outer = true;
      for (std::size_t j = 0; j < fac.size(); ++j)
        if (j + 1 != b.size()) unsigned_outer = unsigned_outer && fac[j].in_symmetric();
      if (unsigned_outer) CHECK(fac[b.size() - 1].negatives() == w.negatives());
    }
  }
  auto fb = emit_locus(P(Group::BC, "-1"), LieType::B, 2, {0}, {0});
  CHECK(locus_text(fb).find("F_3") != std::string::npos);
}

TEST_CASE("evaluation errors and trivial formulas") {
  LocusFormula empty;
  empty.type = LieType::C;
  empty.n = 2;
  CHECK(evaluate_locus(empty, {}).is_zero());
  CHECK(locus_text(empty).find("= 0") != std::string::npos);
  auto f = emit_locus(P(Group::BC, "-1"), LieType::C, 2, {0}, {0});
  auto roots = chern_roots(LieType::C, 2, {0}, {0});
  roots["E_1"].pop_back();
  CHECK_THROWS_AS(evaluate_locus(f, roots), ValidationError);
  CHECK_THROWS_AS(emit_locus(P(Group::BC, "2,1"), LieType::C, 2, {0}, {0}), PreconditionError);
  CHECK_THROWS_AS(emit_locus(P(Group::BC, "2,1"), LieType::C, 2, {1}, {1}), UnsupportedError);
}
