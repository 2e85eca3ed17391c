#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schubert/error.hpp"
#include "schubert/nilcox.hpp"
#include "schubert/polyring.hpp"
#include "schubert/transition.hpp"

using namespace schubert;

namespace {

SignedPermutation P(Group g, const std::string& s) { return SignedPermutation::parse(g, s); }

std::vector<SignedPermutation> symmetric_group(int n) { return all_elements(Group::A, n); }

}  // namespace

TEST_CASE("trivial trees") {
  auto t = transition_tree(SignedPermutation::identity(Group::A, 3), TreeKind::A);
  CHECK(t.nodes.size() == 1);
  CHECK(t.leaves.size() == 1);
  auto g = transition_tree(P(Group::A, "1,3,2,4"), TreeKind::A);
  CHECK(g.nodes.size() == 1);
  CHECK(stanley_coeffs(P(Group::A, "1,3,2,4"), TreeKind::A) == std::map<Shape, long>{{Shape({1}), 1}});
  auto wla = P(Group::BC, "3,5,8,-4,-1,2,6,7");
  auto c = stanley_coeffs(wla, TreeKind::C, 3);
  REQUIRE(c.size() == 1);
  CHECK(c.begin()->first.parts == std::vector<int>{7, 4, 3, 1, 1});
  CHECK(c.begin()->second == 1);
}

TEST_CASE("143265") {
  auto w = P(Group::A, "1,4,3,2,6,5");
  auto t = transition_tree(w, TreeKind::A);
  CHECK(t.leaves.size() == 3);
  CHECK(t.nodes[0].r == 5);
  CHECK(t.nodes[0].s == 6);
  long fg = 0;
  for (const auto& la : partitions(4)) fg += fg_tableau_count(w, la);
  CHECK(fg == 3);
  // regression values for the leaf shapes
  auto c = t.shape_counts();
  CHECK(c == std::map<Shape, long>{{Shape({2, 1, 1}), 1}, {Shape({2, 2}), 1}, {Shape({3, 1}), 1}});
  for (const auto& [la, n] : c) CHECK(fg_tableau_count(w, la) == n);
}

TEST_CASE("3,-1,2,6,4,5 with k = 1") {
  auto w = P(Group::BC, "3,-1,2,6,4,5");
  auto c = stanley_coeffs(w, TreeKind::C, 1);
  std::map<Shape, long> want{{Shape({2, 1, 1, 1}, 1), 1}, {Shape({5}, 1), 1}, {Shape({3, 1, 1}, 1), 2},
                             {Shape({4, 1}, 1), 1},       {Shape({3, 2}, 1), 1}};
  CHECK(c == want);
}

TEST_CASE("tree invariants") {
  for (const auto& w : all_elements(Group::BC, 3))
    for (int k = 0; k <= 3; ++k) {
      if (!increasing_up_to(w, k)) continue;
      auto t = transition_tree(w, TreeKind::C, k);
      long weight = 0;
      for (const auto& nd : t.nodes) {
        CHECK(length(nd.w) == length(w));
        CHECK(increasing_up_to(nd.w, k));
      }
      for (const auto& [leaf, la] : t.leaves) {
        CHECK(is_grassmannian(leaf, k));
        weight += la.weight();
      }
      CHECK(weight == long(t.leaves.size()) * length(w));
    }
  for (const auto& w : all_elements(Group::D, 3))
    for (int k : {kBox, 1, 2, 3}) {
      if (k >= 2 && !increasing_up_to(w, k)) continue;
      auto t = transition_tree(w, TreeKind::D, k);
      for (const auto& nd : t.nodes) CHECK(length(nd.w) == length(w));
      for (const auto& [leaf, la] : t.leaves) CHECK(la.weight() == length(w));
    }
  CHECK_THROWS_AS(transition_tree(P(Group::BC, "2,1"), TreeKind::C, 2), PreconditionError);
}

TEST_CASE("shift invariance of type A shapes") {
  for (const auto& w : symmetric_group(4)) {
    if (!is_grassmannian_perm(w)) continue;
    std::vector<int> vals{1};
    for (int x : w.values()) vals.push_back(x + 1);
    CHECK(grassmannian_perm_shape(w) == grassmannian_perm_shape(SignedPermutation(Group::A, vals)));
  }
}

TEST_CASE("Fomin-Greene tableaux count leaves") {
  CHECK(fg_tableau_count(P(Group::A, "1,2,4,3"), Shape({1})) == 1);
  CHECK(fg_tableau_count(P(Group::A, "2,1"), Shape({2})) == 0);
  for (int n : {4, 5})
    for (const auto& w : symmetric_group(n)) {
      if (n == 5 && w.values()[0] % 2 == 0) continue;
      auto c = stanley_coeffs(w, TreeKind::A);
      for (const auto& la : partitions(length(w))) {
        long want = c.count(la) ? c.at(la) : 0;
        CHECK_MESSAGE(fg_tableau_count(w, la) == want, (w.str() + " " + la.str()));
      }
    }
}

TEST_CASE("Kraskiewicz tableaux count k = 0 leaves") {
  CHECK(kraskiewicz_count(P(Group::BC, "-1"), Shape({1})) == 1);
  CHECK(kraskiewicz_count(P(Group::BC, "-2,-1"), Shape({2, 2})) == 0);
  for (const auto& w : all_elements(Group::BC, 3)) {
    auto e = stanley_coeffs(w, TreeKind::C, 0);
    for (const auto& la : strict_partitions(length(w))) {
      long want = e.count(Shape(la.parts, 0)) ? e.at(Shape(la.parts, 0)) : 0;
      CHECK_MESSAGE(kraskiewicz_count(w, la) == want, (w.str() + " " + la.str()));
    }
  }
}

TEST_CASE("Stanley functions expand in Q and P") {
  for (const auto& w : all_elements(Group::BC, 3)) {
    auto coords = q_basis_expand_stable(stanley_function(w));
    std::map<Shape, Rational> want;
    for (const auto& [la, n] : stanley_coeffs(w, TreeKind::C, 0)) want[Shape(la.parts)] = n;
    CHECK_MESSAGE(coords == want, w.str());
  }
  for (const auto& w : all_elements(Group::D, 3)) {
    auto coords = p_basis_expand_stable(stanley_function(w));
    std::map<Shape, Rational> want;
    for (const auto& [la, n] : stanley_coeffs(w, TreeKind::D, kBox)) want[Shape(la.parts)] = n;
    CHECK_MESSAGE(coords == want, w.str());
  }
}

TEST_CASE("double Schubert polynomials expand in theta polynomials") {
  SchubertOptions noz;
  noz.z = false;
  for (const auto& w : all_elements(Group::BC, 3))
    for (int k = 0; k <= 3; ++k) {
      if (!increasing_up_to(w, k)) continue;
      Poly lhs = double_schubert(w, LieType::C, noz).subs([&](Var v) -> std::optional<Poly> {
        if (v.sym == Sym::y && v.index > k) return Poly();
        return std::nullopt;
      });
      Poly rhs;
      for (const auto& [la, n] : stanley_coeffs(w, TreeKind::C, k))
        rhs += theta_poly(la, kStable, alphabet(Sym::y, 1, k)) * Rational(n);
      CHECK_MESSAGE(lhs == rhs, (w.str() + " k=" + std::to_string(k)));
    }
}

TEST_CASE("dot export") {
  auto t = transition_tree(P(Group::A, "1,4,3,2,6,5"), TreeKind::A);
  auto dot = tree_dot(t);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
}
