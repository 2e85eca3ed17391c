#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/error.hpp"
#include "schubert/shapes.hpp"

using namespace schubert;

namespace {
std::set<std::pair<int, int>> P(std::initializer_list<std::pair<int, int>> l) { return {l.begin(), l.end()}; }

// Brute-force count of Grassmannian elements.
int count_grassmannian(Group g, int n, int k) {
  int c = 0;
  for (const auto& w : all_elements(g, n))
    if (is_grassmannian(w, k)) ++c;
  return c;
}
}  // namespace

TEST_CASE("shape basics") {
  Shape s({7, 4, 3, 1, 1}, 3);
  CHECK(s.weight() == 16);
  CHECK(s.ell_k() == 2);
  CHECK(s.conjugate().parts == std::vector<int>{5, 3, 3, 2, 1, 1, 1});
  CHECK(s.is_k_strict());
  CHECK_FALSE(Shape({4, 4}, 3).is_k_strict());
  CHECK_THROWS_AS(Shape({4, 4}, 3).validate(false), ValidationError);
  CHECK_THROWS_AS(Shape({3, 1}, 1, 0).validate(true), ValidationError);
  CHECK(Shape::parse(s.str()) == s);
  CHECK(Shape::parse("3,1,1", 1) == Shape({3, 1, 1}, 1));
}

TEST_CASE("order ideals") {
  CHECK(order_ideal(Shape({3, 1, 1}, 1), IdealVariant::C).pairs == P({{1, 2}}));
  CHECK(order_ideal(Shape({3, 1, 1}, 1, 2), IdealVariant::Cprime).pairs == P({{1, 2}, {1, 3}}));
  CHECK(order_ideal(Shape({}, 2), IdealVariant::C).pairs.empty());
  // pairs reaching past the last row
  CHECK(order_ideal(Shape({10}, 0), IdealVariant::C).contains(1, 9));
  CHECK_FALSE(order_ideal(Shape({10}, 0), IdealVariant::C).contains(1, 11));
}

TEST_CASE("bijection examples in rank 8") {
  auto w = SignedPermutation::parse(Group::BC, "3,5,8,-4,-1,2,6,7");
  CHECK(grassmannian_to_shape(w, 3) == Shape({7, 4, 3, 1, 1}, 3));
  CHECK(shape_to_grassmannian(Shape({7, 4, 3, 1, 1}, 3), LieType::C, 8) == w);
  auto v = SignedPermutation::parse(Group::D, "-2,6,7,-5,-3,-1,4,8");
  CHECK(grassmannian_to_shape(v, 3) == Shape({7, 5, 3, 2}, 3, 2));
  CHECK(shape_to_grassmannian(Shape({7, 5, 3, 2}, 3, 2), LieType::D, 8) == v);
  CHECK(shape_to_grassmannian(Shape({}, 2), LieType::C).is_identity());
  CHECK(grassmannian_to_shape(SignedPermutation::parse(Group::BC, "-2,-1,3"), 0) == Shape({2, 1}, 0));
  CHECK_THROWS_AS(grassmannian_to_shape(SignedPermutation::parse(Group::BC, "-1,-2"), 0), PreconditionError);
}

TEST_CASE("type A shapes and conjugation") {
  auto om = SignedPermutation::parse(Group::A, "1,3,5,2,4");
  Shape la = grassmannian_to_shape(om, 3);
  CHECK(la.parts == std::vector<int>{2, 1});
  CHECK(shape_to_grassmannian(la, LieType::A, 5) == om);
  // viewed in W_infinity, the shape is the conjugate
  CHECK(grassmannian_to_shape(om.with_group(Group::BC), 3).parts == la.conjugate().parts);
}

TEST_CASE("roundtrip over rectangles") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto shapes = shapes_in_rectangle(LieType::C, n, k);
      CHECK(int(shapes.size()) == count_grassmannian(Group::BC, n, k));
      for (const auto& s : shapes) {
        auto w = shape_to_grassmannian(s, LieType::C, n);
        CHECK(w.rank() == n);
        CHECK(is_grassmannian(w, k));
        CHECK(length(w) == s.weight());
        CHECK(grassmannian_to_shape(w, k) == s);
        CHECK(ideal_of_grassmannian(w, k) == order_ideal(s, IdealVariant::C));
        auto p = index_set(s, n, LieType::C);
        for (std::size_t a = 0; a < p.size(); ++a)
          for (std::size_t b = 0; b < p.size(); ++b) CHECK(p[a] + p[b] != 2 * n + 1);
        for (std::size_t a = 1; a < p.size(); ++a) CHECK(p[a - 1] < p[a]);
      }
    }
    for (int k : {kBox, 1, 2, 3, 4, 5}) {
      if (k > n || (k == kBox && n < 2)) continue;
      auto shapes = shapes_in_rectangle(LieType::D, n, k);
      CHECK(int(shapes.size()) == count_grassmannian(Group::D, n, k));
      for (const auto& s : shapes) {
        auto w = shape_to_grassmannian(s, LieType::D, n);
        CHECK(is_grassmannian(w, k));
        CHECK(length(w) == s.weight());
        CHECK(grassmannian_to_shape(w, k) == s);
        CHECK(ideal_of_grassmannian(w, k) == order_ideal(s, IdealVariant::Cprime));
      }
    }
    for (int m = 1; m < n; ++m)
      for (const auto& s : shapes_in_rectangle(LieType::A, n, m)) {
        auto w = shape_to_grassmannian(s, LieType::A, n);
        CHECK(length(w) == s.weight());
        CHECK(grassmannian_to_shape(w, m) == s);
      }
  }
}

TEST_CASE("index sets") {
  CHECK(index_set(Shape({}, 1), 5, LieType::C) == std::vector<int>{7, 8, 9, 10});
  CHECK(index_set(Shape({3, 1, 1}, 1), 5, LieType::C) == std::vector<int>{4, 6, 8, 10});
  CHECK_THROWS_AS(index_set(Shape({7}, 1), 5, LieType::C), ValidationError);
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& s : shapes_in_rectangle(LieType::D, n, k)) {
        auto p = index_set(s, n, LieType::D);
        for (std::size_t a = 1; a < p.size(); ++a) CHECK(p[a - 1] < p[a]);
        for (int a : p)
          for (int b : p) CHECK(a + b != 2 * n + 1);
      }
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < n; ++k)
      for (const auto& s : shapes_in_rectangle(LieType::B, n, k)) {
        auto p = index_set(s, n, LieType::B);
        for (int a : p) {
          CHECK(a != n + 1);
          for (int b : p) CHECK(a + b != 2 * n + 2);
        }
      }
}
