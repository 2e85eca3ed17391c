#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schubert/error.hpp"
#include "schubert/nilcox.hpp"
#include "schubert/polyring.hpp"
#include "schubert/schubops.hpp"

using namespace schubert;

namespace {

Poly y(int i) { return Poly::var(Sym::y, i); }
Poly z(int i) { return Poly::var(Sym::z, i); }
Poly bx(int i) { return Poly::var(Sym::bx, i); }
Poly by(int i) { return Poly::var(Sym::by, i); }

LieType lie_of(Group g) { return g == Group::A ? LieType::A : g == Group::D ? LieType::D : LieType::C; }

void check_uniqueness_system(Group g, int n) {
  LieType t = lie_of(g);
  for (const auto& w : all_elements(g, n)) {
    Poly f = double_schubert(w, t);
    CHECK(f.constant_term() == (w.is_identity() ? 1 : 0));
    for (int a : simple_letters(g, n)) {
      auto ws = w.right_simple(a), sw = w.left_simple(a);
      Poly want_y = length(ws) < length(w) ? double_schubert(ws, t) : Poly();
      Poly want_z = length(sw) < length(w) ? double_schubert(sw, t) : Poly();
      CHECK_MESSAGE(divided_difference(f, Axis::y, a) == want_y, (w.str() + " y" + std::to_string(a)));
      CHECK_MESSAGE(divided_difference(f, Axis::z, a) == want_z, (w.str() + " z" + std::to_string(a)));
    }
  }
}

}  // namespace

TEST_CASE("divided difference values") {
  CHECK(divided_difference(Poly(5), Axis::y, 0).is_zero());
  CHECK(divided_difference(Poly(5), Axis::y, 2).is_zero());
  CHECK(divided_difference(y(1), Axis::y, 1) == Poly(1));
  CHECK(divided_difference(q_stable(1), Axis::y, 0) == Poly(1));
  CHECK(divided_difference(q_stable(1), Axis::z, 0) == Poly(1));
  CHECK(divided_difference(y(1), Axis::y, 0) == Poly(-1));
  CHECK(s_action(q_stable(2), 0) == q_stable(2) + y(1) * q_stable(1) * 2 + y(1) * y(1) * 2);
  CHECK_THROWS_AS(divided_difference(Poly::var(Sym::x, 1), Axis::y, 0), ValidationError);
}

TEST_CASE("omega is an involution and operators square to zero") {
  std::vector<Poly> basis{y(1), z(2), q_stable(1), q_stable(3), y(1) * y(2) * z(1), q_stable(2) * y(2) * y(2),
                          q_stable(3) * q_stable(1) * z(1) * y(2), y(1).pow(3) * y(2).pow(2) * z(1)};
  for (const auto& f : basis) {
    CHECK(omega(omega(f)) == f);
    for (int a : {0, 1, 2, kBox}) {
      CHECK(divided_difference(divided_difference(f, Axis::y, a), Axis::y, a).is_zero());
      CHECK(divided_difference(divided_difference(f, Axis::z, a), Axis::z, a).is_zero());
    }
  }
}

TEST_CASE("uniqueness system type C") { check_uniqueness_system(Group::BC, 3); }
TEST_CASE("uniqueness system type A") { check_uniqueness_system(Group::A, 4); }
TEST_CASE("uniqueness system type D") { check_uniqueness_system(Group::D, 3); }

TEST_CASE("geometrization") {
  CHECK(geometrize(q_stable(1), LieType::C, 2) == xi(1, 2));
  CHECK(ideal_equal(geometrize(q_stable(2), LieType::C, 2), xi(2, 2), LieType::C, 2));
  CHECK(geometrize(q_stable(2), LieType::C, 2) != xi(2, 2));
  CHECK(geometrize(y(1), LieType::C, 3) == -bx(1));
  CHECK(geometrize(y(4), LieType::C, 3).is_zero());
  CHECK(geometrize(z(2), LieType::A, 3) == by(2));
  CHECK(ideal_equal(geometrize(q_stable(3) * Rational(1, 2), LieType::D, 3), xi(3, 3) * Rational(1, 2), LieType::D, 3));
  CHECK_THROWS_AS(geometrize(Poly::var(Sym::p, 2), LieType::C, 2), ValidationError);
}

TEST_CASE("ideal equality") {
  CHECK(ideal_equal(bx(1) * bx(1), by(1) * by(1), LieType::C, 1));
  CHECK(!ideal_equal(bx(1), by(1), LieType::C, 1));
  CHECK(ideal_equal(bx(1), by(1), LieType::A, 1));
  CHECK(ideal_equal(bx(1) * bx(2), by(1) * by(2), LieType::D, 2));
  CHECK(!ideal_equal(bx(1) * bx(2), by(1) * by(2), LieType::C, 2));
  CHECK(ideal_equal(bx(1) + bx(2) + bx(3) + bx(4), by(1) + by(2) + by(3) + by(4), LieType::A, 4));
  CHECK(!ideal_equal(bx(1), by(1), LieType::A, 4));
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 4; ++r) {
      Poly rel = xi(r, n) * xi(r, n);
      for (int i = 1; i <= r; ++i) rel += xi(r + i, n) * xi(r - i, n) * (i % 2 ? -2 : 2);
      CHECK(ideal_equal(rel, Poly(), LieType::C, n));
      Poly img = geometrize(q_stable(r), LieType::C, n).pow(2);
      for (int i = 1; i <= r; ++i)
        img += geometrize(q_stable(r + i), LieType::C, n) * geometrize(q_stable(r - i), LieType::C, n) * (i % 2 ? -2 : 2);
      CHECK(ideal_equal(img, Poly(), LieType::C, n));
    }
  // membership cross-check: generator times small monomials
  for (int n = 1; n <= 2; ++n) {
    auto X2 = alphabet(Sym::bx, 1, n), Y2 = alphabet(Sym::by, 1, n);
    for (auto& a : X2) a = a * a;
    for (auto& b : Y2) b = b * b;
    std::vector<Poly> mons{Poly(1), bx(1), by(n), bx(1) * by(1), by(1) * by(n)};
    for (int i = 1; i <= n; ++i)
      for (const auto& m : mons) {
        Poly gen = elementary(i, X2) - elementary(i, Y2);
        CHECK(ideal_equal(gen * m, Poly(), LieType::C, n));
        CHECK(!ideal_equal(gen * m + bx(1), Poly(), LieType::C, n));
      }
  }
}
