#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schubert/error.hpp"
#include "schubert/kernels.hpp"
#include "schubert/poly.hpp"

using namespace schubert;

namespace {
Poly y(int i) { return Poly::var(Sym::y, i); }
Poly z(int i) { return Poly::var(Sym::z, i); }

Poly random_poly(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> var(1, 4), ex(0, 3), co(-5, 5);
  Poly r;
  for (int t = 0; t < terms; ++t) {
    Poly m(co(rng));
    for (int k = 0; k < 3; ++k) m *= Poly::var(Var{Sym(int(Sym::x) + k % 2), var(rng)}, 1).pow(ex(rng));
    r += m;
  }
  return r;
}
}  // namespace

TEST_CASE("variable names round trip") {
  for (Var v : {Var{Sym::c, 5}, Var{Sym::tau, 3}, Var{Sym::taup, 1}, Var{Sym::p, 7}, Var{Sym::bx, 2}, Var{Sym::by, 4},
                Var{Sym::z, 12}})
    CHECK(parse_var(var_name(v)) == v);
  CHECK_THROWS_AS(parse_var("q1"), ValidationError);
}

TEST_CASE("basic arithmetic") {
  Poly f = (y(1) - z(1)) * (y(1) - z(2));
  CHECK(f.size() == 4);
  CHECK(f.degree() == 2);
  CHECK((f - f).is_zero());
  CHECK(((y(1) + 1).pow(3)).coeff(Monomial::of(Var{Sym::y, 1}, 2)) == 3);
  CHECK(f.divide_exact(y(1) - z(2)) == y(1) - z(1));
  CHECK_THROWS_AS(f.divide_exact(y(2)), InternalError);
  CHECK(Poly(Rational(1, 2)).str() == "1/2");
}

TEST_CASE("substitution") {
  Poly f = y(1) * y(1) * z(2) + 3 * y(2);
  Poly g = f.subs(std::map<Var, Poly>{{Var{Sym::y, 1}, z(1) + 1}});
  CHECK(g == (z(1) + 1).pow(2) * z(2) + 3 * y(2));
  Poly h = f.rename([](Var v) { return v.sym == Sym::y ? std::make_pair(-1, Var{Sym::z, v.index}) : std::make_pair(1, v); });
  CHECK(h == z(1) * z(1) * z(2) - 3 * z(2));
  CHECK(f.truncate(Sym::y, 1) == y(1) * y(1) * z(2));
}

TEST_CASE("parallel multiply agrees with serial") {
  std::mt19937 rng(7);
  for (int it = 0; it < 10; ++it) {
    Poly a = random_poly(rng, 40), b = random_poly(rng, 60);
    CHECK(kernels::mul_parallel(a, b) == kernels::mul_serial(a, b));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("printing") {
  CHECK((y(1) - z(2)).str() == "y1 - z2");
  CHECK((y(1) - z(2)).latex() == "y_1 - z_2");
}
