#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/formal.hpp"

using namespace schubert;

namespace {
Poly c(int r) { return csym(r); }
Poly d(int r) { return dsym(r); }
Poly tau(int r) { return Poly::var(Sym::tau, r); }
Poly taup(int r) { return Poly::var(Sym::taup, r); }

RaisingSpec plain(int rows) {
  RaisingSpec s;
  s.rows = rows;
  return s;
}

RaisingSpec all_double(int rows) {
  RaisingSpec s;
  s.rows = rows;
  for (int i = 1; i <= rows; ++i)
    for (int j = i + 1; j <= rows; ++j) s.double_pairs.pairs.insert({i, j});
  return s;
}
}  // namespace

TEST_CASE("determinant expansion of (5,4,2)") {
  Poly want = c(5) * c(4) * c(2) - c(6) * c(3) * c(2) - c(5) * c(5) * c(1) + c(7) * c(3) * c(1) + c(6) * c(5) -
              c(7) * c(4);
  CHECK(expand_raising(plain(3), {5, 4, 2}) == want);
  CHECK(jacobi_trudi({5, 4, 2}) == want);
}

TEST_CASE("plain raising equals determinant") {
  std::vector<int> a;
  int checked = 0;
  std::function<void(int)> rec = [&](int len) {
    if (int(a.size()) == len) {
      CHECK(expand_raising(plain(len), a) == jacobi_trudi(a));
      ++checked;
      return;
    }
    for (int x = -2; x <= 6; ++x) {
      a.push_back(x);
      rec(len);
      a.pop_back();
    }
  };
  for (int len = 1; len <= 3; ++len) rec(len);
  // length 4 on a coarser grid
  for (int x1 = -2; x1 <= 6; x1 += 2)
    for (int x2 = -2; x2 <= 6; x2 += 3)
      for (int x3 = -1; x3 <= 6; x3 += 2)
        for (int x4 = -2; x4 <= 6; x4 += 4) CHECK(expand_raising(plain(4), {x1, x2, x3, x4}) == jacobi_trudi({x1, x2, x3, x4}));
  CHECK(checked > 700);
}

TEST_CASE("theta examples") {
  CHECK(theta_formal(Shape({3, 1, 1}, 1)) == c(3) * c(1) * c(1) - c(4) * c(1) - c(3) * c(2));
  CHECK(theta_formal(Shape({4}, 2)) == c(4));
  CHECK(theta_formal(Shape({}, 2)) == Poly(1));
}

TEST_CASE("eta examples") {
  Poly want = tau(3) * taup(1) * (tau(1) + taup(1)) - 2 * tau(4) * taup(1) - tau(3) * tau(2) + tau(5);
  CHECK(eta_formal(Shape({3, 1, 1}, 1, 2)) == want);
  CHECK(eta_formal(Shape({1}, 2)) == tau(1));
  CHECK(eta_formal(Shape({2}, 2, 1)) == tau(2));
  CHECK(eta_formal(Shape({2}, 2, 2)) == taup(2));
  for (int k = 1; k <= 4; ++k)
    CHECK(c_to_tau(c(k), k) == eta_formal(Shape({k}, k, 1)) + eta_formal(Shape({k}, k, 2)));
}

TEST_CASE("Q Pfaffian forms") {
  CHECK(q_pfaffian(Shape({2, 1})) == c(2) * c(1) - 2 * c(3));
  CHECK(q_pfaffian(Shape({5})) == c(5));
  CHECK(q_two_row(3, 2) == c(3) * c(2) - 2 * c(4) * c(1) + 2 * c(5));
  for (int w = 1; w <= 10; ++w)
    for (const auto& la : strict_partitions(w)) {
      if (la.length() > 4) continue;
      CHECK(theta_formal(la) == q_pfaffian(la));
    }
}

TEST_CASE("interpolation regimes") {
  // all parts <= k: Jacobi-Trudi determinant
  for (int k = 1; k <= 3; ++k)
    for (int w = 1; w <= 7; ++w)
      for (const auto& la : partitions(w, 4)) {
        if (la.part(1) > k) continue;
        CHECK(theta_formal(Shape(la.parts, k)) == jacobi_trudi(la.parts));
      }
  // all parts > k: Schur Pfaffian
  for (int k = 1; k <= 2; ++k)
    for (int w = 1; w <= 12; ++w)
      for (const auto& la : strict_partitions(w)) {
        if (la.length() > 4 || la.parts.back() <= k) continue;
        CHECK(theta_formal(Shape(la.parts, k)) == q_pfaffian(la));
      }
}

TEST_CASE("difference series") {
  auto g = difference_series(DiffSeries::g, 3);
  auto h = difference_series(DiffSeries::h, 3);
  CHECK(g[0] == Poly(1));
  CHECK(g[1] == c(1) - d(1));
  CHECK(h[2] == c(1) * c(1) - c(2) - c(1) * d(1) + d(2));
  auto drop_d = [](const Poly& f) { return f.truncate(Sym::d, 0); };
  for (int r = 0; r <= 3; ++r) CHECK(drop_d(g[r]) == c(r));
  // 1/(1 - c1 t + c2 t^2 - ...) has complete-function coefficients det(c_{1+j-i}) of size r
  for (int r = 1; r <= 3; ++r) CHECK(drop_d(h[r]) == jacobi_trudi(std::vector<int>(r, 1)));
}
