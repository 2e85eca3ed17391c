#include "schubert/schubops.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "schubert/error.hpp"
#include "schubert/polyring.hpp"

namespace schubert {

namespace {

void require_stable(const Poly& f) {
  if (f.involves(Sym::x)) throw ValidationError("divided differences need X in power sums, not concrete x variables");
}

Poly y(int i) { return Poly::var(Sym::y, i); }

Poly prepend_y(const Poly& f, const std::vector<int>& idx) {
  return f.subs([&](Var v) -> std::optional<Poly> {
    if (v.sym != Sym::p) return std::nullopt;
    Poly acc = Poly::var(v);
    for (int i : idx) acc += y(i).pow(v.index);
    return acc;
  });
}

}  // namespace

Poly s_action(const Poly& f, int i) {
  require_stable(f);
  if (i > 0) {
    return f.rename([&](Var v) -> std::pair<int, Var> {
      if (v.sym == Sym::y && v.index == i) return {1, Var{Sym::y, i + 1}};
      if (v.sym == Sym::y && v.index == i + 1) return {1, Var{Sym::y, i}};
      return {1, v};
    });
  }
  if (i == 0) {
    Poly g = f.rename([](Var v) -> std::pair<int, Var> {
      if (v.sym == Sym::y && v.index == 1) return {-1, v};
      return {1, v};
    });
    return prepend_y(g, {1});
  }
  if (i == kBox) {
    // s_box = s_0 s_1 s_0
    Poly g = f.rename([](Var v) -> std::pair<int, Var> {
      if (v.sym == Sym::y && v.index == 1) return {-1, Var{Sym::y, 2}};
      if (v.sym == Sym::y && v.index == 2) return {-1, Var{Sym::y, 1}};
      return {1, v};
    });
    return prepend_y(g, {1, 2});
  }
  throw ValidationError("bad simple reflection index " + std::to_string(i));
}

Poly omega(const Poly& f) {
  return f.rename([](Var v) -> std::pair<int, Var> {
    if (v.sym == Sym::y) return {-1, Var{Sym::z, v.index}};
    if (v.sym == Sym::z) return {-1, Var{Sym::y, v.index}};
    return {1, v};
  });
}

Poly divided_difference(const Poly& f, Axis axis, int i) {
  if (axis == Axis::z) return omega(divided_difference(omega(f), Axis::y, i));
  Poly num = f - s_action(f, i);
  if (num.is_zero()) return Poly();
  Poly den;
  if (i == 0) den = y(1) * -2;
  else if (i == kBox) den = -(y(1) + y(2));
  else den = y(i) - y(i + 1);
  return num.divide_exact(den);
}

Poly xi(int r, int n) {
  Poly acc;
  for (int i = 0; i <= r; ++i)
    acc += elementary(i, alphabet(Sym::bx, 1, n)) * complete(r - i, alphabet(Sym::by, 1, n));
  return acc;
}

Poly geometrize(const Poly& f, LieType t, int n) {
  if (f.involves(Sym::x)) throw ValidationError("geometrize needs X in power sums");
  if (t == LieType::B) throw UnsupportedError("geometrization is implemented for types A, C and D");
  bool A = t == LieType::A;
  if (A && f.involves(Sym::p)) throw ValidationError("type A polynomials do not involve X");
  auto bx = alphabet(Sym::bx, 1, n), by = alphabet(Sym::by, 1, n);
  return f.subs([&](Var v) -> std::optional<Poly> {
    switch (v.sym) {
      case Sym::y:
        if (v.index > n) return Poly();
        return A ? Poly::var(Sym::bx, v.index) : -Poly::var(Sym::bx, v.index);
      case Sym::z:
        if (v.index > n) return Poly();
        return Poly::var(Sym::by, v.index);
      case Sym::p: {
        if (v.index % 2 == 0) throw ValidationError("even power sum p" + std::to_string(v.index) + " is not in Gamma");
        Poly acc;
        for (const auto& a : bx) acc += a.pow(v.index);
        for (const auto& b : by) acc += b.pow(v.index);
        return acc * Rational(1, 2);
      }
      case Sym::bx:
      case Sym::by:
        return std::nullopt;
      default:
        throw ValidationError("geometrize: unsupported variable " + var_name(v));
    }
  });
}

namespace {

bool vanishes_at(const Poly& d, const SignedPermutation& w) {
  Poly r = d.subs([&](Var v) -> std::optional<Poly> {
    if (v.sym != Sym::by) return std::nullopt;
    int a = w.at(v.index);
    Poly img = Poly::var(Sym::bx, std::abs(a));
    return a < 0 ? -img : img;
  });
  return r.is_zero();
}

}  // namespace

bool ideal_equal(const Poly& f, const Poly& g, LieType t, int n) {
  Poly d = f - g;
  if (d.is_zero()) return true;
  for (const auto& v : d.variables())
    if ((v.sym != Sym::bx && v.sym != Sym::by) || v.index > n)
      throw ValidationError("ideal_equal: variable " + var_name(v) + " outside bx_1..bx_n, by_1..by_n");
  Group g_ = group_of(t == LieType::B ? LieType::C : t);
  if (n <= 3) {
    for (const auto& w : all_elements(g_, n))
      if (!vanishes_at(d, w.with_rank(n))) return false;
    return true;
  }
  std::uint64_t seed = 20240601;
  if (const char* s = std::getenv("SCHUBERT_SEED")) seed = std::strtoull(s, nullptr, 10);
  std::mt19937_64 rng(seed);
  for (int sample = 0; sample < 64; ++sample) {
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = i + 1;
    std::shuffle(vals.begin(), vals.end(), rng);
    if (g_ != Group::A) {
      int neg = 0;
      for (int i = 0; i < n; ++i)
        if (rng() & 1) vals[i] = -vals[i], ++neg;
      if (g_ == Group::D && neg % 2) vals[0] = -vals[0];
    }
    if (!vanishes_at(d, SignedPermutation(g_, vals))) return false;
  }
  return true;
}

}  // namespace schubert
