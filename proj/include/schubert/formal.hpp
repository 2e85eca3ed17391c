#pragma once

#include <optional>
#include <vector>

#include "schubert/poly.hpp"
#include "schubert/shapes.hpp"

namespace schubert {

// Polynomial in the abstract symbols c_r, d_r, tau_r, tau'_k.
using FormalPoly = Poly;

inline Poly csym(int r) { return r == 0 ? Poly(1) : r < 0 ? Poly() : Poly::var(Sym::c, r); }
inline Poly dsym(int r) { return r == 0 ? Poly(1) : r < 0 ? Poly() : Poly::var(Sym::d, r); }

struct RaisingSpec {
  int rows = 0;
  // Pairs carrying (1-R)/(1+R); the rest carry (1-R).
  OrderIdeal double_pairs;
  // Star substitution on row star_row (1-based; 0 = off) with tau_k or tau'_k.
  int star_row = 0;
  int star_type = 0;
  int k = 0;
};

// Sum over raising monomials R of coeff(R) * (R applied to c_alpha), in c symbols
// (plus tau_k / tau'_k from the star rule).
FormalPoly expand_raising(const RaisingSpec& spec, const std::vector<int>& alpha);

FormalPoly theta_formal(const Shape& la);
// In tau_r, tau'_k symbols.
FormalPoly eta_formal(const Shape& la);
// c_r -> tau_r (r<k), tau_k + tau'_k (r=k), 2 tau_r (r>k).
FormalPoly c_to_tau(const FormalPoly& f, int k);
FormalPoly q_pfaffian(const Shape& la);
// (1-R_12)/(1+R_12) c_(a,b).
FormalPoly q_two_row(int a, int b);

enum class DiffSeries { g, h };
// g: (sum c_i t^i)(sum d_i t^i)^-1; h: (sum (-1)^i c_i t^i)^-1 (sum (-1)^i d_i t^i).
std::vector<FormalPoly> difference_series(DiffSeries which, int degree);

using PolyMatrix = std::vector<std::vector<Poly>>;
Poly determinant(const PolyMatrix& m);
// Pfaffian of the skew matrix whose upper triangle is given.
Poly pfaffian(const PolyMatrix& upper);
// det(c_{alpha_i + j - i}) in c symbols.
FormalPoly jacobi_trudi(const std::vector<int>& alpha);

}  // namespace schubert
