#pragma once

#include "schubert/poly.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

enum class Axis { y, z };

// Action of s_i (i = 0, kBox or positive) on Gamma[Y,Z]. X must be in power
// sums; s_0 prepends y_1 to X and negates y_1.
Poly s_action(const Poly& f, int i);
// omega: y_j -> -z_j, z_j -> -y_j, fixes X.
Poly omega(const Poly& f);
// d_0 = (f - s_0 f)/(-2y_1), d_box = (f - s_box f)/(-(y_1+y_2)),
// d_i = (f - s_i f)/(y_i - y_{i+1}); z-axis is omega d omega.
Poly divided_difference(const Poly& f, Axis axis, int i);

// Sum_{i<=r} e_i(bx_1..bx_n) h_{r-i}(by_1..by_n).
Poly xi(int r, int n);
// A: y_i -> bx_i, z_i -> by_i.  C/D: y_i -> -bx_i, z_j -> by_j,
// q_r -> xi_r (p_k -> (p_k(bx) + p_k(by))/2 for odd k).  Indices above n -> 0.
Poly geometrize(const Poly& f, LieType t, int n);
// f == g on every point by = signed permutation of bx allowed by the type
// (exhaustive for n <= 3, else 64 seeded samples; seed from SCHUBERT_SEED).
bool ideal_equal(const Poly& f, const Poly& g, LieType t, int n);

}  // namespace schubert
