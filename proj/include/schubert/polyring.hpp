#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "schubert/formal.hpp"
#include "schubert/poly.hpp"
#include "schubert/shapes.hpp"

namespace schubert {

// X-variable count meaning "stable": X is kept in power sums p_k.
constexpr int kStable = -1;

// A finite list of "letters", each a polynomial (usually +-variable).
using Alphabet = std::vector<Poly>;
Alphabet alphabet(Sym s, int from, int to, int sign = 1);
Alphabet concat(Alphabet a, const Alphabet& b);

Poly elementary(int r, const Alphabet& a);
Poly complete(int r, const Alphabet& a);

// q_r(X) in power sums: sum over odd-part rho of r of 2^l(rho) p_rho / z_rho.
Poly q_stable(int r);
// q_r(x_1..x_m) from the generating product directly.
Poly gen_q(int r, int m);
// q_r in the requested X mode.
Poly q_of(int r, int m);
// p_k -> x_1^k + ... + x_m^k.
Poly to_concrete(const Poly& f, int m);
// p_k -> p_k + sum of a^k over the alphabet (prepending letters to X).
Poly prepend_to_x(const Poly& f, const Alphabet& a);

// theta_r(X; Y) = sum_i q_{r-i}(X) e_i(Y).
Poly theta_gen(int r, int m, const Alphabet& y);
Poly gen_theta_series(int r, int m, int k);
// (eta_k, eta'_k) for the alphabet y (normally y_1..y_k).
std::pair<Poly, Poly> eta_generators(int k, int m, const Alphabet& y);
std::pair<Poly, Poly> eta_generators(int k, int m);

// h_r(Y/Z): prod (1 - y t)^-1 prod (1 - z t).
Poly supersym_h(int r, const Alphabet& y, const Alphabet& z);
Poly supersym_h(int r, int m, int n);
Poly schur_super(const Shape& la, const Alphabet& y, const Alphabet& z);
Poly schur_super(const Shape& la, int m, int n);
// Ratio of alternants in y_1..y_d; exact division.
Poly alternant_schur_oracle(const Shape& mu, int d);

// Substitution of every symbol of f; a symbol without image is an error.
Poly specialize(const FormalPoly& f, const std::function<std::optional<Poly>(Var)>& assignment);

Poly Q_poly(const Shape& la, int m);
Poly P_poly(const Shape& la, int m);
// Theta_lambda(X; Y) and H_lambda(X; Y) (k taken from la).
Poly theta_poly(const Shape& la, int m, const Alphabet& y);
// Same raising-operator expansions with c_r -> g(r) and the tau_k, tau'_k
// images given directly.
Poly theta_from_series(const Shape& la, const std::function<Poly(int)>& g);
Poly eta_from_series(const Shape& la, const std::function<Poly(int)>& g, const Poly& tau_k, const Poly& taup_k);
Poly eta_poly(const Shape& la, int m, const Alphabet& y);

// Exact solve of f = sum c_i B_i by Gauss-Jordan over the monomials. When
// rank < B.size() the coordinates are one particular solution.
struct SpanSolution {
  std::vector<Rational> coords;
  int rank = 0;
  bool in_span = false;
};
SpanSolution solve_in_span(const Poly& f, const std::vector<Poly>& B);

// Coordinates in the Q_lambda basis of a symmetric f in x_1..x_m.
std::map<Shape, Rational> q_basis_expand(const Poly& f, int m);
// Same for f written in power sums (must involve odd p_k only).
std::map<Shape, Rational> q_basis_expand_stable(const Poly& f);
// Coordinates in the P_lambda basis, power-sum input.
std::map<Shape, Rational> p_basis_expand_stable(const Poly& f);

}  // namespace schubert
