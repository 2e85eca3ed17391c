#pragma once

#include <map>
#include <vector>

#include "schubert/polyring.hpp"
#include "schubert/shapes.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// w with sequences a (descents of w) and b (descents of w^-1); entries may be
// kBox in type D.  Y_i = y_{a_{i-1}+1..a_i}, Z_j = z_{b_{j-1}+1..b_j}.
struct SplitProblem {
  SignedPermutation w;
  LieType type = LieType::C;
  std::vector<int> a, b;
};

using ShapeSeq = std::vector<Shape>;

// Throws PreconditionError on incompatible sequences and UnsupportedError
// when b_1 is not 0 (B/C) or box (D), or a_1 = 0 in type A.
void validate_split(const SplitProblem& p);
bool compatible(const SignedPermutation& w, const std::vector<int>& seq);

// All nonzero coefficients c / f / g of the product basis.
std::map<ShapeSeq, long> split_coefficients(const SplitProblem& p);
long split_coeff(const SplitProblem& p, const ShapeSeq& la);
// s_{la^1}(0/Z_q) ... middle ... s_{la^{p+q-1}}(Y_p)
Poly split_basis_element(const SplitProblem& p, const ShapeSeq& la, int m = kStable);
Poly split_formula(const SplitProblem& p, int m = kStable);
// Coordinates of the double Schubert polynomial in the product basis of the
// given degree, by exact linear algebra; throws if not unique.
std::map<ShapeSeq, Rational> split_solve(const SplitProblem& p);

// Minimal sequences (b_1 = 0 / box in types B, C, D; never empty).
std::vector<int> minimal_a(const SignedPermutation& w, LieType t);
std::vector<int> minimal_b(const SignedPermutation& w, LieType t);
// Every a with entries in the letters of rank n that w is compatible with.
std::vector<std::vector<int>> admissible_a(const SignedPermutation& w, LieType t, int n);

std::string seq_str(const std::vector<int>& seq);
std::vector<int> parse_seq(const std::string& s);

}  // namespace schubert
