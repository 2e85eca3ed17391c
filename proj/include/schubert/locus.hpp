#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubert/polyring.hpp"
#include "schubert/shapes.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// Named bundle with multiplicity: E, E_0 (maximal isotropic, C/D only),
// E_r, F_s, Q_r, Qh_s.
struct BundleTerm {
  int coeff = 1;
  std::string name;
  int rank = 0;
};

struct BundleExpr {
  std::vector<BundleTerm> terms;
  int rank() const;
  std::string str() const;
  std::string latex() const;
  bool operator==(const BundleExpr& o) const;
};

enum class FactorKind { schur, theta, theta_prime, eta };
std::string factor_kind_str(FactorKind k);
FactorKind parse_factor_kind(const std::string& s);

// conj_*: the Schur factor is displayed as s_{conjugate of shape} in that form.
struct LocusFactor {
  FactorKind kind = FactorKind::schur;
  Shape shape;
  BundleExpr difference;
  bool conj_difference = false;
  BundleExpr quotient;  // empty in type A
  bool conj_quotient = false;
};

struct LocusTerm {
  long coeff = 0;
  std::vector<LocusFactor> factors;
};

struct LocusFormula {
  LieType type = LieType::C;
  SignedPermutation w;
  int n = 0;
  std::vector<int> a, b;
  // 2^{-s(w)} carried by every Theta' factor (type B), else 1.
  Rational theta_scale{1};
  std::vector<LocusTerm> terms;
};

// d[r-1][s-1] = lower bound for dim(E_r cap F_s), s = 1..rank E.
using RankTable = std::vector<std::vector<int>>;
RankTable rank_conditions(const SignedPermutation& w, LieType t, int n, const std::vector<int>& a);

LocusFormula emit_locus(const SignedPermutation& w, LieType t, int n, const std::vector<int>& a,
                        const std::vector<int>& b);

enum class LocusForm { difference, quotient };
std::string locus_latex(const LocusFormula& f, LocusForm form = LocusForm::difference);
std::string locus_text(const LocusFormula& f, LocusForm form = LocusForm::difference);

using RootMap = std::map<std::string, Alphabet>;
// Chern roots in bx_i, by_i for every bundle symbol of the geometry
// (x_i, y_i of the Borel presentation).
RootMap chern_roots(LieType t, int n, const std::vector<int>& a, const std::vector<int>& b);
Poly evaluate_locus(const LocusFormula& f, const RootMap& roots, LocusForm form = LocusForm::difference);

}  // namespace schubert
