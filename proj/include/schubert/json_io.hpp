#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "schubert/locus.hpp"
#include "schubert/poly.hpp"
#include "schubert/shapes.hpp"
#include "schubert/split.hpp"
#include "schubert/transition.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

// {"type":"C","values":[3,-1,-2]}
Json perm_to_json(const SignedPermutation& w, LieType t);
SignedPermutation perm_from_json(const Json& j, LieType* t = nullptr);

// {"parts":[7,4,3,1,1],"k":3,"type":0}
Json shape_to_json(const Shape& s);
Shape shape_from_json(const Json& j);

// [1, 4] or ["B", 1]
Json seq_to_json(const std::vector<int>& s);
std::vector<int> seq_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// List of {"coeff":[num,den],"mono":[["c",5],["c",4],["c",2]]}.
Json formal_to_json(const FormalPoly& f);
FormalPoly formal_from_json(const Json& j);

// {"vars":["x1","y1"],"terms":[{"e":[2,1],"c":[3,2]}]}, graded-lex order.
Json poly_to_json(const Poly& f);
Poly poly_from_json(const Json& j);

// {"kind":"C","k":1,"node":"...","children":[{"node":...}, ...]};
// leaves carry "shape", inner nodes "r" and "s".
Json tree_to_json(const TransitionTree& t);
TransitionTree tree_from_json(const Json& j);

Json coeffs_to_json(const std::map<Shape, long>& c);
std::map<Shape, long> coeffs_from_json(const Json& j);

struct SplitResult {
  SplitProblem problem;
  std::map<ShapeSeq, long> coeffs;
};
Json split_to_json(const SplitResult& r);
SplitResult split_from_json(const Json& j);

// Schema "locus-v1".
Json locus_to_json(const LocusFormula& f, const RankTable* ranks = nullptr);
LocusFormula locus_from_json(const Json& j);

}  // namespace schubert
