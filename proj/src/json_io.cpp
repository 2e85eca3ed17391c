#include "schubert/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "schubert/error.hpp"

namespace schubert {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::string sym_text(Var v) {
  std::string s = var_name(v);
  while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

LieType type_of(const Json& j) { return parse_lie_type(j.get<std::string>()); }

}  // namespace

Json perm_to_json(const SignedPermutation& w, LieType t) {
  return Json{{"type", std::string(1, lie_char(t))}, {"values", w.values()}};
}

SignedPermutation perm_from_json(const Json& j, LieType* t) {
  return guarded("permutation", [&] {
    LieType lt = type_of(j.at("type"));
    if (t) *t = lt;
    SignedPermutation w(group_of(lt), j.at("values").get<std::vector<int>>());
    // round trip through the text parser for validation
    return SignedPermutation::parse(group_of(lt), w.str());
  });
}

Json shape_to_json(const Shape& s) { return Json{{"parts", s.parts}, {"k", s.k}, {"type", s.type}}; }

Shape shape_from_json(const Json& j) {
  return guarded("shape", [&] {
    return Shape(j.at("parts").get<std::vector<int>>(), j.value("k", 0), j.value("type", 0));
  });
}

Json seq_to_json(const std::vector<int>& s) {
  Json out = Json::array();
  for (int x : s) {
    if (x == kBox) out.push_back("B");
    else out.push_back(x);
  }
  return out;
}

std::vector<int> seq_from_json(const Json& j) {
  return guarded("sequence", [&] {
    std::vector<int> out;
    for (const auto& e : j) {
      if (e.is_string()) {
        if (e.get<std::string>() != "B") throw ValidationError("sequence entries are integers or \"B\"");
        out.push_back(kBox);
      } else {
        out.push_back(e.get<int>());
      }
    }
    return out;
  });
}

Json rational_to_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return Json::array({c.get_num().get_str(), c.get_den().get_str()});
}

Rational rational_from_json(const Json& j) {
  return guarded("rational", [&] {
    auto part = [](const Json& e) { return e.is_string() ? mpz_class(e.get<std::string>()) : mpz_class(e.get<long>()); };
    if (!j.is_array() || j.size() != 2) throw ValidationError("rational must be [num, den]");
    mpz_class den = part(j[1]);
    if (den == 0) throw ValidationError("zero denominator");
    Rational q(part(j[0]), den);
    q.canonicalize();
    return q;
  });
}

Json formal_to_json(const FormalPoly& f) {
  Json out = Json::array();
  for (const auto& t : f.terms()) {
    Json mono = Json::array();
    for (std::size_t i = t.m.size(); i-- > 0;) {
      Var v = t.m.var_at(i);
      for (int e = 0; e < t.m.exp_at(i); ++e) mono.push_back(Json::array({sym_text(v), v.index}));
    }
    out.push_back(Json{{"coeff", rational_to_json(t.c)}, {"mono", mono}});
  }
  return out;
}

FormalPoly formal_from_json(const Json& j) {
  return guarded("formal polynomial", [&] {
    std::vector<Term> terms;
    for (const auto& t : j) {
      std::vector<std::pair<Var, int>> pairs;
      for (const auto& f : t.at("mono"))
        pairs.push_back({parse_var(f.at(0).get<std::string>() + std::to_string(f.at(1).get<int>())), 1});
      terms.push_back({Monomial::from_pairs(pairs), rational_from_json(t.at("coeff"))});
    }
    return Poly::from_terms(std::move(terms));
  });
}

Json poly_to_json(const Poly& f) {
  auto vars = f.variables();
  std::sort(vars.begin(), vars.end());
  Json names = Json::array();
  for (const auto& v : vars) names.push_back(var_name(v));
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    std::vector<int> e;
    for (const auto& v : vars) e.push_back(t.m.exponent(v));
    terms.push_back(Json{{"e", e}, {"c", rational_to_json(t.c)}});
  }
  return Json{{"vars", names}, {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    std::vector<Var> vars;
    for (const auto& n : j.at("vars")) vars.push_back(parse_var(n.get<std::string>()));
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      auto e = t.at("e").get<std::vector<int>>();
      if (e.size() != vars.size()) throw ValidationError("exponent vector length differs from vars");
      std::vector<std::pair<Var, int>> pairs;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) pairs.push_back({vars[i], e[i]});
      terms.push_back({Monomial::from_pairs(pairs), rational_from_json(t.at("c"))});
    }
    return Poly::from_terms(std::move(terms));
  });
}

namespace {

Json node_json(const TransitionTree& t, int id) {
  const auto& nd = t.nodes[id];
  Json j{{"node", nd.w.str()}};
  if (nd.children.empty()) {
    for (const auto& [w, la] : t.leaves)
      if (w == nd.w) {
        j["shape"] = shape_to_json(la);
        break;
      }
  } else {
    j["r"] = nd.r == kBox ? Json("B") : Json(nd.r);
    j["s"] = nd.s;
  }
  Json ch = Json::array();
  for (int c : nd.children) ch.push_back(node_json(t, c));
  j["children"] = ch;
  return j;
}

Group tree_group(TreeKind k) { return k == TreeKind::A ? Group::A : k == TreeKind::C ? Group::BC : Group::D; }

}  // namespace

Json tree_to_json(const TransitionTree& t) {
  Json root = node_json(t, 0);
  Json out{{"kind", tree_kind_str(t.kind)}, {"k", t.k == kBox ? Json("B") : Json(t.k)}};
  for (auto& [key, v] : root.items()) out[key] = v;
  return out;
}

TransitionTree tree_from_json(const Json& j) {
  return guarded("tree", [&] {
    TransitionTree t;
    t.kind = parse_tree_kind(j.at("kind").get<std::string>());
    t.k = j.at("k").is_string() ? kBox : j.at("k").get<int>();
    Group g = tree_group(t.kind);
    std::function<int(const Json&)> rec = [&](const Json& n) {
      int id = int(t.nodes.size());
      auto w = SignedPermutation::parse(g, n.at("node").get<std::string>());
      t.nodes.push_back({w, {}, 0, 0});
      if (n.contains("r")) t.nodes[id].r = n.at("r").is_string() ? kBox : n.at("r").get<int>();
      if (n.contains("s")) t.nodes[id].s = n.at("s").get<int>();
      if (n.contains("shape")) t.leaves.push_back({w, shape_from_json(n.at("shape"))});
      for (const auto& c : n.at("children")) {
        int cid = rec(c);
        t.nodes[id].children.push_back(cid);
      }
      return id;
    };
    rec(j);
    return t;
  });
}

Json coeffs_to_json(const std::map<Shape, long>& c) {
  Json out = Json::array();
  for (const auto& [la, n] : c) out.push_back(Json{{"shape", shape_to_json(la)}, {"coeff", n}});
  return out;
}

std::map<Shape, long> coeffs_from_json(const Json& j) {
  return guarded("coefficients", [&] {
    std::map<Shape, long> out;
    for (const auto& e : j) out[shape_from_json(e.at("shape"))] += e.at("coeff").get<long>();
    return out;
  });
}

Json split_to_json(const SplitResult& r) {
  Json terms = Json::array();
  for (const auto& [seq, c] : r.coeffs) {
    Json shapes = Json::array();
    for (const auto& s : seq) shapes.push_back(shape_to_json(s));
    terms.push_back(Json{{"shapes", shapes}, {"coeff", c}});
  }
  return Json{{"w", perm_to_json(r.problem.w, r.problem.type)},
              {"a", seq_to_json(r.problem.a)},
              {"b", seq_to_json(r.problem.b)},
              {"terms", terms}};
}

SplitResult split_from_json(const Json& j) {
  return guarded("split", [&] {
    SplitResult r;
    r.problem.w = perm_from_json(j.at("w"), &r.problem.type);
    r.problem.a = seq_from_json(j.at("a"));
    r.problem.b = seq_from_json(j.at("b"));
    for (const auto& t : j.at("terms")) {
      ShapeSeq seq;
      for (const auto& s : t.at("shapes")) seq.push_back(shape_from_json(s));
      r.coeffs[seq] += t.at("coeff").get<long>();
    }
    return r;
  });
}

namespace {

Json bundle_json(const BundleExpr& e) {
  Json out = Json::array();
  for (const auto& t : e.terms) out.push_back(Json{{"coeff", t.coeff}, {"name", t.name}, {"rank", t.rank}});
  return out;
}

BundleExpr bundle_from(const Json& j) {
  BundleExpr e;
  for (const auto& t : j) e.terms.push_back({t.at("coeff").get<int>(), t.at("name").get<std::string>(), t.at("rank").get<int>()});
  return e;
}

}  // namespace

Json locus_to_json(const LocusFormula& f, const RankTable* ranks) {
  Json terms = Json::array();
  for (const auto& t : f.terms) {
    Json factors = Json::array();
    for (const auto& fa : t.factors) {
      Json x{{"kind", factor_kind_str(fa.kind)},
             {"shape", shape_to_json(fa.shape)},
             {"difference", bundle_json(fa.difference)},
             {"conj_difference", fa.conj_difference}};
      if (!fa.quotient.terms.empty()) {
        x["quotient"] = bundle_json(fa.quotient);
        x["conj_quotient"] = fa.conj_quotient;
      }
      factors.push_back(x);
    }
    terms.push_back(Json{{"coeff", t.coeff}, {"factors", factors}});
  }
  Json out{{"schema", "locus-v1"},
           {"w", perm_to_json(f.w, f.type)},
           {"n", f.n},
           {"a", seq_to_json(f.a)},
           {"b", seq_to_json(f.b)},
           {"theta_scale", rational_to_json(f.theta_scale)},
           {"terms", terms}};
  if (ranks) out["rank_conditions"] = *ranks;
  return out;
}

LocusFormula locus_from_json(const Json& j) {
  return guarded("locus", [&] {
    if (j.at("schema").get<std::string>() != "locus-v1") throw ValidationError("unsupported locus schema");
    LocusFormula f;
    f.w = perm_from_json(j.at("w"), &f.type);
    f.n = j.at("n").get<int>();
    f.a = seq_from_json(j.at("a"));
    f.b = seq_from_json(j.at("b"));
    f.theta_scale = rational_from_json(j.at("theta_scale"));
    for (const auto& t : j.at("terms")) {
      LocusTerm term;
      term.coeff = t.at("coeff").get<long>();
      for (const auto& x : t.at("factors")) {
        LocusFactor fa;
        fa.kind = parse_factor_kind(x.at("kind").get<std::string>());
        fa.shape = shape_from_json(x.at("shape"));
        fa.difference = bundle_from(x.at("difference"));
        fa.conj_difference = x.at("conj_difference").get<bool>();
        if (x.contains("quotient")) {
          fa.quotient = bundle_from(x.at("quotient"));
          fa.conj_quotient = x.at("conj_quotient").get<bool>();
        }
        term.factors.push_back(std::move(fa));
      }
      f.terms.push_back(std::move(term));
    }
    return f;
  });
}

}  // namespace schubert
