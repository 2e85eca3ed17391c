#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "schubert/error.hpp"
#include "schubert/formal.hpp"
#include "schubert/json_io.hpp"
#include "schubert/locus.hpp"
#include "schubert/nilcox.hpp"
#include "schubert/polyring.hpp"
#include "schubert/split.hpp"
#include "schubert/transition.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

struct Args {
  std::string type = "C";
  std::string w;
  int k = 0;
  std::string kstr;
  std::string a, b;
  int xvars = kStable;
  std::string format = "text";
  std::string out;
  std::string shape;
  int tag = 0;
  bool formal = false;
  std::string suite = "all";
  int n = 0;
  std::string form = "difference";
};

LieType lie(const Args& o) { return parse_lie_type(o.type); }

SignedPermutation perm(const Args& o) {
  if (o.w.empty()) throw ValidationError("--w is required");
  return SignedPermutation::parse(group_of(lie(o)), o.w);
}

int k_value(const Args& o) {
  if (o.kstr.empty()) return 0;
  if (o.kstr == "B") return kBox;
  try {
    std::size_t used = 0;
    int k = std::stoi(o.kstr, &used);
    if (used != o.kstr.size() || k < 0) throw std::invalid_argument("k");
    return k;
  } catch (const std::logic_error&) {
    throw ValidationError("--k takes a nonnegative integer or B");
  }
}

Alphabet y_upto(int k) { return alphabet(Sym::y, 1, std::max(k, 0)); }

std::string tex_shape(const Shape& la) {
  std::string s = "(";
  for (std::size_t i = 0; i < la.parts.size(); ++i) s += (i ? "," : "") + std::to_string(la.parts[i]);
  return s + ")";
}

std::string coeff_prefix(long c, bool first) {
  std::string s;
  if (c < 0) s = first ? "-" : " - ";
  else if (!first) s = " + ";
  if (std::labs(c) != 1) s += std::to_string(std::labs(c));
  return s;
}

// Type A: peel off linear factors y_i - z_j, in (i, j) order.
std::string factored_latex(Poly f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<int, int>> lin;
  int top_y = 0, top_z = 0;
  for (const auto& v : f.variables()) {
    if (v.sym == Sym::y) top_y = std::max(top_y, v.index);
    if (v.sym == Sym::z) top_z = std::max(top_z, v.index);
  }
  bool found = true;
  while (found && !f.is_constant()) {
    found = false;
    for (int i = 1; i <= top_y && !found; ++i)
      for (int j = 1; j <= top_z && !found; ++j) {
        Poly at = f.subs([&](Var v) -> std::optional<Poly> {
          if (v.sym == Sym::y && v.index == i) return Poly::var(Sym::z, j);
          return std::nullopt;
        });
        if (at.is_zero()) {
          f = f.divide_exact(Poly::var(Sym::y, i) - Poly::var(Sym::z, j));
          lin.push_back({i, j});
          found = true;
        }
      }
  }
  if (lin.empty()) return f.latex();
  std::string s;
  if (f.is_constant()) {
    Rational c = f.constant_term();
    if (c == -1) s = "-";
    else if (c != 1) s = rational_str(c);
  } else {
    s = "\\left(" + f.latex() + "\\right)";
  }
  for (auto [i, j] : lin) s += "(y_" + std::to_string(i) + "-z_" + std::to_string(j) + ")";
  return s;
}

std::string perm_tex(const SignedPermutation& w) {
  std::string s;
  bool wide = false;
  for (int v : w.values()) wide = wide || std::abs(v) > 9;
  for (std::size_t i = 0; i < w.values().size(); ++i) {
    int v = w.values()[i];
    if (wide && i) s += ",";
    s += v < 0 ? "\\bar{" + std::to_string(-v) + "}" : std::to_string(v);
  }
  return s;
}

std::string poly_name(LieType t) {
  switch (t) {
    case LieType::A: return "\\mathfrak{S}";
    case LieType::B: return "\\mathfrak{B}";
    case LieType::C: return "\\mathfrak{C}";
    default: return "\\mathfrak{D}";
  }
}

Json result(const std::string& kind, Json body) {
  Json out{{"result", kind}};
  for (auto& [key, v] : body.items()) out[key] = v;
  return out;
}

std::string run_schubert(const Args& o) {
  LieType t = lie(o);
  auto w = perm(o);
  SchubertOptions so;
  so.m = o.xvars;
  Poly f = double_schubert(w, t, so);
  if (o.format == "json")
    return result("schubert", Json{{"w", perm_to_json(w, t)}, {"xvars", o.xvars}, {"poly", poly_to_json(f)}}).dump(2);
  if (o.format == "latex") return t == LieType::A ? factored_latex(f) : f.latex();
  return f.str();
}

std::string run_theta_eta(const Args& o, bool eta) {
  if (o.shape.empty()) throw ValidationError("--shape is required");
  int k = k_value(o);
  if (eta && k == 0) throw ValidationError("eta needs --k >= 1 or B");
  Shape la = Shape::parse(o.shape, k, eta ? o.tag : 0);
  la.validate(eta);
  Poly f;
  if (o.formal) f = eta ? eta_formal(la) : theta_formal(la);
  else f = eta ? eta_poly(la, o.xvars, y_upto(k)) : theta_poly(la, o.xvars, y_upto(k));
  if (o.format == "json") {
    Json body{{"shape", shape_to_json(la)}, {"formal", o.formal}};
    if (!o.formal) body["xvars"] = o.xvars;
    body["poly"] = o.formal ? formal_to_json(f) : poly_to_json(f);
    return result(eta ? "eta" : "theta", body).dump(2);
  }
  return o.format == "latex" ? f.latex() : f.str();
}

TreeKind tree_kind(LieType t) { return t == LieType::A ? TreeKind::A : t == LieType::D ? TreeKind::D : TreeKind::C; }

void tree_text(const TransitionTree& t, int id, int depth, std::ostringstream& os) {
  const auto& nd = t.nodes[id];
  os << std::string(2 * depth, ' ') << nd.w.str();
  if (nd.children.empty()) {
    for (const auto& [w, la] : t.leaves)
      if (w == nd.w) {
        os << "  " << tex_shape(la);
        break;
      }
  } else {
    os << "  r=" << (nd.r == kBox ? std::string("B") : std::to_string(nd.r)) << " s=" << nd.s;
  }
  os << "\n";
  for (int c : nd.children) tree_text(t, c, depth + 1, os);
}

void tree_latex(const TransitionTree& t, int id, std::ostringstream& os) {
  const auto& nd = t.nodes[id];
  os << "[{$" << perm_tex(nd.w) << "$}";
  for (int c : nd.children) {
    os << " ";
    tree_latex(t, c, os);
  }
  os << "]";
}

std::string run_tree(const Args& o) {
  auto w = perm(o);
  auto t = transition_tree(w, tree_kind(lie(o)), k_value(o));
  if (o.format == "json") return result("tree", tree_to_json(t)).dump(2);
  std::ostringstream os;
  if (o.format == "latex") {
    tree_latex(t, 0, os);
    return os.str();
  }
  tree_text(t, 0, 0, os);
  std::string s = os.str();
  s.pop_back();
  return s;
}

std::string basis_symbol(LieType t) { return t == LieType::A ? "s" : t == LieType::D ? "H" : "\\Theta"; }

std::string run_coeffs(const Args& o) {
  LieType t = lie(o);
  auto w = perm(o);
  int k = k_value(o);
  auto c = stanley_coeffs(w, tree_kind(t), k);
  if (o.format == "json")
    return result("coeffs", Json{{"w", perm_to_json(w, t)}, {"k", k == kBox ? Json("B") : Json(k)},
                                 {"coeffs", coeffs_to_json(c)}})
        .dump(2);
  std::ostringstream os;
  if (o.format == "latex") {
    bool first = true;
    for (const auto& [la, n] : c) {
      os << coeff_prefix(n, first) << basis_symbol(t) << "_{" << tex_shape(la) << "}";
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }
  for (const auto& [la, n] : c) os << n << " " << tex_shape(la) << "\n";
  std::string s = os.str();
  if (!s.empty()) s.pop_back();
  return s;
}

SplitProblem split_problem(const Args& o) {
  LieType t = lie(o);
  auto w = perm(o);
  SplitProblem p{w, t, o.a.empty() ? minimal_a(w, t) : parse_seq(o.a), o.b.empty() ? minimal_b(w, t) : parse_seq(o.b)};
  validate_split(p);
  return p;
}

std::string run_split(const Args& o) {
  auto p = split_problem(o);
  SplitResult r{p, split_coefficients(p)};
  if (o.format == "json") return result("split", split_to_json(r)).dump(2);
  int q = int(p.b.size());
  std::ostringstream os;
  if (o.format == "latex") {
    os << poly_name(p.type) << "_{" << perm_tex(p.w) << "} = ";
    bool first = true;
    for (const auto& [seq, c] : r.coeffs) {
      os << coeff_prefix(c, first);
      first = false;
      std::vector<std::string> fs;
      for (int j = 0; j < int(seq.size()); ++j) {
        if (j + 1 == q) fs.push_back(basis_symbol(p.type) + "_{" + tex_shape(seq[j]) + "}");
        else if (seq[j].weight()) fs.push_back("s_{" + tex_shape(seq[j]) + "}");
      }
      for (std::size_t i = 0; i < fs.size(); ++i) os << (i ? "\\," : "") << fs[i];
    }
    if (first) os << "0";
    return os.str();
  }
  os << "a=" << seq_str(p.a) << " b=" << seq_str(p.b);
  for (const auto& [seq, c] : r.coeffs) {
    os << "\n" << c << " ";
    for (std::size_t j = 0; j < seq.size(); ++j) os << (j ? " | " : "") << tex_shape(seq[j]);
  }
  return os.str();
}

std::string run_locus(const Args& o) {
  auto p = split_problem(o);
  int n = o.n ? o.n : std::max(p.w.rank(), p.type == LieType::D ? 2 : 1);
  auto f = emit_locus(p.w, p.type, n, p.a, p.b);
  LocusForm form = o.form == "quotient" ? LocusForm::quotient : LocusForm::difference;
  if (o.format == "json") {
    auto ranks = rank_conditions(p.w, p.type, n, p.a);
    return result("locus", locus_to_json(f, &ranks)).dump(2);
  }
  return o.format == "latex" ? locus_latex(f, form) : locus_text(f, form);
}

int run_verify(const Args& o, std::string& text) {
  std::vector<std::string> names;
  if (o.suite == "all") names = suite_names();
  else names = {o.suite};
  std::vector<SuiteResult> res;
  for (const auto& nm : names) res.push_back(run_suite(nm, o.n));
  bool ok = true;
  for (const auto& r : res) ok = ok && r.pass;
  std::ostringstream os;
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : res)
      arr.push_back(Json{{"suite", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"failures", r.failures},
                         {"detail", r.detail}});
    os << result("verify", Json{{"n", o.n}, {"suites", arr}}).dump(2);
  } else {
    for (std::size_t i = 0; i < res.size(); ++i) {
      const auto& r = res[i];
      os << (i ? "\n" : "") << (r.pass ? "PASS " : "FAIL ") << r.name << " checks=" << r.checks
         << " failures=" << r.failures;
      for (const auto& d : r.detail) os << "\n  " << d;
    }
  }
  text = os.str();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert polynomials, theta and eta polynomials, splitting and degeneracy locus formulas"};
  app.require_subcommand(1);
  Args o;
  const std::vector<std::string> formats{"text", "json", "latex"};
  const std::vector<std::string> types{"A", "B", "C", "D"};

  auto common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember(formats));
    s->add_option("--out", o.out, "write the result to this file");
  };
  auto typed = [&](CLI::App* s) {
    s->add_option("--type", o.type, "A, B, C or D")->check(CLI::IsMember(types));
    s->add_option("--w", o.w, "one-line notation, bars as minus signs")->required();
  };

  auto* sch = app.add_subcommand("schubert", "double Schubert polynomial");
  typed(sch);
  sch->add_option("--xvars", o.xvars, "number of x variables (default: power sums)")->check(CLI::NonNegativeNumber);
  common(sch);

  auto* th = app.add_subcommand("theta", "theta polynomial");
  auto* et = app.add_subcommand("eta", "eta polynomial");
  for (auto* s : {th, et}) {
    s->add_option("--k", o.kstr, "k (or B)");
    s->add_option("--shape", o.shape, "parts, e.g. 3,1,1")->required();
    s->add_flag("--formal", o.formal, "expansion in the c (or tau) variables");
    s->add_option("--xvars", o.xvars, "number of x variables (default: power sums)")->check(CLI::NonNegativeNumber);
    common(s);
  }
  et->add_option("--tag", o.tag, "type of the shape: 0, 1 or 2")->check(CLI::Range(0, 2));

  auto* tr = app.add_subcommand("tree", "transition tree");
  auto* co = app.add_subcommand("coeffs", "Stanley coefficients from the tree leaves");
  for (auto* s : {tr, co}) {
    typed(s);
    s->add_option("--k", o.kstr, "k (or B)");
    common(s);
  }

  auto* sp = app.add_subcommand("split", "splitting coefficients");
  auto* lo = app.add_subcommand("locus", "degeneracy locus formula");
  for (auto* s : {sp, lo}) {
    typed(s);
    s->add_option("--a", o.a, "comma separated a sequence (default: minimal)");
    s->add_option("--b", o.b, "comma separated b sequence, B for the box (default: minimal)");
    common(s);
  }
  lo->add_option("--n", o.n, "rank of the flag geometry")->check(CLI::PositiveNumber);
  lo->add_option("--form", o.form, "difference or quotient")->check(CLI::IsMember({"difference", "quotient"}));

  auto* ve = app.add_subcommand("verify", "run acceptance suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ve->add_option("--suite", o.suite, "suite name or all")->check(CLI::IsMember(suites));
  ve->add_option("--n", o.n, "suite size (default per suite)")->check(CLI::PositiveNumber);
  common(ve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int code = 0;
  std::string text;
  try {
    if (sch->parsed()) text = run_schubert(o);
    else if (th->parsed()) text = run_theta_eta(o, false);
    else if (et->parsed()) text = run_theta_eta(o, true);
    else if (tr->parsed()) text = run_tree(o);
    else if (co->parsed()) text = run_coeffs(o);
    else if (sp->parsed()) text = run_split(o);
    else if (lo->parsed()) text = run_locus(o);
    else code = run_verify(o, text);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FidelityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }

  if (o.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << text << "\n";
  }
  return code;
}
