#include "schubert/locus.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/error.hpp"
#include "schubert/formal.hpp"
#include "schubert/split.hpp"

namespace schubert {

namespace {

int val(int x) { return x == kBox ? 0 : x; }

bool increasing(const std::vector<int>& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (val(s[i]) >= val(s[i + 1]) && !(s[i] == kBox && s[i + 1] == 1)) return false;
  return true;
}

int bundle_rank(LieType t, int n) {
  if (t == LieType::A) return n;
  return t == LieType::B ? 2 * n + 1 : 2 * n;
}

std::string idx_name(const std::string& base, int i) { return base + "_" + std::to_string(i); }

}  // namespace

int BundleExpr::rank() const {
  int r = 0;
  for (const auto& t : terms) r += t.coeff * t.rank;
  return r;
}

namespace {

std::string render(const BundleExpr& e, bool latex) {
  std::string s;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const auto& t = e.terms[i];
    if (i) s += t.coeff < 0 ? (latex ? "-" : " - ") : (latex ? "+" : " + ");
    else if (t.coeff < 0) s += "-";
    int c = std::abs(t.coeff);
    if (c != 1) s += std::to_string(c);
    std::string name = t.name;
    if (latex) {
      auto us = name.find('_');
      std::string base = name.substr(0, us), sub = us == std::string::npos ? "" : name.substr(us + 1);
      if (base == "Qh") base = "\\widehat{Q}";
      name = sub.empty() ? base : base + "_{" + sub + "}";
    }
    s += name;
  }
  return s;
}

}  // namespace

std::string BundleExpr::str() const { return render(*this, false); }
std::string BundleExpr::latex() const { return render(*this, true); }

bool BundleExpr::operator==(const BundleExpr& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].coeff != o.terms[i].coeff || terms[i].name != o.terms[i].name || terms[i].rank != o.terms[i].rank)
      return false;
  return true;
}

std::string factor_kind_str(FactorKind k) {
  switch (k) {
    case FactorKind::schur:
      return "s";
    case FactorKind::theta:
      return "Theta";
    case FactorKind::theta_prime:
      return "Theta'";
    case FactorKind::eta:
      return "H";
  }
  return "?";
}

FactorKind parse_factor_kind(const std::string& s) {
  if (s == "s") return FactorKind::schur;
  if (s == "Theta") return FactorKind::theta;
  if (s == "Theta'") return FactorKind::theta_prime;
  if (s == "H") return FactorKind::eta;
  throw ValidationError("unknown factor kind '" + s + "'");
}

RankTable rank_conditions(const SignedPermutation& w0, LieType t, int n, const std::vector<int>& a) {
  Group g = group_of(t);
  if (t == LieType::A && w0.negatives()) throw ValidationError("type A needs an unsigned permutation");
  auto w = w0.with_group(g);
  if (w.canonical().rank() > n) throw ValidationError(w.str() + " does not live in rank " + std::to_string(n));
  if (a.empty() || !increasing(a)) throw ValidationError("the sequence a must be nonempty and strictly increasing");
  for (int x : a) {
    if (x == kBox && g != Group::D) throw ValidationError("B (box) is only a type D index");
    if (val(x) >= n || (t == LieType::A && x < 1) || x < kBox) throw ValidationError("a entries must lie in the Dynkin nodes of rank " + std::to_string(n));
  }
  if (!compatible(w, a)) throw PreconditionError(w.str() + " is not compatible with a = " + seq_str(a));
  w = w.with_rank(n);
  int N = bundle_rank(t, n);
  RankTable d(a.size(), std::vector<int>(N, 0));
  std::vector<int> phi;
  int top = 0;
  switch (t) {
    case LieType::A:
      phi = w.values();
      break;
    case LieType::B:
      phi = embed_symmetric(w, EmbedVariant::phi_prime).values();
      break;
    case LieType::C:
      phi = embed_symmetric(w, EmbedVariant::phi).values();
      break;
    case LieType::D: {
      auto w0n = longest_element(Group::D, n);
      phi = embed_symmetric((w0n * w * w0n).with_group(Group::BC), EmbedVariant::phi).values();
      break;
    }
  }
  for (std::size_t r = 0; r < a.size(); ++r) {
    top = t == LieType::A ? a[r] : n - val(a[r]);
    for (int s = 1; s <= N; ++s) {
      int c = 0;
      for (int i = 1; i <= top; ++i)
        if (phi[i - 1] > N - s) ++c;
      d[r][s - 1] = c;
    }
  }
  return d;
}

LocusFormula emit_locus(const SignedPermutation& w0, LieType t, int n, const std::vector<int>& a,
                        const std::vector<int>& b) {
  Group g = group_of(t);
  auto w = w0.with_group(g);
  if (t == LieType::A && w0.negatives()) throw ValidationError("type A needs an unsigned permutation");
  SplitProblem pr{w, t, a, b};
  validate_split(pr);
  if (w.canonical().rank() > n) throw ValidationError(w.str() + " does not live in rank " + std::to_string(n));
  if (val(a.back()) >= n || val(b.back()) >= n) throw ValidationError("a_p and b_q must be smaller than n");
  LocusFormula f;
  f.type = t;
  f.w = w.canonical();
  f.n = n;
  f.a = a;
  f.b = b;
  if (t == LieType::B)
    for (int i = 0; i < w.negatives(); ++i) f.theta_scale /= 2;
  int p = int(a.size()), q = int(b.size()), total = p + q - 1;
  int N = bundle_rank(t, n);
  auto E = [&](int r) -> BundleTerm {
    if (r == 0) return {1, "E_0", n};
    return {1, idx_name("E", r), t == LieType::A ? a[r - 1] : n - val(a[r - 1])};
  };
  auto F = [&](int s) -> BundleTerm { return {1, idx_name("F", s), s}; };
  auto neg = [](BundleTerm x) {
    x.coeff = -x.coeff;
    return x;
  };
  int shift = t == LieType::B ? n + 1 : n;
  auto bv = [&](int i) { return val(b[i - 1]); };
  auto av = [&](int i) { return i == 0 ? 0 : val(a[i - 1]); };
  std::vector<LocusFactor> templ(total);
  for (int j = 1; j <= total; ++j) {
    LocusFactor& fa = templ[j - 1];
    if (j < q) {
      int i = q + 1 - j;
      if (t == LieType::A) {
        fa.difference = {{F(n - bv(i - 1)), neg(F(n - bv(i)))}};
        fa.conj_difference = true;
      } else {
        fa.difference = {{F(shift + bv(i - 1)), neg(F(shift + bv(i)))}};
        fa.quotient = {{{1, idx_name("Qh", i), bv(i) - bv(i - 1)}}};
        fa.conj_quotient = true;
      }
    } else if (j == q) {
      BundleTerm e{1, "E", N};
      if (t == LieType::A) {
        fa.difference = {{e, neg(E(1)), neg(F(n - bv(1)))}};
        fa.conj_difference = true;
        continue;
      }
      fa.kind = t == LieType::B ? FactorKind::theta_prime : t == LieType::C ? FactorKind::theta : FactorKind::eta;
      fa.difference = {{e, neg(E(1)), neg(F(shift))}};
      fa.quotient = {{{1, "Q_1", N - E(1).rank}, neg(F(shift))}};
    } else {
      int r = j - q + 1;
      if (t == LieType::A) {
        fa.difference = {{E(r - 1), neg(E(r))}};
        fa.conj_difference = true;
      } else {
        fa.difference = {{E(r - 1), neg(E(r))}};
        fa.quotient = {{{1, idx_name("Q", r), av(r) - av(r - 1)}}};
      }
    }
  }
  for (const auto& [seq, c] : split_coefficients(pr)) {
    LocusTerm term;
    term.coeff = c;
    term.factors = templ;
    for (int j = 0; j < total; ++j) term.factors[j].shape = seq[j];
    f.terms.push_back(std::move(term));
  }
  return f;
}

namespace {

std::string shape_label(const Shape& s, bool latex) {
  std::string body = "(";
  for (int i = 1; i <= s.length(); ++i) body += (i > 1 ? "," : "") + std::to_string(s.part(i));
  body += ")";
  if (s.type > 0) body += latex ? ";" + std::to_string(s.type) : "_t" + std::to_string(s.type);
  return body;
}

std::string perm_latex(const SignedPermutation& w) {
  bool commas = false;
  for (int x : w.values()) commas = commas || std::abs(x) >= 10;
  std::string s;
  for (int i = 1; i <= w.rank(); ++i) {
    if (i > 1 && commas) s += ",";
    int x = w.at(i);
    s += x < 0 ? "\\bar{" + std::to_string(-x) + "}" : std::to_string(x);
  }
  return s.empty() ? "1" : s;
}

std::string factor_render(const LocusFactor& fa, LocusForm form, bool latex) {
  const BundleExpr& be = form == LocusForm::quotient ? fa.quotient : fa.difference;
  bool conj = form == LocusForm::quotient ? fa.conj_quotient : fa.conj_difference;
  std::string label = shape_label(fa.shape, latex), name;
  switch (fa.kind) {
    case FactorKind::schur:
      if (latex) name = conj ? "s_{\\widetilde{" + label + "}}" : "s_{" + label + "}";
      else name = (conj ? "s~" : "s") + label;
      break;
    case FactorKind::theta:
      name = latex ? "\\Theta_{" + label + "}" : "Theta" + label;
      break;
    case FactorKind::theta_prime:
      name = latex ? "\\Theta'_{" + label + "}" : "Theta'" + label;
      break;
    case FactorKind::eta:
      name = latex ? "H_{" + label + "}" : "H" + label;
      break;
  }
  return name + "(" + (latex ? be.latex() : be.str()) + ")";
}

bool trivial_factor(const LocusFactor& fa) { return fa.shape.weight() == 0; }

std::string render_formula(const LocusFormula& f, LocusForm form, bool latex) {
  if (form == LocusForm::quotient && f.type == LieType::A)
    throw UnsupportedError("type A loci have only the difference form");
  std::string out;
  for (const auto& term : f.terms) {
    std::string body;
    for (const auto& fa : term.factors) {
      if (trivial_factor(fa) && fa.kind != FactorKind::theta_prime) continue;
      if (!body.empty()) body += latex ? "\\," : " ";
      body += factor_render(fa, form, latex);
    }
    std::string coeff = term.coeff == 1 ? "" : std::to_string(term.coeff);
    if (body.empty()) body = "1";
    else if (!coeff.empty()) coeff += latex ? "\\," : " ";
    if (!out.empty()) out += " + ";
    out += coeff + body;
  }
  if (out.empty()) out = "0";
  std::string lhs = latex ? "[\\mathfrak{X}_{" + perm_latex(f.w) + "}]" : "[X_" + f.w.str() + "]";
  std::string tail;
  if (f.type == LieType::B) {
    std::ostringstream os;
    os << f.theta_scale;
    tail = latex ? ",\\quad \\Theta'_\\lambda = " + os.str() + "\\,\\Theta_\\lambda"
                 : "   (Theta' = " + os.str() + " Theta)";
  }
  return lhs + " = " + out + tail;
}

}  // namespace

std::string locus_latex(const LocusFormula& f, LocusForm form) { return render_formula(f, form, true); }
std::string locus_text(const LocusFormula& f, LocusForm form) { return render_formula(f, form, false); }

RootMap chern_roots(LieType t, int n, const std::vector<int>& a, const std::vector<int>& b) {
  RootMap m;
  auto bx = [](int i) { return Poly::var(Sym::bx, i); };
  auto by = [](int i) { return Poly::var(Sym::by, i); };
  auto range = [](int lo, int hi, auto fn, int sign) {
    Alphabet r;
    for (int i = lo; i <= hi; ++i) r.push_back(sign > 0 ? fn(i) : -fn(i));
    return r;
  };
  if (t == LieType::A) {
    m["E"] = range(1, n, bx, -1);
    for (std::size_t r = 0; r < a.size(); ++r) m[idx_name("E", int(r) + 1)] = range(1, a[r], bx, -1);
    m["E_0"] = {};
    for (int s = 0; s <= n; ++s) m[idx_name("F", s)] = range(n + 1 - s, n, by, -1);
    return m;
  }
  Alphabet zero = t == LieType::B ? Alphabet{Poly()} : Alphabet{};
  m["E"] = concat(concat(range(1, n, bx, 1), range(1, n, bx, -1)), zero);
  m["E_0"] = range(1, n, bx, -1);
  for (std::size_t r = 0; r < a.size(); ++r) m[idx_name("E", int(r) + 1)] = range(val(a[r]) + 1, n, bx, -1);
  for (int s = 0; s <= n; ++s) m[idx_name("F", s)] = range(n + 1 - s, n, by, -1);
  int base = t == LieType::B ? n + 1 : n;
  if (t == LieType::B) m[idx_name("F", n + 1)] = concat(range(1, n, by, -1), zero);
  for (int c = 1; c <= n; ++c) m[idx_name("F", base + c)] = concat(concat(range(1, n, by, -1), zero), range(1, c, by, 1));
  m["Q_1"] = concat(concat(range(1, n, bx, 1), range(1, val(a[0]), bx, -1)), zero);
  for (std::size_t r = 1; r < a.size(); ++r) m[idx_name("Q", int(r) + 1)] = range(val(a[r - 1]) + 1, val(a[r]), bx, -1);
  for (std::size_t s = 1; s < b.size(); ++s) m[idx_name("Qh", int(s) + 1)] = range(val(b[s - 1]) + 1, val(b[s]), by, -1);
  return m;
}

namespace {

// Total Chern class of a virtual bundle given by roots with multiplicity.
struct VirtualClass {
  Alphabet plus, minus;

  // c(V)(t) = prod (1 + r t)^{+-1}
  Poly g(int r) const {
    if (r < 0) return Poly();
    Alphabet nm;
    for (const auto& x : minus) nm.push_back(-x);
    Poly acc;
    for (int i = 0; i <= r; ++i) acc += elementary(i, plus) * complete(r - i, nm);
    return acc;
  }
  // 1 / c(V)(-t)
  Poly h(int r) const {
    if (r < 0) return Poly();
    Alphabet nm;
    for (const auto& x : minus) nm.push_back(-x);
    Poly acc;
    for (int i = 0; i <= r; ++i) acc += elementary(i, nm) * complete(r - i, plus);
    return acc;
  }
};

VirtualClass virtual_class(const BundleExpr& e, const RootMap& roots) {
  std::map<std::string, std::pair<Poly, int>> mult;
  for (const auto& t : e.terms) {
    auto it = roots.find(t.name);
    if (it == roots.end()) throw ValidationError("no Chern roots for bundle " + t.name);
    if (int(it->second.size()) != t.rank)
      throw ValidationError("bundle " + t.name + " has rank " + std::to_string(t.rank) + " but " +
                            std::to_string(it->second.size()) + " roots");
    for (const auto& r : it->second) {
      if (r.is_zero()) continue;
      auto& slot = mult[r.str()];
      slot.first = r;
      slot.second += t.coeff;
    }
  }
  VirtualClass v;
  for (const auto& [key, pr] : mult) {
    for (int i = 0; i < pr.second; ++i) v.plus.push_back(pr.first);
    for (int i = 0; i < -pr.second; ++i) v.minus.push_back(pr.first);
  }
  return v;
}

Poly evaluate_factor(const LocusFormula& f, const LocusFactor& fa, const RootMap& roots, LocusForm form) {
  if (fa.shape.weight() == 0) return fa.kind == FactorKind::theta_prime ? Poly(1) * f.theta_scale : Poly(1);
  const BundleExpr& be = form == LocusForm::quotient ? fa.quotient : fa.difference;
  bool conj = form == LocusForm::quotient ? fa.conj_quotient : fa.conj_difference;
  VirtualClass v = virtual_class(be, roots);
  switch (fa.kind) {
    case FactorKind::schur: {
      Shape nu = conj ? fa.shape.conjugate() : fa.shape;
      return specialize(jacobi_trudi(nu.parts), [&](Var x) -> std::optional<Poly> {
        if (x.sym != Sym::c) return std::nullopt;
        return v.h(x.index);
      });
    }
    case FactorKind::theta:
    case FactorKind::theta_prime: {
      Poly th = theta_from_series(fa.shape, [&](int r) { return v.g(r); });
      return fa.kind == FactorKind::theta_prime ? th * f.theta_scale : th;
    }
    case FactorKind::eta: {
      int k = fa.shape.kk();
      Poly tk, tpk;
      if (k > 0) {
        BundleExpr e0{{{1, "E_0", f.n}, {-1, "E_1", f.n - k}}};
        Poly c0 = virtual_class(e0, roots).g(k), ck = v.g(k);
        tk = (ck + c0) * Rational(1, 2);
        tpk = (ck - c0) * Rational(1, 2);
      }
      return eta_from_series(fa.shape, [&](int r) { return v.g(r); }, tk, tpk);
    }
  }
  return Poly();
}

}  // namespace

Poly evaluate_locus(const LocusFormula& f, const RootMap& roots, LocusForm form) {
  if (form == LocusForm::quotient && f.type == LieType::A)
    throw UnsupportedError("type A loci have only the difference form");
  Poly acc;
  for (const auto& term : f.terms) {
    Poly prod(1);
    for (const auto& fa : term.factors) {
      prod *= evaluate_factor(f, fa, roots, form);
      if (prod.is_zero()) break;
    }
    acc += prod * Rational(term.coeff);
  }
  return acc;
}

}  // namespace schubert
