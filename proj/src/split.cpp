#include "schubert/split.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "schubert/error.hpp"
#include "schubert/nilcox.hpp"
#include "schubert/transition.hpp"

namespace schubert {

namespace {

int val(int x) { return x == kBox ? 0 : x; }

Alphabet block(Sym s, const std::vector<int>& seq, int i) {
  int lo = i >= 2 ? val(seq[i - 2]) : 0;
  return alphabet(s, lo + 1, val(seq[i - 1]));
}

bool increasing_seq(const std::vector<int>& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] >= s[i + 1]) return false;
  return true;
}

}  // namespace

bool compatible(const SignedPermutation& w, const std::vector<int>& seq) {
  bool box_free = w.group() == Group::D && !seq.empty() && seq[0] == 1;
  for (int d : descents(w)) {
    if (box_free && d == kBox) continue;
    if (std::find(seq.begin(), seq.end(), d) == seq.end()) return false;
  }
  return true;
}

std::string seq_str(const std::vector<int>& seq) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ",";
    s += seq[i] == kBox ? std::string("B") : std::to_string(seq[i]);
  }
  return s;
}

std::vector<int> parse_seq(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    if (tok == "B" || tok == "b") {
      out.push_back(kBox);
      continue;
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ValidationError("bad sequence entry '" + tok + "'");
    }
    if (used != tok.size() || v < 0) throw ValidationError("bad sequence entry '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

void validate_split(const SplitProblem& p) {
  if (p.a.empty() || p.b.empty()) throw ValidationError("split sequences a and b must be nonempty");
  if (!increasing_seq(p.a) || !increasing_seq(p.b)) throw ValidationError("split sequences must be strictly increasing");
  Group g = group_of(p.type);
  auto check_letters = [&](const std::vector<int>& s, bool zero_ok) {
    for (int x : s) {
      if (x == kBox && g != Group::D) throw ValidationError("B (box) is only a type D index");
      if (x == 0 && g != Group::BC && !zero_ok) throw ValidationError("index 0 is only a type B/C index");
    }
  };
  check_letters(p.a, false);
  // type A allows b_1 = 0 (empty Z_1)
  check_letters(p.b, g == Group::A);
  if (p.type == LieType::A) {
    if (p.w.negatives()) throw ValidationError("type A needs an unsigned permutation");
  } else if (g == Group::BC && p.b[0] != 0) {
    throw UnsupportedError("splitting needs b_1 = 0 in types B and C; removing this hypothesis is an open problem");
  } else if (g == Group::D && p.b[0] != kBox) {
    throw UnsupportedError("splitting needs b_1 = B in type D; removing this hypothesis is an open problem");
  }
  auto w = p.w.with_group(g);
  if (!compatible(w, p.a)) throw PreconditionError(w.str() + " is not compatible with a = " + seq_str(p.a));
  if (!compatible(w.inverse(), p.b))
    throw PreconditionError("inverse of " + w.str() + " is not compatible with b = " + seq_str(p.b));
}

namespace {

struct Slots {
  int p, q, total;
};

Slots slots_of(const SplitProblem& pr) {
  int p = int(pr.a.size()), q = int(pr.b.size());
  return {p, q, p + q - 1};
}

TreeKind middle_kind(LieType t) {
  if (t == LieType::A) return TreeKind::A;
  return t == LieType::D ? TreeKind::D : TreeKind::C;
}

}  // namespace

std::map<ShapeSeq, long> split_coefficients(const SplitProblem& pr) {
  validate_split(pr);
  Group g = group_of(pr.type);
  auto w = pr.w.with_group(g).canonical();
  Slots S = slots_of(pr);
  std::vector<FactorPredicate> preds;
  for (int j = 1; j <= S.total; ++j) {
    if (j == S.q && g != Group::A) {
      preds.push_back([](const SignedPermutation&) { return true; });
      continue;
    }
    int fix = 0;
    if (j < S.q) fix = val(pr.b[S.q - j - 1]);
    if (j > S.q) fix = val(pr.a[j - S.q - 1]);
    preds.push_back([fix](const SignedPermutation& u) {
      if (!u.in_symmetric()) return false;
      for (int i = 1; i <= fix; ++i)
        if (u.at(i) != i) return false;
      return true;
    });
  }
  int k = pr.a[0];
  std::map<SignedPermutation, std::map<Shape, long>> outer_cache, mid_cache;
  auto outer = [&](const SignedPermutation& u) -> const std::map<Shape, long>& {
    auto it = outer_cache.find(u);
    if (it == outer_cache.end()) it = outer_cache.emplace(u, stanley_coeffs(u.with_group(Group::A), TreeKind::A)).first;
    return it->second;
  };
  auto middle = [&](const SignedPermutation& u) -> const std::map<Shape, long>& {
    auto it = mid_cache.find(u);
    if (it == mid_cache.end()) {
      std::map<Shape, long> c;
      if (g == Group::A) {
        c = stanley_coeffs(u.with_group(Group::A), TreeKind::A);
      } else {
        if (g == Group::BC && !increasing_up_to(u, k))
          throw InternalError("middle factor " + u.str() + " is not increasing up to " + std::to_string(k));
        c = stanley_coeffs(u, middle_kind(pr.type), k);
      }
      it = mid_cache.emplace(u, std::move(c)).first;
    }
    return it->second;
  };
  std::map<ShapeSeq, long> out;
  for (const auto& f : reduced_factorizations(w, S.total, preds)) {
    std::vector<const std::map<Shape, long>*> maps;
    for (int j = 1; j <= S.total; ++j) maps.push_back(j == S.q ? &middle(f[j - 1]) : &outer(f[j - 1]));
    ShapeSeq cur(S.total);
    std::function<void(int, long)> rec = [&](int j, long c) {
      if (j == S.total) {
        out[cur] += c;
        return;
      }
      for (const auto& [la, n] : *maps[j]) {
        cur[j] = la;
        rec(j + 1, c * n);
      }
    };
    rec(0, 1);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

long split_coeff(const SplitProblem& p, const ShapeSeq& la) {
  auto all = split_coefficients(p);
  auto it = all.find(la);
  return it == all.end() ? 0 : it->second;
}

Poly split_basis_element(const SplitProblem& pr, const ShapeSeq& la, int m) {
  Slots S = slots_of(pr);
  if (int(la.size()) != S.total) throw ValidationError("shape sequence needs p + q - 1 entries");
  Poly acc(1);
  for (int j = 1; j <= S.total; ++j) {
    const Shape& s = la[j - 1];
    if (j < S.q) {
      acc *= schur_super(Shape(s.parts), {}, block(Sym::z, pr.b, S.q + 1 - j));
    } else if (j > S.q) {
      acc *= schur_super(Shape(s.parts), block(Sym::y, pr.a, j - S.q + 1), {});
    } else {
      auto Y1 = block(Sym::y, pr.a, 1);
      switch (pr.type) {
        case LieType::A:
          acc *= schur_super(Shape(s.parts), Y1, block(Sym::z, pr.b, 1));
          break;
        case LieType::B:
        case LieType::C:
          acc *= theta_poly(Shape(s.parts, pr.a[0]), m, Y1);
          break;
        case LieType::D:
          acc *= eta_poly(Shape(s.parts, pr.a[0], s.type), m, Y1);
          break;
      }
    }
    if (acc.is_zero()) break;
  }
  return acc;
}

namespace {

Rational type_b_factor(const SplitProblem& pr) {
  Rational s(1);
  if (pr.type == LieType::B)
    for (int i = 0; i < pr.w.negatives(); ++i) s /= 2;
  return s;
}

}  // namespace

Poly split_formula(const SplitProblem& pr, int m) {
  Poly acc;
  for (const auto& [la, c] : split_coefficients(pr)) acc += split_basis_element(pr, la, m) * Rational(c);
  return acc * type_b_factor(pr);
}

namespace {

std::vector<Shape> middle_shapes(const SplitProblem& pr, int d) {
  std::vector<Shape> out;
  int k = pr.a[0];
  for (const auto& la : partitions(d)) {
    if (pr.type == LieType::A) {
      out.push_back(la);
      continue;
    }
    Shape s(la.parts, k);
    if (!s.is_k_strict()) continue;
    if (pr.type == LieType::D && s.has_part_k()) {
      out.push_back(Shape(la.parts, k, 1));
      out.push_back(Shape(la.parts, k, 2));
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

std::map<ShapeSeq, Rational> split_solve(const SplitProblem& pr) {
  validate_split(pr);
  Slots S = slots_of(pr);
  auto w = pr.w.with_group(group_of(pr.type));
  int total = length(w);
  Poly target = double_schubert(w, pr.type) * (1 / type_b_factor(pr));
  std::vector<ShapeSeq> cands;
  std::vector<Poly> basis;
  ShapeSeq cur(S.total);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == S.total) {
      if (left) return;
      Poly b = split_basis_element(pr, cur);
      if (b.is_zero()) return;
      cands.push_back(cur);
      basis.push_back(std::move(b));
      return;
    }
    for (int d = 0; d <= left; ++d) {
      auto shapes = j + 1 == S.q ? middle_shapes(pr, d) : partitions(d);
      if (d == 0 && j + 1 == S.q && pr.type != LieType::A) shapes = {Shape({}, pr.a[0])};
      for (const auto& s : shapes) {
        cur[j] = s;
        rec(j + 1, left - d);
      }
    }
  };
  rec(0, total);
  auto sol = solve_in_span(target, basis);
  if (sol.rank != int(basis.size())) throw InternalError("split product basis is not linearly independent");
  if (!sol.in_span) throw InternalError("double Schubert polynomial not in the span of the split product basis");
  std::map<ShapeSeq, Rational> out;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (sol.coords[i] != 0) out[cands[i]] = sol.coords[i];
  return out;
}

std::vector<int> minimal_a(const SignedPermutation& w0, LieType t) {
  auto w = w0.with_group(group_of(t));
  auto d = descents(w);
  std::sort(d.begin(), d.end());
  if (w.group() == Group::D && d.size() >= 2 && d[0] == kBox && d[1] == 1) d.erase(d.begin());
  if (d.empty()) d.push_back(t == LieType::A ? 1 : t == LieType::D ? kBox : 0);
  return d;
}

std::vector<int> minimal_b(const SignedPermutation& w0, LieType t) {
  auto w = w0.with_group(group_of(t)).inverse();
  auto d = descents(w);
  std::sort(d.begin(), d.end());
  if (t == LieType::A) {
    if (d.empty()) d.push_back(1);
    return d;
  }
  int first = t == LieType::D ? kBox : 0;
  if (d.empty() || d[0] != first) d.insert(d.begin(), first);
  return d;
}

std::vector<std::vector<int>> admissible_a(const SignedPermutation& w0, LieType t, int n) {
  auto w = w0.with_group(group_of(t));
  auto letters = simple_letters(w.group(), n);
  std::vector<std::vector<int>> out;
  int L = int(letters.size());
  for (int mask = 1; mask < (1 << L); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < L; ++i)
      if (mask >> i & 1) s.push_back(letters[i]);
    if (compatible(w, s)) out.push_back(s);
  }
  return out;
}

}  // namespace schubert
