#include "schubert/transition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_set>

#include "schubert/error.hpp"

namespace schubert {

std::map<Shape, long> TransitionTree::shape_counts() const {
  std::map<Shape, long> out;
  for (const auto& [w, la] : leaves) ++out[la];
  return out;
}

TreeKind parse_tree_kind(const std::string& s) {
  if (s == "A" || s == "a") return TreeKind::A;
  if (s == "C" || s == "c") return TreeKind::C;
  if (s == "D" || s == "d") return TreeKind::D;
  throw ValidationError("tree kind must be A, C or D: " + s);
}

std::string tree_kind_str(TreeKind k) { return k == TreeKind::A ? "A" : k == TreeKind::C ? "C" : "D"; }

bool is_grassmannian_perm(const SignedPermutation& w) {
  if (w.negatives() > 0) return false;
  int d = 0;
  for (int i = 1; i < w.rank(); ++i)
    if (w.at(i) > w.at(i + 1)) ++d;
  return d <= 1;
}

Shape grassmannian_perm_shape(const SignedPermutation& w) {
  if (!is_grassmannian_perm(w)) throw PreconditionError(w.str() + " is not a Grassmannian permutation");
  int m = 0;
  for (int i = 1; i < w.rank(); ++i)
    if (w.at(i) > w.at(i + 1)) m = i;
  std::vector<int> parts;
  for (int j = m; j >= 1; --j) parts.push_back(w.at(j) - j);
  std::sort(parts.rbegin(), parts.rend());
  return Shape(parts);
}

namespace {

// Largest descent; INT_MIN when there is none.
int largest_descent(const SignedPermutation& w) {
  auto d = descents(w);
  return d.empty() ? std::numeric_limits<int>::min() : *std::max_element(d.begin(), d.end());
}

int last_smaller(const SignedPermutation& w, int r) {
  int s = 0;
  for (int i = r + 1; i <= w.rank(); ++i)
    if (w.at(i) < w.at(r)) s = i;
  if (s == 0) throw InternalError("no s for descent " + std::to_string(r) + " of " + w.str());
  return s;
}

bool one_line_less(const SignedPermutation& a, const SignedPermutation& b) {
  int n = std::max(a.rank(), b.rank());
  return a.with_rank(n).values() < b.with_rank(n).values();
}

struct Builder {
  TransitionTree& t;
  int cap;

  bool is_leaf(const SignedPermutation& w, int r) const {
    if (w.is_identity()) return true;
    switch (t.kind) {
      case TreeKind::A:
        return is_grassmannian_perm(w);
      case TreeKind::C:
        return r == t.k;
      case TreeKind::D:
        if (t.k == 1) return r == kBox || r == 1;
        return r == t.k;
    }
    return true;
  }

  std::vector<SignedPermutation> children(const SignedPermutation& w0, int& r_out, int& s_out) {
    SignedPermutation w = w0;
    int lw = length(w);
    std::set<SignedPermutation> out;
    for (int shift = 0;; ++shift) {
      int r = largest_descent(w);
      int s = last_smaller(w, r);
      if (shift == 0) r_out = r, s_out = s;
      SignedPermutation v = reflect(w, ReflKind::t, r, s);
      for (int i = 1; i < r; ++i) {
        auto u = reflect(v, ReflKind::t, i, r);
        if (length(u) == lw) out.insert(u);
      }
      if (t.kind == TreeKind::A) {
        if (!out.empty()) break;
        if (shift > 0) throw InternalError("type A transition found no children for " + w0.str());
        // Psi(w) := Psi(1 x w)
        std::vector<int> vals{1};
        for (int x : w.values()) vals.push_back(x + 1);
        w = SignedPermutation(Group::A, vals);
        continue;
      }
      int n = w.rank() + 1;
      for (int i = 1; i <= n + 1; ++i) {
        if (t.kind == TreeKind::D && i == r) continue;
        auto u = reflect(v, ReflKind::tbar, i, r).with_group(group_of(t.kind == TreeKind::D ? LieType::D : LieType::C));
        if (length(u) != lw) continue;
        if (i == n + 1) throw InternalError("transition child beyond rank + 1 for " + w0.str());
        out.insert(u.canonical());
      }
      break;
    }
    std::vector<SignedPermutation> res(out.begin(), out.end());
    std::sort(res.begin(), res.end(), one_line_less);
    return res;
  }

  int build(const SignedPermutation& w, int depth) {
    if (depth > cap) throw InternalError("transition tree deeper than the safety cap at " + w.str());
    int id = int(t.nodes.size());
    t.nodes.push_back({w, {}, 0, 0});
    int r = largest_descent(w);
    if (is_leaf(w, r)) {
      Shape la;
      if (t.kind == TreeKind::A) la = grassmannian_perm_shape(w);
      else la = grassmannian_to_shape(w, t.k);
      t.leaves.push_back({w, la});
      return id;
    }
    if (t.kind != TreeKind::A && !increasing_up_to(w, t.k))
      throw InternalError("transition node not increasing up to k: " + w.str());
    int rr = 0, ss = 0;
    auto ch = children(w, rr, ss);
    t.nodes[id].r = rr;
    t.nodes[id].s = ss;
    if (ch.empty()) throw InternalError("transition node without children: " + w.str());
    for (const auto& c : ch) {
      int cid = build(c, depth + 1);
      t.nodes[id].children.push_back(cid);
    }
    return id;
  }
};

}  // namespace

TransitionTree transition_tree(const SignedPermutation& w0, TreeKind kind, int k) {
  TransitionTree t;
  t.kind = kind;
  SignedPermutation w;
  switch (kind) {
    case TreeKind::A:
      if (w0.negatives() > 0) throw ValidationError("type A transition needs an unsigned permutation: " + w0.str());
      w = w0.with_group(Group::A);
      k = 0;
      break;
    case TreeKind::C:
      if (k < 0) throw ValidationError("type C transition needs k >= 0");
      w = w0.with_group(Group::BC);
      if (!increasing_up_to(w, k)) throw PreconditionError(w.str() + " is not increasing up to " + std::to_string(k));
      break;
    case TreeKind::D:
      if (k == 0 || k < kBox) throw ValidationError("type D transition needs k = B or k >= 1");
      w = w0.with_group(Group::D);
      if (k >= 2 && !increasing_up_to(w, k))
        throw PreconditionError(w.str() + " is not increasing up to " + std::to_string(k));
      break;
  }
  t.k = k;
  w = w.canonical();
  int n = std::max(1, w.rank()) + 2;
  Builder b{t, std::max(1, length(w)) * n * n};
  b.build(w, 0);
  return t;
}

std::map<Shape, long> stanley_coeffs(const SignedPermutation& w, TreeKind kind, int k) {
  return transition_tree(w, kind, k).shape_counts();
}

namespace {

std::unordered_set<SignedPermutation, SignedPermutationHash> prefix_set(const SignedPermutation& w) {
  std::unordered_set<SignedPermutation, SignedPermutationHash> out;
  for (const auto& [u, v] : left_factors(w)) out.insert(u.canonical());
  return out;
}

}  // namespace

long fg_tableau_count(const SignedPermutation& w0, const Shape& la) {
  if (w0.negatives() > 0) throw ValidationError("Fomin-Greene tableaux need an unsigned permutation");
  SignedPermutation w = w0.with_group(Group::A).canonical();
  if (la.weight() != length(w)) return 0;
  if (la.weight() == 0) return w.is_identity() ? 1 : 0;
  Shape mu = la.conjugate();
  int maxletter = std::max(1, w.rank() - 1);
  auto prefixes = prefix_set(w);
  // cells in reading order: columns left to right, bottom to top
  std::vector<std::pair<int, int>> cells;
  int cols = mu.part(1);
  for (int c = 1; c <= cols; ++c) {
    int h = 0;
    for (int r = 1; r <= mu.length(); ++r)
      if (mu.part(r) >= c) h = r;
    for (int r = h; r >= 1; --r) cells.push_back({r, c});
  }
  std::vector<std::vector<int>> T(mu.length() + 2, std::vector<int>(cols + 2, 0));
  long count = 0;
  std::function<void(std::size_t, const SignedPermutation&)> rec = [&](std::size_t idx, const SignedPermutation& u) {
    if (idx == cells.size()) {
      if (u == w) ++count;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1, hi = maxletter;
    if (c > 1) lo = std::max(lo, T[r][c - 1]);
    if (r < mu.length() && mu.part(r + 1) >= c) hi = std::min(hi, T[r + 1][c] - 1);
    for (int a = lo; a <= hi; ++a) {
      if (u.at(a) > u.at(a + 1)) continue;
      auto u2 = u.right_simple(a).canonical();
      if (!prefixes.count(u2)) continue;
      T[r][c] = a;
      rec(idx + 1, u2);
    }
    T[r][c] = 0;
  };
  rec(0, SignedPermutation::identity(Group::A, 1));
  return count;
}

namespace {

int max_unimodal(const std::vector<int>& b) {
  int m = int(b.size()), best = 0;
  std::vector<int> dec(m, 1), uni(m, 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) {
      if (b[j] > b[i]) dec[i] = std::max(dec[i], dec[j] + 1);
      if (b[j] < b[i]) uni[i] = std::max(uni[i], uni[j] + 1);
    }
    uni[i] = std::max(uni[i], dec[i]);
    best = std::max(best, uni[i]);
  }
  return best;
}

bool is_unimodal(const std::vector<int>& b) { return max_unimodal(b) == int(b.size()); }

void all_reduced_words(const SignedPermutation& w, std::vector<int>& suffix, std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int a : descents(w)) {
    suffix.push_back(a);
    all_reduced_words(w.right_simple(a), suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

long kraskiewicz_count(const SignedPermutation& w0, const Shape& la) {
  if (w0.group() == Group::D) throw ValidationError("Kraskiewicz tableaux are defined for W_n");
  SignedPermutation w = w0.with_group(Group::BC).canonical();
  if (!Shape(la.parts, 0).is_k_strict()) return 0;
  if (la.weight() != length(w)) return 0;
  std::vector<std::vector<int>> words;
  std::vector<int> suffix;
  all_reduced_words(w, suffix, words);
  long count = 0;
  int rows = la.length();
  for (const auto& a : words) {
    // a = t_r t_{r-1} ... t_1
    bool ok = true;
    std::size_t pos = 0;
    for (int i = rows; i >= 1 && ok; --i) {
      std::vector<int> row(a.begin() + pos, a.begin() + pos + la.part(i));
      pos += la.part(i);
      std::vector<int> upto(a.begin(), a.begin() + pos);
      ok = is_unimodal(row) && max_unimodal(upto) == la.part(i);
    }
    if (ok) ++count;
  }
  return count;
}

std::string tree_dot(const TransitionTree& t) {
  std::ostringstream os;
  os << "digraph transition {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& nd = t.nodes[i];
    os << "  n" << i << " [label=\"" << nd.w.str();
    if (nd.children.empty()) {
      for (const auto& [w, la] : t.leaves)
        if (w == nd.w) {
          os << "\\n(" << la.parts_str() << ")";
          break;
        }
    } else {
      os << "\\nr=" << (nd.r == kBox ? std::string("B") : std::to_string(nd.r)) << " s=" << nd.s;
    }
    os << "\"];\n";
    for (int c : nd.children) os << "  n" << i << " -> n" << c << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace schubert
