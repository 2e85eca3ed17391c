#include "schubert/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>

#include "schubert/error.hpp"

namespace schubert {

Group group_of(LieType t) {
  switch (t) {
    case LieType::A: return Group::A;
    case LieType::B:
    case LieType::C: return Group::BC;
    case LieType::D: return Group::D;
  }
  return Group::A;
}

char lie_char(LieType t) { return "ABCD"[int(t)]; }

LieType parse_lie_type(const std::string& s) {
  if (s == "A") return LieType::A;
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "D") return LieType::D;
  throw ValidationError("unknown Lie type '" + s + "' (expected A, B, C or D)");
}

SignedPermutation::SignedPermutation(Group g, std::vector<int> values) : g_(g), v_(std::move(values)) {
  int n = rank();
  std::vector<char> seen(n + 1, 0);
  int neg = 0;
  for (int x : v_) {
    int a = std::abs(x);
    if (x == 0 || a > n || seen[a]) {
      std::ostringstream os;
      os << "not a signed permutation of 1.." << n << ": " << str();
      throw ValidationError(os.str());
    }
    seen[a] = 1;
    if (x < 0) ++neg;
  }
  if (g_ == Group::A && neg > 0) throw ValidationError("type A permutation with barred entries: " + str());
  if (g_ == Group::D && neg % 2) throw ValidationError("type D element needs an even number of bars: " + str());
}

SignedPermutation SignedPermutation::identity(Group g, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return SignedPermutation(g, v);
}

SignedPermutation SignedPermutation::parse(Group g, const std::string& text) {
  std::vector<int> v;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      std::size_t pos = 0;
      int x = std::stoi(cur, &pos);
      if (pos != cur.size()) throw std::invalid_argument(cur);
      v.push_back(x);
    } catch (const std::exception&) {
      throw ValidationError("bad entry '" + cur + "' in permutation '" + text + "'");
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t') flush();
    else cur.push_back(ch);
  }
  flush();
  return SignedPermutation(g, v);
}

SignedPermutation SignedPermutation::with_rank(int n) const {
  std::vector<int> v = v_;
  if (n >= rank()) {
    for (int i = rank() + 1; i <= n; ++i) v.push_back(i);
  } else {
    for (int i = n + 1; i <= rank(); ++i)
      if (v_[i - 1] != i) throw ValidationError("cannot restrict " + str() + " to rank " + std::to_string(n));
    v.resize(n);
  }
  SignedPermutation r;
  r.g_ = g_;
  r.v_ = std::move(v);
  return r;
}

SignedPermutation SignedPermutation::with_group(Group g) const { return SignedPermutation(g, v_); }

SignedPermutation SignedPermutation::canonical() const {
  int n = rank();
  while (n > 0 && v_[n - 1] == n) --n;
  return with_rank(n);
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (v_[i] != i + 1) return false;
  return true;
}

int SignedPermutation::negatives() const {
  return int(std::count_if(v_.begin(), v_.end(), [](int x) { return x < 0; }));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
  int n = std::max(rank(), o.rank());
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) {
    int j = o.at(i);
    int a = at(std::abs(j));
    v[i - 1] = j < 0 ? -a : a;
  }
  Group g = g_ == o.g_ ? g_ : (g_ == Group::A ? o.g_ : g_);
  SignedPermutation r;
  r.g_ = g;
  r.v_ = std::move(v);
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> v(rank());
  for (int i = 1; i <= rank(); ++i) {
    int x = v_[i - 1];
    v[std::abs(x) - 1] = x < 0 ? -i : i;
  }
  SignedPermutation r;
  r.g_ = g_;
  r.v_ = std::move(v);
  return r;
}

SignedPermutation SignedPermutation::right_simple(int a) const {
  int need = a == kBox ? 2 : std::max(a + 1, 1);
  SignedPermutation r = rank() < need ? with_rank(need) : *this;
  auto& v = r.v_;
  if (a == kBox) {
    int w1 = v[0], w2 = v[1];
    v[0] = -w2;
    v[1] = -w1;
  } else if (a == 0) {
    v[0] = -v[0];
  } else {
    std::swap(v[a - 1], v[a]);
  }
  return r;
}

SignedPermutation SignedPermutation::left_simple(int a) const {
  // s_a w = (w^{-1} s_a)^{-1}
  return inverse().right_simple(a).inverse();
}

bool SignedPermutation::operator==(const SignedPermutation& o) const {
  if (group() != o.group()) return false;
  int n = std::max(rank(), o.rank());
  for (int i = 1; i <= n; ++i)
    if (at(i) != o.at(i)) return false;
  return true;
}

bool SignedPermutation::operator<(const SignedPermutation& o) const {
  if (group() != o.group()) return group() < o.group();
  int n = std::max(rank(), o.rank());
  for (int i = 1; i <= n; ++i)
    if (at(i) != o.at(i)) return at(i) < o.at(i);
  return false;
}

std::size_t SignedPermutation::hash() const {
  int n = rank();
  while (n > 0 && v_[n - 1] == n) --n;
  std::size_t h = 0x9e3779b97f4a7c15ull + std::size_t(group());
  for (int i = 0; i < n; ++i) h = (h ^ std::size_t(v_[i] + 1024)) * 0x100000001b3ull;
  return h;
}

std::string SignedPermutation::str() const {
  std::string s;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  return s;
}

int length(const SignedPermutation& w) {
  const auto& v = w.values();
  int n = w.rank();
  int inv = 0, nsp = 0, neg = 0;
  for (int i = 0; i < n; ++i) {
    if (v[i] < 0) ++neg;
    for (int j = i + 1; j < n; ++j) {
      if (v[i] > v[j]) ++inv;
      if (v[i] + v[j] < 0) ++nsp;
    }
  }
  switch (w.group()) {
    case Group::A: return inv;
    case Group::BC: return inv + nsp + neg;
    case Group::D: return inv + nsp;
  }
  return inv;
}

bool is_descent(const SignedPermutation& w, int a) {
  if (a == kBox) return w.at(1) + w.at(2) < 0;
  if (a == 0) return w.at(1) < 0;
  return w.at(a) > w.at(a + 1);
}

std::vector<int> simple_letters(Group g, int n) {
  std::vector<int> out;
  if (g == Group::BC && n >= 1) out.push_back(0);
  if (g == Group::D && n >= 2) out.push_back(kBox);
  for (int i = 1; i < n; ++i) out.push_back(i);
  return out;
}

std::vector<int> descents(const SignedPermutation& w) {
  std::vector<int> out;
  for (int a : simple_letters(w.group(), w.rank()))
    if (is_descent(w, a)) out.push_back(a);
  return out;
}

int length_by_sorting(const SignedPermutation& w) {
  // Bubble-style: strip a descent until nothing is left. Each step drops the
  // length by exactly one, so the step count is the length.
  SignedPermutation u = w;
  int steps = 0;
  std::vector<int> letters = simple_letters(w.group(), w.rank());
  for (;;) {
    bool moved = false;
    for (int a : letters) {
      bool desc;
      if (a == kBox) desc = u.at(1) + u.at(2) < 0;
      else if (a == 0) desc = u.at(1) < 0;
      else desc = u.at(a) > u.at(a + 1);
      if (desc) {
        u = u.right_simple(a);
        ++steps;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  if (!u.is_identity()) throw InternalError("sorting did not reach the identity");
  return steps;
}

ReducedWord reduced_word(const SignedPermutation& w) {
  ReducedWord rev;
  SignedPermutation u = w;
  for (;;) {
    auto d = descents(u);
    if (d.empty()) break;
    rev.push_back(d.front());
    u = u.right_simple(d.front());
  }
  return ReducedWord(rev.rbegin(), rev.rend());
}

std::string word_str(const ReducedWord& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ",";
    s += word[i] == kBox ? std::string("B") : std::to_string(word[i]);
  }
  return s;
}

SignedPermutation from_word(Group g, const ReducedWord& word, int n) {
  SignedPermutation u = SignedPermutation::identity(g, n);
  for (int a : word) u = u.right_simple(a);
  return u;
}

SignedPermutation reflect(const SignedPermutation& w, ReflKind kind, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1) throw ValidationError("reflection index must be positive");
  if (kind == ReflKind::t && i == j) throw ValidationError("t_ij needs i < j");
  SignedPermutation u = w.rank() < j ? w.with_rank(j) : w;
  std::vector<int> v = u.values();
  if (kind == ReflKind::t) {
    std::swap(v[i - 1], v[j - 1]);
  } else if (i == j) {
    v[i - 1] = -v[i - 1];
  } else {
    int a = v[i - 1], b = v[j - 1];
    v[i - 1] = -b;
    v[j - 1] = -a;
  }
  Group g = u.group();
  if (kind == ReflKind::tbar && g == Group::A) g = Group::BC;
  if (g == Group::D && kind == ReflKind::tbar && i == j)
    throw ValidationError("single sign change leaves the type D group");
  return SignedPermutation(g, v);
}

namespace {

using PairList = std::vector<std::pair<SignedPermutation, SignedPermutation>>;

std::mutex g_factor_mutex;
std::unordered_map<SignedPermutation, std::unique_ptr<PairList>, SignedPermutationHash> g_factor_cache;

bool perm_order(const SignedPermutation& a, const SignedPermutation& b) {
  int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  return a < b;
}

}  // namespace

const PairList& left_factors(const SignedPermutation& w) {
  SignedPermutation key = w.canonical();
  {
    std::lock_guard<std::mutex> lock(g_factor_mutex);
    auto it = g_factor_cache.find(key);
    if (it != g_factor_cache.end()) return *it->second;
  }
  // u runs over prefixes: walk v = u^{-1} w down by left descents.
  std::set<SignedPermutation> seen;
  std::vector<SignedPermutation> stack{SignedPermutation::identity(key.group(), key.rank())};
  auto out = std::make_unique<PairList>();
  int lw = length(key);
  while (!stack.empty()) {
    SignedPermutation u = stack.back();
    stack.pop_back();
    if (!seen.insert(u).second) continue;
    SignedPermutation v = u.inverse() * key;
    for (int a : simple_letters(key.group(), key.rank())) {
      SignedPermutation v2 = v.left_simple(a);
      if (length(v2) < length(v)) stack.push_back(u.right_simple(a).with_rank(key.rank()));
    }
  }
  for (const auto& u : seen) {
    SignedPermutation v = u.inverse() * key;
    if (length(u) + length(v) != lw) throw InternalError("left factor bookkeeping broke");
    out->emplace_back(u, v);
  }
  std::sort(out->begin(), out->end(), [](auto& a, auto& b) { return perm_order(a.first, b.first); });
  std::lock_guard<std::mutex> lock(g_factor_mutex);
  auto [it, fresh] = g_factor_cache.emplace(key, std::move(out));
  return *it->second;
}

namespace {

void factor_rec(const SignedPermutation& w, int slot, int slots, const std::vector<FactorPredicate>& preds,
                std::vector<SignedPermutation>& cur, std::vector<std::vector<SignedPermutation>>& out) {
  auto ok = [&](const SignedPermutation& u) { return preds.empty() || !preds[slot] || preds[slot](u); };
  if (slot == slots - 1) {
    if (ok(w)) {
      cur.push_back(w);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (const auto& [u, v] : left_factors(w)) {
    if (!ok(u)) continue;
    cur.push_back(u);
    factor_rec(v, slot + 1, slots, preds, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<SignedPermutation>> reduced_factorizations(const SignedPermutation& w, int slots,
                                                                   const std::vector<FactorPredicate>& preds) {
  if (slots < 1) throw ValidationError("need at least one slot");
  if (!preds.empty() && int(preds.size()) != slots) throw ValidationError("one predicate per slot expected");
  std::vector<std::vector<SignedPermutation>> out;
  std::vector<SignedPermutation> cur;
  factor_rec(w, 0, slots, preds, cur, out);
  return out;
}

SignedPermutation embed_symmetric(const SignedPermutation& w, EmbedVariant variant) {
  if (w.group() == Group::A) throw UnsupportedError("embed_symmetric expects a signed permutation");
  int n = w.rank();
  if (variant == EmbedVariant::phi) {
    std::vector<int> v(2 * n);
    for (int i = 1; i <= n; ++i) {
      int x = w.at(n + 1 - i);
      v[i - 1] = x > 0 ? n + 1 - x : n - x;
      v[2 * n - i] = 2 * n + 1 - v[i - 1];
    }
    return SignedPermutation(Group::A, v);
  }
  std::vector<int> v(2 * n + 1);
  for (int i = 1; i <= n; ++i) {
    int x = w.at(n + 1 - i);
    v[i - 1] = x > 0 ? n + 1 - x : n + 1 - x;
    v[2 * n + 1 - i] = 2 * n + 2 - v[i - 1];
  }
  v[n] = n + 1;
  return SignedPermutation(Group::A, v);
}

std::vector<SignedPermutation> all_elements(Group g, int n) {
  std::vector<SignedPermutation> out;
  std::set<SignedPermutation> seen;
  std::vector<SignedPermutation> frontier{SignedPermutation::identity(g, n)};
  seen.insert(frontier[0]);
  auto letters = simple_letters(g, n);
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& u : frontier) {
      out.push_back(u);
      for (int a : letters) {
        SignedPermutation v = u.right_simple(a);
        if (seen.insert(v).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), perm_order);
  return out;
}

SignedPermutation longest_element(Group g, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) {
    if (g == Group::A) v[i] = n - i;
    else v[i] = -(i + 1);
  }
  if (g == Group::D && n % 2 == 1) v[0] = 1;
  return SignedPermutation(g, v);
}

bool increasing_up_to(const SignedPermutation& w, int k) {
  if (w.group() == Group::D) {
    if (k == kBox || k == 1) return true;
    for (int a : descents(w))
      if (a == kBox || a < k) return false;
    return true;
  }
  for (int a : descents(w))
    if (a < k) return false;
  return true;
}

bool is_grassmannian(const SignedPermutation& w, int k) {
  for (int a : descents(w)) {
    if (w.group() == Group::D && k == 1 && (a == kBox || a == 1)) continue;
    if (a != k) return false;
  }
  return true;
}

}  // namespace schubert
