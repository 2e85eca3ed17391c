#include "schubert/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

Shape::Shape(std::vector<int> p, int k_, int type_) : parts(std::move(p)), k(k_), type(type_) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

int Shape::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Shape::ell_k() const {
  return int(std::count_if(parts.begin(), parts.end(), [&](int x) { return x > kk(); }));
}

Shape Shape::conjugate() const {
  std::vector<int> c;
  if (!parts.empty()) {
    for (int col = 1; col <= parts[0]; ++col)
      c.push_back(int(std::count_if(parts.begin(), parts.end(), [&](int x) { return x >= col; })));
  }
  return Shape(c, k, 0);
}

bool Shape::has_part_k() const {
  return k > 0 && std::find(parts.begin(), parts.end(), k) != parts.end();
}

bool Shape::is_k_strict() const {
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] < parts[i + 1]) return false;
    if (parts[i] == parts[i + 1] && parts[i] > kk()) return false;
  }
  for (int x : parts)
    if (x <= 0) return false;
  return true;
}

void Shape::validate(bool typed) const {
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1]) throw ValidationError("parts not weakly decreasing: " + str());
  for (int x : parts)
    if (x <= 0) throw ValidationError("nonpositive part in " + str());
  if (!is_k_strict()) throw ValidationError("partition is not " + std::to_string(kk()) + "-strict: " + str());
  if (type < 0 || type > 2) throw ValidationError("type must be 0, 1 or 2: " + str());
  if (typed) {
    if ((type > 0) != has_part_k()) throw ValidationError("type must be positive exactly when some part equals k: " + str());
  } else if (type != 0) {
    throw ValidationError("type tag only applies to type D shapes: " + str());
  }
}

std::string Shape::parts_str() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(parts[i]);
  }
  return s.empty() ? "0" : s;
}

std::string Shape::str() const {
  std::string ks = k == kBox ? "B" : std::to_string(k);
  return parts_str() + " | k=" + ks + " | t=" + std::to_string(type);
}

Shape Shape::parse(const std::string& text, int k, int type) {
  std::vector<std::string> fields;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '|') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    fields.push_back(cur);
  }
  std::vector<int> parts;
  {
    std::string s = fields[0];
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
      try {
        std::size_t pos = 0;
        int x = std::stoi(tok, &pos);
        if (pos != tok.size() || x < 0) throw std::invalid_argument(tok);
        parts.push_back(x);
      } catch (const std::exception&) {
        throw ValidationError("bad part '" + tok + "' in shape '" + text + "'");
      }
    }
  }
  for (std::size_t f = 1; f < fields.size(); ++f) {
    std::string s;
    for (char ch : fields[f])
      if (ch != ' ' && ch != '\t') s.push_back(ch);
    auto value = [&](const std::string& v) {
      if (v == "B") return kBox;
      try {
        return std::stoi(v);
      } catch (const std::exception&) {
        throw ValidationError("bad field '" + s + "' in shape '" + text + "'");
      }
    };
    if (s.rfind("k=", 0) == 0) k = value(s.substr(2));
    else if (s.rfind("t=", 0) == 0) type = value(s.substr(2));
    else throw ValidationError("bad field '" + s + "' in shape '" + text + "'");
  }
  return Shape(parts, k, type);
}

bool Shape::operator<(const Shape& o) const {
  if (weight() != o.weight()) return weight() < o.weight();
  if (parts != o.parts) return parts > o.parts;
  if (k != o.k) return k < o.k;
  return type < o.type;
}

std::string OrderIdeal::str() const {
  std::string s = "{";
  bool first = true;
  for (auto [i, j] : pairs) {
    if (!first) s += ",";
    first = false;
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return s + "}";
}

OrderIdeal order_ideal(const Shape& la, IdealVariant variant) {
  la.validate(variant == IdealVariant::Cprime && la.k > 0);
  OrderIdeal D;
  int l = la.length(), k = la.kk();
  if (l == 0) return D;
  // lambda_i + lambda_j <= 2 lambda_1 bounds j - i, and i <= l.
  int jmax = l + 2 * la.part(1) + 1;
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= jmax; ++j) {
      int lhs = la.part(i) + la.part(j), rhs = 2 * k + j - i;
      bool in = variant == IdealVariant::C ? lhs > rhs : lhs >= rhs;
      if (in) D.pairs.insert({i, j});
    }
  return D;
}

std::vector<int> index_set(const Shape& la, int n, LieType t) {
  if (t == LieType::A) throw ValidationError("index sets are defined for types B, C and D");
  int k = la.k;
  if (t == LieType::D && k <= 0) throw UnsupportedError("type D index sets need k >= 1");
  if (k < 0 || k > n) throw ValidationError("k out of range for rank " + std::to_string(n));
  int m = n - k;
  int width = t == LieType::D ? n + k - 1 : n + k;
  if (la.length() > m || la.part(1) > width)
    throw ValidationError("shape " + la.str() + " does not fit the rank " + std::to_string(n) + " rectangle");
  OrderIdeal D = order_ideal(la, t == LieType::D ? IdealVariant::Cprime : IdealVariant::C);
  std::vector<int> p;
  for (int j = 1; j <= m; ++j) {
    int cnt = 0;
    for (int i = 1; i < j; ++i)
      if (D.contains(i, j)) ++cnt;
    int pj = n + k + j - la.part(j) - cnt;
    if (t == LieType::D) {
      int lj = la.part(j);
      bool prev_bigger = j == 1 || la.part(j - 1) > lj;
      if (lj > k || (lj == k && prev_bigger && (n + j + la.type) % 2 == 1)) pj -= 1;
    }
    if (t == LieType::B && pj > n) pj += 1;
    p.push_back(pj);
  }
  return p;
}

namespace {

// Positive integers not in `taken`, in order; enough of them to index up to `count`.
std::vector<int> free_values(const std::vector<int>& taken, int count) {
  std::vector<int> out;
  for (int v = 1; int(out.size()) < count; ++v)
    if (std::find(taken.begin(), taken.end(), v) == taken.end()) out.push_back(v);
  return out;
}

SignedPermutation finish(Group g, std::vector<int> head, int n) {
  int need = 0;
  for (int x : head) need = std::max(need, std::abs(x));
  need = std::max(need, int(head.size()));
  if (n > 0 && need > n) throw ValidationError("shape does not fit in rank " + std::to_string(n));
  if (n == 0) n = need;
  std::vector<char> used(n + 1, 0);
  for (int x : head) used[std::abs(x)] = 1;
  for (int v = 1; v <= n; ++v)
    if (!used[v]) head.push_back(v);
  return SignedPermutation(g, head);
}

int to_int_k(int k) { return k < 0 ? 0 : k; }

}  // namespace

SignedPermutation shape_to_grassmannian(const Shape& la, LieType t, int n) {
  if (t == LieType::A) {
    int m = la.k;
    for (int i = 1; i <= la.length(); ++i)
      if (la.part(i) <= 0 || la.part(i) < la.part(i + 1)) throw ValidationError("not a partition: " + la.str());
    if (la.length() > m) throw ValidationError("type A shape has more parts than the descent position: " + la.str());
    std::vector<int> head;
    for (int j = 1; j <= m; ++j) head.push_back(la.part(m + 1 - j) + j);
    return finish(Group::A, head, n);
  }
  bool typeD = t == LieType::D;
  la.validate(typeD && la.k > 0);
  if (typeD && la.k == 0) throw ValidationError("type D shapes use k = B or k >= 1");
  int k = to_int_k(la.k);
  std::vector<int> mu;
  for (int x : la.parts)
    if (x > k) mu.push_back(x - k);
  int lmu = int(mu.size());
  std::vector<int> h(k + 1, 0);  // column heights, 1-based
  for (int c = 1; c <= k; ++c)
    h[c] = int(std::count_if(la.parts.begin(), la.parts.end(), [&](int x) { return x >= c; }));
  std::vector<int> head;
  auto fv = free_values(mu, la.length() + la.part(1) + k + 2);
  if (!typeD) {
    for (int i = 1; i <= k; ++i) {
      int j = h[k + 1 - i] + i - lmu;
      head.push_back(fv[j - 1]);
    }
    for (int r = 0; r < lmu; ++r) head.push_back(-mu[r]);
    return finish(Group::BC, head, n);
  }
  for (int i = 1; i <= k; ++i) {
    int j = h[k + 1 - i] - lmu + i - 1;
    head.push_back(j == 0 ? 1 : fv[j - 1] + 1);
  }
  std::vector<int> tail;
  for (int r = lmu - 1; r >= 0; --r) tail.push_back(-(mu[r] + 1));
  int negs = int(tail.size());
  if (k > 0 && head[0] > 1) {
    if (la.type == 2) {
      head[0] = -head[0];
      ++negs;
    }
    if (negs % 2) tail.push_back(-1);
  } else if (k > 0) {
    if (negs % 2) head[0] = -1;
  } else if (negs % 2) {
    tail.push_back(-1);
  }
  std::sort(tail.begin(), tail.end());
  head.insert(head.end(), tail.begin(), tail.end());
  return finish(Group::D, head, n);
}

Shape grassmannian_to_shape(const SignedPermutation& w, int k) {
  if (!is_grassmannian(w, k))
    throw PreconditionError(w.str() + " is not " + (k == kBox ? std::string("B") : std::to_string(k)) + "-Grassmannian");
  int n = w.rank();
  if (w.group() == Group::A) {
    std::vector<int> parts;
    for (int j = k; j >= 1; --j) parts.push_back(w.at(j) - j);
    return Shape(parts, k, 0);
  }
  bool typeD = w.group() == Group::D;
  if (typeD && k == 0) throw ValidationError("type D uses k = B or k >= 1");
  int kk = to_int_k(k);
  std::vector<int> mu;
  for (int i = kk + 1; i <= n; ++i)
    if (w.at(i) < 0) {
      int a = -w.at(i) - (typeD ? 1 : 0);
      if (a > 0) mu.push_back(a);
    }
  std::sort(mu.rbegin(), mu.rend());
  int lmu = int(mu.size());
  auto fv = free_values(mu, n + 2);
  auto rank_of = [&](int v) {
    return int(std::find(fv.begin(), fv.end(), v) - fv.begin()) + 1;
  };
  std::vector<int> h(kk + 1, 0);
  for (int i = 1; i <= kk; ++i) {
    int a = std::abs(w.at(i));
    if (!typeD) {
      h[kk + 1 - i] = lmu + rank_of(a) - i;
    } else {
      int j = a == 1 ? 0 : rank_of(a - 1);
      h[kk + 1 - i] = lmu + j - i + 1;
    }
  }
  std::vector<int> parts;
  for (int x : mu) parts.push_back(kk + x);
  for (int r = lmu + 1;; ++r) {
    int c = 0;
    for (int col = 1; col <= kk; ++col)
      if (h[col] >= r) ++c;
    if (c == 0) break;
    parts.push_back(c);
  }
  int type = 0;
  if (typeD && kk > 0 && std::abs(w.at(1)) > 1) type = w.at(1) > 0 ? 1 : 2;
  Shape s(parts, k, type);
  s.validate(typeD && kk > 0);
  return s;
}

OrderIdeal ideal_of_grassmannian(const SignedPermutation& w, int k) {
  if (!is_grassmannian(w, k)) throw PreconditionError(w.str() + " is not Grassmannian at the requested position");
  OrderIdeal D;
  int kk = to_int_k(k), n = w.rank();
  for (int i = 1; kk + i <= n; ++i)
    for (int j = i + 1; kk + j <= n; ++j)
      if (w.at(kk + i) + w.at(kk + j) < 0) D.pairs.insert({i, j});
  return D;
}

namespace {

void gen_parts(int rows, int cols, int k, bool strict_above_k, std::vector<int>& cur,
               const std::function<void(const std::vector<int>&)>& emit) {
  emit(cur);
  if (int(cur.size()) == rows) return;
  int hi = cur.empty() ? cols : cur.back();
  if (strict_above_k && !cur.empty() && cur.back() > k) hi = cur.back() - 1;
  for (int x = hi; x >= 1; --x) {
    cur.push_back(x);
    gen_parts(rows, cols, k, strict_above_k, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Shape> shapes_in_rectangle(LieType t, int n, int k) {
  std::vector<Shape> out;
  std::vector<int> cur;
  if (t == LieType::A) {
    if (k < 0 || k > n) throw ValidationError("descent position out of range");
    gen_parts(k, n - k, 0, false, cur, [&](const std::vector<int>& p) { out.emplace_back(p, k, 0); });
  } else if (t == LieType::D) {
    if (k == 0 || k > n) throw ValidationError("type D uses k = B or 1 <= k <= n");
    int kk = to_int_k(k);
    gen_parts(n - kk, n + kk - 1, kk, true, cur, [&](const std::vector<int>& p) {
      Shape s(p, k, 0);
      if (s.has_part_k()) {
        out.emplace_back(p, k, 1);
        out.emplace_back(p, k, 2);
      } else {
        out.push_back(s);
      }
    });
  } else {
    if (k < 0 || k > n) throw ValidationError("k out of range");
    gen_parts(n - k, n + k, k, true, cur, [&](const std::vector<int>& p) { out.emplace_back(p, k, 0); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Shape> partitions(int d, int max_len) {
  std::vector<Shape> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int hi) {
    if (left == 0) {
      out.emplace_back(cur, 0, 0);
      return;
    }
    if (int(cur.size()) == max_len) return;
    for (int x = std::min(left, hi); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

std::vector<Shape> strict_partitions(int d) {
  std::vector<Shape> out;
  for (auto& s : partitions(d))
    if (s.is_k_strict()) out.push_back(s);
  return out;
}

}  // namespace schubert
