#include "schubert/poly.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/error.hpp"
#include "schubert/kernels.hpp"

namespace schubert {

namespace {

struct SymInfo {
  Sym sym;
  const char* text;
  const char* tex;
};

constexpr SymInfo kSyms[] = {
    {Sym::c, "c", "c"},       {Sym::d, "d", "d"},     {Sym::tau, "tau", "\\tau"},
    {Sym::taup, "taup", "\\tau'"}, {Sym::p, "p", "p"}, {Sym::x, "x", "x"},
    {Sym::y, "y", "y"},       {Sym::z, "z", "z"},     {Sym::bx, "X", "\\mathbf{x}"},
    {Sym::by, "Y", "\\mathbf{y}"},
};

const SymInfo& info(Sym s) { return kSyms[int(s)]; }

std::string tex_sub(int i) {
  std::string s = std::to_string(i);
  return s.size() == 1 ? "_" + s : "_{" + s + "}";
}

std::string tex_var(Var v) {
  if (v.sym == Sym::taup) return "\\tau'" + tex_sub(v.index);
  return std::string(info(v.sym).tex) + tex_sub(v.index);
}

}  // namespace

std::string var_name(Var v) { return info(v.sym).text + std::to_string(v.index); }

Var parse_var(const std::string& s) {
  // longest prefix first so "taup" wins over "tau"
  static const std::pair<const char*, Sym> order[] = {
      {"taup", Sym::taup}, {"tau", Sym::tau}, {"c", Sym::c}, {"d", Sym::d}, {"p", Sym::p},
      {"x", Sym::x},       {"y", Sym::y},     {"z", Sym::z}, {"X", Sym::bx}, {"Y", Sym::by}};
  for (const auto& [pre, sym] : order) {
    std::string p(pre);
    if (s.size() > p.size() && s.compare(0, p.size(), p) == 0) {
      std::string rest = s.substr(p.size());
      if (!std::all_of(rest.begin(), rest.end(), ::isdigit))
        continue;
      int idx = std::stoi(rest);
      if (idx < 0 || idx > 0xffff) break;
      return {sym, idx};
    }
  }
  throw ValidationError("unknown variable name: " + s);
}

// ---- Monomial ----

Monomial Monomial::of(Var v, int e) {
  Monomial m;
  if (e > 0) m.f_.push_back((v.key() << 8) | std::uint32_t(e));
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : f_) d += int(x & 0xff);
  return d;
}

int Monomial::exponent(Var v) const {
  std::uint32_t k = v.key();
  for (auto x : f_)
    if ((x >> 8) == k) return int(x & 0xff);
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    std::uint32_t ka = f_[i] >> 8, kb = o.f_[j] >> 8;
    if (ka < kb) {
      r.f_.push_back(f_[i++]);
    } else if (kb < ka) {
      r.f_.push_back(o.f_[j++]);
    } else {
      std::uint32_t e = (f_[i] & 0xff) + (o.f_[j] & 0xff);
      if (e > 0xff) throw InternalError("monomial exponent overflow");
      r.f_.push_back((ka << 8) | e);
      ++i, ++j;
    }
  }
  while (i < f_.size()) r.f_.push_back(f_[i++]);
  while (j < o.f_.size()) r.f_.push_back(o.f_[j++]);
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (j < o.f_.size()) {
    if (i >= f_.size()) return std::nullopt;
    std::uint32_t ka = f_[i] >> 8, kb = o.f_[j] >> 8;
    if (ka < kb) {
      r.f_.push_back(f_[i++]);
    } else if (kb < ka) {
      return std::nullopt;
    } else {
      std::uint32_t ea = f_[i] & 0xff, eb = o.f_[j] & 0xff;
      if (ea < eb) return std::nullopt;
      if (ea > eb) r.f_.push_back((ka << 8) | (ea - eb));
      ++i, ++j;
    }
  }
  while (i < f_.size()) r.f_.push_back(f_[i++]);
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  std::uint32_t k = v.key();
  for (auto x : f_)
    if ((x >> 8) != k) r.f_.push_back(x);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : f_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Monomial Monomial::from_pairs(std::vector<std::pair<Var, int>> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](auto& a, auto& b) { return a.first.key() < b.first.key(); });
  Monomial r;
  for (std::size_t i = 0; i < pairs.size();) {
    std::uint32_t k = pairs[i].first.key();
    int e = 0;
    while (i < pairs.size() && pairs[i].first.key() == k) e += pairs[i++].second;
    if (e < 0 || e > 0xff) throw InternalError("bad monomial exponent");
    if (e > 0) r.f_.push_back((k << 8) | std::uint32_t(e));
  }
  return r;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
  const auto& fa = a.raw();
  const auto& fb = b.raw();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t ka = fa[i] >> 8, kb = fb[i] >> 8;
    if (ka != kb) return ka < kb ? -1 : 1;
    std::uint32_t ea = fa[i] & 0xff, eb = fb[i] & 0xff;
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  if (fa.size() == fb.size()) return 0;
  return fa.size() > fb.size() ? -1 : 1;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? -1 : 1;
  return lex_cmp(a, b);
}

// ---- PolyBuilder ----

void PolyBuilder::add(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = acc_.try_emplace(m, c);
  if (!fresh) it->second += c;
}

void PolyBuilder::add(const Poly& p) {
  for (const auto& t : p.t_) add(t.m, t.c);
}

void PolyBuilder::add_scaled(const Poly& p, const Rational& c, const Monomial& m) {
  if (sgn(c) == 0) return;
  for (const auto& t : p.t_) add(t.m * m, t.c * c);
}

void PolyBuilder::merge(PolyBuilder&& o) {
  if (acc_.empty()) {
    acc_ = std::move(o.acc_);
    return;
  }
  for (auto& [m, c] : o.acc_) add(m, c);
  o.acc_.clear();
}

Poly PolyBuilder::build() {
  Poly p;
  p.t_.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (sgn(c) != 0) p.t_.push_back({m, std::move(c)});
  acc_.clear();
  std::sort(p.t_.begin(), p.t_.end(), [](const Term& a, const Term& b) { return grlex_cmp(a.m, b.m) < 0; });
  return p;
}

// ---- Poly ----

Poly::Poly(long n) {
  if (n != 0) t_.push_back({Monomial(), Rational(n)});
}

Poly::Poly(const Rational& q) {
  if (sgn(q) != 0) t_.push_back({Monomial(), q});
}

Poly Poly::var(Var v, int e) {
  Poly p;
  p.t_.push_back({Monomial::of(v, e), Rational(1)});
  return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (sgn(c) != 0) p.t_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  PolyBuilder b;
  for (auto& t : terms) b.add(t.m, t.c);
  return b.build();
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.empty()); }

Rational Poly::constant_term() const {
  if (!t_.empty() && t_.back().m.empty()) return t_.back().c;
  return Rational(0);
}

int Poly::degree() const { return t_.empty() ? -1 : t_.front().m.degree(); }

int Poly::weighted_degree() const {
  int best = -1;
  for (const auto& t : t_) {
    int d = 0;
    for (std::size_t i = 0; i < t.m.size(); ++i) {
      Var v = t.m.var_at(i);
      bool indexed = v.sym == Sym::c || v.sym == Sym::d || v.sym == Sym::tau || v.sym == Sym::taup || v.sym == Sym::p;
      d += t.m.exp_at(i) * (indexed ? v.index : 1);
    }
    best = std::max(best, d);
  }
  return best;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), m,
                             [](const Term& t, const Monomial& key) { return grlex_cmp(t.m, key) < 0; });
  if (it != t_.end() && it->m == m) return it->c;
  return Rational(0);
}

std::vector<Var> Poly::variables() const {
  std::vector<Var> vs;
  for (const auto& t : t_)
    for (std::size_t i = 0; i < t.m.size(); ++i) vs.push_back(t.m.var_at(i));
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool Poly::involves(Sym s) const {
  for (const auto& t : t_)
    for (std::size_t i = 0; i < t.m.size(); ++i)
      if (t.m.var_at(i).sym == s) return true;
  return false;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = 1;
    else if (j == b.size()) c = -1;
    else c = grlex_cmp(a[i].m, b[j].m);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(sign > 0 ? b[j] : Term{b[j].m, -b[j].c});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].c + b[j].c) : Rational(a[i].c - b[j].c);
      if (sgn(s) != 0) out.push_back({a[i].m, std::move(s)});
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  t_ = merge_terms(t_, o.t_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.t_.empty()) return *this;
  t_ = merge_terms(t_, o.t_, -1);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& q) {
  if (sgn(q) == 0) {
    t_.clear();
    return *this;
  }
  for (auto& t : t_) t.c *= q;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) { return kernels::mul(a, b); }

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
  Poly r;
  if (sgn(c) == 0) return r;
  r.t_.reserve(t_.size());
  // multiplying by a monomial preserves graded-lex order
  for (const auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw InternalError("negative power");
  Poly r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
  return true;
}

Poly Poly::subs(const std::function<std::optional<Poly>(Var)>& img) const {
  std::map<std::uint32_t, std::optional<Poly>> images;
  std::map<std::pair<std::uint32_t, int>, Poly> powers;
  auto power = [&](Var v, int e) -> const Poly& {
    auto key = std::make_pair(v.key(), e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const Poly& base = *images[v.key()];
    int k = e - 1;
    while (k > 1 && !powers.count({v.key(), k})) --k;
    Poly r = k <= 1 ? base : powers.at({v.key(), k});
    for (int j = std::max(k, 1) + 1; j <= e; ++j) {
      r = r * base;
      if (j < e) powers.emplace(std::make_pair(v.key(), j), r);
    }
    return powers.emplace(key, std::move(r)).first->second;
  };
  PolyBuilder out;
  for (const auto& t : t_) {
    Monomial kept;
    Poly prod(1);
    for (std::size_t i = 0; i < t.m.size(); ++i) {
      Var v = t.m.var_at(i);
      int e = t.m.exp_at(i);
      auto it = images.find(v.key());
      if (it == images.end()) it = images.emplace(v.key(), img(v)).first;
      if (it->second) {
        prod = prod * power(v, e);
        if (prod.is_zero()) break;
      } else {
        kept = kept * Monomial::of(v, e);
      }
    }
    if (!prod.is_zero()) out.add_scaled(prod, t.c, kept);
  }
  return out.build();
}

Poly Poly::subs(const std::map<Var, Poly>& img) const {
  return subs([&](Var v) -> std::optional<Poly> {
    auto it = img.find(v);
    if (it == img.end()) return std::nullopt;
    return it->second;
  });
}

Poly Poly::rename(const std::function<std::pair<int, Var>(Var)>& f) const {
  PolyBuilder out;
  std::vector<std::pair<Var, int>> pairs;
  for (const auto& t : t_) {
    pairs.clear();
    int sign = 1;
    bool zero = false;
    for (std::size_t i = 0; i < t.m.size(); ++i) {
      auto [s, w] = f(t.m.var_at(i));
      int e = t.m.exp_at(i);
      if (s == 0) {
        zero = true;
        break;
      }
      if (s < 0 && (e & 1)) sign = -sign;
      pairs.emplace_back(w, e);
    }
    if (zero) continue;
    Monomial m = Monomial::from_pairs(pairs);
    out.add(m, sign > 0 ? t.c : Rational(-t.c));
  }
  return out.build();
}

Poly Poly::filter(const std::function<bool(const Monomial&)>& pred) const {
  Poly r;
  for (const auto& t : t_)
    if (pred(t.m)) r.t_.push_back(t);
  return r;
}

Poly Poly::truncate(Sym s, int bound) const {
  return filter([&](const Monomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      Var v = m.var_at(i);
      if (v.sym == s && v.index > bound) return false;
    }
    return true;
  });
}

Poly Poly::divide_exact(const Poly& g) const {
  if (g.is_zero()) throw InternalError("division by zero polynomial");
  const Term& lg = g.leading();
  Poly r = *this;
  PolyBuilder q;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    auto m = lr.m.divide(lg.m);
    if (!m) throw InternalError("polynomial division is not exact");
    Rational c = lr.c / lg.c;
    q.add(*m, c);
    r -= g.mul_monomial(*m, c);
  }
  return q.build();
}

std::vector<std::pair<Monomial, Poly>> Poly::split_by(const std::function<bool(Var)>& inner) const {
  std::vector<std::pair<Monomial, PolyBuilder>> groups;
  std::unordered_map<Monomial, std::size_t, MonomialHash> where;
  for (const auto& t : t_) {
    std::vector<std::pair<Var, int>> in, out;
    for (std::size_t i = 0; i < t.m.size(); ++i) {
      Var v = t.m.var_at(i);
      (inner(v) ? in : out).emplace_back(v, t.m.exp_at(i));
    }
    Monomial mo = Monomial::from_pairs(out), mi = Monomial::from_pairs(in);
    auto it = where.find(mo);
    if (it == where.end()) {
      it = where.emplace(mo, groups.size()).first;
      groups.emplace_back(mo, PolyBuilder());
    }
    groups[it->second].second.add(mi, t.c);
  }
  std::vector<std::pair<Monomial, Poly>> res;
  for (auto& [m, b] : groups) res.emplace_back(m, b.build());
  std::sort(res.begin(), res.end(), [](auto& a, auto& b) { return grlex_cmp(a.first, b.first) < 0; });
  return res;
}

std::string rational_str(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_power_of_two(const mpz_class& z) {
  if (z <= 0) return false;
  return mpz_popcount(z.get_mpz_t()) == 1;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    Rational c = t.c;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    bool unit = a == 1;
    if (!unit || t.m.empty()) os << rational_str(a);
    for (std::size_t i = 0; i < t.m.size(); ++i) {
      if (i > 0 || !unit || t.m.empty()) os << "*";
      os << var_name(t.m.var_at(i));
      if (t.m.exp_at(i) > 1) os << "^" << t.m.exp_at(i);
    }
  }
  return os.str();
}

std::string Poly::latex() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    const Rational& c = t.c;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    if (a != 1 || t.m.empty()) {
      if (a.get_den() == 1) os << a.get_num().get_str();
      else os << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
    }
    for (std::size_t i = 0; i < t.m.size(); ++i) {
      std::string v = tex_var(t.m.var_at(i));
      if (t.m.exp_at(i) > 1) os << (v.find('\'') != std::string::npos ? "{" + v + "}" : v) << "^{" << t.m.exp_at(i) << "}";
      else os << v;
    }
  }
  return os.str();
}

}  // namespace schubert
