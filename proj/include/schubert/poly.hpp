#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace schubert {

using Rational = mpq_class;

// Variable families. The enumerator order is the variable order used for
// graded-lex comparisons and printing.
//   c, d, tau, taup : formal symbols c_r, d_r, tau_r, tau'_r
//   p               : power sums p_k(X) of the infinite alphabet X
//   x, y, z         : concrete x_i, y_i, z_i
//   bx, by          : Chern-root variables (bold x_i, bold y_i)
enum class Sym : std::uint8_t { c, d, tau, taup, p, x, y, z, bx, by };

struct Var {
  Sym sym;
  int index;
  std::uint32_t key() const { return (std::uint32_t(sym) << 16) | std::uint32_t(index); }
  static Var from_key(std::uint32_t k) { return {Sym(k >> 16), int(k & 0xffff)}; }
  bool operator==(const Var&) const = default;
  auto operator<=>(const Var& o) const { return key() <=> o.key(); }
};

std::string var_name(Var v);
Var parse_var(const std::string& s);

// Sparse monomial: sorted list of packed (variable key << 8 | exponent).
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Var v, int e = 1);

  int degree() const;
  int exponent(Var v) const;
  bool empty() const { return f_.empty(); }
  std::size_t size() const { return f_.size(); }
  Var var_at(std::size_t i) const { return Var::from_key(f_[i] >> 8); }
  int exp_at(std::size_t i) const { return int(f_[i] & 0xff); }
  const std::vector<std::uint32_t>& raw() const { return f_; }

  Monomial operator*(const Monomial& o) const;
  // Exact quotient, nullopt when o does not divide *this.
  std::optional<Monomial> divide(const Monomial& o) const;
  Monomial without(Var v) const;

  bool operator==(const Monomial& o) const { return f_ == o.f_; }
  std::size_t hash() const;

  static Monomial from_pairs(std::vector<std::pair<Var, int>> pairs);

 private:
  std::vector<std::uint32_t> f_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Graded lex: -1 if a comes first (is larger), 1 if b does, 0 if equal.
int grlex_cmp(const Monomial& a, const Monomial& b);
// Pure lex on the variable order, same sign convention.
int lex_cmp(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  Rational c;
};

// Polynomial with rational coefficients; terms kept in descending graded-lex
// order with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(long n);  // NOLINT implicit constant
  explicit Poly(const Rational& q);
  static Poly var(Var v, int e = 1);
  static Poly var(Sym s, int i) { return var(Var{s, i}); }
  static Poly monomial(const Monomial& m, const Rational& c);
  // Builds from unsorted, possibly repeated terms.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& leading() const { return t_.front(); }
  int degree() const;
  // Weighted degree where p_k, c_r, ... count with weight equal to index.
  int weighted_degree() const;
  Rational coeff(const Monomial& m) const;
  std::vector<Var> variables() const;
  bool involves(Sym s) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& q);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& q) { return a *= q; }
  friend Poly operator*(const Rational& q, Poly a) { return a *= q; }
  friend Poly operator*(int n, Poly a) { return a *= Rational(n); }
  friend Poly operator*(Poly a, int n) { return a *= Rational(n); }
  Poly mul_monomial(const Monomial& m, const Rational& c) const;
  Poly pow(int e) const;
  bool operator==(const Poly& o) const;

  // Ring homomorphism determined by images of variables; variables without
  // an image are kept.
  Poly subs(const std::function<std::optional<Poly>(Var)>& img) const;
  Poly subs(const std::map<Var, Poly>& img) const;
  // Fast path for substitutions v -> sign * v'. Unlisted variables are kept.
  Poly rename(const std::function<std::pair<int, Var>(Var)>& f) const;
  // Keeps only terms whose monomials satisfy pred.
  Poly filter(const std::function<bool(const Monomial&)>& pred) const;
  // Sets the listed variable families with index above bound to zero.
  Poly truncate(Sym s, int bound) const;

  // Exact division; throws InternalError if the remainder is nonzero.
  Poly divide_exact(const Poly& g) const;
  // Groups terms by the part of the monomial outside `inner`:
  // returns outer monomial -> polynomial in the inner variables.
  std::vector<std::pair<Monomial, Poly>> split_by(const std::function<bool(Var)>& inner) const;

  std::string str() const;
  std::string latex() const;

  friend class PolyBuilder;

 private:
  std::vector<Term> t_;
};

// Accumulates terms in a hash map and produces a canonical Poly.
class PolyBuilder {
 public:
  void add(const Monomial& m, const Rational& c);
  void add(const Poly& p);
  void add_scaled(const Poly& p, const Rational& c, const Monomial& m);
  void merge(PolyBuilder&& o);
  Poly build();
  bool empty() const { return acc_.empty(); }

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

std::string rational_str(const Rational& q);
bool is_power_of_two(const mpz_class& z);

}  // namespace schubert
