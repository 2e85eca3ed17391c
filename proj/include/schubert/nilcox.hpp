#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "schubert/poly.hpp"
#include "schubert/polyring.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// Dense multiplication data for one finite Weyl group.
class GroupTable {
 public:
  static const GroupTable& get(Group g, int n);

  Group group() const { return g_; }
  int rank() const { return n_; }
  int size() const { return int(elems_.size()); }
  const SignedPermutation& element(int i) const { return elems_[i]; }
  int index(const SignedPermutation& w) const;
  int length(int i) const { return len_[i]; }
  const std::vector<int>& letters() const { return letters_; }
  // index of e * s_a if the length goes up, else -1
  int right_mul(int e, int a) const;
  // index of u_v u_w, or -1 when the lengths do not add
  int product(int v, int w) const;
  int identity() const { return 0; }

 private:
  GroupTable(Group g, int n);
  Group g_;
  int n_;
  std::vector<SignedPermutation> elems_;
  std::unordered_map<SignedPermutation, int, SignedPermutationHash> idx_;
  std::vector<int> len_;
  std::vector<int> letters_;
  std::vector<std::vector<int>> rmul_;   // [element][letter slot]
  std::vector<std::vector<int>> words_;  // reduced words as letter slots
  int slot(int a) const;
};

// Element of the nilCoxeter algebra with polynomial coefficients.
class NCElement {
 public:
  explicit NCElement(const GroupTable& t);
  static NCElement one(const GroupTable& t);
  static NCElement generator(const GroupTable& t, int letter, const Poly& coef = Poly(1));

  const GroupTable& table() const { return *t_; }
  const Poly& coeff(int i) const { return c_[i]; }
  Poly coeff(const SignedPermutation& w) const;
  void set(int i, Poly p) { c_[i] = std::move(p); }
  void add(int i, const Poly& p) { c_[i] += p; }
  bool operator==(const NCElement& o) const { return c_ == o.c_; }
  std::size_t support_size() const;

  // *this <- *this * (1 + t u_a); when mask is given only its elements are kept.
  void times_factor(int letter, const Poly& t, const std::vector<char>* mask = nullptr);

 private:
  const GroupTable* t_;
  std::vector<Poly> c_;
};

NCElement nc_multiply(const NCElement& a, const NCElement& b, const std::vector<char>* mask = nullptr);
NCElement nc_multiply_serial(const NCElement& a, const NCElement& b, const std::vector<char>* mask = nullptr);

// C(t) (group BC) or D(t) (group D) for a concrete parameter t.
NCElement factor_C(const GroupTable& t, const Poly& param);
// C(X) / D(X) with X in power sums (exp of the log of the single factor).
const NCElement& factor_X_stable(Group g, int n);

struct SchubertOptions {
  bool x = true;
  bool y = true;
  bool z = true;
  int m = kStable;  // x-variable count, kStable = power sums
  int rank = 0;     // ambient rank, 0 = smallest
};

// Coefficient of w in the factor stream; type B scales by 2^-s(w), type A ignores X.
Poly double_schubert(const SignedPermutation& w, LieType t, const SchubertOptions& o = {});
Poly stanley_function(const SignedPermutation& w, int m = kStable);
// Oracle: the literal product C(x_1)...C(x_m) (or D), X concrete.
Poly stanley_function_concrete(const SignedPermutation& w, int m);
// rank as in SchubertOptions.
Poly double_schubert_concrete(const SignedPermutation& w, LieType t, int m, bool y = true, bool z = true, int rank = 0);

}  // namespace schubert
