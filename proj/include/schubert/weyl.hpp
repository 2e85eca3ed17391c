#pragma once

#include <functional>
#include <string>
#include <vector>

namespace schubert {

// Group tag of a signed permutation: S_n, W_n (types B and C), or the even
// signed permutations W~_n (type D).
enum class Group { A, BC, D };
// Lie type as requested by an operation.
enum class LieType { A, B, C, D };

Group group_of(LieType t);
char lie_char(LieType t);
LieType parse_lie_type(const std::string& s);

// The letter of s_box in type D words.
constexpr int kBox = -1;

class SignedPermutation {
 public:
  SignedPermutation() : g_(Group::A) {}
  SignedPermutation(Group g, std::vector<int> values);
  static SignedPermutation identity(Group g, int n = 0);
  // "3,-1,-2" (minus sign marks a bar); whitespace tolerated.
  static SignedPermutation parse(Group g, const std::string& text);

  Group group() const { return g_; }
  int rank() const { return int(v_.size()); }
  const std::vector<int>& values() const { return v_; }
  // 1-based entry; positions past the rank are fixed points.
  int at(int i) const { return i <= rank() ? v_[i - 1] : i; }

  SignedPermutation with_rank(int n) const;
  SignedPermutation with_group(Group g) const;
  // Trailing fixed points removed.
  SignedPermutation canonical() const;
  bool is_identity() const;
  int negatives() const;
  bool in_symmetric() const { return negatives() == 0; }

  SignedPermutation operator*(const SignedPermutation& o) const;
  SignedPermutation inverse() const;
  // w * s_a (acts on positions) and s_a * w (acts on values).
  SignedPermutation right_simple(int a) const;
  SignedPermutation left_simple(int a) const;

  // Groups compare first; trailing fixed points are ignored.
  bool operator==(const SignedPermutation& o) const;
  bool operator<(const SignedPermutation& o) const;
  std::size_t hash() const;
  std::string str() const;

 private:
  Group g_;
  std::vector<int> v_;
};

struct SignedPermutationHash {
  std::size_t operator()(const SignedPermutation& w) const { return w.hash(); }
};

using ReducedWord = std::vector<int>;

int length(const SignedPermutation& w);
// Length by sorting with simple reflections; independent of length().
int length_by_sorting(const SignedPermutation& w);
ReducedWord reduced_word(const SignedPermutation& w);
std::string word_str(const ReducedWord& word);
SignedPermutation from_word(Group g, const ReducedWord& word, int n = 0);
std::vector<int> descents(const SignedPermutation& w);
bool is_descent(const SignedPermutation& w, int a);
// Letters available in rank n: A -> 1..n-1, BC -> 0..n-1, D -> box,1..n-1.
std::vector<int> simple_letters(Group g, int n);

enum class ReflKind { t, tbar };
SignedPermutation reflect(const SignedPermutation& w, ReflKind kind, int i, int j);

using FactorPredicate = std::function<bool(const SignedPermutation&)>;
// All (u_1,...,u_p) with u_1...u_p = w and lengths adding up; preds may be
// empty (no constraints) or hold one predicate per slot.
std::vector<std::vector<SignedPermutation>> reduced_factorizations(const SignedPermutation& w, int slots,
                                                                   const std::vector<FactorPredicate>& preds = {});
// Pairs (u, u^{-1} w) with l(u) + l(u^{-1} w) = l(w), ordered by l(u).
const std::vector<std::pair<SignedPermutation, SignedPermutation>>& left_factors(const SignedPermutation& w);

enum class EmbedVariant { phi, phi_prime };
SignedPermutation embed_symmetric(const SignedPermutation& w, EmbedVariant variant);

// Every element of the finite group of rank n, ordered by length then values.
std::vector<SignedPermutation> all_elements(Group g, int n);
// Longest element of the rank n group.
SignedPermutation longest_element(Group g, int n);

// w has no descents below k (k = kBox or 0 means no condition in type D / BC).
bool increasing_up_to(const SignedPermutation& w, int k);
// Descents contained in {k} (type D, k = 1: contained in {box, 1}).
bool is_grassmannian(const SignedPermutation& w, int k);

}  // namespace schubert
