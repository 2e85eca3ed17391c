#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

// Partition with a strictness parameter k and a type tag (type D only).
// k == kBox is the maximal orthogonal case and behaves like k = 0.
struct Shape {
  std::vector<int> parts;
  int k = 0;
  int type = 0;

  Shape() = default;
  Shape(std::vector<int> p, int k_ = 0, int type_ = 0);

  int length() const { return int(parts.size()); }
  int weight() const;
  // 1-based; zero past the end.
  int part(int i) const { return i >= 1 && i <= length() ? parts[i - 1] : 0; }
  int kk() const { return k < 0 ? 0 : k; }
  // Number of parts strictly greater than k.
  int ell_k() const;
  Shape conjugate() const;
  bool has_part_k() const;
  bool is_k_strict() const;
  // Throws ValidationError; typed = check the type tag rule.
  void validate(bool typed) const;

  // "7 4 3 1 1 | k=3 | t=0"
  std::string str() const;
  std::string parts_str() const;
  // Accepts "7,4,3,1,1", "7 4 3 1 1" or the full str() form.
  static Shape parse(const std::string& text, int k = 0, int type = 0);

  bool operator==(const Shape& o) const { return parts == o.parts && k == o.k && type == o.type; }
  bool operator<(const Shape& o) const;
};

struct OrderIdeal {
  std::set<std::pair<int, int>> pairs;
  bool contains(int i, int j) const { return pairs.count({i, j}) > 0; }
  bool operator==(const OrderIdeal& o) const { return pairs == o.pairs; }
  std::string str() const;
};

enum class IdealVariant { C, Cprime };

OrderIdeal order_ideal(const Shape& la, IdealVariant variant);
std::vector<int> index_set(const Shape& la, int n, LieType t);

// Rank n of the returned element defaults to the smallest that fits.
SignedPermutation shape_to_grassmannian(const Shape& la, LieType t, int n = 0);
Shape grassmannian_to_shape(const SignedPermutation& w, int k);
OrderIdeal ideal_of_grassmannian(const SignedPermutation& w, int k);

// All shapes indexing Schubert classes of the rank n Grassmannian:
// A: partitions in k x (n-k); B/C: k-strict in (n-k) x (n+k);
// D: typed k-strict in (n-k) x (n+k-1), k >= 1 or kBox.
std::vector<Shape> shapes_in_rectangle(LieType t, int n, int k);
// Strict partitions of weight d (any length), decreasing lex order.
std::vector<Shape> strict_partitions(int d);
std::vector<Shape> partitions(int d, int max_len = 1 << 20);

}  // namespace schubert
