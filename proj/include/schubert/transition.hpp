#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubert/shapes.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

enum class TreeKind { A, C, D };

struct TreeNode {
  SignedPermutation w;
  std::vector<int> children;
  // branching positions, 0 at leaves
  int r = 0, s = 0;
};

struct TransitionTree {
  TreeKind kind = TreeKind::A;
  int k = 0;
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  std::vector<std::pair<SignedPermutation, Shape>> leaves;

  const SignedPermutation& root() const { return nodes.front().w; }
  std::map<Shape, long> shape_counts() const;
};

TreeKind parse_tree_kind(const std::string& s);
std::string tree_kind_str(TreeKind k);

// T(w) for A (k ignored), T^k(w) for C, T~^k(w) for D.
TransitionTree transition_tree(const SignedPermutation& w, TreeKind kind, int k = 0);
// Leaf counts by shape: c^w, e^w or d^w.
std::map<Shape, long> stanley_coeffs(const SignedPermutation& w, TreeKind kind, int k = 0);

// Shape of a Grassmannian permutation: la_{m+1-j} = w_j - j.
Shape grassmannian_perm_shape(const SignedPermutation& w);
bool is_grassmannian_perm(const SignedPermutation& w);

// Semistandard tableaux of the conjugate shape with reduced column word.
long fg_tableau_count(const SignedPermutation& w, const Shape& la);
// Standard decomposition tableaux of shape la (la strict).
long kraskiewicz_count(const SignedPermutation& w, const Shape& la);

std::string tree_dot(const TransitionTree& t);

}  // namespace schubert
