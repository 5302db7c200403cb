#pragma once

#include "fusscat/path.hpp"
#include "fusscat/tree.hpp"

namespace fusscat {

/// A tree together with one distinguished vertex.
struct MarkedTree {
  TupletTree tree;
  VertexAddr v;

  friend bool operator==(const MarkedTree&, const MarkedTree&) = default;
};

/// Output of the main bijection: a digit sequence and a free path.
struct PhiImage {
  SiblingSeq p;
  LatticePath path_hat;

  friend bool operator==(const PhiImage&, const PhiImage&) = default;
};

/// Boundary walk: each tuplet emits U, then for every child its own
/// encoding followed by D.
LatticePath phi(const TupletTree& tree);
TupletTree phi_inv(const LatticePath& path);

/// Mirror-image walk staying below the axis: each tuplet emits, for every
/// child, D followed by the child's encoding, and then one closing U.
LatticePath phibar(const TupletTree& tree);
TupletTree phibar_inv(const LatticePath& path);

/// Preorder outdegree word: every vertex but the last emits U^outdeg D.
LatticePath psi(const TupletTree& tree);
TupletTree psi_inv(const LatticePath& path);

/// The untrimmed path P for (T, v): length (d+1)n + l + 1, from height 0
/// down to -(l+1), starting with at least k U's and ending in D U^l.
LatticePath phi_main_path(const MarkedTree& marked, int k, int l);

/// (p, P-hat) where P-hat is P without its first k and last l+1 steps.
/// Requires outdegree(v) >= k and level(v) >= l.
PhiImage phi_main(const MarkedTree& marked, int k, int l);

/// Inverse of phi_main. `path_hat` must have n-k-l U's, dn+l D's and start
/// at height dk; `p` must have length l with digits below d.
MarkedTree phi_main_inv(const SiblingSeq& p, const LatticePath& path_hat, int d, int n, int k,
                        int l);
MarkedTree phi_main_inv(const PhiImage& image, int d, int n, int k, int l);

/// Moves the parent's leftmost i/d tuplets to become v's leftmost tuplets
/// and its rightmost j/d tuplets to become v's rightmost ones.
MarkedTree gamma(const MarkedTree& marked, int i, int j);
/// Undoes gamma: v's leftmost i/d and rightmost j/d tuplets go back to the parent.
MarkedTree gamma_inv(const MarkedTree& marked, int i, int j);

/// Swaps D_v with the subtree of v's jth younger sibling (global order).
/// The mark travels with v.
MarkedTree exchange_to_youngest_sibling(const MarkedTree& marked, int jth);
/// Swaps D_v with the subtree of v's jth elder sibling; inverse of the above.
MarkedTree exchange_to_elder_sibling(const MarkedTree& marked, int jth);

}  // namespace fusscat
