#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fusscat {

struct Tuplet;

/// A vertex together with the tuplets hanging below it, left to right.
struct Vertex {
  std::vector<Tuplet> tuplets;
};

/// One (d+1)-gon: a parent vertex and its d ordered children.
struct Tuplet {
  std::vector<Vertex> children;
};

/// One step of a root-to-vertex address: which tuplet of the current vertex,
/// and which position (0-based) inside that tuplet.
struct AddrStep {
  int tuplet = 0;
  int position = 0;

  friend bool operator==(const AddrStep&, const AddrStep&) = default;
  friend auto operator<=>(const AddrStep&, const AddrStep&) = default;
};

/// Positional vertex identity. The empty address is the root; ancestors are
/// prefixes; level equals the number of steps.
struct VertexAddr {
  std::vector<AddrStep> steps;

  [[nodiscard]] int level() const { return static_cast<int>(steps.size()); }
  [[nodiscard]] bool is_root() const { return steps.empty(); }
  [[nodiscard]] VertexAddr parent() const;
  [[nodiscard]] VertexAddr child(int tuplet, int position) const;
  /// True when *this is a (non-strict) prefix of other.
  [[nodiscard]] bool is_ancestor_of(const VertexAddr& other) const;

  friend bool operator==(const VertexAddr&, const VertexAddr&) = default;
  friend auto operator<=>(const VertexAddr&, const VertexAddr&) = default;
};

/// "root" or "t.p/t.p/..." (0-based tuplet index, position).
std::string format_addr(const VertexAddr& addr);
VertexAddr parse_addr(std::string_view text);

struct VertexStats {
  int level = 0;
  int outdegree = 0;
  int child_count = 0;
  int tuplet_elders = 0;    ///< elder siblings inside v's own tuplet
  int global_elders = 0;    ///< elder siblings across all the parent's tuplets
  int global_youngers = 0;  ///< younger siblings across all the parent's tuplets

  friend bool operator==(const VertexStats&, const VertexStats&) = default;
};

struct Violation {
  VertexAddr at;
  int tuplet = -1;  ///< offending tuplet index under `at`, -1 when not tuplet-specific
  std::string what;
};

/// Collects every structural violation of a candidate tree of arity d.
std::vector<Violation> validate(int d, const Vertex& root);

/// A rooted ordered d-tuplet tree. Immutable once built; the constructor
/// rejects anything validate() would complain about.
class TupletTree {
 public:
  /// The bare root (n = 0).
  explicit TupletTree(int d);
  TupletTree(int d, Vertex root);

  /// Builds the tree whose preorder outdegree sequence is `word`.
  static TupletTree from_outdegrees(int d, std::span<const int> word);

  [[nodiscard]] int arity() const { return d_; }
  [[nodiscard]] const Vertex& root() const { return root_; }
  [[nodiscard]] int tuplet_count() const { return tuplets_; }
  [[nodiscard]] int vertex_count() const { return d_ * tuplets_ + 1; }

  /// Preorder outdegree sequence, length dn+1.
  [[nodiscard]] std::vector<int> outdegree_word() const;

  /// Throws AddressError when the address does not resolve.
  [[nodiscard]] const Vertex& at(const VertexAddr& addr) const;
  [[nodiscard]] bool contains(const VertexAddr& addr) const;

  friend bool operator==(const TupletTree& a, const TupletTree& b);
  friend std::strong_ordering operator<=>(const TupletTree& a, const TupletTree& b);

 private:
  int d_;
  Vertex root_;
  int tuplets_ = 0;
};

/// Vertices in preorder: root first, then each tuplet left to right with
/// every child's whole subtree emitted before the next child.
std::vector<VertexAddr> preorder(const TupletTree& tree);

VertexStats stats(const TupletTree& tree, const VertexAddr& v);

/// D_v: v and all its descendants, as a tree rooted at v.
TupletTree descendant_subtree(const TupletTree& tree, const VertexAddr& v);

/// Swaps the whole subtrees rooted at v and w. Neither may be a proper
/// ancestor of the other; v == w is allowed and returns the tree unchanged.
TupletTree exchange_subtrees(const TupletTree& tree, const VertexAddr& v, const VertexAddr& w);

/// Reflects every tuplet list and every tuplet's children.
TupletTree mirror(const TupletTree& tree);

/// Canonical text: "d=<d>;" followed by the comma-separated outdegree word.
std::string encode(const TupletTree& tree);
TupletTree parse_tree(std::string_view text);

int count_tuplets(const Vertex& v);

}  // namespace fusscat
