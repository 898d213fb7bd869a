#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xenotree/core2s.hpp"
#include "xenotree/hierarchy.hpp"

namespace xt {

// Ordered rooted tree with leaves named by vertices and inner nodes carrying
// a label pair (first, second). Child order is significant iff first != second.
struct EventTreeNode {
  bool leaf = false;
  std::string name;           // leaves
  std::string first, second;  // inner nodes
  std::vector<int> children;
};

struct EventTree {
  std::vector<EventTreeNode> nodes;
  int root = -1;

  const EventTreeNode& at(int i) const { return nodes[size_t(i)]; }
  int leaf_count() const;
  std::vector<std::string> leaf_names() const;  // left-to-right
};

enum class RejectKind {
  label_bound_exceeded,
  non_dicograph,
  cluster_bound_exceeded,
  overlap,
  no_spanning_cluster,
};

const char* reject_kind_name(RejectKind k);

// Self-contained evidence for a rejection; witness sets are verifiable in
// isolation (prime substructure / genuinely overlapping clusters).
struct Certificate {
  RejectKind kind;
  long count = 0, bound = 0;                     // bound variants
  std::string label;                             // non_dicograph: rev-label token
  std::vector<std::string> witness;              // 3 or 4 vertex names
  std::vector<std::string> cluster_a, cluster_b; // overlap, sorted names
};

struct Recognition {
  bool unp = false;
  bool label_bound_exceeded = false;
  bool cluster_bound_exceeded = false;
  std::optional<Certificate> certificate;  // present iff !unp

  // accepted case: deduplicated non-singleton clusters of C1(rev(g)) with
  // their multiset multiplicities
  std::vector<Bitset> clusters;
  std::vector<int> multiplicity;
};

// Recognition pipeline: rev(g); per rev-label modular decomposition,
// di-cograph check and 1-cluster extraction; hierarchy check on the cluster
// multiset. The 2(n-1) label/cluster bounds are evaluated and reported; the
// pipeline keeps going past them so rejections always carry a concrete
// certificate. n <= 2 is always accepted.
Recognition recognize_unp(const TwoStructure& g);

// Tree representation (T_g, t_g) of an accepted structure: inclusion tree of
// C1(rev(g)) plus singletons, node labels read from g's own alphabet, order
// nodes sorted by the arc direction and normalized to first < second.
// Throws std::invalid_argument on non-unp input.
EventTree build_tree_representation(const TwoStructure& g);

// phi(xy) = first, phi(yx) = second at the lca of x and y (x left of y).
// Throws std::invalid_argument on malformed trees.
TwoStructure evaluate_tree(const EventTree& t);

// Canonical form: order labels swapped to first < second (children
// reversed), children with the parent's label pair merged into the parent,
// symmetric-node children sorted by smallest leaf name.
EventTree normalize_tree(const EventTree& t);

// Equality of normalized forms; throws if the leaf name sets differ.
bool trees_isomorphic(const EventTree& a, const EventTree& b);

// Leaf-set hierarchy {L(v)} of the tree, as name sets. Shape comparison
// helper ("isomorphic up to labels").
std::vector<std::vector<std::string>> tree_cluster_sets(const EventTree& t);

}  // namespace xt
