#pragma once

#include <vector>

#include "xenotree/core2s.hpp"
#include "xenotree/moddecomp.hpp"

namespace xt {

struct Cluster {
  Bitset members;
  int provenance = -1;  // index into the owning label list; -1 when unknown
};

// Multiset of clusters over ground set {0..ground-1}; duplicates allowed,
// singletons implied at check time.
struct ClusterMultiset {
  int ground = 0;
  std::vector<Cluster> clusters;
};

// True iff the clusters plus all singletons form a hierarchy: some cluster
// equals the ground set and no two clusters overlap. Bucket-sorted
// per-element list scheme; duplicates never cause rejection by themselves.
bool is_hierarchy(const ClusterMultiset& c);

// Multiset union of one_clusters over every used label of g. Singletons are
// not included. Throws std::invalid_argument when some monochromatic
// subgraph is not a di-cograph.
ClusterMultiset assemble_C1(const TwoStructure& g);

// Inclusion tree over the deduplicated clusters plus singletons.
// Throws std::invalid_argument unless is_hierarchy(c).
Cotree inclusion_tree_of_clusters(const ClusterMultiset& c);

struct HierarchyViolation {
  bool missing_root = false;  // no cluster covers the ground set
  Bitset a, b;                // otherwise: a genuinely overlapping pair
};

// Deterministic witness for a failed hierarchy check: missing-root wins,
// otherwise the first overlap met when inserting clusters in descending
// size (stable in multiset order) into a laminar forest.
HierarchyViolation find_hierarchy_violation(const ClusterMultiset& c);

}  // namespace xt
