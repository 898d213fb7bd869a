#pragma once

#include <string>
#include <vector>

#include "xenotree/bitset.hpp"
#include "xenotree/core2s.hpp"

namespace xt {

enum class NodeType { untyped, leaf, parallel, series, order, prime };

const char* node_type_name(NodeType t);

struct CotreeNode {
  Bitset leafset;
  std::vector<int> children;  // ordered; order significant only at order nodes
  int vertex = -1;            // leaves only
  NodeType type = NodeType::untyped;
};

struct Cotree {
  std::vector<CotreeNode> nodes;
  int root = -1;

  const CotreeNode& at(int i) const { return nodes[size_t(i)]; }
  int inner_count() const;
  bool has_prime() const;
};

// Laminar family over {0..ground-1}; contains the ground set and all
// singletons, no duplicates.
struct StrongModuleSet {
  int ground = 0;
  std::vector<Bitset> modules;
};

// Full modular decomposition tree with node types; the internal engine
// behind strong_modules and the recognizer pipeline.
Cotree modular_decomposition(const Digraph& g);

// Exactly the strong modules of g (graph-module sense), laminar, including
// the vertex set and every singleton.
StrongModuleSet strong_modules(const Digraph& g);

// Inclusion tree of a laminar family (parent = minimal strict superset).
// Nodes are untyped; children sorted by smallest contained vertex.
// Throws std::invalid_argument on non-laminar input or if the ground set /
// some singleton is missing.
Cotree inclusion_tree_of_modules(const StrongModuleSet& s);

// Types every inner node of the skeleton by direct inspection of cross-child
// arcs; reorders the children of order nodes into the linear order.
Cotree classify_nodes(const Digraph& g, Cotree skeleton);

// Di-cograph test on top of a precomputed modular decomposition: sample one
// cross-child pair per node, reject arcs at nodes that are neither series
// nor order, and finally require the accumulated cross-child arc count to
// equal |E(g)|.
bool is_dicograph(const Digraph& g, const StrongModuleSet& s);

// Leaf sets of series/order nodes (no singletons). Requires g to be a
// di-cograph with s = strong_modules(g).
std::vector<Bitset> one_clusters(const Digraph& g, const StrongModuleSet& s);

// A 3- or 4-vertex set inducing a prime subdigraph; empty iff g is a
// di-cograph. Used for rejection certificates.
std::vector<int> find_prime_witness(const Digraph& g);

bool is_prime_digraph_on(const Digraph& g, const std::vector<int>& verts);

}  // namespace xt
