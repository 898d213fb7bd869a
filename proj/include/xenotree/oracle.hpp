#pragma once

#include <vector>

#include "xenotree/core2s.hpp"

namespace xt {
// Brute-force reference implementations for property testing. Deliberately
// slow and obviously correct; size guards are hard errors, never truncation.
namespace oracle {

inline constexpr int kMaxEnumerationSize = 20;

// All nonempty modules (including trivial ones), by definition check over
// all 2^n - 1 subsets. Requires n <= 20.
std::vector<Bitset> enumerate_modules(const TwoStructure& g);

// Modules overlapping no other module.
std::vector<Bitset> strong_modules_bruteforce(const TwoStructure& g);
std::vector<Bitset> strong_modules_bruteforce(const Digraph& g);

// Every module trivial.
bool is_prime(const TwoStructure& g);

// No induced substructure on 3 or 4 vertices is prime. Polynomial; scans
// 3-sets before 4-sets.
bool unp_small(const TwoStructure& g);

// (U2): |D_xyz| <= 2 for all vertex triples.
bool triangle_condition(const TwoStructure& g);

// (U1) every monochromatic subgraph is a di-cograph, and (U2).
bool symbolic_ultrametric(const TwoStructure& g);

// View a digraph as a 2-structure with labels "1" (arc) / "0" (non-arc);
// graph-modules coincide with the 2-structure's modules.
TwoStructure digraph_as_structure(const Digraph& g);

}  // namespace oracle
}  // namespace xt
