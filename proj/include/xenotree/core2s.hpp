#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "xenotree/bitset.hpp"

namespace xt {

// Separator used to build composite labels in reversible_refinement().
// Forbidden in user-supplied label tokens; loaders enforce this.
inline constexpr const char* kRevSeparator = "\xe2\x81\x80";  // U+2040

// Loop-free digraph on a named vertex list. Adjacency kept in both
// directions as bitsets; vertex identity is positional.
struct Digraph {
  std::vector<std::string> vertices;
  std::vector<Bitset> out, in;
  int arcs = 0;

  Digraph() = default;
  explicit Digraph(std::vector<std::string> names);

  int size() const { return int(vertices.size()); }
  bool arc(int x, int y) const { return out[x].test(y); }
  void add_arc(int x, int y);
};

// Complete arc-labeled loop-free digraph g = (V, Upsilon, phi).
// phi is stored as a dense n x n matrix of label indices (diagonal unused).
class TwoStructure {
 public:
  TwoStructure() = default;
  // `alphabet` may contain tokens that never occur in phi.
  TwoStructure(std::vector<std::string> vertices, std::vector<std::string> alphabet);

  static TwoStructure complete(std::vector<std::string> vertices, const std::string& label);

  int size() const { return n_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex_name(int i) const { return vertices_[i]; }
  int vertex_index(std::string_view name) const;

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  int label_index(std::string_view token) const;
  const std::string& label_token(int id) const { return alphabet_[id]; }

  int label_id(int x, int y) const { return phi_[size_t(x) * n_ + y]; }
  const std::string& label(int x, int y) const { return alphabet_[label_id(x, y)]; }
  void set_label(int x, int y, int label_id);
  void set_label(int x, int y, std::string_view token);

  bool is_total() const;
  void require_total() const;  // throws std::invalid_argument

  // Label indices of labels that actually occur in phi, ascending.
  std::vector<int> used_labels() const;

  TwoStructure induced(const Bitset& verts) const;

  // Same vertex set (possibly in a different order) and identical phi on
  // every named pair.
  bool same_labeling(const TwoStructure& o) const;

  bool operator==(const TwoStructure& o) const {
    return vertices_ == o.vertices_ && alphabet_ == o.alphabet_ && phi_ == o.phi_;
  }

 private:
  int n_ = 0;
  std::vector<std::string> vertices_;
  std::vector<std::string> alphabet_;  // sorted, unique
  std::unordered_map<std::string, int> vertex_idx_;
  std::unordered_map<std::string, int> label_idx_;
  std::vector<int> phi_;  // n*n, -1 on diagonal / unset

  friend TwoStructure reversible_refinement(const TwoStructure&);
};

// rev(g): each pair e is relabeled with the composite token
// phi(e) + separator + phi(e^-1); the result is reversible and its alphabet
// is exactly the set of occurring composite tokens.
TwoStructure reversible_refinement(const TwoStructure& g);

bool is_reversible(const TwoStructure& g);

// One digraph per *used* label, keyed by token, sorted by token.
// The arc sets partition all n(n-1) ordered pairs.
std::vector<std::pair<std::string, Digraph>> monochromatic_subgraphs(const TwoStructure& g);

// True iff some label bijection maps phi_g onto phi_h (vertices fixed).
// Throws std::invalid_argument if the vertex lists differ.
bool isomorphic_2s(const TwoStructure& g, const TwoStructure& h);

// Convenience used by loaders and tests: build from [x, y, token] triples,
// filling unspecified pairs with `fallback` when provided.
TwoStructure structure_from_pairs(
    const std::vector<std::string>& vertices,
    const std::vector<std::array<std::string, 3>>& pairs,
    const std::string* fallback = nullptr,
    const std::vector<std::string>* extra_alphabet = nullptr);

}  // namespace xt
