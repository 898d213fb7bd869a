#include "xenotree/core2s.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace xt {

Digraph::Digraph(std::vector<std::string> names) : vertices(std::move(names)) {
  out.assign(vertices.size(), Bitset(int(vertices.size())));
  in.assign(vertices.size(), Bitset(int(vertices.size())));
}

void Digraph::add_arc(int x, int y) {
  if (x == y) throw std::invalid_argument("digraph: self-loop");
  if (out[x].test(y)) return;
  out[x].set(y);
  in[y].set(x);
  ++arcs;
}

TwoStructure::TwoStructure(std::vector<std::string> vertices,
                           std::vector<std::string> alphabet)
    : n_(int(vertices.size())), vertices_(std::move(vertices)), alphabet_(std::move(alphabet)) {
  if (n_ == 0) throw std::invalid_argument("2-structure: empty vertex set");
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  if (alphabet_.empty()) throw std::invalid_argument("2-structure: empty alphabet");
  for (int i = 0; i < n_; ++i) {
    if (!vertex_idx_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("2-structure: duplicate vertex name '" + vertices_[i] + "'");
  }
  for (size_t i = 0; i < alphabet_.size(); ++i) label_idx_.emplace(alphabet_[i], int(i));
  phi_.assign(size_t(n_) * n_, -1);
}

TwoStructure TwoStructure::complete(std::vector<std::string> vertices, const std::string& label) {
  TwoStructure g(std::move(vertices), {label});
  for (int x = 0; x < g.n_; ++x)
    for (int y = 0; y < g.n_; ++y)
      if (x != y) g.set_label(x, y, 0);
  return g;
}

int TwoStructure::vertex_index(std::string_view name) const {
  auto it = vertex_idx_.find(std::string(name));
  return it == vertex_idx_.end() ? -1 : it->second;
}

int TwoStructure::label_index(std::string_view token) const {
  auto it = label_idx_.find(std::string(token));
  return it == label_idx_.end() ? -1 : it->second;
}

void TwoStructure::set_label(int x, int y, int label_id) {
  if (x == y) throw std::invalid_argument("2-structure: self-pair");
  if (label_id < 0 || label_id >= int(alphabet_.size()))
    throw std::invalid_argument("2-structure: label id out of range");
  phi_[size_t(x) * n_ + y] = label_id;
}

void TwoStructure::set_label(int x, int y, std::string_view token) {
  int id = label_index(token);
  if (id < 0) throw std::invalid_argument("2-structure: unknown label '" + std::string(token) + "'");
  set_label(x, y, id);
}

bool TwoStructure::is_total() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (x != y && phi_[size_t(x) * n_ + y] < 0) return false;
  return true;
}

void TwoStructure::require_total() const {
  if (!is_total()) throw std::invalid_argument("2-structure: phi is not total");
}

std::vector<int> TwoStructure::used_labels() const {
  std::vector<char> seen(alphabet_.size(), 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (x != y) seen[size_t(label_id(x, y))] = 1;
  std::vector<int> out;
  for (size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(int(i));
  return out;
}

TwoStructure TwoStructure::induced(const Bitset& verts) const {
  std::vector<int> ids = verts.to_vector();
  if (ids.empty()) throw std::invalid_argument("induced: empty vertex set");
  std::vector<std::string> names;
  names.reserve(ids.size());
  for (int v : ids) names.push_back(vertices_[v]);
  TwoStructure h(names, alphabet_);
  for (size_t a = 0; a < ids.size(); ++a)
    for (size_t b = 0; b < ids.size(); ++b)
      if (a != b) h.set_label(int(a), int(b), label_id(ids[a], ids[b]));
  return h;
}

bool TwoStructure::same_labeling(const TwoStructure& o) const {
  if (n_ != o.n_) return false;
  for (const auto& name : vertices_)
    if (o.vertex_index(name) < 0) return false;
  for (int x = 0; x < n_; ++x) {
    int ox = o.vertex_index(vertices_[x]);
    for (int y = 0; y < n_; ++y) {
      if (x == y) continue;
      int oy = o.vertex_index(vertices_[y]);
      if (label(x, y) != o.label(ox, oy)) return false;
    }
  }
  return true;
}

TwoStructure reversible_refinement(const TwoStructure& g) {
  g.require_total();
  const int n = g.size();
  // Collect occurring composite tokens first so the alphabet is exact.
  std::vector<std::string> tokens;
  auto composite = [&](int x, int y) {
    return g.label(x, y) + kRevSeparator + g.label(y, x);
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) tokens.push_back(composite(x, y));
  TwoStructure r(g.vertices(), tokens);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) r.set_label(x, y, composite(x, y));
  return r;
}

bool is_reversible(const TwoStructure& g) {
  g.require_total();
  const int n = g.size();
  // Label i is paired with the label of the reversed arc; the pairing must
  // be a function.
  std::vector<int> partner(g.alphabet().size(), -2);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      int i = g.label_id(x, y), j = g.label_id(y, x);
      if (partner[i] == -2)
        partner[i] = j;
      else if (partner[i] != j)
        return false;
    }
  return true;
}

std::vector<std::pair<std::string, Digraph>> monochromatic_subgraphs(const TwoStructure& g) {
  g.require_total();
  const int n = g.size();
  std::vector<int> used = g.used_labels();  // ascending ids == sorted tokens
  std::vector<int> slot(g.alphabet().size(), -1);
  std::vector<std::pair<std::string, Digraph>> out;
  out.reserve(used.size());
  for (size_t k = 0; k < used.size(); ++k) {
    slot[size_t(used[k])] = int(k);
    out.emplace_back(g.label_token(used[k]), Digraph(g.vertices()));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) out[size_t(slot[size_t(g.label_id(x, y))])].second.add_arc(x, y);
  return out;
}

bool isomorphic_2s(const TwoStructure& g, const TwoStructure& h) {
  if (g.vertices() != h.vertices())
    throw std::invalid_argument("isomorphic_2s: vertex lists differ");
  g.require_total();
  h.require_total();
  const int n = g.size();
  std::map<int, int> fwd, bwd;  // label bijection, by id
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      int a = g.label_id(x, y), b = h.label_id(x, y);
      auto [it, inserted] = fwd.emplace(a, b);
      if (!inserted && it->second != b) return false;
      auto [jt, jnew] = bwd.emplace(b, a);
      if (!jnew && jt->second != a) return false;
    }
  return true;
}

TwoStructure structure_from_pairs(const std::vector<std::string>& vertices,
                                  const std::vector<std::array<std::string, 3>>& pairs,
                                  const std::string* fallback,
                                  const std::vector<std::string>* extra_alphabet) {
  std::vector<std::string> alphabet;
  for (const auto& p : pairs) alphabet.push_back(p[2]);
  if (fallback) alphabet.push_back(*fallback);
  if (extra_alphabet) alphabet.insert(alphabet.end(), extra_alphabet->begin(), extra_alphabet->end());
  if (alphabet.empty()) throw std::invalid_argument("2-structure: no labels given");
  TwoStructure g(vertices, alphabet);
  const int n = g.size();
  if (fallback) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y) g.set_label(x, y, *fallback);
  }
  std::vector<char> given(size_t(n) * n, 0);
  for (const auto& p : pairs) {
    int x = g.vertex_index(p[0]), y = g.vertex_index(p[1]);
    if (x < 0) throw std::invalid_argument("2-structure: unknown vertex '" + p[0] + "'");
    if (y < 0) throw std::invalid_argument("2-structure: unknown vertex '" + p[1] + "'");
    if (x == y) throw std::invalid_argument("2-structure: self-pair on '" + p[0] + "'");
    size_t at = size_t(x) * n + y;
    if (given[at] && g.label(x, y) != p[2])
      throw std::invalid_argument("2-structure: conflicting labels for pair (" + p[0] + "," + p[1] + ")");
    given[at] = 1;
    g.set_label(x, y, p[2]);
  }
  g.require_total();
  return g;
}

}  // namespace xt
