#include "xenotree/moddecomp.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace xt {

const char* node_type_name(NodeType t) {
  switch (t) {
    case NodeType::leaf: return "leaf";
    case NodeType::parallel: return "parallel";
    case NodeType::series: return "series";
    case NodeType::order: return "order";
    case NodeType::prime: return "prime";
    default: return "untyped";
  }
}

int Cotree::inner_count() const {
  int c = 0;
  for (const auto& nd : nodes)
    if (!nd.children.empty()) ++c;
  return c;
}

bool Cotree::has_prime() const {
  for (const auto& nd : nodes)
    if (nd.type == NodeType::prime) return true;
  return false;
}

namespace {

// Connected components of the graph on S whose neighborhoods are given by
// `neigh(x)` (already restricted to S), sorted by smallest vertex.
template <typename Neigh>
std::vector<Bitset> components_by(const Bitset& S, int n, Neigh neigh) {
  std::vector<Bitset> comps;
  Bitset todo = S;
  std::vector<int> stack;
  while (true) {
    int seed = todo.first();
    if (seed < 0) break;
    Bitset comp(n);
    comp.set(seed);
    todo.reset(seed);
    stack.push_back(seed);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      Bitset fresh = neigh(x) & todo;
      for (int y = fresh.first(); y >= 0; y = fresh.next(y)) {
        comp.set(y);
        todo.reset(y);
        stack.push_back(y);
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;  // seeds taken in ascending order, so sorted by min vertex
}

struct Engine {
  const Digraph& g;
  int n;
  Cotree tree;

  explicit Engine(const Digraph& gg) : g(gg), n(gg.size()) {}

  Bitset weak_neigh(int x, const Bitset& S) const {
    return (g.out[x] | g.in[x]) & S;
  }
  Bitset co_neigh(int x, const Bitset& S) const {
    // pairs missing at least one arc direction
    Bitset b = S;
    b -= (g.out[x] & g.in[x]);
    b.reset(x);
    return b;
  }
  Bitset tie_neigh(int x, const Bitset& S) const {
    // both arcs or no arc
    Bitset none = S;
    none -= g.out[x];
    none -= g.in[x];
    Bitset b = (g.out[x] & g.in[x] & S) | none;
    b.reset(x);
    return b;
  }

  bool exists_arc(const Bitset& from, const Bitset& to) const {
    for (int x = from.first(); x >= 0; x = from.next(x))
      if (g.out[x].intersects(to)) return true;
    return false;
  }

  // (z -> m, m -> z) adjacency pattern, the distinguishing "view".
  int view(int z, int m) const {
    return (int(g.out[z].test(m)) << 1) | int(g.out[m].test(z));
  }

  // Smallest module of g[S] containing {a, b}: absorb every outside vertex
  // that distinguishes a member from the representative a.
  Bitset smallest_module(const Bitset& S, int a, int b) const {
    Bitset M(n);
    M.set(a);
    M.set(b);
    std::vector<int> work{a, b};
    while (!work.empty()) {
      int m = work.back();
      work.pop_back();
      Bitset outside = S - M;
      for (int z = outside.first(); z >= 0; z = outside.next(z)) {
        if (view(z, m) != view(z, a)) {
          M.set(z);
          work.push_back(z);
        }
      }
    }
    return M;
  }

  // Coarsest partition of S\{v} into modules of g[S]: iteratively split by
  // distinguishing vertices. Parts are the maximal modules avoiding v.
  std::vector<Bitset> max_avoiding_modules(const Bitset& S, int v) const {
    std::vector<Bitset> parts;
    {
      std::array<Bitset, 4> bucket{Bitset(n), Bitset(n), Bitset(n), Bitset(n)};
      Bitset rest = S;
      rest.reset(v);
      for (int x = rest.first(); x >= 0; x = rest.next(x)) bucket[size_t(view(v, x))].set(x);
      for (auto& b : bucket)
        if (b.any()) parts.push_back(std::move(b));
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (int z = S.first(); z >= 0; z = S.next(z)) {
        size_t k = parts.size();
        for (size_t pi = 0; pi < k; ++pi) {
          if (parts[pi].test(z) || parts[pi].count() < 2) continue;
          std::array<Bitset, 4> bucket{Bitset(n), Bitset(n), Bitset(n), Bitset(n)};
          for (int x = parts[pi].first(); x >= 0; x = parts[pi].next(x))
            bucket[size_t(view(z, x))].set(x);
          int nonempty = 0;
          for (auto& b : bucket)
            if (b.any()) ++nonempty;
          if (nonempty > 1) {
            bool first = true;
            for (auto& b : bucket) {
              if (!b.any()) continue;
              if (first) {
                parts[pi] = b;
                first = false;
              } else {
                parts.push_back(b);
              }
            }
            changed = true;
          }
        }
      }
    }
    std::sort(parts.begin(), parts.end(),
              [](const Bitset& a, const Bitset& b) { return a.first() < b.first(); });
    return parts;
  }

  // Top partition of an order node: tie components, then forced merges
  // (mixed orientation, directed cycles) until the part tournament is a
  // transitive linear order. Empty result means "not order-decomposable".
  std::vector<Bitset> order_partition(const Bitset& S) {
    std::vector<Bitset> parts =
        components_by(S, n, [&](int x) { return tie_neigh(x, S); });
    while (parts.size() >= 2) {
      size_t k = parts.size();
      std::vector<int> uf(k);
      std::iota(uf.begin(), uf.end(), 0);
      std::function<int(int)> find = [&](int i) {
        while (uf[size_t(i)] != i) i = uf[size_t(i)] = uf[size_t(uf[size_t(i)])];
        return i;
      };
      std::vector<std::vector<char>> fwd(k, std::vector<char>(k, 0));
      bool mixed = false;
      for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
          bool f = exists_arc(parts[i], parts[j]);
          bool b = exists_arc(parts[j], parts[i]);
          // cross pairs of distinct tie components carry exactly one arc
          if (f && b) {
            uf[size_t(find(int(i)))] = find(int(j));
            mixed = true;
          } else if (f) {
            fwd[i][j] = 1;
          } else {
            fwd[j][i] = 1;
          }
        }
      if (!mixed) {
        // contract strongly connected components of the part tournament
        std::vector<int> comp = tournament_sccs(fwd);
        int groups = *std::max_element(comp.begin(), comp.end()) + 1;
        if (groups == int(k)) {
          // acyclic tournament = transitive linear order; sort by out-degree
          std::vector<int> outdeg(k, 0);
          for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) outdeg[i] += fwd[i][j];
          std::vector<int> idx(k);
          std::iota(idx.begin(), idx.end(), 0);
          std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return outdeg[size_t(a)] > outdeg[size_t(b)];
          });
          std::vector<Bitset> ordered;
          ordered.reserve(k);
          for (int i : idx) ordered.push_back(parts[size_t(i)]);
          return ordered;
        }
        // merge by scc id
        std::vector<Bitset> merged;
        std::vector<int> slot(size_t(groups), -1);
        for (size_t i = 0; i < k; ++i) {
          int c = comp[i];
          if (slot[size_t(c)] < 0) {
            slot[size_t(c)] = int(merged.size());
            merged.push_back(parts[i]);
          } else {
            merged[size_t(slot[size_t(c)])] |= parts[i];
          }
        }
        parts = std::move(merged);
      } else {
        std::vector<Bitset> merged;
        std::vector<int> slot(k, -1);
        for (size_t i = 0; i < k; ++i) {
          int r = find(int(i));
          if (slot[size_t(r)] < 0) {
            slot[size_t(r)] = int(merged.size());
            merged.push_back(parts[i]);
          } else {
            merged[size_t(slot[size_t(r)])] |= parts[i];
          }
        }
        parts = std::move(merged);
      }
    }
    return {};
  }

  // Tarjan over a dense tournament adjacency; returns component ids.
  static std::vector<int> tournament_sccs(const std::vector<std::vector<char>>& adj) {
    int k = int(adj.size());
    std::vector<int> index(size_t(k), -1), low(size_t(k), 0), comp(size_t(k), -1);
    std::vector<char> onstack(size_t(k), 0);
    std::vector<int> stk;
    int counter = 0, groups = 0;
    // iterative tarjan
    struct Frame {
      int v, next;
    };
    for (int s = 0; s < k; ++s) {
      if (index[size_t(s)] != -1) continue;
      std::vector<Frame> frames{{s, 0}};
      index[size_t(s)] = low[size_t(s)] = counter++;
      stk.push_back(s);
      onstack[size_t(s)] = 1;
      while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.next < k) {
          int w = f.next++;
          if (w == f.v || !adj[size_t(f.v)][size_t(w)]) continue;
          if (index[size_t(w)] == -1) {
            index[size_t(w)] = low[size_t(w)] = counter++;
            stk.push_back(w);
            onstack[size_t(w)] = 1;
            frames.push_back({w, 0});
          } else if (onstack[size_t(w)]) {
            low[size_t(f.v)] = std::min(low[size_t(f.v)], index[size_t(w)]);
          }
        } else {
          if (low[size_t(f.v)] == index[size_t(f.v)]) {
            while (true) {
              int w = stk.back();
              stk.pop_back();
              onstack[size_t(w)] = 0;
              comp[size_t(w)] = groups;
              if (w == f.v) break;
            }
            ++groups;
          }
          int v = f.v;
          frames.pop_back();
          if (!frames.empty())
            low[size_t(frames.back().v)] = std::min(low[size_t(frames.back().v)], low[size_t(v)]);
        }
      }
    }
    // renumber so ids are dense (they already are)
    return comp;
  }

  std::vector<Bitset> prime_children(const Bitset& S) {
    int v = S.first();
    std::vector<Bitset> parts = max_avoiding_modules(S, v);
    Bitset cv(n);
    cv.set(v);
    std::vector<Bitset> children;
    for (const auto& B : parts) {
      Bitset closure = smallest_module(S, v, B.first());
      if (closure == S)
        children.push_back(B);
      else
        cv |= B;
    }
    children.push_back(cv);
    std::sort(children.begin(), children.end(),
              [](const Bitset& a, const Bitset& b) { return a.first() < b.first(); });
    return children;
  }

  int build(const Bitset& S) {
    int me = int(tree.nodes.size());
    tree.nodes.push_back({});
    tree.nodes[size_t(me)].leafset = S;
    if (S.count() == 1) {
      tree.nodes[size_t(me)].type = NodeType::leaf;
      tree.nodes[size_t(me)].vertex = S.first();
      return me;
    }
    std::vector<Bitset> parts;
    NodeType type;
    parts = components_by(S, n, [&](int x) { return weak_neigh(x, S); });
    if (parts.size() >= 2) {
      type = NodeType::parallel;
    } else {
      parts = components_by(S, n, [&](int x) { return co_neigh(x, S); });
      if (parts.size() >= 2) {
        type = NodeType::series;
      } else {
        parts = order_partition(S);
        if (!parts.empty()) {
          type = NodeType::order;
        } else {
          type = NodeType::prime;
          parts = prime_children(S);
        }
      }
    }
    tree.nodes[size_t(me)].type = type;
    for (const auto& p : parts) tree.nodes[size_t(me)].children.push_back(build(p));
    return me;
  }
};

}  // namespace

Cotree modular_decomposition(const Digraph& g) {
  if (g.size() == 0) throw std::invalid_argument("modular_decomposition: empty digraph");
  Engine e(g);
  Bitset all(g.size());
  for (int i = 0; i < g.size(); ++i) all.set(i);
  e.tree.root = e.build(all);
  return std::move(e.tree);
}

StrongModuleSet strong_modules(const Digraph& g) {
  Cotree t = modular_decomposition(g);
  StrongModuleSet s;
  s.ground = g.size();
  s.modules.reserve(t.nodes.size());
  for (const auto& nd : t.nodes) s.modules.push_back(nd.leafset);
  return s;
}

Cotree inclusion_tree_of_modules(const StrongModuleSet& s) {
  const int n = s.ground;
  if (n <= 0) throw std::invalid_argument("inclusion tree: empty ground set");
  std::vector<Bitset> sets = s.modules;
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::stable_sort(sets.begin(), sets.end(), [](const Bitset& a, const Bitset& b) {
    return a.count() > b.count();
  });
  if (sets.empty() || sets.front().count() != n)
    throw std::invalid_argument("inclusion tree: ground set missing from family");

  Cotree t;
  t.nodes.reserve(sets.size());
  std::vector<int> cur(size_t(n), -1);  // smallest processed set containing v
  for (const auto& S : sets) {
    int me = int(t.nodes.size());
    int parent = cur[size_t(S.first())];
    for (int v = S.first(); v >= 0; v = S.next(v)) {
      if (cur[size_t(v)] != parent)
        throw std::invalid_argument("inclusion tree: family is not laminar");
      cur[size_t(v)] = me;
    }
    t.nodes.push_back({});
    t.nodes[size_t(me)].leafset = S;
    if (S.count() == 1) {
      t.nodes[size_t(me)].type = NodeType::leaf;
      t.nodes[size_t(me)].vertex = S.first();
    }
    if (parent >= 0)
      t.nodes[size_t(parent)].children.push_back(me);
    else
      t.root = me;
  }
  for (int v = 0; v < n; ++v)
    if (cur[size_t(v)] < 0 || t.nodes[size_t(cur[size_t(v)])].leafset.count() != 1)
      throw std::invalid_argument("inclusion tree: singleton missing from family");
  // children arrive in descending-size order; canonicalize by min vertex
  for (auto& nd : t.nodes)
    std::sort(nd.children.begin(), nd.children.end(), [&](int a, int b) {
      return t.nodes[size_t(a)].leafset.first() < t.nodes[size_t(b)].leafset.first();
    });
  return t;
}

namespace {

// Cross-child arc counts for one inner node; fills cnt[i][j] = number of
// arcs from child i into child j.
std::vector<std::vector<long>> cross_counts(const Digraph& g, const Cotree& t,
                                            const CotreeNode& nd) {
  size_t k = nd.children.size();
  std::vector<std::vector<long>> cnt(k, std::vector<long>(k, 0));
  for (size_t i = 0; i < k; ++i) {
    const Bitset& ci = t.at(nd.children[i]).leafset;
    for (size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const Bitset& cj = t.at(nd.children[j]).leafset;
      long c = 0;
      for (int x = ci.first(); x >= 0; x = ci.next(x)) c += (g.out[x] & cj).count();
      cnt[i][j] = c;
    }
  }
  return cnt;
}

// If the children admit a linear arrangement with exactly the forward arcs,
// returns it (as an index permutation); otherwise empty.
std::vector<int> linear_arrangement(const Cotree& t, const CotreeNode& nd,
                                    const std::vector<std::vector<long>>& cnt) {
  size_t k = nd.children.size();
  std::vector<long> sizes(k);
  for (size_t i = 0; i < k; ++i) sizes[i] = t.at(nd.children[i]).leafset.count();
  std::vector<int> outdeg(k, 0);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      long full = sizes[i] * sizes[j];
      if (cnt[i][j] == full && cnt[j][i] == 0)
        ++outdeg[i];
      else if (!(cnt[j][i] == full && cnt[i][j] == 0))
        return {};
    }
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return outdeg[size_t(a)] > outdeg[size_t(b)]; });
  for (size_t r = 0; r + 1 < k; ++r) {
    size_t i = size_t(idx[r]), j = size_t(idx[r + 1]);
    if (cnt[i][j] != sizes[i] * sizes[j] || cnt[j][i] != 0) return {};
  }
  return idx;
}

}  // namespace

Cotree classify_nodes(const Digraph& g, Cotree skeleton) {
  Cotree t = std::move(skeleton);
  for (auto& nd : t.nodes) {
    if (nd.children.empty()) {
      nd.type = NodeType::leaf;
      nd.vertex = nd.leafset.first();
      continue;
    }
    auto cnt = cross_counts(g, t, nd);
    size_t k = nd.children.size();
    std::vector<long> sizes(k);
    for (size_t i = 0; i < k; ++i) sizes[i] = t.at(nd.children[i]).leafset.count();
    bool none = true, all_both = true;
    for (size_t i = 0; i < k && (none || all_both); ++i)
      for (size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        if (cnt[i][j] != 0) none = false;
        if (cnt[i][j] != sizes[i] * sizes[j]) all_both = false;
      }
    if (none) {
      nd.type = NodeType::parallel;
      continue;
    }
    if (all_both) {
      nd.type = NodeType::series;
      continue;
    }
    std::vector<int> arrangement = linear_arrangement(t, nd, cnt);
    if (!arrangement.empty()) {
      nd.type = NodeType::order;
      std::vector<int> reordered;
      reordered.reserve(k);
      for (int i : arrangement) reordered.push_back(nd.children[size_t(i)]);
      nd.children = std::move(reordered);
      continue;
    }
    nd.type = NodeType::prime;
  }
  return t;
}

bool is_dicograph(const Digraph& g, const StrongModuleSet& s) {
  if (g.size() == 1) return true;
  Cotree t = inclusion_tree_of_modules(s);
  long counted = 0;
  for (const auto& nd : t.nodes) {
    if (nd.children.size() < 2) continue;
    const Bitset& c0 = t.at(nd.children[0]).leafset;
    const Bitset& c1 = t.at(nd.children[1]).leafset;
    int x = c0.first(), y = c1.first();
    if (!g.arc(x, y) && !g.arc(y, x)) continue;  // presumed parallel; the
                                                 // final arc count catches lies
    auto cnt = cross_counts(g, t, nd);
    size_t k = nd.children.size();
    std::vector<long> sizes(k);
    for (size_t i = 0; i < k; ++i) sizes[i] = t.at(nd.children[i]).leafset.count();
    bool all_both = true;
    long total = 0;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        total += cnt[i][j];
        if (cnt[i][j] != sizes[i] * sizes[j]) all_both = false;
      }
    if (!all_both && linear_arrangement(t, nd, cnt).empty()) return false;
    counted += total;
  }
  return counted == g.arcs;
}

std::vector<Bitset> one_clusters(const Digraph& g, const StrongModuleSet& s) {
  std::vector<Bitset> out;
  if (g.size() == 1) return out;
  Cotree t = inclusion_tree_of_modules(s);
  for (const auto& nd : t.nodes) {
    if (nd.children.size() < 2) continue;
    int x = t.at(nd.children[0]).leafset.first();
    int y = t.at(nd.children[1]).leafset.first();
    if (g.arc(x, y) || g.arc(y, x)) out.push_back(nd.leafset);
  }
  return out;
}

bool is_prime_digraph_on(const Digraph& g, const std::vector<int>& verts) {
  size_t k = verts.size();
  if (k < 3) return true;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    unsigned bits = unsigned(__builtin_popcount(mask));
    if (bits < 2 || bits == k) continue;
    bool module = true;
    for (size_t zi = 0; zi < k && module; ++zi) {
      if (mask & (1u << zi)) continue;
      int z = verts[zi];
      int ref_view = -1;
      for (size_t mi = 0; mi < k; ++mi) {
        if (!(mask & (1u << mi))) continue;
        int m = verts[mi];
        int v = (int(g.arc(z, m)) << 1) | int(g.arc(m, z));
        if (ref_view < 0)
          ref_view = v;
        else if (v != ref_view) {
          module = false;
          break;
        }
      }
    }
    if (module) return false;
  }
  return true;
}

std::vector<int> find_prime_witness(const Digraph& g) {
  Cotree t = modular_decomposition(g);
  for (const auto& nd : t.nodes) {
    if (nd.type != NodeType::prime) continue;
    // quotient representatives; the quotient is prime, hence contains a
    // prime subdigraph on 3 or 4 representatives
    std::vector<int> reps;
    reps.reserve(nd.children.size());
    for (int c : nd.children) reps.push_back(t.at(c).leafset.first());
    size_t k = reps.size();
    for (size_t a = 0; a < k; ++a)
      for (size_t b = a + 1; b < k; ++b)
        for (size_t c = b + 1; c < k; ++c) {
          std::vector<int> w{reps[a], reps[b], reps[c]};
          if (is_prime_digraph_on(g, w)) return w;
        }
    for (size_t a = 0; a < k; ++a)
      for (size_t b = a + 1; b < k; ++b)
        for (size_t c = b + 1; c < k; ++c)
          for (size_t d = c + 1; d < k; ++d) {
            std::vector<int> w{reps[a], reps[b], reps[c], reps[d]};
            if (is_prime_digraph_on(g, w)) return w;
          }
  }
  return {};
}

}  // namespace xt
