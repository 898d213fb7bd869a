#include "xenotree/treerep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "xenotree/moddecomp.hpp"
#include "xenotree/threads.hpp"

namespace xt {

int EventTree::leaf_count() const {
  int c = 0;
  for (const auto& nd : nodes)
    if (nd.leaf) ++c;
  return c;
}

std::vector<std::string> EventTree::leaf_names() const {
  std::vector<std::string> out;
  std::function<void(int)> walk = [&](int i) {
    const auto& nd = at(i);
    if (nd.leaf) {
      out.push_back(nd.name);
      return;
    }
    for (int c : nd.children) walk(c);
  };
  if (root >= 0) walk(root);
  return out;
}

const char* reject_kind_name(RejectKind k) {
  switch (k) {
    case RejectKind::label_bound_exceeded: return "label-bound-exceeded";
    case RejectKind::non_dicograph: return "non-dicograph";
    case RejectKind::cluster_bound_exceeded: return "cluster-bound-exceeded";
    case RejectKind::overlap: return "overlap";
    case RejectKind::no_spanning_cluster: return "no-spanning-cluster";
  }
  return "?";
}

namespace {

std::vector<std::string> names_of(const TwoStructure& g, const Bitset& set) {
  std::vector<std::string> out;
  for (int v = set.first(); v >= 0; v = set.next(v)) out.push_back(g.vertex_name(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Recognition recognize_unp(const TwoStructure& g) {
  g.require_total();
  const int n = g.size();
  Recognition r;
  if (n <= 2) {  // no substructure of size >= 3 exists
    r.unp = true;
    return r;
  }
  TwoStructure rev = reversible_refinement(g);
  const long bound = 2L * (n - 1);
  r.label_bound_exceeded = long(rev.alphabet().size()) > bound;

  auto mono = monochromatic_subgraphs(rev);
  struct PerLabel {
    bool dicograph = false;
    std::vector<Bitset> clusters;
    std::vector<int> witness;
  };
  std::vector<PerLabel> per(mono.size());
  parallel_for(mono.size(), [&](size_t i) {
    const Digraph& gi = mono[i].second;
    StrongModuleSet s = strong_modules(gi);
    if (is_dicograph(gi, s)) {
      per[i].dicograph = true;
      per[i].clusters = one_clusters(gi, s);
    } else {
      per[i].witness = find_prime_witness(gi);
    }
  });
  for (size_t i = 0; i < per.size(); ++i) {
    if (per[i].dicograph) continue;
    Certificate c;
    c.kind = RejectKind::non_dicograph;
    c.label = mono[i].first;
    for (int v : per[i].witness) c.witness.push_back(g.vertex_name(v));
    r.certificate = std::move(c);
    return r;
  }

  ClusterMultiset cm;
  cm.ground = n;
  for (size_t i = 0; i < per.size(); ++i)
    for (auto& cl : per[i].clusters) cm.clusters.push_back({cl, int(i)});
  r.cluster_bound_exceeded = long(cm.clusters.size()) > bound;

  if (!is_hierarchy(cm)) {
    HierarchyViolation v = find_hierarchy_violation(cm);
    Certificate c;
    if (v.missing_root) {
      c.kind = RejectKind::no_spanning_cluster;
    } else {
      c.kind = RejectKind::overlap;
      c.cluster_a = names_of(g, v.a);
      c.cluster_b = names_of(g, v.b);
    }
    r.certificate = std::move(c);
    return r;
  }

  if (r.label_bound_exceeded || r.cluster_bound_exceeded) {
    // unreachable: a hierarchy here implies unp, which implies both bounds
    Certificate c;
    if (r.label_bound_exceeded) {
      c.kind = RejectKind::label_bound_exceeded;
      c.count = long(rev.alphabet().size());
    } else {
      c.kind = RejectKind::cluster_bound_exceeded;
      c.count = long(cm.clusters.size());
    }
    c.bound = bound;
    r.certificate = std::move(c);
    return r;
  }

  r.unp = true;
  std::map<Bitset, int> mult;
  for (const auto& cl : cm.clusters) ++mult[cl.members];
  for (const auto& [set, m] : mult) {
    r.clusters.push_back(set);
    r.multiplicity.push_back(m);
  }
  return r;
}

namespace {

struct TreeBuilder {
  const TwoStructure& g;
  const Cotree& skel;
  EventTree out;

  std::string min_leaf_name(int node) const {
    const Bitset& ls = skel.at(node).leafset;
    std::string best;
    for (int v = ls.first(); v >= 0; v = ls.next(v)) {
      const std::string& nm = g.vertex_name(v);
      if (best.empty() || nm < best) best = nm;
    }
    return best;
  }

  int convert(int node) {
    const CotreeNode& nd = skel.at(node);
    int me = int(out.nodes.size());
    out.nodes.push_back({});
    if (nd.children.empty()) {
      out.nodes[size_t(me)].leaf = true;
      out.nodes[size_t(me)].name = g.vertex_name(nd.vertex);
      return me;
    }
    std::vector<int> kids = nd.children;
    std::vector<int> reps;
    reps.reserve(kids.size());
    for (int c : kids) reps.push_back(skel.at(c).leafset.first());
    std::string i = g.label(reps[0], reps[1]);
    std::string j = g.label(reps[1], reps[0]);
    if (i == j) {
      std::sort(kids.begin(), kids.end(), [&](int a, int b) {
        return min_leaf_name(a) < min_leaf_name(b);
      });
    } else {
      if (j < i) std::swap(i, j);
      // forward-degree sort avoids feeding an unverified tournament to a
      // comparator; consistency is checked explicitly afterwards
      size_t k = kids.size();
      std::vector<int> deg(k, 0), idx(k);
      for (size_t a = 0; a < k; ++a) {
        idx[a] = int(a);
        for (size_t b = 0; b < k; ++b)
          if (a != b && g.label(reps[a], reps[b]) == i) ++deg[a];
      }
      std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return deg[size_t(a)] != deg[size_t(b)] ? deg[size_t(a)] > deg[size_t(b)]
                                                : a < b;
      });
      std::vector<int> ordered;
      ordered.reserve(k);
      for (int a : idx) ordered.push_back(kids[size_t(a)]);
      for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b) {
          int ra = skel.at(ordered[a]).leafset.first();
          int rb = skel.at(ordered[b]).leafset.first();
          if (g.label(ra, rb) != i || g.label(rb, ra) != j)
            throw std::logic_error("tree representation: inconsistent order node");
        }
      kids = std::move(ordered);
    }
    out.nodes[size_t(me)].first = i;
    out.nodes[size_t(me)].second = j;
    for (int c : kids) out.nodes[size_t(me)].children.push_back(convert(c));
    return me;
  }
};

}  // namespace

EventTree build_tree_representation(const TwoStructure& g) {
  Recognition rec = recognize_unp(g);
  if (!rec.unp)
    throw std::invalid_argument("build_tree_representation: structure is not unp");
  const int n = g.size();
  EventTree t;
  if (n == 1) {
    t.nodes.push_back({});
    t.nodes[0].leaf = true;
    t.nodes[0].name = g.vertex_name(0);
    t.root = 0;
    return t;
  }
  StrongModuleSet fam;
  fam.ground = n;
  fam.modules = rec.clusters;
  Bitset all(n);
  for (int v = 0; v < n; ++v) {
    all.set(v);
    Bitset single(n);
    single.set(v);
    fam.modules.push_back(single);
  }
  fam.modules.push_back(all);
  Cotree skel = inclusion_tree_of_modules(fam);
  TreeBuilder b{g, skel, {}};
  b.out.root = b.convert(skel.root);
  t = std::move(b.out);
  if (!evaluate_tree(t).same_labeling(g))
    throw std::logic_error("tree representation: evaluation mismatch");
  return t;
}

namespace {

void collect_leaves(const EventTree& t, int node, std::vector<int>& out) {
  const auto& nd = t.at(node);
  if (nd.leaf) {
    out.push_back(node);
    return;
  }
  for (int c : nd.children) collect_leaves(t, c, out);
}

void validate_tree(const EventTree& t) {
  if (t.root < 0 || t.nodes.empty()) throw std::invalid_argument("event tree: empty");
  std::set<std::string> seen;
  for (const auto& nd : t.nodes) {
    if (nd.leaf) {
      if (nd.name.empty()) throw std::invalid_argument("event tree: unnamed leaf");
      if (!seen.insert(nd.name).second)
        throw std::invalid_argument("event tree: duplicate leaf '" + nd.name + "'");
    } else if (nd.children.size() < 2) {
      throw std::invalid_argument("event tree: inner node with fewer than 2 children");
    }
  }
}

}  // namespace

TwoStructure evaluate_tree(const EventTree& t) {
  validate_tree(t);
  std::vector<std::string> vertices = t.leaf_names();
  std::vector<std::string> alphabet;
  for (const auto& nd : t.nodes)
    if (!nd.leaf) {
      alphabet.push_back(nd.first);
      alphabet.push_back(nd.second);
    }
  if (vertices.size() == 1) {
    if (alphabet.empty()) alphabet.push_back("0");  // n=1 carries no pairs
    return TwoStructure(vertices, alphabet);
  }
  TwoStructure g(vertices, alphabet);
  // leaf vertex indices per node, left-to-right
  std::function<std::vector<int>(int)> eval = [&](int node) -> std::vector<int> {
    const auto& nd = t.at(node);
    if (nd.leaf) return {g.vertex_index(nd.name)};
    std::vector<std::vector<int>> sub;
    sub.reserve(nd.children.size());
    for (int c : nd.children) sub.push_back(eval(c));
    for (size_t r = 0; r < sub.size(); ++r)
      for (size_t s = r + 1; s < sub.size(); ++s)
        for (int x : sub[r])
          for (int y : sub[s]) {
            g.set_label(x, y, nd.first);
            g.set_label(y, x, nd.second);
          }
    std::vector<int> all;
    for (auto& v : sub) all.insert(all.end(), v.begin(), v.end());
    return all;
  };
  eval(t.root);
  g.require_total();
  return g;
}

namespace {

struct Normalizer {
  const EventTree& in;
  EventTree out;

  // returns new node index; min leaf name returned through `minName`
  int run(int node, std::string& minName) {
    const auto& nd = in.at(node);
    if (nd.leaf) {
      minName = nd.name;
      int me = int(out.nodes.size());
      out.nodes.push_back(nd);
      return me;
    }
    std::string first = nd.first, second = nd.second;
    std::vector<int> kids = nd.children;
    if (second < first) {
      std::swap(first, second);
      std::reverse(kids.begin(), kids.end());
    }
    struct Child {
      int idx;
      std::string minName;
    };
    std::vector<Child> built;
    for (int c : kids) {
      std::string mn;
      int b = run(c, mn);
      // splice children sharing the parent's pair
      const auto& bn = out.nodes[size_t(b)];
      if (!bn.leaf && bn.first == first && bn.second == second) {
        for (int gc : bn.children) {
          std::string gmn = subtree_min(gc);
          built.push_back({gc, gmn});
        }
      } else {
        built.push_back({b, mn});
      }
    }
    if (first == second)
      std::stable_sort(built.begin(), built.end(),
                       [](const Child& a, const Child& b) { return a.minName < b.minName; });
    int me = int(out.nodes.size());
    out.nodes.push_back({});
    out.nodes[size_t(me)].first = first;
    out.nodes[size_t(me)].second = second;
    minName.clear();
    for (const auto& c : built) {
      out.nodes[size_t(me)].children.push_back(c.idx);
      if (minName.empty() || c.minName < minName) minName = c.minName;
    }
    return me;
  }

  std::string subtree_min(int node) const {
    const auto& nd = out.nodes[size_t(node)];
    if (nd.leaf) return nd.name;
    std::string best;
    for (int c : nd.children) {
      std::string m = subtree_min(c);
      if (best.empty() || m < best) best = m;
    }
    return best;
  }
};

bool equal_subtrees(const EventTree& a, int ia, const EventTree& b, int ib) {
  const auto& na = a.at(ia);
  const auto& nb = b.at(ib);
  if (na.leaf != nb.leaf) return false;
  if (na.leaf) return na.name == nb.name;
  if (na.first != nb.first || na.second != nb.second) return false;
  if (na.children.size() != nb.children.size()) return false;
  for (size_t i = 0; i < na.children.size(); ++i)
    if (!equal_subtrees(a, na.children[i], b, nb.children[i])) return false;
  return true;
}

}  // namespace

EventTree normalize_tree(const EventTree& t) {
  validate_tree(t);
  Normalizer nz{t, {}};
  std::string mn;
  nz.out.root = nz.run(t.root, mn);
  return std::move(nz.out);
}

bool trees_isomorphic(const EventTree& a, const EventTree& b) {
  auto na = a.leaf_names();
  auto nb = b.leaf_names();
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  if (na != nb) throw std::invalid_argument("trees_isomorphic: leaf sets differ");
  EventTree ca = normalize_tree(a);
  EventTree cb = normalize_tree(b);
  return equal_subtrees(ca, ca.root, cb, cb.root);
}

std::vector<std::vector<std::string>> tree_cluster_sets(const EventTree& t) {
  std::vector<std::vector<std::string>> out;
  std::function<std::vector<std::string>(int)> walk = [&](int node) {
    const auto& nd = t.at(node);
    std::vector<std::string> leaves;
    if (nd.leaf) {
      leaves.push_back(nd.name);
    } else {
      for (int c : nd.children) {
        auto sub = walk(c);
        leaves.insert(leaves.end(), sub.begin(), sub.end());
      }
    }
    auto sorted = leaves;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(sorted);
    return leaves;
  };
  if (t.root >= 0) walk(t.root);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace xt
