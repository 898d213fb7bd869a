#include "xenotree/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace xt {

bool is_hierarchy(const ClusterMultiset& c) {
  const int n = c.ground;
  if (n <= 0) throw std::invalid_argument("is_hierarchy: empty ground set");
  for (const auto& cl : c.clusters)
    if (cl.members.empty()) throw std::invalid_argument("is_hierarchy: empty cluster");
  if (n == 1) return true;  // {v} is the ground set and a singleton
  if (c.clusters.empty()) return false;

  const size_t m = c.clusters.size();
  // content-based identifiers, so duplicate clusters compare equal
  std::map<Bitset, int> idmap;
  std::vector<int> id(m);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return c.clusters[size_t(a)].members.count() < c.clusters[size_t(b)].members.count();
  });
  for (size_t i = 0; i < m; ++i)
    id[i] = idmap.emplace(c.clusters[i].members, int(idmap.size())).first->second;

  if (c.clusters[size_t(order.back())].members.count() != n) return false;  // largest must be V

  // per-element lists of positions into `order`, ascending by cardinality
  std::vector<std::vector<int>> lists(size_t(n));
  for (size_t pos = 0; pos < m; ++pos) {
    const Bitset& s = c.clusters[size_t(order[pos])].members;
    for (int v = s.first(); v >= 0; v = s.next(v)) lists[size_t(v)].push_back(int(pos));
  }
  std::vector<size_t> head(size_t(n), 0);
  std::vector<char> dead(size_t(n), 0);
  auto exhausted = [&](int i) {
    return dead[size_t(i)] || head[size_t(i)] >= lists[size_t(i)].size();
  };

  while (!exhausted(0)) {
    // smallest head cluster; ties broken by smallest element index
    int s = -1;
    int best = -1;
    for (int i = 0; i < n; ++i) {
      if (exhausted(i)) continue;
      int sz = c.clusters[size_t(order[size_t(lists[size_t(i)][head[size_t(i)]])])].members.count();
      if (s < 0 || sz < best) {
        s = i;
        best = sz;
      }
    }
    if (s < 0) break;
    const Bitset& L = c.clusters[size_t(order[size_t(lists[size_t(s)][head[size_t(s)]])])].members;
    for (int t = L.first(); t >= 0; t = L.next(t)) {
      if (t == s || exhausted(t)) continue;
      size_t ls = lists[size_t(s)].size() - head[size_t(s)];
      size_t lt = lists[size_t(t)].size() - head[size_t(t)];
      if (ls != lt) return false;
      for (size_t r = 0; r < ls; ++r) {
        int cs = order[size_t(lists[size_t(s)][head[size_t(s)] + r])];
        int ct = order[size_t(lists[size_t(t)][head[size_t(t)] + r])];
        if (id[size_t(cs)] != id[size_t(ct)]) return false;
      }
      dead[size_t(t)] = 1;
    }
    ++head[size_t(s)];
  }
  return true;
}

ClusterMultiset assemble_C1(const TwoStructure& g) {
  g.require_total();
  ClusterMultiset c;
  c.ground = g.size();
  auto mono = monochromatic_subgraphs(g);
  for (size_t li = 0; li < mono.size(); ++li) {
    const Digraph& gi = mono[li].second;
    StrongModuleSet s = strong_modules(gi);
    if (!is_dicograph(gi, s))
      throw std::invalid_argument("assemble_C1: monochromatic subgraph of label '" +
                                  mono[li].first + "' is not a di-cograph");
    for (auto& cl : one_clusters(gi, s)) c.clusters.push_back({cl, int(li)});
  }
  return c;
}

Cotree inclusion_tree_of_clusters(const ClusterMultiset& c) {
  if (!is_hierarchy(c)) throw std::invalid_argument("inclusion tree: clusters are not a hierarchy");
  StrongModuleSet fam;
  fam.ground = c.ground;
  for (const auto& cl : c.clusters) fam.modules.push_back(cl.members);
  Bitset all(c.ground);
  for (int v = 0; v < c.ground; ++v) {
    all.set(v);
    Bitset single(c.ground);
    single.set(v);
    fam.modules.push_back(single);
  }
  fam.modules.push_back(all);
  return inclusion_tree_of_modules(fam);
}

HierarchyViolation find_hierarchy_violation(const ClusterMultiset& c) {
  const int n = c.ground;
  HierarchyViolation out;
  std::vector<int> order(c.clusters.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return c.clusters[size_t(a)].members.count() > c.clusters[size_t(b)].members.count();
  });
  if (order.empty() || c.clusters[size_t(order.front())].members.count() != n) {
    out.missing_root = true;
    return out;
  }
  std::vector<Bitset> inserted;
  std::vector<int> cur(size_t(n), -1);
  for (int oi : order) {
    const Bitset& s = c.clusters[size_t(oi)].members;
    int parent = cur[size_t(s.first())];
    if (parent >= 0 && inserted[size_t(parent)] == s) continue;  // duplicate occurrence
    bool agrees = true;
    for (int v = s.first(); v >= 0; v = s.next(v))
      if (cur[size_t(v)] != parent) {
        agrees = false;
        break;
      }
    if (!agrees) {
      for (int v = s.first(); v >= 0; v = s.next(v)) {
        int p = cur[size_t(v)];
        if (p >= 0 && inserted[size_t(p)].overlaps(s)) {
          out.a = inserted[size_t(p)];
          out.b = s;
          return out;
        }
      }
      // disagreement always produces an overlapping ancestor
      throw std::logic_error("find_hierarchy_violation: inconsistent forest");
    }
    int me = int(inserted.size());
    inserted.push_back(s);
    for (int v = s.first(); v >= 0; v = s.next(v)) cur[size_t(v)] = me;
  }
  throw std::logic_error("find_hierarchy_violation: no violation found");
}

}  // namespace xt
