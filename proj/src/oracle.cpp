#include "xenotree/oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "xenotree/moddecomp.hpp"

namespace xt {
namespace oracle {

namespace {

void check_guard(int n) {
  if (n > kMaxEnumerationSize)
    throw std::invalid_argument("oracle: size guard exceeded (n <= 20)");
}

bool is_module_mask(const TwoStructure& g, unsigned mask) {
  const int n = g.size();
  for (int z = 0; z < n; ++z) {
    if (mask & (1u << z)) continue;
    int ref_out = -1, ref_in = -1;
    for (int m = 0; m < n; ++m) {
      if (!(mask & (1u << m))) continue;
      int out = g.label_id(m, z), in = g.label_id(z, m);
      if (ref_out < 0) {
        ref_out = out;
        ref_in = in;
      } else if (out != ref_out || in != ref_in) {
        return false;
      }
    }
  }
  return true;
}

Bitset mask_to_bitset(int n, unsigned mask) {
  Bitset b(n);
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) b.set(i);
  return b;
}

}  // namespace

std::vector<Bitset> enumerate_modules(const TwoStructure& g) {
  g.require_total();
  const int n = g.size();
  check_guard(n);
  std::vector<Bitset> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask)
    if (is_module_mask(g, mask)) out.push_back(mask_to_bitset(n, mask));
  return out;
}

std::vector<Bitset> strong_modules_bruteforce(const TwoStructure& g) {
  std::vector<Bitset> mods = enumerate_modules(g);
  std::vector<Bitset> out;
  for (const auto& m : mods) {
    bool strong = true;
    for (const auto& w : mods)
      if (m.overlaps(w)) {
        strong = false;
        break;
      }
    if (strong) out.push_back(m);
  }
  return out;
}

std::vector<Bitset> strong_modules_bruteforce(const Digraph& g) {
  return strong_modules_bruteforce(digraph_as_structure(g));
}

bool is_prime(const TwoStructure& g) {
  g.require_total();
  const int n = g.size();
  check_guard(n);
  if (n <= 2) return true;  // all modules trivial
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits < 2 || bits == n) continue;
    if (is_module_mask(g, mask)) return false;
  }
  return true;
}

bool unp_small(const TwoStructure& g) {
  g.require_total();
  const int n = g.size();
  if (n <= 2) return true;
  Bitset sel(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        sel.clear();
        sel.set(a);
        sel.set(b);
        sel.set(c);
        if (is_prime(g.induced(sel))) return false;
      }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          sel.clear();
          sel.set(a);
          sel.set(b);
          sel.set(c);
          sel.set(d);
          if (is_prime(g.induced(sel))) return false;
        }
  return true;
}

bool triangle_condition(const TwoStructure& g) {
  g.require_total();
  const int n = g.size();
  auto dset = [&](int x, int y) {
    int a = g.label_id(x, y), b = g.label_id(y, x);
    return a <= b ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a};
  };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        auto dxy = dset(x, y), dxz = dset(x, z), dyz = dset(y, z);
        if (dxy != dxz && dxy != dyz && dxz != dyz) return false;
      }
  return true;
}

bool symbolic_ultrametric(const TwoStructure& g) {
  for (const auto& [token, gi] : monochromatic_subgraphs(g)) {
    (void)token;
    if (!is_dicograph(gi, strong_modules(gi))) return false;
  }
  return triangle_condition(g);
}

TwoStructure digraph_as_structure(const Digraph& g) {
  TwoStructure s(g.vertices, {"0", "1"});
  const int n = g.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) s.set_label(x, y, g.arc(x, y) ? "1" : "0");
  return s;
}

}  // namespace oracle
}  // namespace xt
