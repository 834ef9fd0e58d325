#pragma once

// Test-side brute-force oracles. These deliberately avoid the library's own
// search machinery: subgroups come from a full subset scan, automorphisms
// from a full bijection scan, and orbits from plain image enumeration.

#include <algorithm>
#include <set>
#include <vector>

#include "difsets/group.hpp"

namespace oracles {

// Every subgroup of g found by scanning all subsets containing the identity.
// Only usable for tiny groups (order <= 20 or so).
inline std::vector<std::vector<int>> all_subgroups_by_scan(const difsets::Group& g) {
  const int v = g.order;
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 1; mask < (1ul << v); mask += 2) {  // bit 0 = element 1
    std::vector<int> members;
    for (int i = 0; i < v; ++i)
      if (mask >> i & 1) members.push_back(i + 1);
    bool closed = true;
    for (int a : members) {
      for (int b : members)
        if (!(mask >> (g.mul(a, b) - 1) & 1)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(members));
  }
  return out;
}

inline std::vector<std::vector<int>> normal_subgroups_by_scan(const difsets::Group& g) {
  std::vector<std::vector<int>> out;
  for (auto& members : all_subgroups_by_scan(g)) {
    std::vector<char> in(g.order + 1, 0);
    for (int m : members) in[m] = 1;
    bool normal = true;
    for (int x = 1; x <= g.order && normal; ++x)
      for (int m : members)
        if (!in[g.conj(x, m)]) {
          normal = false;
          break;
        }
    if (normal) out.push_back(std::move(members));
  }
  return out;
}

// Every automorphism found by scanning all bijections fixing the identity.
// Only usable for order <= 8 or so.
inline std::vector<std::vector<int>> automorphisms_by_scan(const difsets::Group& g) {
  const int v = g.order;
  std::vector<int> perm(v);
  for (int i = 0; i < v; ++i) perm[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    if (perm[0] != 1) continue;
    bool hom = true;
    for (int a = 1; a <= v && hom; ++a)
      for (int b = 1; b <= v; ++b)
        if (perm[g.mul(a, b) - 1] != g.mul(perm[a - 1], perm[b - 1])) {
          hom = false;
          break;
        }
    if (hom) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Full (translate, automorphism)-orbit of a set, given an automorphism list.
inline std::set<std::vector<int>> set_orbit(const difsets::Group& g,
                                            const std::vector<std::vector<int>>& automorphisms,
                                            const std::vector<int>& set) {
  std::set<std::vector<int>> orbit;
  for (const auto& phi : automorphisms) {
    std::vector<int> image;
    image.reserve(set.size());
    for (int d : set) image.push_back(phi[d - 1]);
    for (int t = 1; t <= g.order; ++t) {
      std::vector<int> moved;
      moved.reserve(set.size());
      for (int d : image) moved.push_back(g.mul(t, d));
      std::sort(moved.begin(), moved.end());
      orbit.insert(std::move(moved));
    }
  }
  return orbit;
}

// All k-subsets of 1..v in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int v, int k) {
  std::vector<std::vector<int>> out;
  if (k > v) return out;
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i + 1;
  while (true) {
    out.push_back(comb);
    int i = k - 1;
    while (i >= 0 && comb[i] == v - (k - 1 - i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

// Handy generators as permutation groups.
inline difsets::Group symmetric3() {
  return difsets::group_from_generators(3, {{2, 3, 1}, {2, 1, 3}}, 200, "S3");
}

inline difsets::Group klein_four() {
  return difsets::group_from_generators(4, {{2, 1, 3, 4}, {1, 2, 4, 3}}, 200, "V4");
}

inline difsets::Group dihedral(int n, std::string label = "") {
  // rotation (1 2 ... n) and the reflection fixing point 1
  difsets::Permutation rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n + 1;
    ref[i] = (n - i) % n + 1;
  }
  if (label.empty()) label = "D" + std::to_string(2 * n);
  return difsets::group_from_generators(n, {rot, ref}, 200, label);
}

}  // namespace oracles
