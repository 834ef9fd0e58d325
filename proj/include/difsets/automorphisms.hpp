#pragma once

// Automorphism groups of small finite groups, computed by backtracking over
// images of a generating sequence. Automorphisms are stored as full image
// arrays; at the orders handled here that is cheaper than any compressed
// representation because every consumer iterates them all anyway.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "difsets/errors.hpp"
#include "difsets/group.hpp"

namespace difsets {

using Automorphism = Permutation;  // images of 1..order, fixes index 1

namespace detail {

// Per-element fingerprint preserved by any isomorphism; used to cut the
// candidate image lists during backtracking.
inline std::vector<std::array<int, 4>> element_invariants(const Group& g) {
  std::vector<std::array<int, 4>> inv(g.order + 1);
  std::vector<int> csize(g.order + 1, 0), roots(g.order + 1, 0);
  for (int a = 1; a <= g.order; ++a) {
    for (int b = 1; b <= g.order; ++b)
      if (g.mul(a, b) == g.mul(b, a)) ++csize[a];
    ++roots[g.mul(a, a)];
  }
  for (int a = 1; a <= g.order; ++a)
    inv[a] = {element_order(g, a), csize[a], roots[a], element_order(g, g.mul(a, a))};
  return inv;
}

// Greedy generating sequence: repeatedly pick the element of largest order
// outside the closure of those already picked (ties: smallest index).
inline std::vector<int> generating_sequence(const Group& g) {
  std::vector<int> gens;
  std::vector<int> closure{1};
  while (static_cast<int>(closure.size()) < g.order) {
    int best = 0, best_order = 0;
    for (int a = 1; a <= g.order; ++a) {
      if (std::binary_search(closure.begin(), closure.end(), a)) continue;
      int o = element_order(g, a);
      if (o > best_order) {
        best_order = o;
        best = a;
      }
    }
    gens.push_back(best);
    auto seed = closure;
    seed.push_back(best);
    closure = subgroup_closure(g, seed);
  }
  return gens;
}

// Backtracking search for isomorphisms a -> b extending images of a's
// generating sequence. Invokes emit() with each complete image array; emit
// returns false to stop the search. Every candidate extension attempt counts
// against the cap.
template <typename Emit>
void isomorphism_search(const Group& a, const Group& b, long long cap, Emit&& emit) {
  if (a.order != b.order) return;
  const auto gens = generating_sequence(a);
  const auto inv_a = element_invariants(a);
  const auto inv_b = element_invariants(b);

  std::vector<int> img(a.order + 1, 0);   // partial map a -> b
  std::vector<char> used(b.order + 1, 0);  // image hit set
  std::vector<int> known{1};               // defined domain, discovery order
  img[1] = 1;
  used[1] = 1;
  long long explored = 0;
  bool stop = false;

  // Extends the map by img[x] = y and closes under products against the
  // already-known domain. Returns the list of newly defined elements so the
  // caller can roll back, or nullopt on contradiction.
  auto extend = [&](int x, int y) -> std::optional<std::vector<int>> {
    std::vector<int> added;
    auto fail = [&]() {
      for (int z : added) {
        used[img[z]] = 0;
        img[z] = 0;
        known.pop_back();
      }
      return std::nullopt;
    };
    auto define = [&](int z, int w) -> bool {
      if (img[z]) return img[z] == w;
      if (used[w]) return false;
      img[z] = w;
      used[w] = 1;
      known.push_back(z);
      added.push_back(z);
      return true;
    };
    if (!define(x, y)) return fail();
    for (std::size_t i = 0; i < added.size(); ++i) {
      int n = added[i];
      for (std::size_t j = 0; j < known.size(); ++j) {
        int m = known[j];
        if (!define(a.mul(n, m), b.mul(img[n], img[m]))) return fail();
        if (!define(a.mul(m, n), b.mul(img[m], img[n]))) return fail();
      }
    }
    return added;
  };

  auto rec = [&](auto&& self, std::size_t level) -> void {
    if (stop) return;
    if (level == gens.size()) {
      std::vector<int> whole(img.begin() + 1, img.end());
      if (!emit(whole)) stop = true;
      return;
    }
    int gen = gens[level];
    for (int c = 1; c <= b.order && !stop; ++c) {
      if (used[c] || inv_b[c] != inv_a[gen]) continue;
      if (++explored > cap)
        throw capacity_error("isomorphism search exceeded candidate cap for group " +
                             (a.label.empty() ? "of order " + std::to_string(a.order) : a.label));
      auto added = extend(gen, c);
      if (!added) continue;
      self(self, level + 1);
      for (auto it = added->rbegin(); it != added->rend(); ++it) {
        used[img[*it]] = 0;
        img[*it] = 0;
        known.pop_back();
      }
    }
  };
  rec(rec, 0);
}

}  // namespace detail

struct AutomorphismGroup {
  Group group;
  std::vector<Automorphism> elements;  // sorted by image-array lexicographic order
  std::size_t size() const { return elements.size(); }
};

inline AutomorphismGroup automorphism_group(const Group& g, long long cap = 10'000'000) {
  AutomorphismGroup aut;
  aut.group = g;
  detail::isomorphism_search(g, g, cap, [&](const std::vector<int>& images) {
    aut.elements.push_back(images);
    return true;
  });
  std::sort(aut.elements.begin(), aut.elements.end());
  return aut;
}

// First isomorphism a -> b found, if any.
inline std::optional<Permutation> find_isomorphism(const Group& a, const Group& b,
                                                   long long cap = 10'000'000) {
  std::optional<Permutation> found;
  detail::isomorphism_search(a, b, cap, [&](const std::vector<int>& images) {
    found = images;
    return false;
  });
  return found;
}

inline bool are_isomorphic(const Group& a, const Group& b, long long cap = 10'000'000) {
  return find_isomorphism(a, b, cap).has_value();
}

// Automorphisms mapping the subgroup onto itself setwise.
inline std::vector<Automorphism> stabilizing_automorphisms(const AutomorphismGroup& aut,
                                                           const Subgroup& n) {
  std::vector<Automorphism> out;
  for (const auto& phi : aut.elements) {
    bool stable = true;
    for (int m : n.members)
      if (!n.contains(phi[m - 1])) {
        stable = false;
        break;
      }
    if (stable) out.push_back(phi);
  }
  return out;
}

// The automorphism psi of Q.quotient with psi(coset(a)) = coset(phi(a)).
// Requires phi to stabilize the kernel setwise.
inline Automorphism induce_on_quotient(const Automorphism& phi, const QuotientMap& q) {
  for (int m : q.kernel.members)
    if (!q.kernel.contains(phi[m - 1]))
      throw std::invalid_argument("induce_on_quotient: automorphism does not stabilize the kernel");
  Automorphism psi(q.quotient.order, 0);
  for (int a = 1; a <= q.source.order; ++a) psi[q.project(a) - 1] = q.project(phi[a - 1]);
  return psi;
}

// Induced automorphisms of Q.quotient coming from the full automorphism group
// of the source, deduplicated and sorted.
inline std::vector<Automorphism> induced_automorphisms(const AutomorphismGroup& aut,
                                                       const QuotientMap& q) {
  std::vector<Automorphism> out;
  for (const auto& phi : stabilizing_automorphisms(aut, q.kernel))
    out.push_back(induce_on_quotient(phi, q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace difsets
