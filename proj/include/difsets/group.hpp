#pragma once

// Finite groups as dense multiplication tables with 1-based element indices.
// The identity always sits at index 1. Groups are immutable once built and
// cheap to copy at the orders handled here (< 200).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "difsets/errors.hpp"

namespace difsets {

// A permutation of 1..degree stored as its image sequence: p[i-1] is the
// image of point i.
using Permutation = std::vector<int>;

inline Permutation perm_identity(int degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline bool is_permutation(const Permutation& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<char> seen(degree + 1, 0);
  for (int x : p) {
    if (x < 1 || x > degree || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// Composition (a*b)(x) = a(b(x)): b acts first.
inline Permutation perm_compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i] - 1];
  return r;
}

inline Permutation perm_inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

struct Group {
  int order = 1;
  std::vector<int> table;    // row-major order*order; table[(a-1)*order+(b-1)] = a*b
  std::vector<int> inverse;  // inverse[a-1]
  std::string label;

  static constexpr int identity_index = 1;

  int mul(int a, int b) const {
    return table[static_cast<std::size_t>(a - 1) * order + (b - 1)];
  }
  int inv(int a) const { return inverse[a - 1]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

  bool operator==(const Group& o) const { return order == o.order && table == o.table; }
};

inline int element_order(const Group& g, int a) {
  int n = 1, x = a;
  while (x != Group::identity_index) {
    x = g.mul(x, a);
    ++n;
  }
  return n;
}

inline int element_power(const Group& g, int a, int e) {
  int x = Group::identity_index;
  for (int i = 0; i < e; ++i) x = g.mul(x, a);
  return x;
}

inline bool is_abelian(const Group& g) {
  for (int a = 1; a <= g.order; ++a)
    for (int b = a + 1; b <= g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

// Validates the group axioms and fills in the inverse array.
inline Group group_from_table(std::vector<int> table, std::string label = "") {
  const std::size_t sq = table.size();
  int order = static_cast<int>(std::lround(std::sqrt(static_cast<double>(sq))));
  for (; static_cast<std::size_t>(order) * order < sq; ++order) {}
  if (order <= 0 || static_cast<std::size_t>(order) * order != sq)
    throw std::invalid_argument("group table is not square");
  Group g;
  g.order = order;
  g.table = std::move(table);
  g.label = std::move(label);
  for (int v : g.table)
    if (v < 1 || v > order) throw std::invalid_argument("group table entry out of range");
  for (int a = 1; a <= order; ++a)
    if (g.mul(1, a) != a || g.mul(a, 1) != a)
      throw std::invalid_argument("index 1 is not a two-sided identity");
  // Latin square: rows and columns are permutations.
  for (int a = 1; a <= order; ++a) {
    std::vector<char> row(order + 1, 0), col(order + 1, 0);
    for (int b = 1; b <= order; ++b) {
      if (row[g.mul(a, b)]++) throw std::invalid_argument("group table row has a repeat");
      if (col[g.mul(b, a)]++) throw std::invalid_argument("group table column has a repeat");
    }
  }
  for (int a = 1; a <= order; ++a)
    for (int b = 1; b <= order; ++b)
      for (int c = 1; c <= order; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw std::invalid_argument("group table is not associative");
  g.inverse.assign(order, 0);
  for (int a = 1; a <= order; ++a)
    for (int b = 1; b <= order; ++b)
      if (g.mul(a, b) == 1) {
        g.inverse[a - 1] = b;
        break;
      }
  return g;
}

// Cyclic group of order n with elements ordered 1, x, x^2, ...
inline Group cyclic_group(int n, std::string label = "") {
  if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n + 1;
  if (label.empty()) label = "C" + std::to_string(n);
  return group_from_table(std::move(table), std::move(label));
}

// Direct product with pair ordering (a, b) -> (a-1)*|B| + b.
inline Group direct_product(const Group& a, const Group& b) {
  const int n = a.order * b.order;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  auto idx = [&](int x, int y) { return (x - 1) * b.order + y; };
  for (int x1 = 1; x1 <= a.order; ++x1)
    for (int y1 = 1; y1 <= b.order; ++y1)
      for (int x2 = 1; x2 <= a.order; ++x2)
        for (int y2 = 1; y2 <= b.order; ++y2)
          table[static_cast<std::size_t>(idx(x1, y1) - 1) * n + (idx(x2, y2) - 1)] =
              idx(a.mul(x1, x2), b.mul(y1, y2));
  std::string label = a.label.empty() || b.label.empty() ? "" : a.label + " x " + b.label;
  return group_from_table(std::move(table), std::move(label));
}

// Permutation group closure converted to table form. Element order is
// deterministic: identity first, then breadth-first closure levels over the
// generators, each new level sorted by image-sequence lexicographic order.
inline Group group_from_generators(int degree, const std::vector<Permutation>& generators,
                                   int max_order = 200, std::string label = "") {
  if (degree < 1) throw std::invalid_argument("group_from_generators: degree must be positive");
  for (const auto& p : generators)
    if (!is_permutation(p, degree))
      throw std::invalid_argument("group_from_generators: generator is not a permutation of 1..degree");

  std::vector<Permutation> elems{perm_identity(degree)};
  std::map<Permutation, int> index_of{{elems[0], 1}};
  std::vector<int> frontier{1};
  while (!frontier.empty()) {
    std::set<Permutation> fresh;
    for (int xi : frontier)
      for (const auto& gen : generators) {
        Permutation next = perm_compose(elems[xi - 1], gen);
        if (!index_of.count(next)) fresh.insert(std::move(next));
      }
    frontier.clear();
    for (const auto& p : fresh) {
      if (static_cast<int>(elems.size()) >= max_order)
        throw capacity_error("generated group order exceeds limit " + std::to_string(max_order));
      elems.push_back(p);
      index_of.emplace(p, static_cast<int>(elems.size()));
      frontier.push_back(static_cast<int>(elems.size()));
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      table[static_cast<std::size_t>(a - 1) * n + (b - 1)] =
          index_of.at(perm_compose(elems[a - 1], elems[b - 1]));
  return group_from_table(std::move(table), std::move(label));
}

struct Subgroup {
  std::vector<int> members;  // strictly increasing, contains 1
  int size() const { return static_cast<int>(members.size()); }
  bool contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }
};

inline Subgroup trivial_subgroup() { return Subgroup{{1}}; }

inline Subgroup whole_group(const Group& g) {
  Subgroup s;
  s.members.resize(g.order);
  std::iota(s.members.begin(), s.members.end(), 1);
  return s;
}

inline bool is_subgroup(const Group& g, const std::vector<int>& members) {
  if (members.empty() || members[0] != 1) return false;
  std::vector<char> in(g.order + 1, 0);
  for (int m : members) {
    if (m < 1 || m > g.order || in[m]) return false;
    in[m] = 1;
  }
  for (int a : members)
    for (int b : members)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

inline bool is_normal(const Group& g, const Subgroup& n) {
  std::vector<char> in(g.order + 1, 0);
  for (int m : n.members) in[m] = 1;
  for (int x = 1; x <= g.order; ++x)
    for (int m : n.members)
      if (!in[g.conj(x, m)]) return false;
  return true;
}

// Closure of a set of elements under multiplication (finite, so inverses come
// for free).
inline std::vector<int> subgroup_closure(const Group& g, const std::vector<int>& seed) {
  std::vector<char> in(g.order + 1, 0);
  std::vector<int> elems{1};
  in[1] = 1;
  std::vector<int> work;
  for (int s : seed)
    if (!in[s]) {
      in[s] = 1;
      elems.push_back(s);
      work.push_back(s);
    }
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    // multiply against everything known so far, both sides
    for (std::size_t i = 0; i < elems.size(); ++i) {
      int y = elems[i];
      for (int p : {g.mul(x, y), g.mul(y, x)})
        if (!in[p]) {
          in[p] = 1;
          elems.push_back(p);
          work.push_back(p);
        }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

// All subgroups, built by closing the cyclic subgroups under pairwise join.
inline std::vector<Subgroup> all_subgroups(const Group& g) {
  std::set<std::vector<int>> atoms;
  for (int x = 1; x <= g.order; ++x) atoms.insert(subgroup_closure(g, {x}));
  std::set<std::vector<int>> found(atoms.begin(), atoms.end());
  std::vector<std::vector<int>> work(found.begin(), found.end());
  while (!work.empty()) {
    std::vector<int> h = std::move(work.back());
    work.pop_back();
    for (const auto& a : atoms) {
      if (std::includes(h.begin(), h.end(), a.begin(), a.end())) continue;
      std::vector<int> seed = h;
      seed.insert(seed.end(), a.begin(), a.end());
      auto j = subgroup_closure(g, seed);
      if (found.insert(j).second) work.push_back(std::move(j));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back(Subgroup{m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

// All normal subgroups, sorted by (size, members lexicographic). Includes the
// trivial subgroup and the whole group.
inline std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(g))
    if (is_normal(g, s)) out.push_back(std::move(s));
  return out;
}

struct NormalChain {
  std::vector<Subgroup> terms;  // descending: terms.front() = G, terms.back() = {1}
};

// Descending chain of normal subgroups from G to {1}. Built bottom-up: the
// last nontrivial term is the smallest nontrivial normal subgroup, and every
// further step picks the smallest normal subgroup strictly containing the
// previous one (ties by members-lexicographic order).
inline NormalChain refinement_chain(const Group& g) {
  auto subs = normal_subgroups(g);  // already (size, lex) sorted
  std::vector<Subgroup> ascending{trivial_subgroup()};
  while (ascending.back().size() < g.order) {
    const auto& cur = ascending.back().members;
    const Subgroup* next = nullptr;
    for (const auto& s : subs) {
      if (s.size() <= static_cast<int>(cur.size())) continue;
      if (std::includes(s.members.begin(), s.members.end(), cur.begin(), cur.end())) {
        next = &s;  // first hit is minimal by the sort order
        break;
      }
    }
    ascending.push_back(*next);
  }
  NormalChain chain;
  chain.terms.assign(ascending.rbegin(), ascending.rend());
  return chain;
}

struct QuotientMap {
  Group source;
  Subgroup kernel;
  Group quotient;
  std::vector<int> coset_of;  // length source.order, values in 1..quotient.order

  int project(int x) const { return coset_of[x - 1]; }
};

// Natural projection G -> G/N. Coset indices are assigned in order of the
// smallest source element each coset contains, which puts the kernel coset at
// index 1.
inline QuotientMap quotient(const Group& g, const Subgroup& n) {
  if (!is_subgroup(g, n.members) || !is_normal(g, n))
    throw std::invalid_argument("quotient: subgroup is not normal in the group");
  std::vector<int> min_of(g.order + 1, 0);  // element -> min of its coset
  for (int a = 1; a <= g.order; ++a) {
    if (min_of[a]) continue;
    std::vector<int> coset;
    coset.reserve(n.members.size());
    for (int m : n.members) coset.push_back(g.mul(a, m));
    int least = *std::min_element(coset.begin(), coset.end());
    for (int c : coset) min_of[c] = least;
  }
  std::vector<int> reps;
  for (int a = 1; a <= g.order; ++a)
    if (min_of[a] == a) reps.push_back(a);
  std::sort(reps.begin(), reps.end());
  std::vector<int> index_of_rep(g.order + 1, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) index_of_rep[reps[i]] = static_cast<int>(i) + 1;

  QuotientMap q;
  q.source = g;
  q.kernel = n;
  q.coset_of.resize(g.order);
  for (int a = 1; a <= g.order; ++a) q.coset_of[a - 1] = index_of_rep[min_of[a]];

  const int m = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] = q.coset_of[g.mul(reps[i], reps[j]) - 1];
  std::string label = g.label.empty() ? "" : g.label + "/N" + std::to_string(n.size());
  q.quotient = group_from_table(std::move(table), std::move(label));
  return q;
}

// Members of each coset, indexed by quotient element (1-based outer index).
inline std::vector<std::vector<int>> coset_members(const QuotientMap& q) {
  std::vector<std::vector<int>> cosets(q.quotient.order);
  for (int a = 1; a <= q.source.order; ++a) cosets[q.coset_of[a - 1] - 1].push_back(a);
  return cosets;
}

}  // namespace difsets
