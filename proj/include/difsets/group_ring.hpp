#pragma once

// Integer group-ring arithmetic over a finite group: convolution profiles,
// difference-set and difference-sum predicates, translations, automorphism
// images, complements and equivalence tests. Coefficient vectors are plain
// std::vector<int> indexed by group element (0-based storage, 1-based
// elements); sets are strictly increasing index lists.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "difsets/automorphisms.hpp"
#include "difsets/group.hpp"

namespace difsets {

struct Parameters {
  int v = 0;
  int k = 0;
  int lambda = 0;
  bool operator==(const Parameters& o) const {
    return v == o.v && k == o.k && lambda == o.lambda;
  }
};

// lambda = k(k-1)/(v-1) when integral.
inline std::optional<int> lambda_for(int v, int k) {
  if (v <= 1) return k <= 1 ? std::optional<int>(0) : std::nullopt;
  long long num = static_cast<long long>(k) * (k - 1);
  if (num % (v - 1) != 0) return std::nullopt;
  return static_cast<int>(num / (v - 1));
}

// The product A * A^(-1): P[g] = number of ways g = a * b^-1 weighted by
// coefficients. Direct O(v^2) table scan; v < 100 here so nothing fancier is
// warranted.
inline std::vector<int> difference_profile(const Group& g, const std::vector<int>& coeffs) {
  if (static_cast<int>(coeffs.size()) != g.order)
    throw std::invalid_argument("difference_profile: coefficient length mismatch");
  std::vector<int> profile(g.order, 0);
  for (int a = 1; a <= g.order; ++a) {
    if (coeffs[a - 1] == 0) continue;
    for (int b = 1; b <= g.order; ++b) {
      if (coeffs[b - 1] == 0) continue;
      profile[g.mul(a, g.inv(b)) - 1] += coeffs[a - 1] * coeffs[b - 1];
    }
  }
  return profile;
}

inline std::vector<int> indicator_vector(const Group& g, const std::vector<int>& indices) {
  std::vector<int> coeffs(g.order, 0);
  for (int i : indices) {
    if (i < 1 || i > g.order) throw std::invalid_argument("element index out of range");
    coeffs[i - 1] = 1;
  }
  return coeffs;
}

// O(k^2) profile for a sparse {0,1} set given as an index list.
inline std::vector<int> difference_profile_set(const Group& g, const std::vector<int>& indices) {
  std::vector<int> profile(g.order, 0);
  for (int a : indices)
    for (int b : indices) profile[g.mul(a, g.inv(b)) - 1] += 1;
  return profile;
}

// Returns (v, k, lambda) when the index list is a difference set, nullopt
// otherwise.
inline std::optional<Parameters> difference_set_parameters(const Group& g,
                                                           const std::vector<int>& indices) {
  const int v = g.order;
  const int k = static_cast<int>(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > v) return std::nullopt;
    if (i > 0 && indices[i] <= indices[i - 1]) return std::nullopt;
  }
  auto lam = lambda_for(v, k);
  if (!lam) return std::nullopt;
  auto profile = difference_profile_set(g, indices);
  if (profile[0] != k) return std::nullopt;  // repeated index would break this
  for (int x = 2; x <= v; ++x)
    if (profile[x - 1] != *lam) return std::nullopt;
  return Parameters{v, k, *lam};
}

inline bool is_difference_set(const Group& g, const std::vector<int>& indices) {
  return difference_set_parameters(g, indices).has_value();
}

// Difference-sum predicate over a quotient: coefficients in 0..|N|, total k
// with integral lambda, and profile (k - lambda) at the identity plus
// lambda*|N| everywhere.
inline bool is_difference_sum(const QuotientMap& q, const std::vector<int>& coeffs) {
  if (static_cast<int>(coeffs.size()) != q.quotient.order) return false;
  const int w = q.kernel.size();
  int k = 0;
  for (int c : coeffs) {
    if (c < 0 || c > w) return false;
    k += c;
  }
  auto lam = lambda_for(q.source.order, k);
  if (!lam) return false;
  auto profile = difference_profile(q.quotient, coeffs);
  if (profile[0] != k - *lam + *lam * w) return false;
  for (int x = 2; x <= q.quotient.order; ++x)
    if (profile[x - 1] != *lam * w) return false;
  return true;
}

// g*A as a coefficient vector: coefficient of g*d is A[d].
inline std::vector<int> translate(const Group& g, const std::vector<int>& coeffs, int t) {
  std::vector<int> out(g.order);
  for (int d = 1; d <= g.order; ++d) out[g.mul(t, d) - 1] = coeffs[d - 1];
  return out;
}

// A^phi as a coefficient vector: coefficient of phi(d) is A[d].
inline std::vector<int> apply_automorphism(const Group& g, const std::vector<int>& coeffs,
                                           const Automorphism& phi) {
  std::vector<int> out(g.order);
  for (int d = 1; d <= g.order; ++d) out[phi[d - 1] - 1] = coeffs[d - 1];
  return out;
}

// Sorted image of a set under left translation.
inline std::vector<int> translate_set(const Group& g, const std::vector<int>& indices, int t) {
  std::vector<int> out;
  out.reserve(indices.size());
  for (int d : indices) out.push_back(g.mul(t, d));
  std::sort(out.begin(), out.end());
  return out;
}

// Sorted image of a set under an automorphism.
inline std::vector<int> apply_automorphism_set(const std::vector<int>& indices,
                                               const Automorphism& phi) {
  std::vector<int> out;
  out.reserve(indices.size());
  for (int d : indices) out.push_back(phi[d - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

// Complement of a difference set; parameters become (v, v-k, lambda+v-2k).
inline std::vector<int> complement_set(const Group& g, const std::vector<int>& indices) {
  if (!is_difference_set(g, indices))
    throw std::invalid_argument("complement_set: input is not a difference set");
  std::vector<char> in(g.order + 1, 0);
  for (int i : indices) in[i] = 1;
  std::vector<int> out;
  out.reserve(g.order - indices.size());
  for (int a = 1; a <= g.order; ++a)
    if (!in[a]) out.push_back(a);
  return out;
}

// Pushforward of a set through a quotient map: coefficient of a coset is the
// number of set elements it contains (Lemma-style induced difference sum).
inline std::vector<int> induced_sum(const QuotientMap& q, const std::vector<int>& indices) {
  std::vector<int> coeffs(q.quotient.order, 0);
  for (int i : indices) ++coeffs[q.project(i) - 1];
  return coeffs;
}

// Pushforward of a coefficient vector over fine.quotient through the natural
// projection fine.quotient -> coarse.quotient (kernels nested: coarse kernel
// contains fine kernel).
inline std::vector<int> project_between(const QuotientMap& fine, const QuotientMap& coarse,
                                        const std::vector<int>& coeffs) {
  for (int m : fine.kernel.members)
    if (!coarse.kernel.contains(m))
      throw std::invalid_argument("project_between: kernels are not nested");
  // map each fine coset to the coarse coset of any preimage
  std::vector<int> to_coarse(fine.quotient.order, 0);
  for (int a = 1; a <= fine.source.order; ++a) to_coarse[fine.project(a) - 1] = coarse.project(a);
  std::vector<int> out(coarse.quotient.order, 0);
  for (int j = 1; j <= fine.quotient.order; ++j) out[to_coarse[j - 1] - 1] += coeffs[j - 1];
  return out;
}

// Orbit test for Def-2.2 equivalence: D1 = g * phi(D2) for some g, phi.
inline bool is_equivalent_difference_set(const Group& g, const AutomorphismGroup& aut,
                                         const std::vector<int>& d1, const std::vector<int>& d2) {
  if (d1.size() != d2.size()) return false;
  for (const auto& phi : aut.elements) {
    auto image = apply_automorphism_set(d2, phi);
    for (int t = 1; t <= g.order; ++t)
      if (translate_set(g, image, t) == d1) return true;
  }
  return false;
}

inline bool is_equivalent_difference_set(const Group& g, const std::vector<int>& d1,
                                         const std::vector<int>& d2) {
  return is_equivalent_difference_set(g, automorphism_group(g), d1, d2);
}

// Orbit test for difference-sum equivalence: quotient translation combined
// with an automorphism induced from the source group.
inline bool is_equivalent_difference_sum(const QuotientMap& q, const AutomorphismGroup& aut_g,
                                         const std::vector<int>& s1, const std::vector<int>& s2) {
  for (const auto& psi : induced_automorphisms(aut_g, q)) {
    auto image = apply_automorphism(q.quotient, s2, psi);
    for (int t = 1; t <= q.quotient.order; ++t)
      if (translate(q.quotient, image, t) == s1) return true;
  }
  return false;
}

}  // namespace difsets
