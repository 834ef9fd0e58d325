#pragma once

// The refinement pipeline: difference sums are refined level by level down a
// chain of normal subgroups, equivalent sums are discarded at each level, and
// difference sets are enumerated from the sums at the last nontrivial level.
// A subset-scan oracle doubles as an independent check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "difsets/automorphisms.hpp"
#include "difsets/errors.hpp"
#include "difsets/group.hpp"
#include "difsets/group_ring.hpp"
#include "difsets/parameters.hpp"

namespace difsets {
namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using VectorSet = std::unordered_set<std::vector<int>, VectorHash>;

// Runs fn(i) for i in [0, n) across the requested number of threads. Results
// are whatever fn writes into its own slot, so the output order never depends
// on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const int workers = static_cast<int>(std::min<std::size_t>(jobs, n));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

// Backtracking enumeration of the refinements of one difference sum. Shared
// by refine_sums (one slot per fine coset) with entries bounded by the fine
// kernel size and an exact running convolution profile.
class SumRefiner {
public:
  SumRefiner(const Group& fine_q, int kernel_size, int k, int lambda,
             const std::vector<int>& block_of, const std::vector<int>& block_target)
      : q_(fine_q),
        w_(kernel_size),
        k_(k),
        block_of_(block_of),
        block_sum_(block_target.size(), 0),
        block_left_(block_target.size(), 0),
        block_target_(block_target),
        coeffs_(fine_q.order, 0),
        profile_(fine_q.order, 0) {
    id_target_ = k - lambda + lambda * kernel_size;
    off_target_ = lambda * kernel_size;
    for (int j = 0; j < q_.order; ++j) ++block_left_[block_of_[j]];
  }

  std::vector<std::vector<int>> run() {
    out_.clear();
    descend(0);
    return std::move(out_);
  }

private:
  int target_at(int pos) const { return pos == 0 ? id_target_ : off_target_; }

  bool place(int pos, int value) {
    if (value == 0) return true;  // coeffs_[pos] is already 0
    // profile gains value*coeffs[i] at both ordered differences with every
    // earlier slot, plus value^2 at the identity.
    profile_[0] += value * value;
    if (profile_[0] > id_target_) {
      profile_[0] -= value * value;
      return false;
    }
    for (int i = 0; i < pos; ++i) {
      if (coeffs_[i] == 0) continue;
      const int prod = value * coeffs_[i];
      const int d1 = q_.mul(pos + 1, q_.inv(i + 1)) - 1;
      const int d2 = q_.mul(i + 1, q_.inv(pos + 1)) - 1;
      profile_[d1] += prod;
      profile_[d2] += prod;
      if (profile_[d1] > target_at(d1) || profile_[d2] > target_at(d2)) {
        profile_[d1] -= prod;
        profile_[d2] -= prod;
        unplace_upto(pos, value, i);
        return false;
      }
    }
    coeffs_[pos] = value;
    return true;
  }

  void unplace_upto(int pos, int value, int upto) {
    for (int i = 0; i < upto; ++i) {
      if (coeffs_[i] == 0) continue;
      const int prod = value * coeffs_[i];
      profile_[q_.mul(pos + 1, q_.inv(i + 1)) - 1] -= prod;
      profile_[q_.mul(i + 1, q_.inv(pos + 1)) - 1] -= prod;
    }
    profile_[0] -= value * value;
  }

  void unplace(int pos) {
    const int value = coeffs_[pos];
    coeffs_[pos] = 0;
    unplace_upto(pos, value, pos);
  }

  void descend(int pos) {
    if (pos == q_.order) {
      for (int i = 0; i < q_.order; ++i)
        if (profile_[i] != target_at(i)) return;
      out_.push_back(coeffs_);
      return;
    }
    const int block = block_of_[pos];
    const int remaining = block_target_[block] - block_sum_[block];
    const int slots_after = block_left_[block] - 1;
    const int low = std::max(0, remaining - slots_after * w_);
    const int high = std::min(w_, remaining);
    --block_left_[block];
    for (int value = low; value <= high; ++value) {
      if (!place(pos, value)) continue;
      block_sum_[block] += value;
      descend(pos + 1);
      block_sum_[block] -= value;
      unplace(pos);
    }
    ++block_left_[block];
  }

  const Group& q_;
  int w_, k_, id_target_, off_target_;
  std::vector<int> block_of_;  // 0-based fine coset -> 0-based coarse coset
  std::vector<int> block_sum_, block_left_, block_target_;
  std::vector<int> coeffs_, profile_;
  std::vector<std::vector<int>> out_;
};

// Backtracking enumeration of the difference sets refining one sum at the
// last chain level: per coset, choose coefficient-many elements, pruning on
// the running convolution profile over the source group.
class SetRefiner {
public:
  SetRefiner(const QuotientMap& q, const std::vector<int>& sum, const Parameters& p,
             bool require_identity)
      : g_(q.source), lambda_(p.lambda), profile_(q.source.order, 0) {
    auto cosets = coset_members(q);
    for (int j = 0; j < q.quotient.order; ++j) {
      if (sum[j] == 0) continue;
      slots_.push_back({cosets[j], sum[j]});
    }
    force_identity_ = require_identity;
  }

  std::vector<std::vector<int>> run() {
    out_.clear();
    chosen_.clear();
    if (force_identity_) {
      // identity lives in the kernel coset, whose slot (if any) is first
      if (!slots_.empty() && !slots_[0].elements.empty() && slots_[0].elements[0] == 1) {
        add_element(1);
        int needed = slots_[0].quota - 1;
        choose(0, 1, needed);
        remove_element(1);
      }
      return std::move(out_);
    }
    if (!slots_.empty())
      choose(0, 0, slots_[0].quota);
    else
      emit();
    return std::move(out_);
  }

private:
  struct Slot {
    std::vector<int> elements;
    int quota;
  };

  void emit() {
    for (int x = 2; x <= g_.order; ++x)
      if (profile_[x - 1] != lambda_) return;
    auto set = chosen_;
    std::sort(set.begin(), set.end());
    out_.push_back(std::move(set));
  }

  bool add_element(int e) {
    for (int t : chosen_) {
      const int d1 = g_.mul(e, g_.inv(t)) - 1;
      const int d2 = g_.mul(t, g_.inv(e)) - 1;
      ++profile_[d1];
      ++profile_[d2];
      if (profile_[d1] > lambda_ || profile_[d2] > lambda_) {
        --profile_[d1];
        --profile_[d2];
        rollback(e, t);
        return false;
      }
    }
    chosen_.push_back(e);
    return true;
  }

  void rollback(int e, int upto) {
    for (int t : chosen_) {
      if (t == upto) break;
      --profile_[g_.mul(e, g_.inv(t)) - 1];
      --profile_[g_.mul(t, g_.inv(e)) - 1];
    }
  }

  void remove_element(int e) {
    chosen_.pop_back();
    for (int t : chosen_) {
      --profile_[g_.mul(e, g_.inv(t)) - 1];
      --profile_[g_.mul(t, g_.inv(e)) - 1];
    }
  }

  // choose `needed` more elements for slot si, starting at element position ei
  void choose(std::size_t si, std::size_t ei, int needed) {
    if (needed == 0) {
      if (si + 1 == slots_.size()) {
        emit();
        return;
      }
      choose(si + 1, 0, slots_[si + 1].quota);
      return;
    }
    const auto& elems = slots_[si].elements;
    for (std::size_t i = ei; i + needed <= elems.size(); ++i) {
      if (!add_element(elems[i])) continue;
      choose(si, i + 1, needed - 1);
      remove_element(elems[i]);
    }
  }

  const Group& g_;
  int lambda_;
  bool force_identity_ = false;
  std::vector<Slot> slots_;
  std::vector<int> chosen_, profile_;
  std::vector<std::vector<int>> out_;
};

}  // namespace detail

// All difference sums over fine.quotient that push forward to one of the
// given sums over coarse.quotient. Requires coarse.kernel to contain
// fine.kernel. Output is sorted lexicographically.
inline std::vector<std::vector<int>> refine_sums(const QuotientMap& coarse,
                                                 const QuotientMap& fine,
                                                 const std::vector<std::vector<int>>& sums,
                                                 int jobs = 1) {
  for (int m : fine.kernel.members)
    if (!coarse.kernel.contains(m))
      throw std::invalid_argument("refine_sums: coarse kernel does not contain fine kernel");
  const int v = coarse.source.order;
  std::vector<int> block_of(fine.quotient.order, 0);  // 0-based
  for (int a = 1; a <= fine.source.order; ++a)
    block_of[fine.project(a) - 1] = coarse.project(a) - 1;

  std::vector<std::vector<std::vector<int>>> partial(sums.size());
  detail::parallel_for(sums.size(), jobs, [&](std::size_t i) {
    const auto& s = sums[i];
    int k = std::accumulate(s.begin(), s.end(), 0);
    auto lam = lambda_for(v, k);
    if (!lam) return;  // invalid input sum refines to nothing
    detail::SumRefiner refiner(fine.quotient, fine.kernel.size(), k, *lam, block_of, s);
    partial[i] = refiner.run();
  });
  std::vector<std::vector<int>> out;
  for (auto& part : partial)
    for (auto& s : part) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Canonical representative of a sum's equivalence orbit: maximal identity
// coefficient, ties broken by the lexicographically smallest vector.
inline std::vector<int> canonical_sum(const Group& q, const std::vector<Automorphism>& induced,
                                      const std::vector<int>& sum) {
  std::vector<int> best;
  for (const auto& psi : induced) {
    auto image = apply_automorphism(q, sum, psi);
    for (int t = 1; t <= q.order; ++t) {
      auto cand = translate(q, image, t);
      if (best.empty() || cand[0] > best[0] || (cand[0] == best[0] && cand < best))
        best = std::move(cand);
    }
  }
  return best;
}

}  // namespace detail

// One representative per equivalence class of difference sums, sorted.
inline std::vector<std::vector<int>> equivalence_free_sums(
    const QuotientMap& q, const AutomorphismGroup& aut_g,
    const std::vector<std::vector<int>>& sums) {
  const auto induced = induced_automorphisms(aut_g, q);
  detail::VectorSet seen;
  std::vector<std::vector<int>> out;
  for (const auto& s : sums) {
    auto rep = detail::canonical_sum(q.quotient, induced, s);
    if (seen.insert(rep).second) out.push_back(std::move(rep));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All difference sets whose induced sum at the last chain level is one of the
// given sums. With require_identity set (the default used by the pipeline)
// only sets containing element 1 are produced; every difference set inducing
// such a sum has a kernel translate that contains the identity and induces
// the same sum, so no equivalence class is lost.
inline std::vector<std::vector<int>> refine_sets(const QuotientMap& q,
                                                 const std::vector<std::vector<int>>& sums,
                                                 bool require_identity, const Parameters& p,
                                                 int jobs = 1) {
  if (require_identity)
    for (const auto& s : sums)
      if (!s.empty() && s[0] < 1)
        throw std::invalid_argument(
            "refine_sets: sum has identity-coset coefficient 0 but the identity optimization is on");
  std::vector<std::vector<std::vector<int>>> partial(sums.size());
  detail::parallel_for(sums.size(), jobs, [&](std::size_t i) {
    detail::SetRefiner refiner(q, sums[i], p, require_identity);
    auto found = refiner.run();
    for (auto& set : found)
      if (difference_set_parameters(q.source, set)) partial[i].push_back(std::move(set));
  });
  std::vector<std::vector<int>> out;
  for (auto& part : partial)
    for (auto& s : part) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

// Lexicographically smallest sorted image of the set under all (g, phi)
// moves. Idempotent and constant on orbits. Full orbit scan; fine at
// |G| * |Aut(G)| up to about 10^6.
inline std::vector<int> smallest_image(const Group& g, const AutomorphismGroup& aut,
                                       const std::vector<int>& set) {
  if (set.empty()) return {};
  std::vector<int> best;
  for (const auto& phi : aut.elements) {
    auto image = apply_automorphism_set(set, phi);
    for (int t = 1; t <= g.order; ++t) {
      auto cand = translate_set(g, image, t);
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

// One canonical representative per equivalence class of difference sets,
// sorted. Implemented as an orbit sweep: each class is enumerated once and
// its minimum kept, which matches mapping every set through smallest_image.
inline std::vector<std::vector<int>> equivalence_free_sets(const Group& g,
                                                           const AutomorphismGroup& aut,
                                                           const std::vector<std::vector<int>>& sets) {
  detail::VectorSet swept;
  std::vector<std::vector<int>> out;
  for (const auto& d : sets) {
    if (swept.count(d)) continue;
    std::vector<int> best;
    for (const auto& phi : aut.elements) {
      auto image = apply_automorphism_set(d, phi);
      for (int t = 1; t <= g.order; ++t) {
        auto cand = translate_set(g, image, t);
        if (best.empty() || cand < best) best = cand;
        swept.insert(std::move(cand));
      }
    }
    out.push_back(std::move(best));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct EnumerationOptions {
  bool use_brc = true;        // apply the BRC filter in possible_sizes
  bool identity_opt = true;   // restrict the last level to identity-containing sets
  bool sum_dedupe = true;     // eliminate equivalent sums between levels
  int jobs = 1;
  long long aut_cap = 10'000'000;
};

struct LevelTrace {
  int quotient_order = 0;
  std::size_t refined = 0;  // sums produced by refinement at this level
  std::size_t kept = 0;     // sums surviving equivalence elimination
};

struct ParameterTrace {
  Parameters params;
  std::vector<LevelTrace> levels;
  std::size_t sets_enumerated = 0;
  std::size_t classes = 0;
};

struct EnumerationTrace {
  std::vector<ParameterTrace> per_k;
};

// The full pipeline: for each admissible k, refine the size-k sum down the
// refinement chain with equivalence elimination at every level, enumerate
// sets at the last nontrivial level, and canonicalize. Output is sorted by
// (k, lexicographic); one-element sets and complements are never produced.
inline std::vector<std::vector<int>> difference_sets(const Group& g,
                                                     const EnumerationOptions& opts = {},
                                                     EnumerationTrace* trace = nullptr) {
  auto params = possible_sizes(g.order, opts.use_brc);
  if (params.empty()) return {};
  const auto aut = automorphism_group(g, opts.aut_cap);
  const auto chain = refinement_chain(g);
  const std::size_t r = chain.terms.size();
  std::vector<QuotientMap> level;
  level.reserve(r);
  for (const auto& n : chain.terms) level.push_back(quotient(g, n));

  std::vector<std::vector<int>> out;
  for (const auto& p : params) {
    ParameterTrace pt;
    pt.params = p;
    std::vector<std::vector<int>> sums{{p.k}};
    for (std::size_t i = 0; i + 2 < r; ++i) {
      sums = refine_sums(level[i], level[i + 1], sums, opts.jobs);
      LevelTrace lt;
      lt.quotient_order = level[i + 1].quotient.order;
      lt.refined = sums.size();
      if (opts.sum_dedupe) sums = equivalence_free_sums(level[i + 1], aut, sums);
      lt.kept = sums.size();
      pt.levels.push_back(lt);
    }
    if (opts.identity_opt) {
      // A sum with identity-coset coefficient 0 has no identity-containing
      // preimage; its classes are covered by the translated sums that is
      // always present whenever dedupe kept this one. Only reachable with
      // sum_dedupe off, since canonical representatives maximize the
      // identity coefficient.
      std::erase_if(sums, [](const std::vector<int>& s) { return s[0] < 1; });
    }
    auto sets = refine_sets(level[r - 2], sums, opts.identity_opt, p, opts.jobs);
    pt.sets_enumerated = sets.size();
    auto classes = equivalence_free_sets(g, aut, sets);
    pt.classes = classes.size();
    for (auto& d : classes) out.push_back(std::move(d));
    if (trace) trace->per_k.push_back(std::move(pt));
  }
  return out;  // params ascend in k and each class list is sorted
}

namespace detail {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > (1ll << 61) / (n - k + i)) return 1ll << 61;  // saturate before overflow
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace detail

// Definition-driven oracle: scan every k-subset for every k satisfying the
// counting relation (no BRC filter, so the oracle stays independent of it),
// then partition the difference sets found into (g, phi)-orbits and keep each
// orbit's smallest image.
inline std::vector<std::vector<int>> brute_force_difference_sets(const Group& g,
                                                                 long long subset_cap = 10'000'000,
                                                                 long long aut_cap = 10'000'000) {
  const int v = g.order;
  std::vector<int> ks;
  for (int k = 2; 2 * k < v; ++k) {
    auto lam = lambda_for(v, k);
    if (!lam || *lam < 1) continue;
    if (detail::binomial(v, k) > subset_cap)
      throw capacity_error("brute_force_difference_sets: C(" + std::to_string(v) + "," +
                           std::to_string(k) + ") exceeds the subset cap");
    ks.push_back(k);
  }
  if (ks.empty()) return {};
  const auto aut = automorphism_group(g, aut_cap);

  std::vector<std::vector<int>> out;
  for (int k : ks) {
    std::vector<std::vector<int>> survivors;
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 1);
    while (true) {
      if (is_difference_set(g, comb)) survivors.push_back(comb);
      int i = k - 1;
      while (i >= 0 && comb[i] == v - (k - 1 - i)) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    for (auto& d : equivalence_free_sets(g, aut, survivors)) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace difsets
