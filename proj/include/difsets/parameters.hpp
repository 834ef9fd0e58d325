#pragma once

// Admissible (v, k, lambda) parameter triples for a given group order.
// Candidates must satisfy the counting relation k(k-1) = lambda(v-1) and the
// Bruck-Ryser-Chowla conditions for symmetric designs. Trivial sets and the
// larger member of each complementary pair are excluded, so 1 < k < v/2.

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "difsets/group_ring.hpp"

namespace difsets {
namespace detail {

inline long long squarefree_part(long long n) {
  long long sign = n < 0 ? -1 : 1;
  n = std::abs(n);
  long long out = 1;
  for (long long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * n;
}

inline std::vector<long long> prime_factors(long long n) {
  n = std::abs(n);
  std::vector<long long> ps;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline long long mod_pow(long long base, long long exp, long long mod) {
  long long r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

inline int legendre(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long long r = mod_pow(a, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

// Hilbert symbol (a, b)_p for nonzero integers; p = -1 denotes the infinite
// place. Standard closed forms (Serre, A Course in Arithmetic, III.1).
inline int hilbert_symbol(long long a, long long b, long long p) {
  if (p == -1) return (a < 0 && b < 0) ? -1 : 1;
  int alpha = 0, beta = 0;
  while (a % p == 0) {
    a /= p;
    ++alpha;
  }
  while (b % p == 0) {
    b /= p;
    ++beta;
  }
  if (p == 2) {
    auto eps = [](long long u) { return ((u % 8 + 8) % 8) % 4 == 3 ? 1 : 0; };   // (u-1)/2 mod 2
    auto omega = [](long long u) {
      long long m = (u % 8 + 8) % 8;
      return (m == 3 || m == 5) ? 1 : 0;  // (u^2-1)/8 mod 2
    };
    int e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
    return e % 2 ? -1 : 1;
  }
  int e = ((p - 1) / 2 % 2) * alpha * beta;
  int sym = e % 2 ? -1 : 1;
  if (beta % 2) sym *= legendre(a, p);
  if (alpha % 2) sym *= legendre(b, p);
  return sym;
}

// Does z^2 = a x^2 + b y^2 have a nontrivial rational (equivalently integer)
// solution? The ternary form <1, -a, -b> is isotropic iff the Hilbert symbol
// (a, b)_p is 1 at every place; only p = 2, p = infinity and the primes
// dividing ab can fail.
inline bool ternary_solvable(long long a, long long b) {
  a = squarefree_part(a);
  b = squarefree_part(b);
  if (a == 1 || b == 1) return true;
  if (hilbert_symbol(a, b, -1) != 1) return false;
  if (hilbert_symbol(a, b, 2) != 1) return false;
  for (long long p : prime_factors(a * b))
    if (p != 2 && hilbert_symbol(a, b, p) != 1) return false;
  return true;
}

}  // namespace detail

// Bruck-Ryser-Chowla admissibility. Even v: k - lambda must be a perfect
// square. Odd v: z^2 = (k-lambda) x^2 + (-1)^((v-1)/2) lambda y^2 must have a
// nontrivial integer solution. The filter only ever prunes; anything it
// cannot decide is admitted.
inline bool brc_admissible(const Parameters& p) {
  const long long n = p.k - p.lambda;
  if (p.v % 2 == 0) {
    long long r = 0;
    while (r * r < n) ++r;
    return r * r == n;
  }
  if (n <= 0 || p.lambda <= 0) return true;  // outside the theorem's reach; keep
  long long sign = ((p.v - 1) / 2) % 2 == 0 ? 1 : -1;
  return detail::ternary_solvable(n, sign * p.lambda);
}

// All admissible (v, k, lambda) with 1 < k < v/2, sorted by k.
inline std::vector<Parameters> possible_sizes(int v, bool use_brc = true) {
  std::vector<Parameters> out;
  for (int k = 2; 2 * k < v; ++k) {
    auto lam = lambda_for(v, k);
    if (!lam || *lam < 1) continue;
    Parameters p{v, k, *lam};
    if (use_brc && !brc_admissible(p)) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace difsets
