// Independent brute-force references used only by the tests. Nothing here
// calls the matching engine or the residue helpers of the library.
#ifndef HYPERLOW_TESTS_ORACLES_HPP
#define HYPERLOW_TESTS_ORACLES_HPP

#include <functional>
#include <vector>

#include "hyperlow/combinatorics.hpp"
#include "hyperlow/criteria.hpp"
#include "hyperlow/matching.hpp"

namespace oracle {

using hyperlow::Tuple;

inline int mod(long v, int p) { return static_cast<int>(((v % p) + p) % p); }

// Exhaustive search for an injection a -> b with ok(a, b).
inline bool injection_exists(const std::vector<Tuple>& A, const std::vector<Tuple>& B,
                             const std::function<bool(const Tuple&, const Tuple&)>& ok) {
  std::vector<char> used(B.size(), 0);
  std::function<bool(size_t)> rec = [&](size_t k) {
    if (k == A.size()) return true;
    for (size_t v = 0; v < B.size(); ++v) {
      if (used[v] || !ok(A[k], B[v])) continue;
      used[v] = 1;
      if (rec(k + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return rec(0);
}

struct Pair {
  int t;
  int s;
};

// Visit every injective map M -> pairs with admissible(m, pair). Stops early
// when visit returns true.
inline bool any_injection(const std::vector<int>& M, const std::vector<Pair>& pairs,
                          const std::function<bool(int, const Pair&)>& admissible,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> image(M.size(), -1);
  std::vector<char> used(pairs.size(), 0);
  std::function<bool(size_t)> rec = [&](size_t k) {
    if (k == M.size()) return visit(image);
    for (size_t v = 0; v < pairs.size(); ++v) {
      if (used[v] || !admissible(M[k], pairs[v])) continue;
      used[v] = 1;
      image[k] = static_cast<int>(v);
      if (rec(k + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return rec(0);
}

// The decision conditions read literally, with residues computed from the
// weights directly.
inline bool criterion_literal(const hyperlow::CriterionQuery& q) {
  const auto& lam = q.ctx.lambda.entries();
  const auto& mu = q.ctx.mu.entries();
  const int p = q.ctx.p, n = static_cast<int>(lam.size());
  const int i = q.i, j = q.j, d = q.d;
  auto L = [&](int k) { return lam[k - 1]; };
  auto U = [&](int k) { return mu[k - 1]; };
  std::vector<Pair> pairs;
  for (int t = i; t < j; ++t) {
    for (int s = 1; s <= d; ++s) pairs.push_back({t, s});
  }
  // Residue of t - a + mu_a - (mu or lambda)_{t+1}, choosing mu when k <= t.
  auto b_res = [&](int a, int t, int k) {
    int next = k <= t ? U(t + 1) : L(t + 1);
    return mod(t - a + U(a) - next, p);
  };
  auto congruent = [&](int a, const Pair& x, int k) {
    return b_res(a, x.t, k) == mod(d - x.s, p);
  };
  auto is_used = [&](const std::vector<int>& image, size_t v) {
    for (int w : image) {
      if (w == static_cast<int>(v)) return true;
    }
    return false;
  };
  if (j == n) {
    return any_injection(
        q.M, pairs,
        [&](int m, const Pair& x) { return x.t >= m && congruent(m, x, n + 1); },
        [&](const std::vector<int>& image) {
          for (size_t v = 0; v < pairs.size(); ++v) {
            if (!is_used(image, v) && congruent(i, pairs[v], n + 1)) return false;
          }
          return true;
        });
  }
  std::vector<int> K(d, i);
  while (true) {
    bool top = true;
    for (int k : K) top = top && k == j;
    bool ok = any_injection(
        q.M, pairs,
        [&](int m, const Pair& x) { return x.t >= m && congruent(m, x, K[x.s - 1]); },
        [&](const std::vector<int>& image) {
          bool some_free = false;
          for (size_t v = 0; v < pairs.size(); ++v) {
            if (is_used(image, v)) continue;
            bool c = congruent(i, pairs[v], K[pairs[v].s - 1]);
            if (top && c) return false;
            some_free = some_free || c;
          }
          return top || some_free;
        });
    if (!ok) return false;
    // Next weakly increasing K in [i..j]^d.
    int pos = d - 1;
    while (pos >= 0 && K[pos] == j) --pos;
    if (pos < 0) break;
    int v = K[pos] + 1;
    for (int r = pos; r < d; ++r) K[r] = v;
  }
  return true;
}

}  // namespace oracle

#endif
