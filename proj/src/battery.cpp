#include "hyperlow/battery.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>

#include "hyperlow/criteria.hpp"
#include "hyperlow/generator.hpp"
#include "hyperlow/matching.hpp"
#include "hyperlow/modrep.hpp"
#include "hyperlow/symbolic.hpp"

namespace hyperlow {

void BatteryResult::fail(std::string what) {
  ++failures;
  if (counterexamples.size() < 5) counterexamples.push_back(std::move(what));
}

std::string OracleInstance::str() const {
  return "lambda=" + lambda.str() + " mu=" + mu.str() + " p=" + std::to_string(p) +
         " i=" + std::to_string(i) + " j=" + std::to_string(j) +
         " d=" + std::to_string(d) + " M=" + format_columns(M);
}

std::vector<OracleInstance> exhaustive_instances(int p, int n) {
  std::vector<OracleInstance> out;
  for (const Weight& lam : restricted_weights(p, n)) {
    for (const Weight& mu : interlacing_weights(lam)) {
      for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int d = 1; d < p; ++d) {
            for (const auto& M : subsets_of_open_interval(i, j)) {
              out.push_back({lam, mu, p, i, j, d, M});
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<OracleInstance> random_instances(int n, const std::vector<int>& primes,
                                             std::size_t count, std::uint64_t seed,
                                             long dim_cap, int lambdas_per_prime) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Weight, int>> pool;
  for (int p : primes) {
    std::vector<Weight> ok;
    for (const Weight& lam : restricted_weights(p, n)) {
      if (weyl_dimension(lam) <= dim_cap) ok.push_back(lam);
    }
    std::shuffle(ok.begin(), ok.end(), rng);
    for (int k = 0; k < lambdas_per_prime && k < static_cast<int>(ok.size()); ++k) {
      pool.emplace_back(ok[k], p);
    }
  }
  if (pool.empty()) return {};
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::vector<OracleInstance> out;
  while (out.size() < count) {
    const auto& [lam, p] = pool[pick(0, static_cast<int>(pool.size()) - 1)];
    auto mus = interlacing_weights(lam);
    OracleInstance q;
    q.lambda = lam;
    q.p = p;
    q.mu = mus[pick(0, static_cast<int>(mus.size()) - 1)];
    q.i = pick(1, n - 1);
    q.j = pick(q.i + 1, n);
    q.d = pick(1, p - 1);
    for (int t = q.i + 1; t < q.j; ++t) {
      if (pick(0, 1)) q.M.push_back(t);
    }
    out.push_back(std::move(q));
  }
  // Group by lambda so each module is built once.
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.p, a.lambda) < std::tie(b.p, b.lambda);
  });
  return out;
}

namespace {

struct ModuleCache {
  std::pair<Weight, int> key;
  std::shared_ptr<const ModuleRealization> nabla;

  const ModuleRealization& get(const Weight& lam, int p) {
    if (!nabla || key != std::make_pair(lam, p)) {
      nabla = dual_realization(build_weyl(lam, p));
      key = {lam, p};
    }
    return *nabla;
  }
};

struct TCache {
  std::map<std::tuple<int, int, int, std::vector<int>>, LoweringElement> memo;

  const LoweringElement& get(int i, int j, int d, const std::vector<int>& M) {
    auto key = std::make_tuple(i, j, d, M);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, expand_T(i, j, d, M)).first;
    return it->second;
  }
};

}  // namespace

BatteryResult criteria_vs_oracle(const std::vector<OracleInstance>& instances,
                                 Fault fault) {
  BatteryResult r;
  r.name = "criteria vs oracle";
  ModuleCache modules;
  TCache ts;
  bool flipped = false;
  for (const auto& q : instances) {
    CriterionQuery cq{{q.lambda, q.mu, q.p}, q.i, q.j, q.d, q.M};
    bool predicted = check(cq).holds;
    if (fault == Fault::FlipOneVerdict && !flipped &&
        !x_mu_lambda_set(cq.ctx, q.i, q.j, q.d).empty()) {
      predicted = !predicted;
      flipped = true;
    }
    const ModuleRealization& nabla = modules.get(q.lambda, q.p);
    ModuleVector f = normalized_f(nabla, q.mu);
    ModuleVector v = apply_lowering(nabla, ts.get(q.i, q.j, q.d, q.M), f);
    bool actual = is_high_weight_vector(nabla, v);
    ++r.checked;
    if (predicted != actual) {
      r.fail(q.str() + ": criterion says " + (predicted ? "holds" : "fails") +
             ", module says " + (actual ? "holds" : "fails"));
    }
  }
  return r;
}

BatteryResult cf_bridge(const std::vector<OracleInstance>& instances) {
  BatteryResult r;
  r.name = "cf bridge";
  ModuleCache modules;
  TCache ts;
  for (const auto& q : instances) {
    const ModuleRealization& nabla = modules.get(q.lambda, q.p);
    ModuleVector v = apply_lowering(nabla, ts.get(q.i, q.j, q.d, q.M),
                                    normalized_f(nabla, q.mu));
    Fp lhs = cf(nabla, v);
    auto a = raising_exponents(q.lambda, q.mu);
    std::vector<long> A(a.begin(), a.end());
    Polynomial rh = rho(A, q.i, q.j, std::vector<int>(q.d, q.j),
                        std::vector<long>(q.d, 0), q.M, RationalTag::One);
    int rhs = evaluate_mod_p(rh, q.lambda, q.p);
    ++r.checked;
    if (static_cast<int>(lhs) != rhs) {
      r.fail(q.str() + ": cf=" + std::to_string(lhs) + " rho=" + std::to_string(rhs));
    }
  }
  return r;
}

BatteryResult integrality_sweep(int n_max, int d_max, std::uint64_t seed) {
  BatteryResult r;
  r.name = "integrality";
  std::mt19937_64 rng(seed);
  auto small = [&](int lo, int hi) {
    return static_cast<long>(std::uniform_int_distribution<int>(lo, hi)(rng));
  };
  std::vector<long> C;
  for (int k = 1; k < n_max; ++k) C.push_back(small(0, 3));
  auto guard = [&](const std::string& what, auto&& fn) {
    ++r.checked;
    try {
      fn();
    } catch (const IntegralityError& e) {
      r.fail(what + ": " + e.what());
    }
  };
  for (int i = 1; i < n_max; ++i) {
    for (int j = i + 1; j <= n_max; ++j) {
      for (int d = 1; d <= d_max; ++d) {
        for (const auto& M : subsets_of_open_interval(i, j)) {
          std::string tag = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                            " d=" + std::to_string(d) + " M=" + format_columns(M);
          guard("expand_T " + tag, [&] { expand_T(i, j, d, M); });
          guard("f/g " + tag, [&] { fg_polynomials(i, j, d, M); });
          const std::vector<int> top(d, j);
          for (const auto& K : weakly_increasing_sequences(i, j, d)) {
            std::vector<long> L0(d + 1, 0);
            guard("rho R=1 " + tag, [&] { rho(C, i, j, K, L0, M, RationalTag::One); });
            if (K == top) continue;
            std::vector<long> L1(d, 0);
            L1.push_back(d);
            std::vector<long> L2{0};
            for (int h = 1; h <= d; ++h) L2.push_back(small(-2, 2));
            for (const auto& L : {L1, L2}) {
              guard("rho R=1/(zeta-d) " + tag, [&] {
                rho(C, i, j, K, L, M, RationalTag::InvZetaMinusD);
              });
            }
          }
        }
      }
    }
  }
  return r;
}

BatteryResult matching_vs_hall(std::size_t count, std::uint64_t seed) {
  BatteryResult r;
  r.name = "matching vs cone criterion";
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const OrderSpec spec{{Monotone::Increasing, Monotone::Decreasing}};
  for (std::size_t k = 0; k < count; ++k) {
    int rows = pick(1, 5);
    int cols = pick(1, std::max(1, 20 / rows));
    std::vector<Tuple> X;
    for (int t = 0; t < rows; ++t) {
      for (int s = 1; s <= cols; ++s) X.push_back({t, s});
    }
    int density_a = pick(1, 9), density_b = pick(1, 9);
    std::vector<Tuple> A, B;
    for (const auto& x : X) {
      if (pick(0, 9) < density_a) A.push_back(x);
      if (pick(0, 9) < density_b) B.push_back(x);
    }
    auto w = find_monotone_injection(A, B, spec);
    bool hall = hall_cone_check(A, B, product_precedes);
    ++r.checked;
    if (w.has_value() != hall) {
      r.fail("instance " + std::to_string(k) + ": matching " +
             (w ? "found" : "absent") + ", cone criterion " + (hall ? "holds" : "fails"));
    } else if (w && !validate_injection(A, B, spec, *w)) {
      r.fail("instance " + std::to_string(k) + ": invalid witness");
    }
  }
  return r;
}

BatteryResult weyl_dimensions(int n_max, int size_max, int p) {
  BatteryResult r;
  r.name = "Weyl dimensions";
  for (int n = 1; n <= n_max; ++n) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
      if (static_cast<int>(cur.size()) == n) {
        Weight lam(cur);
        ++r.checked;
        try {
          auto w = build_weyl(lam, p);
          if (BigInt(as_realization(w)->dimension()) != weyl_dimension(lam)) {
            r.fail(lam.str() + ": dimension mismatch");
          }
        } catch (const std::exception& e) {
          r.fail(lam.str() + ": " + e.what());
        }
        return;
      }
      for (int v = std::min(left, cap); v >= 0; --v) {
        cur.push_back(v);
        self(self, left - v, v);
        cur.pop_back();
      }
    };
    rec(rec, size_max, size_max);
  }
  return r;
}

BatteryResult generator_soundness(const std::vector<Weight>& lambdas, int p) {
  BatteryResult r;
  r.name = "generator soundness";
  for (const Weight& lam : lambdas) {
    auto reached = reachable(lam, p, ReachMode::AllD).weights();
    auto normal = normal_weights_bruteforce(lam, p);
    ++r.checked;
    for (const Weight& mu : reached) {
      if (!normal.count(mu)) {
        r.fail("lambda=" + lam.str() + ": reached " + mu.str() + " is not normal");
      }
    }
  }
  return r;
}

}  // namespace hyperlow
