#ifndef HYPERLOW_BATTERY_HPP
#define HYPERLOW_BATTERY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyperlow/combinatorics.hpp"

namespace hyperlow {

// Outcome of one verification sweep.
struct BatteryResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few, human readable

  bool passed() const { return failures == 0 && checked > 0; }
  void fail(std::string what);
};

struct OracleInstance {
  Weight lambda;
  Weight mu;
  int p = 0;
  int i = 0;
  int j = 0;
  int d = 0;
  std::vector<int> M;

  std::string str() const;
};

// Every restricted lambda with lambda_n = 0, interlacing mu, i < j, d < p
// and M in (i..j).
std::vector<OracleInstance> exhaustive_instances(int p, int n);

// Seeded sample. Lambdas are drawn from the restricted ones whose Weyl
// dimension is at most dim_cap, a few per prime, then instances among them.
std::vector<OracleInstance> random_instances(int n, const std::vector<int>& primes,
                                             std::size_t count, std::uint64_t seed,
                                             long dim_cap, int lambdas_per_prime);

enum class Fault { None, FlipOneVerdict };

// Decision procedure against the module computation.
BatteryResult criteria_vs_oracle(const std::vector<OracleInstance>& instances,
                                 Fault fault = Fault::None);

// cf of T f_{mu,lambda} against pi_lambda of the rho polynomial.
BatteryResult cf_bridge(const std::vector<OracleInstance>& instances);

// Every exact division in expand_T, rho and the f/g recursions.
BatteryResult integrality_sweep(int n_max, int d_max, std::uint64_t seed);

BatteryResult matching_vs_hall(std::size_t count, std::uint64_t seed);

// Weyl formula for every partition with at most n_max parts and size at
// most size_max.
BatteryResult weyl_dimensions(int n_max, int size_max, int p);

// Reached weights are normal, for the given lambdas.
BatteryResult generator_soundness(const std::vector<Weight>& lambdas, int p);

}  // namespace hyperlow

#endif
