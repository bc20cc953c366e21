#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hyperlow/matching.hpp"
#include "oracles.hpp"

using namespace hyperlow;

TEST_CASE("matcher respects blocked vertices") {
  BipartiteMatcher m(2, 2);
  m.add_edge(0, 0);
  m.add_edge(1, 0);
  m.add_edge(1, 1);
  m.block_right(1);
  CHECK(m.augment_left(0));
  CHECK_FALSE(m.augment_left(1));
  CHECK(m.match_of_left(1) == BipartiteMatcher::kFree);
}

TEST_CASE("augmenting keeps matched vertices matched") {
  BipartiteMatcher m(2, 2);
  m.add_edge(0, 0);
  m.add_edge(0, 1);
  m.add_edge(1, 0);
  CHECK(m.augment_right(0));
  CHECK(m.augment_left(1));
  CHECK(m.match_of_left(1) == 0);
  CHECK(m.match_of_left(0) == 1);
}

TEST_CASE("monotone injection against exhaustive search") {
  std::mt19937_64 rng(7);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::vector<OrderSpec> specs{
      {{Monotone::Increasing, Monotone::Decreasing}},
      {{Monotone::Decreasing}},
      {{Monotone::Increasing, Monotone::Free}}};
  for (int round = 0; round < 600; ++round) {
    const OrderSpec& spec = specs[round % specs.size()];
    std::vector<Tuple> A, B;
    int na = pick(0, 5), nb = pick(0, 6);
    for (int k = 0; k < na; ++k) A.push_back({pick(0, 4), pick(1, 3)});
    for (int k = 0; k < nb; ++k) B.push_back({pick(0, 4), pick(1, 3)});
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    std::sort(B.begin(), B.end());
    B.erase(std::unique(B.begin(), B.end()), B.end());
    bool brute = oracle::injection_exists(
        A, B, [&](const Tuple& a, const Tuple& b) { return spec.admits(a, b); });
    auto w = find_monotone_injection(A, B, spec);
    CHECK(w.has_value() == brute);
    if (w) CHECK(validate_injection(A, B, spec, *w));
  }
}

TEST_CASE("cone criterion agrees with exhaustive search") {
  std::mt19937_64 rng(11);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int round = 0; round < 300; ++round) {
    std::vector<Tuple> A, B;
    for (int t = 0; t < 3; ++t) {
      for (int s = 1; s <= 3; ++s) {
        if (pick(0, 2) == 0) A.push_back({t, s});
        if (pick(0, 2) == 0) B.push_back({t, s});
      }
    }
    bool brute = oracle::injection_exists(A, B, product_precedes);
    CHECK(hall_cone_check(A, B, product_precedes) == brute);
  }
}

TEST_CASE("validation rejects bad witnesses") {
  std::vector<Tuple> A{{1}, {2}}, B{{1}, {2}};
  OrderSpec dec{{Monotone::Decreasing}};
  InjectionWitness twice{{{{1}, {1}}, {{2}, {1}}}};
  CHECK_FALSE(validate_injection(A, B, dec, twice));
  InjectionWitness upward{{{{1}, {2}}, {{2}, {1}}}};
  CHECK_FALSE(validate_injection(A, B, dec, upward));
  InjectionWitness good{{{{1}, {1}}, {{2}, {2}}}};
  CHECK(validate_injection(A, B, dec, good));
  CHECK(format_tuple({3}) == "3");
  CHECK(format_tuple({1, 2}) == "(1,2)");
}
