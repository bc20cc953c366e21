#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperlow/battery.hpp"

using namespace hyperlow;

TEST_CASE("small batteries pass") {
  auto inst = exhaustive_instances(3, 3);
  CHECK(inst.size() > 100);
  CHECK(criteria_vs_oracle(inst).passed());
  CHECK(cf_bridge(inst).passed());
  CHECK(integrality_sweep(4, 2, 1).passed());
  CHECK(matching_vs_hall(300, 1).passed());
  CHECK(weyl_dimensions(3, 4, 3).passed());
  CHECK(generator_soundness({{2, 1, 0}, {3, 1, 0}}, 3).passed());
}

TEST_CASE("an injected fault is reported") {
  auto r = criteria_vs_oracle(exhaustive_instances(3, 3), Fault::FlipOneVerdict);
  CHECK_FALSE(r.passed());
  CHECK(r.failures == 1);
  REQUIRE(r.counterexamples.size() == 1);
  CHECK(r.counterexamples[0].find("lambda=") != std::string::npos);
}

TEST_CASE("random instances are reproducible and bounded") {
  auto a = random_instances(4, {3, 5}, 40, 9, 200, 3);
  auto b = random_instances(4, {3, 5}, 40, 9, 200, 3);
  REQUIRE(a.size() == 40);
  for (size_t k = 0; k < a.size(); ++k) CHECK(a[k].str() == b[k].str());
  for (const auto& q : a) {
    CHECK(q.d < q.p);
    CHECK(q.i < q.j);
    CHECK(interlaces(q.mu, q.lambda));
  }
}

TEST_CASE("an empty battery does not count as passing") {
  BatteryResult r;
  CHECK_FALSE(r.passed());
}
