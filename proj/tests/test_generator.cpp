#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "hyperlow/generator.hpp"
#include "hyperlow/modrep.hpp"

using namespace hyperlow;

TEST_CASE("table rows") {
  struct Row {
    int p, n, max;
    Weight argmax;
  };
  for (const Row& r : {Row{3, 2, 0, {0, 0}}, Row{3, 3, 1, {3, 1, 0}},
                       Row{3, 4, 3, {5, 3, 1, 0}}, Row{5, 3, 4, {6, 2, 0}}}) {
    Table1Entry e = table1_entry(r.p, r.n, 2);
    CHECK(e.max_count == r.max);
    if (r.max > 0) CHECK(e.argmax == r.argmax);
    CHECK(e.counts.size() == restricted_weights(r.p, r.n).size());
  }
}

TEST_CASE("reach closure of a two-row weight") {
  CHECK(reachable({1, 0}, 3, ReachMode::AllD).weights() == std::set<Weight>{{1}, {0}});
  CHECK(reachable({0, 0, 0}, 5, ReachMode::AllD).weights() == std::set<Weight>{{0, 0}});
  auto c = reachable({3, 0}, 3, ReachMode::AllD);
  CHECK(c.weights() == std::set<Weight>{{3}});
  auto report = reach_report({3, 0}, 3);
  CHECK(report.difference.empty());
}

TEST_CASE("chains replay to their endpoints") {
  for (const Weight& lam : restricted_weights(3, 4)) {
    auto c = reachable(lam, 3, ReachMode::AllD);
    REQUIRE_FALSE(c.reached.empty());
    CHECK(c.reached.front().mu == lam.truncated());
    for (const auto& node : c.reached) {
      Weight cur = lam.truncated();
      for (const auto& s : node.chain) {
        CHECK(s.from == cur);
        Weight next = s.from.with_delta(s.i, -s.d);
        if (s.j < lam.size()) next = next.with_delta(s.j, s.d);
        CHECK(next == s.to);
        cur = s.to;
      }
      CHECK(cur == node.mu);
      CHECK(interlaces(node.mu, lam));
    }
    auto d1 = reachable(lam, 3, ReachMode::DOne).weights();
    for (const Weight& w : d1) CHECK(c.weights().count(w));
  }
}

TEST_CASE("reached weights are normal") {
  for (const Weight& lam : restricted_weights(3, 3)) {
    auto normal = normal_weights_bruteforce(lam, 3);
    for (const Weight& mu : reachable(lam, 3, ReachMode::AllD).weights()) {
      CHECK(normal.count(mu));
    }
  }
}

TEST_CASE("job count resolution") {
  unsetenv("HYPERLOW_JOBS");
  CHECK(resolve_jobs(3) == 3);
  CHECK(resolve_jobs(0) >= 1);
  setenv("HYPERLOW_JOBS", "2", 1);
  CHECK(resolve_jobs(7) == 2);
  unsetenv("HYPERLOW_JOBS");
  CHECK(format_chain({}) == "-");
}
