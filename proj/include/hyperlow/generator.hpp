#ifndef HYPERLOW_GENERATOR_HPP
#define HYPERLOW_GENERATOR_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hyperlow/combinatorics.hpp"

namespace hyperlow {

enum class ReachMode {
  AllD,  // d in [1..p-1]
  DOne   // d = 1 only
};

std::string reach_mode_name(ReachMode m);

// One application of T_{i,j}^{(d)}(M,1); j == n is the terminal case.
struct ReachStep {
  int i = 0;
  int j = 0;
  int d = 0;
  std::vector<int> M;
  Weight from;
  Weight to;
};

struct ReachNode {
  Weight mu;
  std::vector<ReachStep> chain;  // from lambda-bar to mu
};

struct ReachClosure {
  Weight lambda;
  int p = 0;
  ReachMode mode = ReachMode::AllD;
  std::vector<ReachNode> reached;  // BFS order
  // Produced weights that are not dominant or do not interlace; recorded
  // but never expanded.
  std::vector<ReachStep> flagged;

  std::set<Weight> weights() const;
};

ReachClosure reachable(const Weight& lambda, int p, ReachMode mode);

struct ReachReport {
  ReachClosure all;
  ReachClosure d_one;
  std::vector<Weight> difference;  // reached with all d but not with d = 1
};

ReachReport reach_report(const Weight& lambda, int p);

struct Table1Entry {
  int p = 0;
  int n = 0;
  int max_count = 0;
  Weight argmax;                  // first lambda attaining the maximum
  std::map<Weight, int> counts;   // per restricted lambda
  double elapsed_ms = 0;
};

// Max over restricted lambda of |reached_all minus reached_d1|.
Table1Entry table1_entry(int p, int n, int jobs = 1);

// Thread count: HYPERLOW_JOBS overrides the requested value when set.
int resolve_jobs(int requested);

std::string format_chain(const std::vector<ReachStep>& chain);

}  // namespace hyperlow

#endif
