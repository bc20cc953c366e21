#include "hyperlow/generator.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <thread>

#include "hyperlow/criteria.hpp"

namespace hyperlow {

std::string reach_mode_name(ReachMode m) {
  return m == ReachMode::AllD ? "all" : "d1";
}

std::set<Weight> ReachClosure::weights() const {
  std::set<Weight> out;
  for (const auto& node : reached) out.insert(node.mu);
  return out;
}

ReachClosure reachable(const Weight& lambda, int p, ReachMode mode) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (lambda.size() < 2 || !lambda.dominant()) {
    throw PreconditionError("lambda must be dominant of length >= 2");
  }
  const int n = lambda.size();
  const int dmax = mode == ReachMode::AllD ? p - 1 : 1;
  ReachClosure out;
  out.lambda = lambda;
  out.p = p;
  out.mode = mode;
  std::map<Weight, size_t> seen;
  std::deque<size_t> queue;
  out.reached.push_back({lambda.truncated(), {}});
  seen[lambda.truncated()] = 0;
  queue.push_back(0);

  auto visit = [&](size_t from, ReachStep step) {
    if (seen.count(step.to)) return;
    if (!step.to.dominant() || !interlaces(step.to, lambda)) {
      out.flagged.push_back(std::move(step));
      return;
    }
    ReachNode node{step.to, out.reached[from].chain};
    node.chain.push_back(std::move(step));
    seen[node.mu] = out.reached.size();
    out.reached.push_back(std::move(node));
    queue.push_back(out.reached.size() - 1);
  };

  while (!queue.empty()) {
    size_t cur = queue.front();
    queue.pop_front();
    const Weight mu = out.reached[cur].mu;
    BranchContext ctx{lambda, mu, p};
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int d = 1; d <= dmax; ++d) {
          ReachStep step;
          step.i = i;
          step.j = j;
          step.d = d;
          step.from = mu;
          if (j == n) {
            auto found = exists_m_terminal(ctx, i, d);
            if (!found) continue;
            step.M = found->M;
            step.to = mu.with_delta(i, -d);
          } else {
            auto found = exists_m_inner(ctx, i, j, d);
            if (!found) continue;
            step.M = found->M;
            step.to = mu.with_delta(i, -d).with_delta(j, d);
          }
          visit(cur, std::move(step));
        }
      }
    }
  }
  return out;
}

ReachReport reach_report(const Weight& lambda, int p) {
  ReachReport r;
  r.all = reachable(lambda, p, ReachMode::AllD);
  r.d_one = reachable(lambda, p, ReachMode::DOne);
  auto a = r.all.weights();
  auto b = r.d_one.weights();
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(r.difference));
  return r;
}

int resolve_jobs(int requested) {
  if (const char* env = std::getenv("HYPERLOW_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1, requested);
}

Table1Entry table1_entry(int p, int n, int jobs) {
  auto start = std::chrono::steady_clock::now();
  if (n < 2) throw PreconditionError("need n >= 2");
  auto lambdas = restricted_weights(p, n);
  std::vector<int> counts(lambdas.size(), 0);
  jobs = std::min<int>(resolve_jobs(jobs), static_cast<int>(lambdas.size()));
  auto worker = [&](size_t first) {
    for (size_t k = first; k < lambdas.size(); k += jobs) {
      counts[k] = static_cast<int>(reach_report(lambdas[k], p).difference.size());
    }
  };
  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  Table1Entry e;
  e.p = p;
  e.n = n;
  e.max_count = -1;
  for (size_t k = 0; k < lambdas.size(); ++k) {
    e.counts[lambdas[k]] = counts[k];
    if (counts[k] > e.max_count) {
      e.max_count = counts[k];
      e.argmax = lambdas[k];
    }
  }
  e.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start).count();
  return e;
}

std::string format_chain(const std::vector<ReachStep>& chain) {
  std::string out;
  for (const auto& s : chain) {
    if (!out.empty()) out += " ";
    out += "T(" + std::to_string(s.i) + "," + std::to_string(s.j) + ",d=" +
           std::to_string(s.d) + ",M=" + format_columns(s.M) + ")";
    out += s.to.str();
  }
  return out.empty() ? "-" : out;
}

}  // namespace hyperlow
