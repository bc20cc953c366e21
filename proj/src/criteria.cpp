#include "hyperlow/criteria.hpp"

#include <algorithm>

namespace hyperlow {

void CriterionQuery::validate() const {
  ctx.validate();
  int n = ctx.n();
  if (i < 1 || j <= i || j > n) {
    throw PreconditionError("need 1 <= i < j <= n");
  }
  if (d < 1 || d >= ctx.p) {
    throw PreconditionError("need 1 <= d < p, got d=" + std::to_string(d));
  }
  for (size_t k = 0; k < M.size(); ++k) {
    if (M[k] <= i || M[k] >= j) {
      throw PreconditionError("M must lie strictly between i and j");
    }
    if (k && M[k] <= M[k - 1]) {
      throw PreconditionError("M must be strictly increasing");
    }
  }
}

namespace {

// All pairs [i..j) x [1..d], sorted.
NodePairSet all_pairs(int i, int j, int d) {
  NodePairSet out;
  for (int t = i; t < j; ++t) {
    for (int s = 1; s <= d; ++s) out.push_back({t, s});
  }
  return out;
}

int index_of(const NodePairSet& set, const Node& x) {
  auto it = std::lower_bound(set.begin(), set.end(), x);
  return it != set.end() && *it == x ? static_cast<int>(it - set.begin()) : -1;
}

// Edges m -> (t,s) allowed as values of gamma: t >= m and the residue
// selected by K vanishes. K empty means the plain mu/lambda residue.
BipartiteMatcher gamma_graph(const CriterionQuery& q, const NodePairSet& pairs,
                             const std::vector<int>& K) {
  BipartiteMatcher g(static_cast<int>(q.M.size()),
                     static_cast<int>(pairs.size()));
  for (size_t u = 0; u < q.M.size(); ++u) {
    int m = q.M[u];
    for (size_t v = 0; v < pairs.size(); ++v) {
      auto [t, s] = pairs[v];
      if (t < m) continue;
      int r = K.empty() ? residue(BMuLambda{}, q.ctx, m, t)
                        : residue(BMuLambdaK{K[s - 1]}, q.ctx, m, t);
      if (r == residue_mod(q.d - s, q.ctx.p)) {
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
      }
    }
  }
  return g;
}

Gamma read_gamma(const CriterionQuery& q, const BipartiteMatcher& g,
                 const NodePairSet& pairs) {
  Gamma gamma;
  for (size_t u = 0; u < q.M.size(); ++u) {
    gamma.emplace_back(q.M[u], pairs[g.match_of_left(static_cast<int>(u))]);
  }
  return gamma;
}

std::string node_str(const Node& x) {
  return "(" + std::to_string(x.t) + "," + std::to_string(x.s) + ")";
}

std::string seq_str(const std::vector<int>& K) {
  std::string out = "(";
  for (size_t k = 0; k < K.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(K[k]);
  }
  return out + ")";
}

// Injective gamma on M whose image contains every required pair.
// Required pairs are matched first; augmenting from M afterwards never
// unmatches them, and fails only if no injection covers both sides.
bool covering_gamma(const CriterionQuery& q, const NodePairSet& pairs,
                    const NodePairSet& required, const std::vector<int>& K,
                    Gamma& gamma, std::string& reason) {
  BipartiteMatcher g = gamma_graph(q, pairs, K);
  for (const Node& x : required) {
    if (!g.augment_right(index_of(pairs, x))) {
      reason = "pair " + node_str(x) +
               " is congruent but cannot lie in the image of gamma";
      return false;
    }
  }
  for (size_t u = 0; u < q.M.size(); ++u) {
    if (!g.augment_left(static_cast<int>(u))) {
      reason = "no admissible injective gamma on M covers the congruent "
               "pairs (fails at m=" + std::to_string(q.M[u]) + ")";
      return false;
    }
  }
  gamma = read_gamma(q, g, pairs);
  return true;
}

}  // namespace

CriterionVerdict check_terminal(const CriterionQuery& q) {
  q.validate();
  if (q.j != q.ctx.n()) {
    throw PreconditionError("terminal check needs j = n");
  }
  CriterionVerdict v;
  NodePairSet pairs = all_pairs(q.i, q.j, q.d);
  NodePairSet required = x_mu_lambda_set(q.ctx, q.i, q.j, q.d);
  v.holds = covering_gamma(q, pairs, required, {}, v.gamma, v.reason);
  return v;
}

CriterionVerdict check_inner(const CriterionQuery& q) {
  q.validate();
  if (q.j >= q.ctx.n()) {
    throw PreconditionError("inner check needs j < n");
  }
  CriterionVerdict v;
  v.holds = true;
  NodePairSet pairs = all_pairs(q.i, q.j, q.d);
  const std::vector<int> top(q.d, q.j);
  for (const auto& K : weakly_increasing_sequences(q.i, q.j, q.d)) {
    KWitness w;
    w.K = K;
    std::string why;
    bool ok = false;
    if (K == top) {
      NodePairSet required = x_mu_lambda_set(q.ctx, q.i, q.j, q.d);
      ok = covering_gamma(q, pairs, required, K, w.gamma, why);
    } else {
      NodePairSet candidates = node_set_K(q.ctx, q.i, q.j, q.d, K);
      if (candidates.empty()) why = "no congruent pair for this K";
      for (const Node& x : candidates) {
        BipartiteMatcher g = gamma_graph(q, pairs, K);
        g.block_right(index_of(pairs, x));
        bool all = true;
        for (size_t u = 0; u < q.M.size() && all; ++u) {
          all = g.augment_left(static_cast<int>(u));
        }
        if (all) {
          w.gamma = read_gamma(q, g, pairs);
          w.free_node = x;
          ok = true;
          break;
        }
      }
      if (!ok && why.empty()) {
        why = "every admissible gamma covers all congruent pairs";
      }
    }
    if (!ok) {
      v.holds = false;
      v.reason = "K=" + seq_str(K) + ": " + why;
      v.per_k.push_back(std::move(w));
      return v;
    }
    v.per_k.push_back(std::move(w));
  }
  return v;
}

CriterionVerdict check(const CriterionQuery& q) {
  return q.j == q.ctx.n() ? check_terminal(q) : check_inner(q);
}

namespace {

std::vector<Tuple> as_tuples(const NodePairSet& set) {
  std::vector<Tuple> out;
  for (auto [t, s] : set) out.push_back({t, s});
  return out;
}

std::vector<Tuple> as_tuples(const ColumnSet& set) {
  std::vector<Tuple> out;
  for (int t : set) out.push_back({t});
  return out;
}

std::vector<int> image_columns(const InjectionWitness& w) {
  std::vector<int> out;
  for (const auto& [src, dst] : w.assignment) out.push_back(dst.at(0));
  std::sort(out.begin(), out.end());
  return out;
}

void check_existence_args(const BranchContext& ctx, int i, int j, int d) {
  ctx.validate();
  if (i < 1 || j <= i || j > ctx.n()) {
    throw PreconditionError("need 1 <= i < j <= n");
  }
  if (d < 1 || d >= ctx.p) throw PreconditionError("need 1 <= d < p");
}

}  // namespace

std::optional<TerminalExistence> exists_m_terminal(const BranchContext& ctx,
                                                   int i, int d) {
  int n = ctx.n();
  check_existence_args(ctx, i, n, d);
  auto X = as_tuples(x_mu_lambda_set(ctx, i, n, d));
  auto C = as_tuples(c_mu_set(ctx, i, n));
  auto eps = find_monotone_injection(X, C, OrderSpec{{Monotone::Decreasing}});
  if (!eps) return std::nullopt;
  TerminalExistence out;
  out.epsilon = *eps;
  out.M = image_columns(*eps);
  for (const auto& [src, dst] : eps->assignment) {
    out.gamma.emplace_back(dst.at(0), Node{src.at(0), src.at(1)});
  }
  std::sort(out.gamma.begin(), out.gamma.end());
  return out;
}

namespace {

std::optional<InnerExistence> inner_by_injections(const BranchContext& ctx,
                                                  int i, int j, int d) {
  NodePairSet xm = x_mu_set(ctx, i, j, d);
  NodePairSet xml = x_mu_lambda_set(ctx, i, j, d);
  const Node corner{j - 1, 1};
  if (!std::binary_search(xm.begin(), xm.end(), corner)) return std::nullopt;
  if (std::binary_search(xml.begin(), xml.end(), corner)) return std::nullopt;

  auto X = as_tuples(xml);
  auto eps = find_monotone_injection(X, as_tuples(c_mu_set(ctx, i, j)),
                                     OrderSpec{{Monotone::Decreasing}});
  if (!eps) return std::nullopt;
  NodePairSet rest;
  for (const Node& x : xm) {
    if (!(x == corner)) rest.push_back(x);
  }
  auto tau = find_monotone_injection(
      X, as_tuples(rest), OrderSpec{{Monotone::Increasing, Monotone::Decreasing}});
  if (!tau) return std::nullopt;
  InnerExistence out;
  out.epsilon = *eps;
  out.tau = *tau;
  out.M = image_columns(*eps);
  return out;
}

std::optional<InnerExistence> inner_by_cones(const BranchContext& ctx, int i,
                                             int j, int d) {
  auto X = as_tuples(x_mu_lambda_set(ctx, i, j, d));
  ColumnSet c = c_mu_set(ctx, i, j);
  if (X.size() > c.size()) return std::nullopt;
  const std::vector<int> top(d, j);
  auto Ks = weakly_increasing_sequences(i, j, d);

  // Candidate images of epsilon: subsets of c of the right size, in
  // lexicographic order.
  std::vector<int> pick;
  std::optional<InnerExistence> found;
  auto try_image = [&]() {
    auto eps = find_monotone_injection(X, as_tuples(ColumnSet(pick)),
                                       OrderSpec{{Monotone::Decreasing}});
    if (!eps) return;
    std::vector<Tuple> domain{{i}};
    for (int m : pick) domain.push_back({m});
    InnerExistence cand;
    for (const auto& K : Ks) {
      if (K == top) continue;
      auto target = as_tuples(node_set_K(ctx, i, j, d, K));
      auto theta = find_monotone_injection(domain, target,
                                           OrderSpec{{Monotone::Increasing}});
      if (!theta) return;
      cand.theta.emplace_back(K, *theta);
    }
    cand.epsilon = *eps;
    cand.M = pick;
    found = std::move(cand);
  };
  auto rec = [&](auto&& self, size_t from) -> void {
    if (found) return;
    if (pick.size() == X.size()) {
      try_image();
      return;
    }
    for (size_t k = from; k < c.size() && !found; ++k) {
      pick.push_back(c[k]);
      self(self, k + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

}  // namespace

std::optional<InnerExistence> exists_m_inner(const BranchContext& ctx, int i,
                                             int j, int d, InnerMode mode) {
  check_existence_args(ctx, i, j, d);
  if (j >= ctx.n()) throw PreconditionError("inner existence needs j < n");
  return mode == InnerMode::Injections ? inner_by_injections(ctx, i, j, d)
                                       : inner_by_cones(ctx, i, j, d);
}

std::string format_gamma(const Gamma& gamma) {
  std::string out = "{";
  for (size_t k = 0; k < gamma.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(gamma[k].first) + "->" + node_str(gamma[k].second);
  }
  return out + "}";
}

}  // namespace hyperlow
