#include "hyperlow/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyperlow {

int Weight::at(int i) const {
  if (i < 1 || i > size()) {
    throw PreconditionError("weight index " + std::to_string(i) +
                            " out of range for " + str());
  }
  return v_[i - 1];
}

int& Weight::at(int i) {
  if (i < 1 || i > size()) {
    throw PreconditionError("weight index " + std::to_string(i) +
                            " out of range for " + str());
  }
  return v_[i - 1];
}

long Weight::sum() const {
  return std::accumulate(v_.begin(), v_.end(), 0L);
}

bool Weight::dominant() const {
  return std::is_sorted(v_.begin(), v_.end(), std::greater<>());
}

Weight Weight::truncated() const {
  if (v_.empty()) return {};
  return Weight(std::vector<int>(v_.begin(), v_.end() - 1));
}

Weight Weight::with_delta(int i, int delta) const {
  Weight w = *this;
  w.at(i) += delta;
  return w;
}

std::string Weight::str() const {
  std::string out = "(";
  for (size_t k = 0; k < v_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v_[k]);
  }
  return out + ")";
}

Weight parse_weight(const std::string& text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']') continue;
    cleaned += (ch == ',' ? ' ' : ch);
  }
  std::istringstream in(cleaned);
  std::vector<int> entries;
  std::string token;
  while (in >> token) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw PreconditionError("cannot parse weight '" + text + "'");
    }
    if (used != token.size()) {
      throw PreconditionError("cannot parse weight '" + text + "'");
    }
    entries.push_back(value);
  }
  return Weight(std::move(entries));
}

bool interlaces(const Weight& mu, const Weight& lambda) {
  if (mu.size() + 1 != lambda.size()) return false;
  for (int i = 1; i <= mu.size(); ++i) {
    if (mu.at(i) > lambda.at(i) || mu.at(i) < lambda.at(i + 1)) return false;
  }
  return true;
}

int residue_mod(long value, int p) {
  long r = value % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

void BranchContext::validate() const {
  if (!is_prime(p)) {
    throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  }
  if (lambda.size() < 2) {
    throw PreconditionError("lambda needs at least two entries");
  }
  if (!lambda.dominant()) {
    throw PreconditionError("lambda " + lambda.str() + " is not dominant");
  }
  if (!mu.dominant()) {
    throw PreconditionError("mu " + mu.str() + " is not dominant");
  }
  if (!interlaces(mu, lambda)) {
    throw PreconditionError("mu " + mu.str() + " does not interlace lambda " +
                            lambda.str());
  }
}

namespace {

long c_entry(const std::vector<long>& C, int index, int n) {
  if (index <= 0 || index >= n) return 0;
  if (index > static_cast<int>(C.size())) {
    throw PreconditionError("shift vector C is too short");
  }
  return C[index - 1];
}

}  // namespace

long residue_value(const ResidueKind& kind, const BranchContext& ctx, int i,
                   int t) {
  const Weight& lam = ctx.lambda;
  const Weight& mu = ctx.mu;
  return std::visit(
      [&](const auto& k) -> long {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, BMuLambda>) {
          return t - i + mu.at(i) - lam.at(t + 1);
        } else if constexpr (std::is_same_v<K, BMuLambdaK>) {
          int next = k.k <= t ? mu.at(t + 1) : lam.at(t + 1);
          return t - i + mu.at(i) - next;
        } else if constexpr (std::is_same_v<K, CMu>) {
          return t - i + mu.at(i) - mu.at(t);
        } else {
          int n = lam.size();
          long v = t - i + lam.at(i) - lam.at(t + 1) +
                   c_entry(k.C, i - 1, n) - c_entry(k.C, i, n);
          if (t >= k.k) v += c_entry(k.C, t + 1, n) - c_entry(k.C, t, n);
          return v;
        }
      },
      kind);
}

int residue(const ResidueKind& kind, const BranchContext& ctx, int i, int t) {
  return residue_mod(residue_value(kind, ctx, i, t), ctx.p);
}

namespace {

void check_range(const BranchContext& ctx, int i, int j) {
  if (i < 1 || j <= i || j > ctx.n()) {
    throw PreconditionError("need 1 <= i < j <= n, got i=" +
                            std::to_string(i) + " j=" + std::to_string(j));
  }
}

}  // namespace

ColumnSet c_mu_set(const BranchContext& ctx, int i, int j) {
  check_range(ctx, i, j);
  ColumnSet out;
  for (int t = i + 1; t < j; ++t) {
    if (residue(CMu{}, ctx, i, t) == 0) out.push_back(t);
  }
  return out;
}

NodePairSet x_mu_set(const BranchContext& ctx, int i, int j, int d) {
  check_range(ctx, i, j);
  if (j >= ctx.n()) {
    throw PreconditionError("the mu-node set needs j < n");
  }
  NodePairSet out;
  for (int t = i; t < j; ++t) {
    int r = residue(BMuLambdaK{t}, ctx, i, t);  // k <= t selects mu_{t+1}
    for (int s = 1; s <= d; ++s) {
      if (r == residue_mod(d - s, ctx.p)) out.push_back({t, s});
    }
  }
  return out;
}

NodePairSet x_mu_lambda_set(const BranchContext& ctx, int i, int j, int d) {
  check_range(ctx, i, j);
  NodePairSet out;
  for (int t = i; t < j; ++t) {
    int r = residue(BMuLambda{}, ctx, i, t);
    for (int s = 1; s <= d; ++s) {
      if (r == residue_mod(d - s, ctx.p)) out.push_back({t, s});
    }
  }
  return out;
}

NodeSets node_sets(const BranchContext& ctx, int i, int j, int d) {
  NodeSets sets;
  sets.c_mu = c_mu_set(ctx, i, j);
  if (j < ctx.n()) sets.x_mu = x_mu_set(ctx, i, j, d);
  sets.x_mu_lambda = x_mu_lambda_set(ctx, i, j, d);
  return sets;
}

NodePairSet node_set_K(const BranchContext& ctx, int i, int j, int d,
                       const std::vector<int>& K) {
  check_range(ctx, i, j);
  if (static_cast<int>(K.size()) != d) {
    throw PreconditionError("K must have length d");
  }
  NodePairSet out;
  for (int t = i; t < j; ++t) {
    for (int s = 1; s <= d; ++s) {
      int r = residue(BMuLambdaK{K[s - 1]}, ctx, i, t);
      if (r == residue_mod(d - s, ctx.p)) out.push_back({t, s});
    }
  }
  return out;
}

std::vector<std::vector<int>> weakly_increasing_sequences(int lo, int hi,
                                                          int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= hi; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

std::vector<std::vector<int>> subsets_of_open_interval(int lo, int hi) {
  std::vector<int> pool;
  for (int t = lo + 1; t < hi; ++t) pool.push_back(t);
  std::vector<std::vector<int>> out;
  size_t count = size_t{1} << pool.size();
  for (size_t mask = 0; mask < count; ++mask) {
    std::vector<int> s;
    for (size_t b = 0; b < pool.size(); ++b) {
      if (mask >> b & 1) s.push_back(pool[b]);
    }
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  return out;
}

std::vector<Weight> restricted_weights(int p, int n) {
  std::vector<Weight> out;
  std::vector<int> gaps(n - 1, 0);
  while (true) {
    std::vector<int> w(n, 0);
    for (int k = n - 2; k >= 0; --k) w[k] = w[k + 1] + gaps[k];
    out.emplace_back(w);
    int k = 0;
    while (k < n - 1 && gaps[k] == p - 1) gaps[k++] = 0;
    if (k == n - 1) break;
    ++gaps[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> interlacing_weights(const Weight& lambda) {
  int n = lambda.size();
  std::vector<Weight> out;
  std::vector<int> cur(n - 1);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n - 1) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lambda.at(k + 1); v >= lambda.at(k + 2); --v) {
      cur[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::string format_columns(const ColumnSet& set) {
  std::string out = "{";
  for (size_t k = 0; k < set.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(set[k]);
  }
  return out + "}";
}

std::string format_nodes(const NodePairSet& set) {
  std::string out = "{";
  for (size_t k = 0; k < set.size(); ++k) {
    if (k) out += ",";
    out += "(" + std::to_string(set[k].t) + "," + std::to_string(set[k].s) + ")";
  }
  return out + "}";
}

}  // namespace hyperlow
