#ifndef HYPERLOW_COMBINATORICS_HPP
#define HYPERLOW_COMBINATORICS_HPP

#include <compare>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hyperlow {

// Raised when a caller violates a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Integer tuple indexed from 1. Entries may be negative.
class Weight {
 public:
  Weight() = default;
  Weight(std::initializer_list<int> entries) : v_(entries) {}
  explicit Weight(std::vector<int> entries) : v_(std::move(entries)) {}

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  // 1-based access; throws on out-of-range.
  int at(int i) const;
  int& at(int i);
  const std::vector<int>& entries() const { return v_; }
  long sum() const;

  bool dominant() const;
  // (w_1..w_{n-1})
  Weight truncated() const;
  Weight with_delta(int i, int delta) const;

  std::string str() const;

  auto operator<=>(const Weight&) const = default;

 private:
  std::vector<int> v_;
};

Weight parse_weight(const std::string& text);

// mu interlaces lambda: lambda_{i+1} <= mu_i <= lambda_i for i < n.
bool interlaces(const Weight& mu, const Weight& lambda);

// Nonnegative representative of value mod p.
int residue_mod(long value, int p);

bool is_prime(int p);

struct BranchContext {
  Weight lambda;  // length n
  Weight mu;      // length n-1
  int p = 0;

  int n() const { return lambda.size(); }
  // Throws PreconditionError unless p is prime, both weights are dominant
  // and mu interlaces lambda.
  void validate() const;
};

struct Node {
  int t = 0;
  int s = 0;
  auto operator<=>(const Node&) const = default;
};

using ColumnSet = std::vector<int>;
using NodePairSet = std::vector<Node>;

// Residue kinds used by the node sets and the decision procedures.
struct BMuLambda {};                 // t - i + mu_i - lambda_{t+1}
struct BMuLambdaK { int k = 0; };    // mu_{t+1} when k <= t, else lambda_{t+1}
struct CMu {};                       // t - i + mu_i - mu_t
struct BCk {                         // B(i,t) at lambda, shifted by C
  std::vector<long> C;               // c_1..c_{n-1}; c_0 = c_n = 0
  int k = 0;
};
using ResidueKind = std::variant<BMuLambda, BMuLambdaK, CMu, BCk>;

int residue(const ResidueKind& kind, const BranchContext& ctx, int i, int t);

// Integer value before reduction. Exposed for tests and diagnostics.
long residue_value(const ResidueKind& kind, const BranchContext& ctx, int i,
                   int t);

struct NodeSets {
  ColumnSet c_mu;                     // t in (i..j)
  std::optional<NodePairSet> x_mu;    // only when j < n
  NodePairSet x_mu_lambda;
};

NodeSets node_sets(const BranchContext& ctx, int i, int j, int d);

ColumnSet c_mu_set(const BranchContext& ctx, int i, int j);
NodePairSet x_mu_set(const BranchContext& ctx, int i, int j, int d);
NodePairSet x_mu_lambda_set(const BranchContext& ctx, int i, int j, int d);

// Disjoint union of x_mu_lambda on {t < k_s} and x_mu on {t >= k_s}.
NodePairSet node_set_K(const BranchContext& ctx, int i, int j, int d,
                       const std::vector<int>& K);

// All weakly increasing K in [lo..hi]^d in lexicographic order.
std::vector<std::vector<int>> weakly_increasing_sequences(int lo, int hi,
                                                          int d);

// All subsets of the open interval (lo..hi) in a fixed order.
std::vector<std::vector<int>> subsets_of_open_interval(int lo, int hi);

// Dominant lambda of length n with lambda_n = 0 and consecutive gaps < p.
std::vector<Weight> restricted_weights(int p, int n);

// All mu of length n-1 interlacing lambda, lexicographically decreasing.
std::vector<Weight> interlacing_weights(const Weight& lambda);

std::string format_columns(const ColumnSet& set);
std::string format_nodes(const NodePairSet& set);

}  // namespace hyperlow

#endif
