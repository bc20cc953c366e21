#ifndef HYPERLOW_MATCHING_HPP
#define HYPERLOW_MATCHING_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperlow {

// Augmenting-path bipartite matcher. Neighbours are tried in the order given,
// so with sorted adjacency lists the result is deterministic.
class BipartiteMatcher {
 public:
  static constexpr int kFree = -1;

  BipartiteMatcher(int left, int right);

  void add_edge(int u, int v);
  // Forbid a right vertex; it is never used by later augmentations.
  void block_right(int v);

  // Try to match left vertex u without unmatching any matched vertex.
  bool augment_left(int u);
  // Try to match right vertex v without unmatching any matched vertex.
  bool augment_right(int v);

  int match_of_left(int u) const { return left_match_[u]; }
  int match_of_right(int v) const { return right_match_[v]; }
  int left_size() const { return static_cast<int>(adj_.size()); }
  int right_size() const { return static_cast<int>(radj_.size()); }

 private:
  bool dfs_left(int u, std::vector<char>& seen_right);
  bool dfs_right(int v, std::vector<char>& seen_left);

  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> radj_;
  std::vector<int> left_match_;
  std::vector<int> right_match_;
  std::vector<char> blocked_;
};

using Tuple = std::vector<int>;

enum class Monotone { Increasing, Decreasing, Free };

// Per-coordinate constraint between a source and its image. Coordinate k of
// the target is compared with coordinate k of the source; extra coordinates
// on either side are unconstrained.
struct OrderSpec {
  std::vector<Monotone> coords;
  bool admits(const Tuple& source, const Tuple& target) const;
};

struct InjectionWitness {
  std::vector<std::pair<Tuple, Tuple>> assignment;  // source order
};

// Injection A -> B respecting spec, or nothing.
std::optional<InjectionWitness> find_monotone_injection(
    std::span<const Tuple> A, std::span<const Tuple> B, const OrderSpec& spec);

// True iff witness is an injection from A into B respecting spec.
bool validate_injection(std::span<const Tuple> A, std::span<const Tuple> B,
                        const OrderSpec& spec, const InjectionWitness& witness);

using Precedes = std::function<bool(const Tuple&, const Tuple&)>;

// Cone criterion for an injection x -> alpha(x) with x precedes alpha(x):
// every up-set generated by an antichain of A contains at least as many
// elements of B as of A.
bool hall_cone_check(std::span<const Tuple> A, std::span<const Tuple> B,
                     const Precedes& precedes);

// (a,b) precedes (x,y) iff a <= x and b >= y.
bool product_precedes(const Tuple& lhs, const Tuple& rhs);

std::string format_tuple(const Tuple& t);

}  // namespace hyperlow

#endif
