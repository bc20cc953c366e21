#ifndef HYPERLOW_CRITERIA_HPP
#define HYPERLOW_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperlow/combinatorics.hpp"
#include "hyperlow/matching.hpp"

namespace hyperlow {

// Does T_{i,j}^{(d)}(M,1) f_{mu,lambda} give a nonzero U(n-1)-high weight
// vector? j == n is the terminal case, j < n the inner case.
struct CriterionQuery {
  BranchContext ctx;
  int i = 0;
  int j = 0;
  int d = 0;
  std::vector<int> M;  // strictly increasing subset of (i..j)

  void validate() const;
};

// gamma : M -> pairs, listed in increasing order of M.
using Gamma = std::vector<std::pair<int, Node>>;

struct KWitness {
  std::vector<int> K;
  Gamma gamma;
  std::optional<Node> free_node;  // pair of the K-set left uncovered
};

struct CriterionVerdict {
  bool holds = false;
  std::string reason;             // empty when holds
  Gamma gamma;                    // terminal case
  std::vector<KWitness> per_k;    // inner case, one entry per K
};

CriterionVerdict check_terminal(const CriterionQuery& q);
CriterionVerdict check_inner(const CriterionQuery& q);
CriterionVerdict check(const CriterionQuery& q);

struct TerminalExistence {
  std::vector<int> M;
  InjectionWitness epsilon;  // (t,s) -> (m)
  Gamma gamma;               // inverse of epsilon
};

// Some M with T_{i,n}^{(d)}(M,1) f_{mu,lambda} nonzero and high.
std::optional<TerminalExistence> exists_m_terminal(const BranchContext& ctx,
                                                   int i, int d);

enum class InnerMode {
  Injections,  // epsilon and tau
  Cones        // epsilon and one theta_K per K, searched over all images
};

struct InnerExistence {
  std::vector<int> M;
  InjectionWitness epsilon;
  std::optional<InjectionWitness> tau;  // Injections mode
  std::vector<std::pair<std::vector<int>, InjectionWitness>> theta;  // Cones
};

std::optional<InnerExistence> exists_m_inner(const BranchContext& ctx, int i,
                                             int j, int d,
                                             InnerMode mode = InnerMode::Injections);

std::string format_gamma(const Gamma& gamma);

}  // namespace hyperlow

#endif
