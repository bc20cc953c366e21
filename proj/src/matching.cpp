#include "hyperlow/matching.hpp"

#include <algorithm>
#include <set>

#include "hyperlow/combinatorics.hpp"

namespace hyperlow {

BipartiteMatcher::BipartiteMatcher(int left, int right)
    : adj_(left), radj_(right), left_match_(left, kFree),
      right_match_(right, kFree), blocked_(right, 0) {}

void BipartiteMatcher::add_edge(int u, int v) {
  adj_.at(u).push_back(v);
  radj_.at(v).push_back(u);
}

void BipartiteMatcher::block_right(int v) {
  if (right_match_.at(v) != kFree) {
    throw PreconditionError("cannot block a matched vertex");
  }
  blocked_[v] = 1;
}

bool BipartiteMatcher::dfs_left(int u, std::vector<char>& seen_right) {
  for (int v : adj_[u]) {
    if (blocked_[v] || seen_right[v]) continue;
    seen_right[v] = 1;
    if (right_match_[v] == kFree || dfs_left(right_match_[v], seen_right)) {
      left_match_[u] = v;
      right_match_[v] = u;
      return true;
    }
  }
  return false;
}

bool BipartiteMatcher::dfs_right(int v, std::vector<char>& seen_left) {
  for (int u : radj_[v]) {
    if (seen_left[u]) continue;
    seen_left[u] = 1;
    if (left_match_[u] == kFree || dfs_right(left_match_[u], seen_left)) {
      right_match_[v] = u;
      left_match_[u] = v;
      return true;
    }
  }
  return false;
}

bool BipartiteMatcher::augment_left(int u) {
  if (left_match_.at(u) != kFree) return true;
  std::vector<char> seen(radj_.size(), 0);
  return dfs_left(u, seen);
}

bool BipartiteMatcher::augment_right(int v) {
  if (right_match_.at(v) != kFree) return true;
  if (blocked_[v]) return false;
  std::vector<char> seen(adj_.size(), 0);
  return dfs_right(v, seen);
}

bool OrderSpec::admits(const Tuple& source, const Tuple& target) const {
  size_t n = std::min({coords.size(), source.size(), target.size()});
  for (size_t k = 0; k < n; ++k) {
    switch (coords[k]) {
      case Monotone::Increasing:
        if (target[k] < source[k]) return false;
        break;
      case Monotone::Decreasing:
        if (target[k] > source[k]) return false;
        break;
      case Monotone::Free:
        break;
    }
  }
  return true;
}

std::optional<InjectionWitness> find_monotone_injection(
    std::span<const Tuple> A, std::span<const Tuple> B, const OrderSpec& spec) {
  if (A.size() > B.size()) return std::nullopt;
  std::vector<int> ai(A.size()), bi(B.size());
  for (size_t k = 0; k < A.size(); ++k) ai[k] = static_cast<int>(k);
  for (size_t k = 0; k < B.size(); ++k) bi[k] = static_cast<int>(k);
  auto by_value = [](std::span<const Tuple> s) {
    return [s](int x, int y) { return s[x] < s[y]; };
  };
  std::sort(ai.begin(), ai.end(), by_value(A));
  std::sort(bi.begin(), bi.end(), by_value(B));

  BipartiteMatcher m(static_cast<int>(A.size()), static_cast<int>(B.size()));
  for (size_t u = 0; u < ai.size(); ++u) {
    for (size_t v = 0; v < bi.size(); ++v) {
      if (spec.admits(A[ai[u]], B[bi[v]])) {
        m.add_edge(static_cast<int>(u), static_cast<int>(v));
      }
    }
  }
  for (size_t u = 0; u < ai.size(); ++u) {
    if (!m.augment_left(static_cast<int>(u))) return std::nullopt;
  }
  InjectionWitness w;
  for (size_t u = 0; u < ai.size(); ++u) {
    w.assignment.emplace_back(A[ai[u]], B[bi[m.match_of_left(static_cast<int>(u))]]);
  }
  return w;
}

bool validate_injection(std::span<const Tuple> A, std::span<const Tuple> B,
                        const OrderSpec& spec, const InjectionWitness& witness) {
  if (witness.assignment.size() != A.size()) return false;
  std::multiset<Tuple> sources(A.begin(), A.end());
  std::set<Tuple> targets_in_b(B.begin(), B.end());
  std::set<Tuple> used;
  for (const auto& [src, dst] : witness.assignment) {
    auto it = sources.find(src);
    if (it == sources.end()) return false;
    sources.erase(it);
    if (!targets_in_b.count(dst) || !used.insert(dst).second) return false;
    if (!spec.admits(src, dst)) return false;
  }
  return sources.empty();
}

bool hall_cone_check(std::span<const Tuple> A, std::span<const Tuple> B,
                     const Precedes& precedes) {
  const size_t na = A.size();
  std::vector<size_t> chosen;
  bool ok = true;
  // Depth-first enumeration of antichains of A by increasing index.
  auto rec = [&](auto&& self, size_t from) -> void {
    if (!ok) return;
    if (!chosen.empty()) {
      auto in_cone = [&](const Tuple& y) {
        for (size_t g : chosen) {
          if (precedes(A[g], y)) return true;
        }
        return false;
      };
      size_t ca = 0, cb = 0;
      for (const Tuple& a : A) ca += in_cone(a);
      for (const Tuple& b : B) cb += in_cone(b);
      if (ca > cb) {
        ok = false;
        return;
      }
    }
    for (size_t k = from; k < na; ++k) {
      bool comparable = false;
      for (size_t g : chosen) {
        if (A[g] == A[k] || precedes(A[g], A[k]) || precedes(A[k], A[g])) {
          comparable = true;
          break;
        }
      }
      if (comparable) continue;
      chosen.push_back(k);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return ok;
}

bool product_precedes(const Tuple& lhs, const Tuple& rhs) {
  return lhs.at(0) <= rhs.at(0) && lhs.at(1) >= rhs.at(1);
}

std::string format_tuple(const Tuple& t) {
  if (t.size() == 1) return std::to_string(t[0]);
  std::string out = "(";
  for (size_t k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(t[k]);
  }
  return out + ")";
}

}  // namespace hyperlow
