#ifndef HYPERLOW_SYMBOLIC_HPP
#define HYPERLOW_SYMBOLIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlow/combinatorics.hpp"
#include "hyperlow/polynomial.hpp"

namespace hyperlow {

// Strictly upper triangular nonnegative integer matrix, stored sparsely in
// the order of the divided-power factors of F^{(N)}: by column, then row.
class UTMatrix {
 public:
  struct Entry {
    int a = 0;
    int b = 0;
    int count = 0;
    auto operator<=>(const Entry&) const = default;
  };

  UTMatrix() = default;
  void add(int a, int b, int count);
  int at(int a, int b) const;
  // N_t: sum of column t.
  int column_sum(int t) const;
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int max_column() const;
  int min_row() const;
  std::string str() const;  // "[(1,3,1)]"

  friend UTMatrix operator+(const UTMatrix& x, const UTMatrix& y);
  bool operator==(const UTMatrix&) const = default;
  bool operator<(const UTMatrix& o) const { return entries_ < o.entries_; }

 private:
  std::vector<Entry> entries_;  // sorted by (b, a), counts positive
};

// Moving a Cartan polynomial to the right past F^{(N)}:
// H_i -> H_i + sum_{a<i} N_{a,i} - sum_{b>i} N_{i,b}.
Polynomial shift_past(const Polynomial& f, const UTMatrix& N);

// C(i,t) = t - i + H_i - H_t.
Polynomial cartan_C(int i, int t);
// B(i,t) = t - i + H_i - H_{t+1}.
Polynomial cartan_B(int i, int t);

// Element sum_N F^{(N)} h_N of the lowering part tensored with the
// Cartan part, with nonzero coefficients only.
class LoweringElement {
 public:
  void add(const UTMatrix& N, const Polynomial& h);
  const std::map<UTMatrix, Polynomial>& terms() const { return terms_; }
  bool operator==(const LoweringElement&) const = default;
  // One line per term: "N: [(1,3,1)] coeff: 1".
  std::string str() const;

 private:
  std::map<UTMatrix, Polynomial> terms_;
};

// N with sum_{a<=t<b} N_{a,b} = d for t in [i..j) and 0 elsewhere.
std::vector<UTMatrix> pbw_support(int i, int j, int d);

// The operator S_{i,j} as a sum over subsets A of (i..j).
LoweringElement carter_lusztig(int i, int j);

// S_{i,j}^d in closed form.
LoweringElement expand_S_power(int i, int j, int d);

// T_{i,j}^{(d)}(M,1), integrally, by the nested P-polynomial recursion.
LoweringElement expand_T(int i, int j, int d, const std::vector<int>& M);

// Same element computed from the recursive definition with exact division
// by C(i,m). Used as an independent cross-check.
LoweringElement expand_T_by_definition(int i, int j, int d,
                                       const std::vector<int>& M);

// Product X*Y where every factor of X has column <= m and every factor of Y
// has row >= m, so the divided powers simply concatenate.
LoweringElement split_product(const LoweringElement& X,
                              const LoweringElement& Y, int m);

enum class RationalTag { One, InvZetaMinusD, InvZetaMinusDMinus1 };

std::string rational_tag_name(RationalTag R);
RationalTag parse_rational_tag(const std::string& text);

class InadmissibleRational : public IntegralityError {
 public:
  using IntegralityError::IntegralityError;
};

// c_0 = c_n = 0; n = |C| + 1.
long shift_entry(const std::vector<long>& C, int index);

// B^{C,k}(i,t) = B(i,t) + c_{i-1} - c_i + [t >= k](c_{t+1} - c_t).
Polynomial cartan_B_shifted(const std::vector<long>& C, int k, int i, int t);

Polynomial zeta_factor(const std::vector<long>& C, int i, int m,
                       const std::vector<int>& K);

// The rho polynomial. K weakly increasing in [i..j]^d, |L| in {d, d+1}.
Polynomial rho(const std::vector<long>& C, int i, int j,
               const std::vector<int>& K, const std::vector<long>& L,
               const std::vector<int>& M, RationalTag R);

// Image under pi_lambda, reduced mod p.
int evaluate_mod_p(const Polynomial& f, const Weight& lambda, int p);

// phi : M -> pairs (t,s) with t >= m. Returns d^{falling r} times the
// product of B^{C,k_s}(i,t) - d + s over pairs outside the image of phi,
// evaluated at lambda mod p. Throws unless every generator
// B^{C,k_{s_h}}(m_h,t_h) - d + s_h vanishes at lambda mod p.
int commpoly1_product(const BranchContext& ctx, const std::vector<long>& C,
                      int i, int j, const std::vector<int>& K,
                      const std::vector<int>& M,
                      const std::vector<std::pair<int, Node>>& phi);

Polynomial f_poly(int i, int j, int d, const std::vector<int>& M);
Polynomial g_poly(int i, int j, int d, const std::vector<int>& M);
std::pair<Polynomial, Polynomial> fg_polynomials(int i, int j, int d,
                                                 const std::vector<int>& M);
// Product of g over the chain i < N < l, each restricted to M.
Polynomial G_poly(int i, int l, int d, const std::vector<int>& M,
                  const std::vector<int>& N);

// y_t -> t - 1 - H_t, x_t -> t - H_t - c_{t-1} + c_t.
Polynomial specialize_xy(const Polynomial& f, const std::vector<long>& C);

// Bounded-degree search over Q for f = sum_k h_k gens_k. Cofactor degrees
// are at most deg f - deg gens_k + slack.
bool in_ideal_bounded(const Polynomial& f, const std::vector<Polynomial>& gens,
                      int slack);

}  // namespace hyperlow

#endif
