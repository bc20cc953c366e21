#ifndef HYPERLOW_MODREP_HPP
#define HYPERLOW_MODREP_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hyperlow/combinatorics.hpp"
#include "hyperlow/fp.hpp"
#include "hyperlow/symbolic.hpp"

namespace hyperlow {

// E_{a,b}^{(r)} (raising) or F_{a,b}^{(r)} (lowering), a < b.
struct Op {
  bool raising = true;
  int a = 1;
  int b = 2;
  int r = 1;

  static Op E(int a, int b, int r = 1) { return {true, a, b, r}; }
  static Op F(int a, int b, int r = 1) { return {false, a, b, r}; }
  static Op E(int i) { return E(i, i + 1, 1); }
  Op swapped() const { return {!raising, a, b, r}; }
  Weight shift(const Weight& w) const;
  auto operator<=>(const Op&) const = default;
};

struct WeightBlock {
  Weight weight;
  size_t dim = 0;
};

// Vector stored block by block; blocks absent from the map are zero.
struct ModuleVector {
  std::map<size_t, std::vector<Fp>> parts;

  bool is_zero() const;
  void prune();
  void add_scaled(const ModuleVector& o, Fp c, int p);
};

enum class ModuleKind { Weyl, Simple, CoWeyl };

std::string module_kind_name(ModuleKind k);

// A finite-dimensional module over F_p with its weight decomposition and
// lazily computed divided-power operator matrices.
class ModuleRealization {
 public:
  virtual ~ModuleRealization() = default;

  ModuleKind kind() const { return kind_; }
  const Weight& highest_weight() const { return highest_; }
  int p() const { return p_; }
  int n() const { return highest_.size(); }
  size_t dimension() const;
  const std::vector<WeightBlock>& blocks() const { return blocks_; }
  std::optional<size_t> block_of(const Weight& w) const;

  // Matrix of op on block src, or nullptr if the target weight is absent.
  const FpMatrix* op_matrix(const Op& op, size_t src) const;
  ModuleVector apply(const Op& op, const ModuleVector& v) const;

  ModuleVector unit(size_t block, size_t k) const;

 protected:
  ModuleRealization(ModuleKind kind, Weight highest, int p)
      : kind_(kind), highest_(std::move(highest)), p_(p) {}
  void set_blocks(std::vector<WeightBlock> blocks);
  virtual FpMatrix compute(const Op& op, size_t src, size_t dst) const = 0;

 private:
  ModuleKind kind_;
  Weight highest_;
  int p_;
  std::vector<WeightBlock> blocks_;
  std::map<Weight, size_t> index_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Op, size_t>, std::optional<FpMatrix>> cache_;
};

class WeylModule;

// Weyl module inside a tensor product of exterior powers. Throws
// std::logic_error if the dimension disagrees with the Weyl formula.
std::shared_ptr<const WeylModule> build_weyl(const Weight& lambda, int p);

// The simple head, realized as Weyl modulo the radical of the form.
std::shared_ptr<const ModuleRealization> simple_quotient(
    const std::shared_ptr<const WeylModule>& weyl);

// The contravariant dual of the Weyl module.
std::shared_ptr<const ModuleRealization> dual_realization(
    const std::shared_ptr<const WeylModule>& weyl);

std::shared_ptr<const ModuleRealization> as_realization(
    const std::shared_ptr<const WeylModule>& weyl);

BigInt weyl_dimension(const Weight& lambda);

struct HighWeightSpace {
  Weight weight;                       // GL_n weight of the block
  std::vector<std::vector<Fp>> basis;  // block coordinates
};

// Vectors killed by E_l^{(r)} for l <= n-2 and all r > 0.
std::vector<HighWeightSpace> high_weight_vectors(const ModuleRealization& m);

bool is_high_weight_vector(const ModuleRealization& m, const ModuleVector& v);

// a_t = sum_{s<=t} (lambda_s - nu_s), t = 1..n-1.
std::vector<int> raising_exponents(const Weight& lambda, const Weight& nu);

// Scalar c with E_1^{(a_1)}...E_{n-1}^{(a_{n-1})} v = c f_lambda.
Fp cf(const ModuleRealization& nabla, const ModuleVector& v);

// The high weight vector of GL_{n-1}-weight mu normalized by cf = 1.
ModuleVector normalized_f(const ModuleRealization& nabla, const Weight& mu);

// The lowest-index basis vector of the highest block.
ModuleVector highest_vector(const ModuleRealization& m);

// sum_N pi_nu(h_N) F^{(N)} v for homogeneous v of weight nu.
ModuleVector apply_lowering(const ModuleRealization& m,
                            const LoweringElement& T, const ModuleVector& v);

// GL_{n-1} weights mu with a nonzero high weight vector in L(lambda).
std::set<Weight> normal_weights_bruteforce(const Weight& lambda, int p);

}  // namespace hyperlow

#endif
