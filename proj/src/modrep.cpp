#include "hyperlow/modrep.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace hyperlow {

Weight Op::shift(const Weight& w) const {
  int sign = raising ? 1 : -1;
  return w.with_delta(a, sign * r).with_delta(b, -sign * r);
}

bool ModuleVector::is_zero() const {
  for (const auto& [b, v] : parts) {
    for (Fp x : v) {
      if (x) return false;
    }
  }
  return true;
}

void ModuleVector::prune() {
  for (auto it = parts.begin(); it != parts.end();) {
    bool zero = std::all_of(it->second.begin(), it->second.end(),
                            [](Fp x) { return x == 0; });
    it = zero ? parts.erase(it) : std::next(it);
  }
}

void ModuleVector::add_scaled(const ModuleVector& o, Fp c, int p) {
  if (c % p == 0) return;
  for (const auto& [b, v] : o.parts) {
    auto& dst = parts[b];
    if (dst.empty()) dst.assign(v.size(), 0);
    for (size_t k = 0; k < v.size(); ++k) {
      dst[k] = static_cast<Fp>((dst[k] + 1ULL * c * v[k]) % p);
    }
  }
  prune();
}

std::string module_kind_name(ModuleKind k) {
  switch (k) {
    case ModuleKind::Weyl: return "weyl";
    case ModuleKind::Simple: return "simple";
    case ModuleKind::CoWeyl: return "coweyl";
  }
  return "?";
}

size_t ModuleRealization::dimension() const {
  size_t d = 0;
  for (const auto& b : blocks_) d += b.dim;
  return d;
}

std::optional<size_t> ModuleRealization::block_of(const Weight& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void ModuleRealization::set_blocks(std::vector<WeightBlock> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) {
    return x.weight > y.weight;
  });
  blocks_ = std::move(blocks);
  index_.clear();
  for (size_t k = 0; k < blocks_.size(); ++k) index_[blocks_[k].weight] = k;
}

const FpMatrix* ModuleRealization::op_matrix(const Op& op, size_t src) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(op, src);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    auto dst = block_of(op.shift(blocks_.at(src).weight));
    std::optional<FpMatrix> m;
    if (dst) m = compute(op, src, *dst);
    it = cache_.emplace(key, std::move(m)).first;
  }
  return it->second ? &*it->second : nullptr;
}

ModuleVector ModuleRealization::apply(const Op& op, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [src, coords] : v.parts) {
    const FpMatrix* m = op_matrix(op, src);
    if (!m) continue;
    size_t dst = *block_of(op.shift(blocks_[src].weight));
    ModuleVector piece;
    piece.parts[dst] = m->apply(coords);
    out.add_scaled(piece, 1, p_);
  }
  return out;
}

ModuleVector ModuleRealization::unit(size_t block, size_t k) const {
  ModuleVector v;
  v.parts[block].assign(blocks_.at(block).dim, 0);
  v.parts[block].at(k) = 1;
  return v;
}

// ---- tensor space of exterior powers ---------------------------------------

namespace {

using Key = std::vector<std::uint16_t>;  // one bitmask per column

struct KeyHash {
  size_t operator()(const Key& k) const {
    size_t h = 1469598103934665603ULL;
    for (auto x : k) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

using SparseVec = std::vector<std::pair<std::uint32_t, Fp>>;  // sorted

Fp lookup(const SparseVec& v, std::uint32_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(idx, Fp{0}));
  return it != v.end() && it->first == idx ? it->second : 0;
}

SparseVec from_accumulator(const std::unordered_map<std::uint32_t, long long>& acc,
                           int p) {
  SparseVec out;
  for (const auto& [i, c] : acc) {
    Fp r = fp_reduce(c, p);
    if (r) out.emplace_back(i, r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

class TensorSpace {
 public:
  TensorSpace(std::vector<int> heights, int n) : heights_(std::move(heights)), n_(n) {}

  std::uint32_t intern(const Key& k) {
    auto [it, inserted] = index_.try_emplace(k, static_cast<std::uint32_t>(keys_.size()));
    if (inserted) keys_.push_back(k);
    return it->second;
  }
  const Key& key(std::uint32_t i) const { return keys_[i]; }

  Key top() const {
    Key k;
    for (int h : heights_) k.push_back(static_cast<std::uint16_t>((1u << h) - 1));
    return k;
  }

  // Eligible columns for e_from -> e_to.
  int eligible(const Key& k, int from, int to) const {
    std::uint16_t f = 1u << (from - 1), t = 1u << (to - 1);
    int c = 0;
    for (auto m : k) c += (m & f) && !(m & t);
    return c;
  }

  // X^{(r)} sending e_from to e_to, applied to a sparse vector.
  SparseVec act(const SparseVec& v, int from, int to, int r, int p) {
    std::unordered_map<std::uint32_t, long long> acc;
    const std::uint16_t f = 1u << (from - 1), t = 1u << (to - 1);
    const int lo = std::min(from, to), hi = std::max(from, to);
    std::uint16_t between = 0;
    for (int b = lo + 1; b < hi; ++b) between |= 1u << (b - 1);
    std::vector<size_t> cols;
    std::vector<size_t> pick;
    for (const auto& [idx, coef] : v) {
      const Key base = keys_[idx];
      cols.clear();
      for (size_t c = 0; c < base.size(); ++c) {
        if ((base[c] & f) && !(base[c] & t)) cols.push_back(c);
      }
      if (static_cast<int>(cols.size()) < r) continue;
      pick.clear();
      auto rec = [&](auto&& self, size_t from_col) -> void {
        if (static_cast<int>(pick.size()) == r) {
          Key k = base;
          int sign = 1;
          for (size_t c : pick) {
            if (__builtin_popcount(k[c] & between) & 1) sign = -sign;
            k[c] = static_cast<std::uint16_t>((k[c] & ~f) | t);
          }
          acc[intern(k)] += sign * static_cast<long long>(coef);
          return;
        }
        for (size_t q = from_col; q < cols.size(); ++q) {
          pick.push_back(cols[q]);
          self(self, q + 1);
          pick.pop_back();
        }
      };
      rec(rec, 0);
    }
    return from_accumulator(acc, p);
  }

  long long dot(const SparseVec& x, const SparseVec& y, int p) const {
    long long acc = 0;
    size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
      if (x[i].first < y[j].first) ++i;
      else if (y[j].first < x[i].first) ++j;
      else acc = (acc + 1LL * x[i++].second * y[j++].second) % p;
    }
    return acc;
  }

 private:
  std::vector<int> heights_;
  int n_;
  std::unordered_map<Key, std::uint32_t, KeyHash> index_;
  std::vector<Key> keys_;
};

// Reduced echelon basis of one weight space, rows as tensor vectors.
struct EchelonBlock {
  Weight weight;
  std::vector<SparseVec> rows;
  std::vector<std::uint32_t> pivots;  // pivot of rows[k]
  std::unordered_map<std::uint32_t, size_t> row_of_pivot;

  std::vector<Fp> coords(const SparseVec& w) const {
    std::vector<Fp> c(rows.size(), 0);
    for (const auto& [idx, coef] : w) {
      auto it = row_of_pivot.find(idx);
      if (it != row_of_pivot.end()) c[it->second] = coef;
    }
    return c;
  }

  SparseVec reduce(const SparseVec& w, int p) const {
    auto c = coords(w);
    std::unordered_map<std::uint32_t, long long> acc;
    for (const auto& [idx, coef] : w) acc[idx] += coef;
    for (size_t k = 0; k < rows.size(); ++k) {
      if (!c[k]) continue;
      for (const auto& [idx, coef] : rows[k]) {
        acc[idx] += static_cast<long long>(p - c[k]) * coef;
      }
    }
    return from_accumulator(acc, p);
  }

  // u must be reduced and nonzero.
  void insert(SparseVec u, int p) {
    std::uint32_t piv = u.front().first;
    Fp inv = fp_inverse(u.front().second, p);
    for (auto& [idx, coef] : u) coef = static_cast<Fp>(1ULL * coef * inv % p);
    for (auto& row : rows) {
      Fp f = lookup(row, piv);
      if (!f) continue;
      std::unordered_map<std::uint32_t, long long> acc;
      for (const auto& [idx, coef] : row) acc[idx] += coef;
      for (const auto& [idx, coef] : u) acc[idx] += static_cast<long long>(p - f) * coef;
      row = from_accumulator(acc, p);
    }
    row_of_pivot[piv] = rows.size();
    pivots.push_back(piv);
    rows.push_back(std::move(u));
  }
};

std::vector<int> conjugate_heights(const Weight& shifted) {
  std::vector<int> heights;
  int top = shifted.size() ? shifted.at(1) : 0;
  for (int c = 1; c <= top; ++c) {
    int h = 0;
    for (int i = 1; i <= shifted.size(); ++i) h += shifted.at(i) >= c;
    heights.push_back(h);
  }
  return heights;
}

}  // namespace

// ---- Weyl module ----------------------------------------------------------

class WeylModule : public ModuleRealization {
 public:
  WeylModule(const Weight& lambda, int p);

  // Gram matrix of the contravariant form on a block.
  FpMatrix gram(size_t block) const;
  const FpMatrix& gram_cached(size_t block) const;

 protected:
  FpMatrix compute(const Op& op, size_t src, size_t dst) const override;

 private:
  int shift_ = 0;
  mutable std::mutex tensor_mutex_;
  mutable TensorSpace tensor_;
  std::vector<EchelonBlock> echelon_;  // aligned with blocks()
  mutable std::map<size_t, FpMatrix> gram_cache_;
};

namespace {

int shift_for(const Weight& lambda) {
  int last = lambda.at(lambda.size());
  return last < 0 ? -last : 0;
}

Weight shifted_weight(const Weight& lambda, int shift) {
  std::vector<int> w = lambda.entries();
  for (int& x : w) x += shift;
  return Weight(w);
}

}  // namespace

WeylModule::WeylModule(const Weight& lambda, int p)
    : ModuleRealization(ModuleKind::Weyl, lambda, p),
      shift_(shift_for(lambda)),
      tensor_(conjugate_heights(shifted_weight(lambda, shift_for(lambda))),
              lambda.size()) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (!lambda.dominant() || lambda.size() < 1) {
    throw PreconditionError("lambda must be dominant");
  }
  const int n = lambda.size();
  std::map<Weight, EchelonBlock> work;
  std::deque<std::pair<Weight, SparseVec>> queue;
  SparseVec top{{tensor_.intern(tensor_.top()), 1}};
  work[lambda].weight = lambda;
  work[lambda].insert(top, p);
  queue.emplace_back(lambda, top);
  const int rmax = lambda.at(1) - lambda.at(n);
  while (!queue.empty()) {
    auto [w, vec] = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      for (int r = 1; r <= rmax; ++r) {
        SparseVec u = tensor_.act(vec, i, i + 1, r, p);
        if (u.empty()) continue;
        Weight target = Op::F(i, i + 1, r).shift(w);
        EchelonBlock& blk = work[target];
        blk.weight = target;
        SparseVec red = blk.reduce(u, p);
        if (red.empty()) continue;
        blk.insert(red, p);
        queue.emplace_back(target, std::move(red));
      }
    }
  }
  std::vector<WeightBlock> blocks;
  for (auto& [w, blk] : work) {
    if (!blk.rows.empty()) blocks.push_back({w, blk.rows.size()});
  }
  set_blocks(blocks);
  echelon_.resize(this->blocks().size());
  for (auto& [w, blk] : work) {
    if (auto b = block_of(w)) echelon_[*b] = std::move(blk);
  }
  BigInt expected = weyl_dimension(lambda);
  if (BigInt(dimension()) != expected) {
    throw std::logic_error("Weyl module of " + lambda.str() + " has dimension " +
                           std::to_string(dimension()) + ", expected " +
                           expected.str());
  }
}

FpMatrix WeylModule::compute(const Op& op, size_t src, size_t dst) const {
  const int pp = p();
  const EchelonBlock& from = echelon_[src];
  const EchelonBlock& to = echelon_[dst];
  FpMatrix m(to.rows.size(), from.rows.size(), pp);
  const int e_from = op.raising ? op.b : op.a;
  const int e_to = op.raising ? op.a : op.b;
  for (size_t k = 0; k < from.rows.size(); ++k) {
    SparseVec u;
    {
      std::lock_guard<std::mutex> lock(tensor_mutex_);
      u = tensor_.act(from.rows[k], e_from, e_to, op.r, pp);
    }
    if (!to.reduce(u, pp).empty()) {
      throw std::logic_error("operator image left the Weyl module");
    }
    auto c = to.coords(u);
    for (size_t r = 0; r < c.size(); ++r) m.at(r, k) = c[r];
  }
  return m;
}

FpMatrix WeylModule::gram(size_t block) const {
  const EchelonBlock& blk = echelon_.at(block);
  FpMatrix g(blk.rows.size(), blk.rows.size(), p());
  for (size_t x = 0; x < blk.rows.size(); ++x) {
    for (size_t y = x; y < blk.rows.size(); ++y) {
      Fp v = static_cast<Fp>(tensor_.dot(blk.rows[x], blk.rows[y], p()));
      g.at(x, y) = v;
      g.at(y, x) = v;
    }
  }
  return g;
}

const FpMatrix& WeylModule::gram_cached(size_t block) const {
  std::lock_guard<std::mutex> lock(tensor_mutex_);
  auto it = gram_cache_.find(block);
  if (it == gram_cache_.end()) it = gram_cache_.emplace(block, gram(block)).first;
  return it->second;
}

std::shared_ptr<const WeylModule> build_weyl(const Weight& lambda, int p) {
  return std::make_shared<const WeylModule>(lambda, p);
}

std::shared_ptr<const ModuleRealization> as_realization(
    const std::shared_ptr<const WeylModule>& weyl) {
  return weyl;
}

BigInt weyl_dimension(const Weight& lambda) {
  BigInt num = 1, den = 1;
  for (int i = 1; i <= lambda.size(); ++i) {
    for (int j = i + 1; j <= lambda.size(); ++j) {
      num *= lambda.at(i) - lambda.at(j) + j - i;
      den *= j - i;
    }
  }
  return num / den;
}

// ---- contravariant dual ------------------------------------------------------

namespace {

class CoWeylModule : public ModuleRealization {
 public:
  explicit CoWeylModule(std::shared_ptr<const WeylModule> weyl)
      : ModuleRealization(ModuleKind::CoWeyl, weyl->highest_weight(), weyl->p()),
        weyl_(std::move(weyl)) {
    set_blocks(weyl_->blocks());
  }

 protected:
  FpMatrix compute(const Op& op, size_t /*src*/, size_t dst) const override {
    const FpMatrix* m = weyl_->op_matrix(op.swapped(), dst);
    if (!m) throw std::logic_error("dual operator lost its target");
    return m->transpose();
  }

 private:
  std::shared_ptr<const WeylModule> weyl_;
};

// Weyl modulo the radical of the form. A block basis is given by Weyl
// basis vectors whose Gram columns are independent.
class SimpleModule : public ModuleRealization {
 public:
  explicit SimpleModule(std::shared_ptr<const WeylModule> weyl)
      : ModuleRealization(ModuleKind::Simple, weyl->highest_weight(), weyl->p()),
        weyl_(std::move(weyl)) {
    std::vector<WeightBlock> blocks;
    for (size_t b = 0; b < weyl_->blocks().size(); ++b) {
      const FpMatrix& g = weyl_->gram_cached(b);
      auto piv = g.pivot_columns();
      if (piv.empty()) continue;
      const Weight& w = weyl_->blocks()[b].weight;
      blocks.push_back({w, piv.size()});
      chosen_[w] = piv;
    }
    set_blocks(blocks);
    validate_form();
  }

 protected:
  FpMatrix compute(const Op& op, size_t src, size_t dst) const override {
    const Weight& ws = blocks()[src].weight;
    const Weight& wd = blocks()[dst].weight;
    size_t wsrc = *weyl_->block_of(ws);
    size_t wdst = *weyl_->block_of(wd);
    const FpMatrix* m = weyl_->op_matrix(op, wsrc);
    const FpMatrix& g = weyl_->gram_cached(wdst);
    const auto& cs = chosen_.at(ws);
    const auto& cd = chosen_.at(wd);
    FpMatrix q(g.rows(), cd.size(), p());
    for (size_t r = 0; r < g.rows(); ++r) {
      for (size_t k = 0; k < cd.size(); ++k) q.at(r, k) = g.at(r, cd[k]);
    }
    FpMatrix out(cd.size(), cs.size(), p());
    for (size_t l = 0; l < cs.size(); ++l) {
      std::vector<Fp> e(m->cols(), 0);
      e[cs[l]] = 1;
      auto image = g.apply(m->apply(e));
      auto c = q.solve(image);
      if (!c) throw std::logic_error("simple quotient is not closed");
      for (size_t r = 0; r < cd.size(); ++r) out.at(r, l) = (*c)[r];
    }
    return out;
  }

 private:
  // <F x, y> = <x, E y> on simple roots.
  void validate_form() const {
    const auto& wb = weyl_->blocks();
    for (size_t b = 0; b < wb.size(); ++b) {
      for (int i = 1; i < weyl_->n(); ++i) {
        const FpMatrix* f = weyl_->op_matrix(Op::F(i, i + 1), b);
        if (!f) continue;
        size_t lower = *weyl_->block_of(Op::F(i, i + 1).shift(wb[b].weight));
        const FpMatrix* e = weyl_->op_matrix(Op::E(i), lower);
        FpMatrix lhs = f->transpose() * weyl_->gram_cached(lower);
        FpMatrix rhs = weyl_->gram_cached(b) * (*e);
        if (!(lhs == rhs)) {
          throw std::logic_error("form is not contravariant");
        }
      }
    }
  }

  std::shared_ptr<const WeylModule> weyl_;
  std::map<Weight, std::vector<size_t>> chosen_;
};

}  // namespace

std::shared_ptr<const ModuleRealization> simple_quotient(
    const std::shared_ptr<const WeylModule>& weyl) {
  return std::make_shared<const SimpleModule>(weyl);
}

std::shared_ptr<const ModuleRealization> dual_realization(
    const std::shared_ptr<const WeylModule>& weyl) {
  return std::make_shared<const CoWeylModule>(weyl);
}

// ---- queries ----------------------------------------------------------------

namespace {

std::vector<const FpMatrix*> raising_stack(const ModuleRealization& m, size_t b) {
  std::vector<const FpMatrix*> out;
  const Weight& lam = m.highest_weight();
  const int rmax = lam.at(1) - lam.at(lam.size());
  for (int l = 1; l <= m.n() - 2; ++l) {
    for (int r = 1; r <= rmax; ++r) {
      if (const FpMatrix* e = m.op_matrix(Op::E(l, l + 1, r), b)) out.push_back(e);
    }
  }
  return out;
}

}  // namespace

std::vector<HighWeightSpace> high_weight_vectors(const ModuleRealization& m) {
  std::vector<HighWeightSpace> out;
  for (size_t b = 0; b < m.blocks().size(); ++b) {
    const auto& blk = m.blocks()[b];
    auto parts = raising_stack(m, b);
    std::vector<std::vector<Fp>> basis;
    if (parts.empty()) {
      for (size_t k = 0; k < blk.dim; ++k) {
        std::vector<Fp> e(blk.dim, 0);
        e[k] = 1;
        basis.push_back(e);
      }
    } else {
      basis = FpMatrix::stack(parts, blk.dim, m.p()).kernel();
    }
    if (!basis.empty()) out.push_back({blk.weight, std::move(basis)});
  }
  return out;
}

bool is_high_weight_vector(const ModuleRealization& m, const ModuleVector& v) {
  if (v.is_zero()) return false;
  for (int l = 1; l <= m.n() - 2; ++l) {
    const Weight& lam = m.highest_weight();
    for (int r = 1; r <= lam.at(1) - lam.at(lam.size()); ++r) {
      if (!m.apply(Op::E(l, l + 1, r), v).is_zero()) return false;
    }
  }
  return true;
}

std::vector<int> raising_exponents(const Weight& lambda, const Weight& nu) {
  std::vector<int> a;
  int acc = 0;
  for (int t = 1; t < lambda.size(); ++t) {
    acc += lambda.at(t) - nu.at(t);
    a.push_back(acc);
  }
  return a;
}

Fp cf(const ModuleRealization& nabla, const ModuleVector& v) {
  if (v.is_zero()) return 0;
  if (v.parts.size() != 1) throw PreconditionError("cf needs a weight vector");
  const Weight& nu = nabla.blocks()[v.parts.begin()->first].weight;
  auto a = raising_exponents(nabla.highest_weight(), nu);
  ModuleVector u = v;
  for (int t = nabla.n() - 1; t >= 1; --t) {
    int r = a[t - 1];
    if (r < 0) return 0;
    if (r > 0) u = nabla.apply(Op::E(t, t + 1, r), u);
  }
  if (u.is_zero()) return 0;
  auto top = nabla.block_of(nabla.highest_weight());
  if (!top || u.parts.size() != 1 || u.parts.begin()->first != *top) {
    throw std::logic_error("raising did not reach the highest weight");
  }
  return u.parts.begin()->second.at(0);
}

ModuleVector normalized_f(const ModuleRealization& nabla, const Weight& mu) {
  const Weight& lam = nabla.highest_weight();
  if (!interlaces(mu, lam)) {
    throw PreconditionError(mu.str() + " does not interlace " + lam.str());
  }
  std::vector<int> w = mu.entries();
  w.push_back(static_cast<int>(lam.sum() - mu.sum()));
  auto b = nabla.block_of(Weight(w));
  if (!b) throw std::logic_error("missing weight space " + Weight(w).str());
  auto parts = raising_stack(nabla, *b);
  std::vector<std::vector<Fp>> basis;
  if (parts.empty()) {
    if (nabla.blocks()[*b].dim != 1) throw std::logic_error("expected a line");
    basis.push_back({1});
  } else {
    basis = FpMatrix::stack(parts, nabla.blocks()[*b].dim, nabla.p()).kernel();
  }
  if (basis.size() != 1) {
    throw std::logic_error("high weight space at " + mu.str() + " has dimension " +
                           std::to_string(basis.size()));
  }
  ModuleVector f;
  f.parts[*b] = basis[0];
  Fp c = cf(nabla, f);
  if (!c) throw std::logic_error("high weight vector has zero cf");
  ModuleVector out;
  out.add_scaled(f, fp_inverse(c, nabla.p()), nabla.p());
  return out;
}

ModuleVector highest_vector(const ModuleRealization& m) {
  auto b = m.block_of(m.highest_weight());
  if (!b) throw std::logic_error("highest weight missing");
  return m.unit(*b, 0);
}

ModuleVector apply_lowering(const ModuleRealization& m,
                            const LoweringElement& T, const ModuleVector& v) {
  ModuleVector out;
  if (v.is_zero()) return out;
  if (v.parts.size() != 1) throw PreconditionError("apply_lowering needs a weight vector");
  const Weight& nu = m.blocks()[v.parts.begin()->first].weight;
  for (const auto& [N, h] : T.terms()) {
    Fp c = static_cast<Fp>(evaluate_mod_p(h, nu, m.p()));
    if (!c) continue;
    ModuleVector u = v;
    const auto& entries = N.entries();
    for (auto it = entries.rbegin(); it != entries.rend() && !u.is_zero(); ++it) {
      u = m.apply(Op::F(it->a, it->b, it->count), u);
    }
    out.add_scaled(u, c, m.p());
  }
  return out;
}

std::set<Weight> normal_weights_bruteforce(const Weight& lambda, int p) {
  auto simple = simple_quotient(build_weyl(lambda, p));
  std::set<Weight> out;
  for (const auto& hw : high_weight_vectors(*simple)) {
    out.insert(hw.weight.truncated());
  }
  return out;
}

}  // namespace hyperlow
