#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperlow/modrep.hpp"

using namespace hyperlow;

namespace {

// prod_{a<b} (l_a - l_b + b - a) / (b - a), computed independently.
long hook_dimension(const Weight& lam) {
  long num = 1, den = 1;
  for (int a = 1; a <= lam.size(); ++a) {
    for (int b = a + 1; b <= lam.size(); ++b) {
      num *= lam.at(a) - lam.at(b) + b - a;
      den *= b - a;
    }
  }
  return num / den;
}

bool same(const ModuleVector& x, const ModuleVector& y, int p) {
  ModuleVector d = x;
  d.add_scaled(y, static_cast<Fp>(p - 1), p);
  return d.is_zero();
}

ModuleVector scaled(const ModuleVector& v, long c, int p) {
  ModuleVector out;
  out.add_scaled(v, fp_reduce(c, p), p);
  return out;
}

// [E_l, F_l] acts on a weight vector by w_l - w_{l+1}, and r! times a
// divided power is the r-th power.
void check_relations(const ModuleRealization& m) {
  const int p = m.p();
  for (size_t b = 0; b < m.blocks().size(); ++b) {
    const Weight& w = m.blocks()[b].weight;
    for (size_t k = 0; k < m.blocks()[b].dim; ++k) {
      ModuleVector v = m.unit(b, k);
      for (int l = 1; l < m.n(); ++l) {
        ModuleVector ef = m.apply(Op::E(l), m.apply(Op::F(l, l + 1), v));
        ModuleVector fe = m.apply(Op::F(l, l + 1), m.apply(Op::E(l), v));
        ef.add_scaled(fe, static_cast<Fp>(p - 1), p);
        CHECK(same(ef, scaled(v, w.at(l) - w.at(l + 1), p), p));
        ModuleVector twice = m.apply(Op::F(l, l + 1), m.apply(Op::F(l, l + 1), v));
        CHECK(same(twice, scaled(m.apply(Op::F(l, l + 1, 2), v), 2, p), p));
      }
    }
  }
}

}  // namespace

TEST_CASE("dimensions of small modules") {
  auto weyl = build_weyl({2, 1, 0}, 3);
  CHECK(as_realization(weyl)->dimension() == 8);
  CHECK(simple_quotient(weyl)->dimension() == 7);
  CHECK(simple_quotient(build_weyl({2, 1, 0}, 5))->dimension() == 8);
  CHECK(dual_realization(weyl)->dimension() == 8);
  CHECK(simple_quotient(build_weyl({1, 0}, 2))->dimension() == 2);
  CHECK(simple_quotient(build_weyl({2, 0}, 2))->dimension() == 2);
}

TEST_CASE("Weyl dimensions follow the product formula") {
  for (const Weight& lam : {Weight{0}, Weight{3}, Weight{2, 0}, Weight{3, 1},
                            Weight{2, 1, 0}, Weight{3, 1, 0}, Weight{2, 2, 1},
                            Weight{2, 1, 1, 0}, Weight{3, 2, 1, 0}, Weight{1, 1, 0, 0}}) {
    CHECK(weyl_dimension(lam) == hook_dimension(lam));
    CHECK(as_realization(build_weyl(lam, 3))->dimension() ==
          static_cast<size_t>(hook_dimension(lam)));
  }
}

TEST_CASE("operators satisfy the defining relations") {
  for (const Weight& lam : {Weight{2, 1, 0}, Weight{3, 0, 0}, Weight{2, 2, 0, 0}}) {
    for (int p : {2, 3, 5}) {
      auto weyl = build_weyl(lam, p);
      check_relations(*as_realization(weyl));
      check_relations(*dual_realization(weyl));
      check_relations(*simple_quotient(weyl));
    }
  }
}

TEST_CASE("high weight vectors of the exterior square") {
  auto m = as_realization(build_weyl({1, 1, 0}, 3));
  std::set<Weight> seen;
  for (const auto& hw : high_weight_vectors(*m)) seen.insert(hw.weight.truncated());
  CHECK(seen == std::set<Weight>{{1, 1}, {1, 0}});
}

TEST_CASE("cf on the natural dual module") {
  auto nabla = dual_realization(build_weyl({1, 0}, 3));
  ModuleVector f = highest_vector(*nabla);
  CHECK(cf(*nabla, f) == 1);
  CHECK(cf(*nabla, nabla->apply(Op::F(1, 2), f)) == 1);
  CHECK(raising_exponents({3, 1, 0}, {1, 2, 1}) == std::vector<int>{2, 1});
}

TEST_CASE("normalized high weight vectors") {
  for (int p : {3, 5}) {
    for (const Weight& lam : restricted_weights(p, 3)) {
      auto nabla = dual_realization(build_weyl(lam, p));
      for (const Weight& mu : interlacing_weights(lam)) {
        ModuleVector f = normalized_f(*nabla, mu);
        CHECK(cf(*nabla, f) == 1);
        CHECK(is_high_weight_vector(*nabla, f));
      }
    }
  }
}

TEST_CASE("the subset operator on the natural module") {
  auto delta = as_realization(build_weyl({1, 0, 0}, 5));
  ModuleVector v = highest_vector(*delta);
  ModuleVector s = apply_lowering(*delta, carter_lusztig(1, 3), v);
  CHECK(same(s, scaled(delta->apply(Op::F(1, 3), v), 2, 5), 5));
  CHECK_FALSE(s.is_zero());
}

TEST_CASE("closed powers of S agree with repeated application") {
  for (const Weight& lam : {Weight{2, 1, 0}, Weight{3, 1, 0, 0}, Weight{2, 2, 1, 0}}) {
    for (int p : {3, 5}) {
      auto m = as_realization(build_weyl(lam, p));
      ModuleVector top = highest_vector(*m);
      for (int i = 1; i < lam.size(); ++i) {
        for (int j = i + 1; j <= lam.size(); ++j) {
          const LoweringElement once = carter_lusztig(i, j);
          ModuleVector iter = top;
          for (int d = 1; d <= 3; ++d) {
            iter = apply_lowering(*m, once, iter);
            if (iter.is_zero()) break;
            CHECK(same(apply_lowering(*m, expand_S_power(i, j, d), top), iter, p));
          }
        }
      }
    }
  }
}

TEST_CASE("normal weights by brute force") {
  CHECK(normal_weights_bruteforce({1, 0}, 3) == std::set<Weight>{{0}, {1}});
  CHECK(normal_weights_bruteforce({3, 0}, 3) == std::set<Weight>{{0}, {3}});
  CHECK(normal_weights_bruteforce({2, 0}, 5) == std::set<Weight>{{0}, {1}, {2}});
}
