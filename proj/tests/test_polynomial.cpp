#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hyperlow/polynomial.hpp"

using namespace hyperlow;

namespace {

std::mt19937_64 rng(3);

int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Polynomial random_poly(int vars, int terms, int max_deg) {
  Polynomial out;
  for (int k = 0; k < terms; ++k) {
    Polynomial m(pick(-4, 4));
    int deg = pick(0, max_deg);
    for (int e = 0; e < deg; ++e) m *= H(pick(1, vars));
    out += m;
  }
  return out;
}

BigInt at(const Polynomial& f, const std::vector<int>& point) {
  return f.evaluate([&](Variable v) { return BigInt(point[v.index - 1]); });
}

}  // namespace

TEST_CASE("ring operations commute with evaluation") {
  for (int round = 0; round < 200; ++round) {
    Polynomial f = random_poly(3, 4, 3), g = random_poly(3, 4, 3);
    std::vector<int> pt{pick(-5, 5), pick(-5, 5), pick(-5, 5)};
    CHECK(at(f + g, pt) == at(f, pt) + at(g, pt));
    CHECK(at(f - g, pt) == at(f, pt) - at(g, pt));
    CHECK(at(f * g, pt) == at(f, pt) * at(g, pt));
    CHECK(at(-f, pt) == -at(f, pt));
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("printing is graded and stable") {
  CHECK((H(1) - H(2) + Polynomial(1)).str() == "H1 - H2 + 1");
  CHECK(Polynomial(0).str() == "0");
  CHECK(Polynomial(-3).str() == "-3");
  CHECK((y_var(2) - x_var(1)).str() == "-x1 + y2");
}

TEST_CASE("falling factorials") {
  Polynomial q = H(1);
  CHECK(falling_factorial(q, 0) == Polynomial(1));
  for (int v = -3; v <= 6; ++v) {
    BigInt expect = 1;
    for (int k = 0; k < 3; ++k) expect *= v - k;
    CHECK(at(falling_factorial(q, 3), {v}) == expect);
  }
  CHECK(factorial(5) == 120);
  CHECK(factorial(0) == 1);
}

TEST_CASE("division by linear forms") {
  Variable h1{Family::H, 1};
  for (int round = 0; round < 100; ++round) {
    Polynomial q = random_poly(3, 3, 2);
    Polynomial divisor = (pick(0, 1) ? H(1) : -H(1)) + H(2) * Polynomial(pick(-2, 2)) +
                         Polynomial(pick(-3, 3));
    Polynomial r = random_poly(3, 2, 1).substitute({{h1, Polynomial(0)}});
    auto res = divide_linear(q * divisor + r, divisor, h1);
    CHECK(res.quotient == q);
    CHECK(res.remainder == r);
    CHECK(exact_divide_linear(q * divisor, divisor, h1, "test") == q);
    if (!r.is_zero()) {
      CHECK_THROWS_AS(exact_divide_linear(q * divisor + r, divisor, h1, "test"),
                      IntegralityError);
    }
  }
}

TEST_CASE("substitution and coefficient extraction") {
  Variable z{Family::Z, 0};
  Polynomial f = z_var() * z_var() * H(1) + z_var() + Polynomial(2);
  auto c = f.coefficients_in(z);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Polynomial(2));
  CHECK(c[1] == Polynomial(1));
  CHECK(c[2] == H(1));
  CHECK(f.substitute({{z, Polynomial(1)}}) == H(1) + Polynomial(3));
  CHECK(f.degree() == 3);
  CHECK(f.degree_in(z) == 2);
}
