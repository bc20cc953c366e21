#ifndef HYPERLOW_POLYNOMIAL_HPP
#define HYPERLOW_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperlow {

using BigInt = boost::multiprecision::cpp_int;

// Thrown when a division that must be exact leaves a remainder.
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family : unsigned char { H = 0, X = 1, Y = 2, Z = 3 };

// H_i, x_i, y_t, and one formal variable z used by internal recursions.
struct Variable {
  Family family = Family::H;
  int index = 0;
  auto operator<=>(const Variable&) const = default;
  std::string name() const;
};

// Sorted by variable, exponents positive.
using Monomial = std::vector<std::pair<Variable, int>>;

int total_degree(const Monomial& m);

// Integer polynomial in commuting variables.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const BigInt& c);
  static Polynomial var(Variable v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt constant_term() const;
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  int degree() const;
  int degree_in(Variable v) const;
  std::vector<Variable> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  // Simultaneous substitution; unmapped variables stay.
  Polynomial substitute(const std::map<Variable, Polynomial>& subs) const;
  BigInt evaluate(const std::function<BigInt(Variable)>& value) const;

  // Coefficients c_k with self = sum_k c_k v^k.
  std::vector<Polynomial> coefficients_in(Variable v) const;

  // Graded-lex, highest first: "H1 - H2 + 1".
  std::string str() const;

  void add_term(const Monomial& m, const BigInt& c);

 private:
  std::map<Monomial, BigInt> terms_;
};

Polynomial H(int i);
Polynomial x_var(int i);
Polynomial y_var(int t);
Polynomial z_var();

// q(q-1)...(q-k+1); 1 when k == 0.
Polynomial falling_factorial(const Polynomial& q, int k);

BigInt factorial(int k);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;  // free of the pivot variable
};

// Divide by a divisor of degree one in pivot with coefficient +1 or -1.
DivisionResult divide_linear(const Polynomial& f, const Polynomial& divisor,
                             Variable pivot);

// Same, but throws IntegralityError on a nonzero remainder.
Polynomial exact_divide_linear(const Polynomial& f, const Polynomial& divisor,
                               Variable pivot, const std::string& what);

}  // namespace hyperlow

#endif
