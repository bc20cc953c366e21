#include "hyperlow/polynomial.hpp"

#include <algorithm>

namespace hyperlow {

std::string Variable::name() const {
  switch (family) {
    case Family::H: return "H" + std::to_string(index);
    case Family::X: return "x" + std::to_string(index);
    case Family::Y: return "y" + std::to_string(index);
    case Family::Z: return "z";
  }
  return "?";
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

namespace {

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(long c) {
  if (c != 0) terms_[{}] = c;
}

Polynomial::Polynomial(const BigInt& c) {
  if (c != 0) terms_[{}] = c;
}

Polynomial Polynomial::var(Variable v) {
  Polynomial p;
  p.terms_[{{v, 1}}] = 1;
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

BigInt Polynomial::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

int Polynomial::degree_in(Variable v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) {
    for (const auto& [w, e] : m) {
      if (w == v) d = std::max(d, e);
    }
  }
  return d;
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(multiply_monomials(ma, mb), ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::substitute(
    const std::map<Variable, Polynomial>& subs) const {
  std::map<std::pair<Variable, int>, Polynomial> powers;
  auto power = [&](Variable v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial r(1);
    const Polynomial& base = subs.at(v);
    for (int k = 0; k < e; ++k) r *= base;
    return powers.emplace(key, std::move(r)).first->second;
  };
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    Polynomial factor(c);
    for (const auto& [v, e] : m) {
      if (subs.count(v)) {
        factor *= power(v, e);
      } else {
        kept.emplace_back(v, e);
      }
    }
    Polynomial mono;
    mono.add_term(kept, 1);
    out += factor * mono;
  }
  return out;
}

BigInt Polynomial::evaluate(const std::function<BigInt(Variable)>& value) const {
  BigInt total = 0;
  for (const auto& [m, c] : terms_) {
    BigInt t = c;
    for (const auto& [v, e] : m) t *= boost::multiprecision::pow(value(v), e);
    total += t;
  }
  return total;
}

std::vector<Polynomial> Polynomial::coefficients_in(Variable v) const {
  int deg = std::max(0, degree_in(v));
  std::vector<Polynomial> out(deg + 1);
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    int e = 0;
    for (const auto& [w, k] : m) {
      if (w == v) {
        e = k;
      } else {
        rest.emplace_back(w, k);
      }
    }
    out[e].add_term(rest, c);
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // Graded-lex: higher degree first; ties broken by exponent of the
  // smallest variable (H1 before H2), largest first.
  std::vector<std::pair<const Monomial*, const BigInt*>> order;
  for (const auto& [m, c] : terms_) order.emplace_back(&m, &c);
  auto lex_greater = [](const Monomial& a, const Monomial& b) {
    size_t i = 0;
    while (i < a.size() && i < b.size()) {
      if (a[i].first != b[i].first) return a[i].first < b[i].first;
      if (a[i].second != b[i].second) return a[i].second > b[i].second;
      ++i;
    }
    return i < a.size() && i == b.size();
  };
  std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
    int dx = total_degree(*x.first), dy = total_degree(*y.first);
    if (dx != dy) return dx > dy;
    return lex_greater(*x.first, *y.first);
  });
  std::string out;
  bool first = true;
  for (const auto& [mp, cp] : order) {
    const Monomial& m = *mp;
    BigInt c = *cp;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += v.name();
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.str() + "*" + mono;
    }
  }
  return out;
}

Polynomial H(int i) { return Polynomial::var({Family::H, i}); }
Polynomial x_var(int i) { return Polynomial::var({Family::X, i}); }
Polynomial y_var(int t) { return Polynomial::var({Family::Y, t}); }
Polynomial z_var() { return Polynomial::var({Family::Z, 0}); }

Polynomial falling_factorial(const Polynomial& q, int k) {
  Polynomial out(1);
  for (int r = 0; r < k; ++r) out *= q - Polynomial(long{r});
  return out;
}

BigInt factorial(int k) {
  BigInt out = 1;
  for (int r = 2; r <= k; ++r) out *= r;
  return out;
}

DivisionResult divide_linear(const Polynomial& f, const Polynomial& divisor,
                             Variable pivot) {
  auto dc = divisor.coefficients_in(pivot);
  if (dc.size() != 2 || !dc[1].is_constant() ||
      (dc[1].constant_term() != 1 && dc[1].constant_term() != -1)) {
    throw std::invalid_argument("divisor must be linear in " + pivot.name() +
                                " with unit leading coefficient");
  }
  const bool flip = dc[1].constant_term() == -1;
  // Normalise to pivot + g.
  Polynomial g = flip ? -dc[0] : dc[0];
  auto a = f.coefficients_in(pivot);
  int deg = static_cast<int>(a.size()) - 1;
  DivisionResult r;
  if (deg < 1) {
    r.remainder = f;
    return r;
  }
  // Synthetic division: q_{k-1} = a_k - g q_k.
  std::vector<Polynomial> q(deg);
  Polynomial carry = a[deg];
  for (int k = deg; k >= 1; --k) {
    q[k - 1] = carry;
    carry = a[k - 1] - g * q[k - 1];
  }
  r.remainder = carry;
  Polynomial pv = Polynomial::var(pivot);
  Polynomial pw(1);
  for (int k = 0; k < deg; ++k) {
    r.quotient += q[k] * pw;
    pw *= pv;
  }
  if (flip) r.quotient = -r.quotient;
  return r;
}

Polynomial exact_divide_linear(const Polynomial& f, const Polynomial& divisor,
                               Variable pivot, const std::string& what) {
  DivisionResult r = divide_linear(f, divisor, pivot);
  if (!r.remainder.is_zero()) {
    throw IntegralityError("non-exact division in " + what + ": remainder " +
                           r.remainder.str() + " modulo " + divisor.str());
  }
  return std::move(r.quotient);
}

}  // namespace hyperlow
