#include "hyperlow/symbolic.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <span>

namespace hyperlow {

// ---- UTMatrix ------------------------------------------------------------

void UTMatrix::add(int a, int b, int count) {
  if (a >= b || a < 1) throw PreconditionError("entry must lie above the diagonal");
  if (count == 0) return;
  Entry key{a, b, 0};
  auto less = [](const Entry& x, const Entry& y) {
    return std::tie(x.b, x.a) < std::tie(y.b, y.a);
  };
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key, less);
  if (it != entries_.end() && it->a == a && it->b == b) {
    it->count += count;
    if (it->count == 0) entries_.erase(it);
    else if (it->count < 0) throw PreconditionError("negative matrix entry");
  } else {
    if (count < 0) throw PreconditionError("negative matrix entry");
    entries_.insert(it, Entry{a, b, count});
  }
}

int UTMatrix::at(int a, int b) const {
  for (const Entry& e : entries_) {
    if (e.a == a && e.b == b) return e.count;
  }
  return 0;
}

int UTMatrix::column_sum(int t) const {
  int s = 0;
  for (const Entry& e : entries_) {
    if (e.b == t) s += e.count;
  }
  return s;
}

int UTMatrix::max_column() const {
  int m = 0;
  for (const Entry& e : entries_) m = std::max(m, e.b);
  return m;
}

int UTMatrix::min_row() const {
  int m = std::numeric_limits<int>::max();
  for (const Entry& e : entries_) m = std::min(m, e.a);
  return m;
}

std::string UTMatrix::str() const {
  std::string out = "[";
  for (size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ", ";
    const Entry& e = entries_[k];
    out += "(" + std::to_string(e.a) + "," + std::to_string(e.b) + "," +
           std::to_string(e.count) + ")";
  }
  return out + "]";
}

UTMatrix operator+(const UTMatrix& x, const UTMatrix& y) {
  UTMatrix out = x;
  for (const auto& e : y.entries_) out.add(e.a, e.b, e.count);
  return out;
}

Polynomial shift_past(const Polynomial& f, const UTMatrix& N) {
  std::map<Variable, Polynomial> subs;
  for (Variable v : f.variables()) {
    if (v.family != Family::H) continue;
    long delta = 0;
    for (const auto& e : N.entries()) {
      if (e.b == v.index) delta += e.count;
      if (e.a == v.index) delta -= e.count;
    }
    if (delta != 0) subs.emplace(v, Polynomial::var(v) + Polynomial(delta));
  }
  return subs.empty() ? f : f.substitute(subs);
}

Polynomial cartan_C(int i, int t) {
  return Polynomial(long{t - i}) + H(i) - H(t);
}

Polynomial cartan_B(int i, int t) {
  return Polynomial(long{t - i}) + H(i) - H(t + 1);
}

// ---- LoweringElement -----------------------------------------------------

void LoweringElement::add(const UTMatrix& N, const Polynomial& h) {
  if (h.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(N, h);
  if (!inserted) {
    it->second += h;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string LoweringElement::str() const {
  std::string out;
  for (const auto& [N, h] : terms_) {
    out += "N: " + N.str() + " coeff: " + h.str() + "\n";
  }
  return out;
}

std::vector<UTMatrix> pbw_support(int i, int j, int d) {
  if (i < 1 || j <= i || d < 0) {
    throw PreconditionError("need 1 <= i < j and d >= 0");
  }
  std::vector<UTMatrix> out;
  // arrivals[b]: amount already flowing into column b from earlier rows.
  std::vector<int> arrivals(j + 1, 0);
  UTMatrix cur;
  auto rec = [&](auto&& self, int a) -> void {
    if (a == j) {
      out.push_back(cur);
      return;
    }
    int total = a == i ? d : arrivals[a];
    // Spread total over columns b in (a..j].
    auto spread = [&](auto&& spread_self, int b, int left) -> void {
      if (b == j) {
        arrivals[b] += left;
        cur.add(a, b, left);
        self(self, a + 1);
        cur.add(a, b, -left);
        arrivals[b] -= left;
        return;
      }
      for (int c = 0; c <= left; ++c) {
        arrivals[b] += c;
        cur.add(a, b, c);
        spread_self(spread_self, b + 1, left - c);
        cur.add(a, b, -c);
        arrivals[b] -= c;
      }
    };
    spread(spread, a + 1, total);
  };
  rec(rec, i);
  std::sort(out.begin(), out.end());
  return out;
}

LoweringElement carter_lusztig(int i, int j) {
  LoweringElement out;
  for (const auto& A : subsets_of_open_interval(i, j)) {
    UTMatrix N;
    int prev = i;
    for (int a : A) {
      N.add(prev, a, 1);
      prev = a;
    }
    N.add(prev, j, 1);
    Polynomial h(1);
    for (int t = i + 1; t < j; ++t) {
      if (!std::binary_search(A.begin(), A.end(), t)) h *= cartan_C(i, t);
    }
    out.add(N, h);
  }
  return out;
}

LoweringElement expand_S_power(int i, int j, int d) {
  LoweringElement out;
  for (const UTMatrix& N : pbw_support(i, j, d)) {
    Polynomial h(1);
    for (int t = i + 1; t <= j; ++t) {
      int nt = N.column_sum(t);
      h *= Polynomial(factorial(nt)) * falling_factorial(cartan_C(i, t), d - nt);
    }
    out.add(N, h);
  }
  return out;
}

namespace {

const Variable kZ{Family::Z, 0};

void check_M(int i, int j, const std::vector<int>& M) {
  for (size_t k = 0; k < M.size(); ++k) {
    if (M[k] <= i || M[k] >= j || (k && M[k] <= M[k - 1])) {
      throw PreconditionError("M must be a strictly increasing subset of (i..j)");
    }
  }
}

// The polynomial P_{N,M}(z), for nonempty M.
Polynomial p_recursion(const UTMatrix& N, int j, int d,
                       std::span<const int> M) {
  const int m = M.front();
  auto rest = M.subspan(1);
  const int next = rest.empty() ? j : rest.front();
  const Polynomial z = z_var();
  Polynomial body(1);
  for (int t = m + 1; t < next; ++t) {
    int nt = N.column_sum(t);
    body *= Polynomial(factorial(nt)) *
            falling_factorial(z + cartan_C(m, t), d - nt);
  }
  if (!rest.empty()) {
    body *= p_recursion(N, j, d, rest).substitute({{kZ, z + cartan_C(m, next)}});
  }
  const int nm = N.column_sum(m);
  if (nm < d) {
    return Polynomial(factorial(nm)) *
           falling_factorial(z - Polynomial(1), d - nm - 1) * body;
  }
  Polynomial at_zero = body.substitute({{kZ, Polynomial(0)}});
  return Polynomial(factorial(d)) *
         exact_divide_linear(body - at_zero, z, kZ, "P recursion");
}

}  // namespace

LoweringElement expand_T(int i, int j, int d, const std::vector<int>& M) {
  check_M(i, j, M);
  if (M.empty()) return expand_S_power(i, j, d);
  const int m = M.front();
  LoweringElement out;
  for (const UTMatrix& N : pbw_support(i, j, d)) {
    Polynomial h(factorial(d));
    for (int t = i + 1; t < m; ++t) {
      int nt = N.column_sum(t);
      h *= Polynomial(factorial(nt)) * falling_factorial(cartan_C(i, t), d - nt);
    }
    h *= p_recursion(N, j, d, M).substitute({{kZ, cartan_C(i, m)}});
    out.add(N, h);
  }
  return out;
}

LoweringElement split_product(const LoweringElement& X,
                              const LoweringElement& Y, int m) {
  LoweringElement out;
  for (const auto& [n1, h1] : X.terms()) {
    if (n1.max_column() > m) {
      throw PreconditionError("left factor reaches past column m");
    }
    for (const auto& [n2, h2] : Y.terms()) {
      if (!n2.empty() && n2.min_row() < m) {
        throw PreconditionError("right factor starts before row m");
      }
      out.add(n1 + n2, shift_past(h1, n2) * h2);
    }
  }
  return out;
}

LoweringElement expand_T_by_definition(int i, int j, int d,
                                       const std::vector<int>& M) {
  check_M(i, j, M);
  if (M.empty()) return expand_S_power(i, j, d);
  const int m = M.front();
  std::vector<int> rest(M.begin() + 1, M.end());
  LoweringElement whole = expand_T_by_definition(i, j, d, rest);
  LoweringElement split = split_product(expand_S_power(i, m, d),
                                        expand_T_by_definition(m, j, d, rest), m);
  std::set<UTMatrix> support;
  for (const auto& [N, h] : whole.terms()) support.insert(N);
  for (const auto& [N, h] : split.terms()) support.insert(N);
  LoweringElement out;
  const Polynomial divisor = cartan_C(i, m);
  for (const UTMatrix& N : support) {
    Polynomial diff;
    if (auto it = whole.terms().find(N); it != whole.terms().end()) diff += it->second;
    if (auto it = split.terms().find(N); it != split.terms().end()) diff -= it->second;
    out.add(N, exact_divide_linear(diff, divisor, {Family::H, i},
                                   "T recursion at N=" + N.str()));
  }
  return out;
}

// ---- rho -----------------------------------------------------------------

std::string rational_tag_name(RationalTag R) {
  switch (R) {
    case RationalTag::One: return "1";
    case RationalTag::InvZetaMinusD: return "1/(zeta-d)";
    case RationalTag::InvZetaMinusDMinus1: return "1/(zeta-d-1)";
  }
  return "?";
}

RationalTag parse_rational_tag(const std::string& text) {
  if (text == "1" || text == "one") return RationalTag::One;
  if (text == "1/(zeta-d)" || text == "zeta-d") return RationalTag::InvZetaMinusD;
  if (text == "1/(zeta-d-1)" || text == "zeta-d-1") {
    return RationalTag::InvZetaMinusDMinus1;
  }
  throw PreconditionError("unknown rational tag '" + text + "'");
}

long shift_entry(const std::vector<long>& C, int index) {
  int n = static_cast<int>(C.size()) + 1;
  if (index <= 0 || index >= n) return 0;
  return C[index - 1];
}

Polynomial cartan_B_shifted(const std::vector<long>& C, int k, int i, int t) {
  long shift = shift_entry(C, i - 1) - shift_entry(C, i);
  if (t >= k) shift += shift_entry(C, t + 1) - shift_entry(C, t);
  return cartan_B(i, t) + Polynomial(shift);
}

Polynomial zeta_factor(const std::vector<long>& C, int i, int m,
                       const std::vector<int>& K) {
  const int d = static_cast<int>(K.size());
  Polynomial out(1);
  for (int s = 1; s <= d; ++s) {
    const int k = K[s - 1];
    for (int t = i; t < m; ++t) {
      bool corner = t == m - 1 && t >= k;
      int weight = (t < m - 1) + (t == m - 1 && t < k);
      Polynomial f = cartan_B_shifted(C, k, i, t) + Polynomial(long{weight * (s - d)});
      if (corner) f *= Polynomial(long{d - s + 1});
      out *= f;
    }
  }
  return out;
}

namespace {

void check_rho_args(const std::vector<long>& C, int i, int j,
                    const std::vector<int>& K, const std::vector<long>& L,
                    const std::vector<int>& M) {
  int n = static_cast<int>(C.size()) + 1;
  if (i < 1 || j <= i || j > n) {
    throw PreconditionError("need 1 <= i < j <= |C|+1");
  }
  int d = static_cast<int>(K.size());
  if (d < 1) throw PreconditionError("K must be nonempty");
  for (int s = 0; s < d; ++s) {
    if (K[s] < i || K[s] > j || (s && K[s] < K[s - 1])) {
      throw PreconditionError("K must be weakly increasing in [i..j]");
    }
  }
  if (static_cast<int>(L.size()) != d && static_cast<int>(L.size()) != d + 1) {
    throw PreconditionError("|L| must be d or d+1");
  }
  check_M(i, j, M);
}

std::vector<int> clamp_sequence(const std::vector<int>& K, int lo, int hi) {
  std::vector<int> out = K;
  for (int& k : out) k = std::clamp(k, lo, hi);
  return out;
}

Polynomial rho_rec(const std::vector<long>& C, int i, int j,
                   const std::vector<int>& K, const std::vector<long>& L,
                   std::span<const int> M, RationalTag R) {
  const int d = static_cast<int>(K.size());
  const int q = static_cast<int>(L.size());
  if (M.empty()) {
    Polynomial prod(1);
    for (int s = 1; s <= d; ++s) {
      const int k = K[s - 1];
      long tail = 0;
      for (int h = s + 1; h <= q; ++h) tail += L[h - 1];
      for (int t = i; t < j; ++t) {
        bool corner = t == j - 1 && t >= k;
        Polynomial f = cartan_B_shifted(C, k, i, t) +
                       Polynomial(long{s - d} + (corner ? tail : 0));
        if (corner) f *= Polynomial(long{d - s + 1});
        prod *= f;
      }
    }
    if (R == RationalTag::One) return prod;
    long total = 0;
    for (long l : L) total += l;
    Polynomial zeta = cartan_C(i, j) +
                      Polynomial(shift_entry(C, i - 1) - shift_entry(C, i) -
                                 shift_entry(C, j - 1) + shift_entry(C, j) + total);
    long offset = R == RationalTag::InvZetaMinusD ? d : d + 1;
    DivisionResult r = divide_linear(prod, zeta - Polynomial(offset), {Family::H, i});
    if (!r.remainder.is_zero()) {
      throw InadmissibleRational("rational factor " + rational_tag_name(R) +
                                 " does not cancel for i=" + std::to_string(i) +
                                 " j=" + std::to_string(j));
    }
    return r.quotient;
  }
  const int m = M.front();
  auto rest = M.subspan(1);
  Polynomial whole = rho_rec(C, i, j, K, L, rest, R);
  Polynomial tail = rho_rec(C, m, j, clamp_sequence(K, m, j), L, rest, R);
  Polynomial numerator = whole - zeta_factor(C, i, m, K) * tail;
  Polynomial divisor = cartan_C(i, m) +
                       Polynomial(shift_entry(C, i - 1) - shift_entry(C, i) -
                                  shift_entry(C, m - 1) + shift_entry(C, m));
  return exact_divide_linear(numerator, divisor, {Family::H, i},
                             "rho recursion at m=" + std::to_string(m));
}

}  // namespace

Polynomial rho(const std::vector<long>& C, int i, int j,
               const std::vector<int>& K, const std::vector<long>& L,
               const std::vector<int>& M, RationalTag R) {
  check_rho_args(C, i, j, K, L, M);
  return rho_rec(C, i, j, K, L, M, R);
}

int evaluate_mod_p(const Polynomial& f, const Weight& lambda, int p) {
  BigInt v = f.evaluate([&](Variable var) -> BigInt {
    if (var.family != Family::H) {
      throw PreconditionError("cannot evaluate " + var.name() + " at a weight");
    }
    return BigInt(lambda.at(var.index));
  });
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

int commpoly1_product(const BranchContext& ctx, const std::vector<long>& C,
                      int i, int j, const std::vector<int>& K,
                      const std::vector<int>& M,
                      const std::vector<std::pair<int, Node>>& phi) {
  const int d = static_cast<int>(K.size());
  const int p = ctx.p;
  check_rho_args(C, i, j, K, std::vector<long>(d + 1, 0), M);
  if (phi.size() != M.size()) throw PreconditionError("phi must be defined on M");
  std::set<Node> image;
  for (size_t h = 0; h < phi.size(); ++h) {
    auto [m, x] = phi[h];
    if (m != M[h]) throw PreconditionError("phi must list M in order");
    if (x.t < m || x.t >= j || x.s < 1 || x.s > d) {
      throw PreconditionError("phi(m) must lie in [m..j) x [1..d]");
    }
    if (!image.insert(x).second) throw PreconditionError("phi is not injective");
    Polynomial gen = cartan_B_shifted(C, K[x.s - 1], m, x.t) + Polynomial(long{x.s - d});
    if (evaluate_mod_p(gen, ctx.lambda, p) != 0) {
      throw PreconditionError("generator for m=" + std::to_string(m) +
                              " does not vanish at lambda");
    }
  }
  long acc = 1;
  int r = 0;
  for (int k : K) r += k < j;
  for (int s = 0; s < r; ++s) acc = acc * residue_mod(d - s, p) % p;
  for (int t = i; t < j; ++t) {
    for (int s = 1; s <= d; ++s) {
      if (image.count({t, s})) continue;
      Polynomial f = cartan_B_shifted(C, K[s - 1], i, t) + Polynomial(long{s - d});
      acc = acc * evaluate_mod_p(f, ctx.lambda, p) % p;
    }
  }
  return static_cast<int>(acc);
}

// ---- f and g -------------------------------------------------------------

namespace {

Polynomial f_empty(int i, int j, int d) {
  Polynomial out(1);
  for (int t = i; t < j; ++t) out *= falling_factorial(y_var(t + 1) - x_var(i), d);
  return out;
}

Polynomial g_empty(int i, int j, int d) {
  Polynomial out = falling_factorial(y_var(j) - x_var(i), d - 1);
  for (int t = i; t < j - 1; ++t) out *= falling_factorial(y_var(t + 1) - x_var(i), d);
  return out;
}

Polynomial fg_rec(int i, int j, int d, std::span<const int> M, bool want_g) {
  if (M.empty()) return want_g ? g_empty(i, j, d) : f_empty(i, j, d);
  const int m = M.front();
  auto rest = M.subspan(1);
  Polynomial numerator = fg_rec(i, j, d, rest, want_g) -
                         f_empty(i, m, d) * fg_rec(m, j, d, rest, want_g);
  return exact_divide_linear(numerator, x_var(m) - x_var(i), {Family::X, m},
                             want_g ? "g recursion" : "f recursion");
}

std::vector<int> restrict_open(const std::vector<int>& M, int lo, int hi) {
  std::vector<int> out;
  for (int m : M) {
    if (m > lo && m < hi) out.push_back(m);
  }
  return out;
}

}  // namespace

Polynomial f_poly(int i, int j, int d, const std::vector<int>& M) {
  check_M(i, j, M);
  if (d < 1) throw PreconditionError("need d >= 1");
  return fg_rec(i, j, d, M, false);
}

Polynomial g_poly(int i, int j, int d, const std::vector<int>& M) {
  check_M(i, j, M);
  if (d < 1) throw PreconditionError("need d >= 1");
  return fg_rec(i, j, d, M, true);
}

std::pair<Polynomial, Polynomial> fg_polynomials(int i, int j, int d,
                                                 const std::vector<int>& M) {
  return {f_poly(i, j, d, M), g_poly(i, j, d, M)};
}

Polynomial G_poly(int i, int l, int d, const std::vector<int>& M,
                  const std::vector<int>& N) {
  std::vector<int> chain{i};
  chain.insert(chain.end(), N.begin(), N.end());
  chain.push_back(l);
  Polynomial out(1);
  for (size_t r = 0; r + 1 < chain.size(); ++r) {
    out *= g_poly(chain[r], chain[r + 1], d,
                  restrict_open(M, chain[r], chain[r + 1]));
  }
  return out;
}

Polynomial specialize_xy(const Polynomial& f, const std::vector<long>& C) {
  std::map<Variable, Polynomial> subs;
  for (Variable v : f.variables()) {
    if (v.family == Family::Y) {
      subs.emplace(v, Polynomial(long{v.index - 1}) - H(v.index));
    } else if (v.family == Family::X) {
      subs.emplace(v, Polynomial(long{v.index} - shift_entry(C, v.index - 1) +
                                 shift_entry(C, v.index)) -
                          H(v.index));
    }
  }
  return f.substitute(subs);
}

// ---- bounded ideal membership over Q ---------------------------------------

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::vector<Monomial> monomials_up_to(const std::vector<Variable>& vars,
                                      int degree) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, size_t k, int left) -> void {
    if (k == vars.size()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      if (e) cur.emplace_back(vars[k], e);
      self(self, k + 1, left - e);
      if (e) cur.pop_back();
    }
  };
  if (degree >= 0) rec(rec, 0, degree);
  return out;
}

}  // namespace

bool in_ideal_bounded(const Polynomial& f, const std::vector<Polynomial>& gens,
                      int slack) {
  if (f.is_zero()) return true;
  std::set<Variable> varset;
  for (Variable v : f.variables()) varset.insert(v);
  for (const auto& g : gens) {
    for (Variable v : g.variables()) varset.insert(v);
  }
  std::vector<Variable> vars(varset.begin(), varset.end());

  // Columns: (generator, cofactor monomial). Rows: monomials of products.
  std::vector<Polynomial> columns;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int bound = f.degree() - g.degree() + slack;
    for (const Monomial& mono : monomials_up_to(vars, bound)) {
      Polynomial m;
      m.add_term(mono, 1);
      columns.push_back(g * m);
    }
  }
  std::map<Monomial, size_t> row_of;
  auto row = [&](const Monomial& m) {
    return row_of.try_emplace(m, row_of.size()).first->second;
  };
  for (const auto& c : columns) {
    for (const auto& [m, v] : c.terms()) row(m);
  }
  for (const auto& [m, v] : f.terms()) row(m);
  const size_t rows = row_of.size();
  const size_t cols = columns.size();
  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols + 1));
  for (size_t c = 0; c < cols; ++c) {
    for (const auto& [m, v] : columns[c].terms()) A[row_of.at(m)][c] = Rational(v);
  }
  for (const auto& [m, v] : f.terms()) A[row_of.at(m)][cols] = Rational(v);

  size_t pivot_row = 0;
  for (size_t c = 0; c < cols && pivot_row < rows; ++c) {
    size_t r = pivot_row;
    while (r < rows && A[r][c] == 0) ++r;
    if (r == rows) continue;
    std::swap(A[r], A[pivot_row]);
    for (size_t k = 0; k < rows; ++k) {
      if (k == pivot_row || A[k][c] == 0) continue;
      Rational factor = A[k][c] / A[pivot_row][c];
      for (size_t cc = c; cc <= cols; ++cc) A[k][cc] -= factor * A[pivot_row][cc];
    }
    ++pivot_row;
  }
  for (size_t r = pivot_row; r < rows; ++r) {
    if (A[r][cols] != 0) return false;
  }
  return true;
}

}  // namespace hyperlow
