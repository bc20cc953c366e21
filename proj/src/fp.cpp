#include "hyperlow/fp.hpp"

#include <stdexcept>

namespace hyperlow {

Fp fp_reduce(long long v, int p) {
  long long r = v % p;
  return static_cast<Fp>(r < 0 ? r + p : r);
}

Fp fp_inverse(Fp a, int p) {
  if (a % p == 0) throw std::domain_error("zero has no inverse");
  // Fermat: a^(p-2).
  unsigned long long result = 1, base = a % p;
  unsigned e = static_cast<unsigned>(p - 2);
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Fp>(result);
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_, p_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  FpMatrix out(rows_, o.cols_, p_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t k = 0; k < cols_; ++k) {
      Fp a = at(r, k);
      if (!a) continue;
      for (size_t c = 0; c < o.cols_; ++c) {
        out.at(r, c) = static_cast<Fp>((out.at(r, c) + 1ULL * a * o.at(k, c)) % p_);
      }
    }
  }
  return out;
}

std::vector<Fp> FpMatrix::apply(const std::vector<Fp>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Fp> y(rows_, 0);
  for (size_t r = 0; r < rows_; ++r) {
    unsigned long long acc = 0;
    for (size_t c = 0; c < cols_; ++c) acc += 1ULL * at(r, c) * x[c];
    y[r] = static_cast<Fp>(acc % p_);
  }
  return y;
}

bool FpMatrix::is_zero() const {
  for (Fp v : data_) {
    if (v) return false;
  }
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(FpMatrix& a, size_t limit_cols) {
  const int p = a.p();
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t c = 0; c < limit_cols && row < a.rows(); ++c) {
    size_t r = row;
    while (r < a.rows() && a.at(r, c) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != row) {
      for (size_t k = 0; k < a.cols(); ++k) std::swap(a.at(r, k), a.at(row, k));
    }
    Fp inv = fp_inverse(a.at(row, c), p);
    for (size_t k = 0; k < a.cols(); ++k) {
      a.at(row, k) = static_cast<Fp>(1ULL * a.at(row, k) * inv % p);
    }
    for (size_t rr = 0; rr < a.rows(); ++rr) {
      if (rr == row) continue;
      Fp f = a.at(rr, c);
      if (!f) continue;
      for (size_t k = 0; k < a.cols(); ++k) {
        a.at(rr, k) = static_cast<Fp>((a.at(rr, k) + 1ULL * (p - f) * a.at(row, k)) % p);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t FpMatrix::rank() const {
  FpMatrix a = *this;
  return rref(a, cols_).size();
}

std::vector<size_t> FpMatrix::pivot_columns() const {
  FpMatrix a = *this;
  return rref(a, cols_);
}

std::vector<std::vector<Fp>> FpMatrix::kernel() const {
  FpMatrix a = *this;
  auto pivots = rref(a, cols_);
  std::vector<char> is_pivot(cols_, 0);
  for (size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Fp>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fp> x(cols_, 0);
    x[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      x[pivots[r]] = static_cast<Fp>((p_ - a.at(r, free)) % p_);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<Fp>> FpMatrix::solve(const std::vector<Fp>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("rhs length mismatch");
  FpMatrix aug(rows_, cols_ + 1, p_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r] % p_;
  }
  auto pivots = rref(aug, cols_);
  for (size_t r = pivots.size(); r < rows_; ++r) {
    if (aug.at(r, cols_)) return std::nullopt;
  }
  std::vector<Fp> x(cols_, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

FpMatrix FpMatrix::stack(const std::vector<const FpMatrix*>& parts, size_t cols,
                         int p) {
  size_t rows = 0;
  for (const auto* m : parts) {
    if (m->cols() != cols) throw std::invalid_argument("stack: column mismatch");
    rows += m->rows();
  }
  FpMatrix out(rows, cols, p);
  size_t r0 = 0;
  for (const auto* m : parts) {
    for (size_t r = 0; r < m->rows(); ++r) {
      for (size_t c = 0; c < cols; ++c) out.at(r0 + r, c) = m->at(r, c);
    }
    r0 += m->rows();
  }
  return out;
}

}  // namespace hyperlow
