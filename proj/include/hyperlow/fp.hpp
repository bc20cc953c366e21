#ifndef HYPERLOW_FP_HPP
#define HYPERLOW_FP_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace hyperlow {

using Fp = std::uint32_t;

Fp fp_reduce(long long v, int p);
Fp fp_inverse(Fp a, int p);

// Dense matrix over F_p, row-major.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(size_t rows, size_t cols, int p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  int p() const { return p_; }
  Fp& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  Fp at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  FpMatrix transpose() const;
  FpMatrix operator*(const FpMatrix& o) const;
  std::vector<Fp> apply(const std::vector<Fp>& x) const;
  bool is_zero() const;
  bool operator==(const FpMatrix& o) const = default;

  size_t rank() const;
  // Basis of {x : A x = 0}.
  std::vector<std::vector<Fp>> kernel() const;
  // Indices of a maximal independent set of columns, leftmost first.
  std::vector<size_t> pivot_columns() const;
  // Some x with A x = b, if any.
  std::optional<std::vector<Fp>> solve(const std::vector<Fp>& b) const;

  // Stack rows of several matrices with equal column counts.
  static FpMatrix stack(const std::vector<const FpMatrix*>& parts, size_t cols,
                        int p);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  int p_ = 2;
  std::vector<Fp> data_;
};

}  // namespace hyperlow

#endif
