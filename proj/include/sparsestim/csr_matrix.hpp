#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sparsestim {

/// Thrown when a sparse matrix cannot be assembled or fails validation.
class SparseFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by kernels when operand sizes disagree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CooTriplet {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;

  friend bool operator==(const CooTriplet&, const CooTriplet&) = default;
};

/// Immutable compressed-sparse-row matrix with non-negative finite values.
///
/// Canonical form: column indices strictly increasing within each row and no
/// explicitly stored zeros. Every constructor path validates this, so a
/// CsrMatrix instance can be shared across threads without further checks.
class CsrMatrix {
 public:
  using Index = std::uint32_t;

  CsrMatrix() : indptr_(1, 0) {}

  /// Assembles a canonical matrix. Duplicate (row, col) entries are summed and
  /// entries that end up exactly zero are dropped.
  static CsrMatrix from_triplets(std::span<const CooTriplet> triplets,
                                 std::size_t rows, std::size_t cols);

  /// Adopts raw CSR arrays after checking every structural invariant.
  static CsrMatrix from_parts(std::size_t rows, std::size_t cols,
                              std::vector<std::size_t> indptr,
                              std::vector<Index> indices,
                              std::vector<double> values);

  static CsrMatrix identity(std::size_t n, double scale = 1.0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  std::span<const std::size_t> indptr() const noexcept { return indptr_; }
  std::span<const Index> indices() const noexcept { return indices_; }
  std::span<const double> values() const noexcept { return values_; }

  /// Largest stored value, 0 for an empty matrix.
  double max_value() const noexcept;

  /// Column n as a dense vector of length rows().
  std::vector<double> dense_column(std::size_t n) const;

  /// Row-major dense copy (rows x cols).
  std::vector<double> to_dense() const;

  std::vector<CooTriplet> triplets() const;

  CsrMatrix transposed() const;

  friend bool operator==(const CsrMatrix&, const CsrMatrix&) = default;

 private:
  CsrMatrix(std::size_t rows, std::size_t cols, std::vector<std::size_t> indptr,
            std::vector<Index> indices, std::vector<double> values)
      : rows_(rows),
        cols_(cols),
        indptr_(std::move(indptr)),
        indices_(std::move(indices)),
        values_(std::move(values)) {}

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> indptr_;
  std::vector<Index> indices_;
  std::vector<double> values_;
};

/// y = A x. `y` is overwritten.
void spmv(const CsrMatrix& a, std::span<const double> x, std::span<double> y);
std::vector<double> spmv(const CsrMatrix& a, std::span<const double> x);

/// y = A^T r, computed by scattering rows in order. `y` is overwritten.
void spmv_transpose(const CsrMatrix& a, std::span<const double> r,
                    std::span<double> y);
std::vector<double> spmv_transpose(const CsrMatrix& a, std::span<const double> r);

/// Holds A together with a cached copy of A^T so both products run as
/// row-wise gathers. Results are bit-identical to spmv / spmv_transpose.
class LinearOperator {
 public:
  explicit LinearOperator(CsrMatrix a);

  std::size_t rows() const noexcept { return forward_.rows(); }
  std::size_t cols() const noexcept { return forward_.cols(); }
  const CsrMatrix& matrix() const noexcept { return forward_; }

  void apply(std::span<const double> x, std::span<double> y) const;
  void apply_transpose(std::span<const double> r, std::span<double> y) const;

 private:
  CsrMatrix forward_;
  CsrMatrix transpose_;
};

/// Drops entries with value < tau * max(values). tau must lie in [0, 1].
CsrMatrix truncate(const CsrMatrix& a, double tau);

struct SparsityStats {
  std::size_t nnz = 0;
  double density_percent = 0.0;
  /// Size of the matrix in the SPMX on-disk layout.
  std::uint64_t bytes_estimate = 0;
};

SparsityStats sparsity_stats(const CsrMatrix& a);

/// Histogram of value / max(A) over `bins` equal bins on [0, 1], where each
/// entry contributes its value (mass) rather than a count. The maximum falls
/// in the last bin.
std::vector<double> mass_weighted_histogram(const CsrMatrix& a, std::size_t bins);

}  // namespace sparsestim
