#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sparsestim/csr_matrix.hpp"
#include "sparsestim/perception.hpp"

namespace sparsestim {

enum class ResampleKernel { kNearest, kLanczos3 };

struct ResampleSpec {
  std::size_t src_w = 0;
  std::size_t src_h = 0;
  std::size_t dst_w = 0;
  std::size_t dst_h = 0;
  ResampleKernel kernel = ResampleKernel::kLanczos3;

  void validate() const;
};

/// sinc(u) sinc(u / 3) on |u| < 3, zero outside.
double lanczos3(double u) noexcept;

/// Resamples a row-major src_w x src_h image onto the dst grid. Pixel centres
/// map as src = (dst + 0.5) * scale - 0.5. Lanczos weights are stretched by
/// the downscale factor and renormalised per output pixel; the result is
/// clipped to [0, 1]. Nearest rounds exact ties towards the lower index.
std::vector<double> downsample(std::span<const double> image, const ResampleSpec& spec);

struct RescaleResult {
  Stimulus stimulus;
  double scale = 1.0;
  /// max(P s) was zero while the target is not, so the stimulus came back
  /// unscaled. With a dark target the unscaled stimulus is returned unflagged.
  bool flagged = false;
};

/// s <- clip01(alpha s) with alpha = max(x) / max(P s).
RescaleResult rescale_to_target(std::span<const double> s, const CsrMatrix& p,
                                std::span<const double> x);

/// Dense Moore-Penrose inverse of a perception matrix, computed once and
/// applied to many targets.
class PseudoInverse {
 public:
  static constexpr std::size_t kDefaultEntryCap = 10'000'000;

  /// Throws std::length_error when rows * cols exceeds `entry_cap` and
  /// std::runtime_error when the SVD fails.
  explicit PseudoInverse(const CsrMatrix& p, std::size_t entry_cap = kDefaultEntryCap);

  std::size_t rows() const noexcept { return rows_; }  ///< electrodes
  std::size_t cols() const noexcept { return cols_; }  ///< pixels
  std::size_t rank() const noexcept { return rank_; }
  /// Singular values at or below this were treated as zero.
  double tolerance() const noexcept { return tolerance_; }

  /// P^+ x, unconstrained.
  std::vector<double> apply(std::span<const double> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t rank_ = 0;
  double tolerance_ = 0.0;
  std::vector<double> pinv_;  // row-major rows_ x cols_
};

struct PinvEncoding {
  std::vector<double> unconstrained;  ///< P^+ x before any feasibility step
  Stimulus stimulus;                  ///< after max(0, .) and rescaling
  bool flagged = false;
};

PinvEncoding pseudo_inverse_encode(const PseudoInverse& pinv, const CsrMatrix& p,
                                   std::span<const double> x);
PinvEncoding pseudo_inverse_encode(const CsrMatrix& p, std::span<const double> x);

}  // namespace sparsestim
