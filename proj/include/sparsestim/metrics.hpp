#pragma once

#include <cstddef>
#include <span>

namespace sparsestim {

/// Row-major grayscale image with values in [0, 1].
struct ImageView {
  std::span<const double> pixels;
  std::size_t width = 0;
  std::size_t height = 0;
};

struct SsimResult {
  double value = 0.0;
  /// The image was smaller than 11x11 and the 7x7, sigma 1.0 window was used.
  bool reduced_window = false;
};

/// Mean SSIM over all fully contained windows (no padding). Gaussian window
/// 11x11 with sigma 1.5, C1 = (0.01 L)^2, C2 = (0.03 L)^2, L = 1.
SsimResult ssim_detailed(ImageView a, ImageView b);
double ssim(ImageView a, ImageView b);

/// 10 log10(1 / MSE); +infinity for identical inputs.
double psnr(std::span<const double> a, std::span<const double> b);

double mae(std::span<const double> a, std::span<const double> b);

struct MetricReport {
  double ssim = 0.0;
  double psnr_db = 0.0;
  double mae = 0.0;
  bool reduced_window = false;
};

MetricReport evaluate_metrics(ImageView predicted, ImageView target);

}  // namespace sparsestim
