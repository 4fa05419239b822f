#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sparsestim/csr_matrix.hpp"

namespace sparsestim {

/// Normalized electrode amplitudes in [0, 1], electrode index = row-major
/// position on the implant.
using Stimulus = std::vector<double>;
/// Brightness image on the percept grid, row-major, nominally in [0, 1].
using Percept = std::vector<double>;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Axon-map patient description. Lengths are in micrometres on the retina.
struct PatientParams {
  double rho_um = 150.0;     ///< current-spread decay (percept size)
  double lambda_um = 100.0;  ///< axonal decay (percept elongation)
  Point2 optic_disc_um{4000.0, 0.0};
  std::size_t axon_segments = 300;

  void validate() const;
};

/// Rectangular electrode array; electrode n sits at row n / cols, column
/// n % cols, with row 0 at the top (largest y).
struct ImplantGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double pitch_h_um = 0.0;
  double pitch_v_um = 0.0;
  Point2 center_um{};

  std::size_t electrode_count() const noexcept { return rows * cols; }
  double electrode_x(std::size_t col) const noexcept;
  double electrode_y(std::size_t row) const noexcept;
  Point2 electrode_position(std::size_t n) const noexcept;
  void validate() const;
};

/// Uniform pixel lattice. Pixel centres span the extent including both
/// edges; pixel 0 is the top-left corner.
struct PerceptGrid {
  std::size_t width_px = 0;
  std::size_t height_px = 0;
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  /// Grid over the implant's electrode bounding box grown by `margin_um`.
  static PerceptGrid covering(const ImplantGrid& implant, std::size_t width_px,
                              std::size_t height_px, double margin_um = 0.0);

  std::size_t pixel_count() const noexcept { return width_px * height_px; }
  Point2 pixel_center(std::size_t p) const noexcept;
  void validate() const;
};

/// Per-segment sensitivity of the axon starting at `pixel` to `electrode`:
/// w_j = exp(-|a_j - e|^2 / (2 rho^2)) * exp(-t_j / lambda), where a_j is
/// the j-th of S uniformly spaced points on the straight soma -> optic disc
/// path and t_j its arc length from the soma.
std::vector<double> axon_weight(Point2 pixel, Point2 electrode, const PatientParams& patient);

/// Electrode-segment pairs further apart than this are ignored; the spread
/// factor there is below 1e-6.
double spread_cutoff_um(const PatientParams& patient);

/// Axon-map perceptual model for one patient, implant and percept grid.
///
/// Holds the sampled axon of every pixel. Both the linearized matrix and the
/// nonlinear forward pass evaluate the kernel through the same expressions,
/// so a single active electrode produces bit-identical results in both.
class PerceptionModel {
 public:
  PerceptionModel(PatientParams patient, ImplantGrid implant, PerceptGrid grid);

  const PatientParams& patient() const noexcept { return patient_; }
  const ImplantGrid& implant() const noexcept { return implant_; }
  const PerceptGrid& grid() const noexcept { return grid_; }
  std::size_t pixel_count() const noexcept { return grid_.pixel_count(); }
  std::size_t electrode_count() const noexcept { return implant_.electrode_count(); }

  /// Linearized model: entry (p, n) is the max over the axon segments of
  /// pixel p of the unit-stimulus response to electrode n, truncated at tau.
  CsrMatrix perception_matrix(double tau = 0.05) const;

  /// Same matrix by exhaustive evaluation of every segment. Slow; used as a
  /// cross-check for the closed-form segment search.
  CsrMatrix perception_matrix_exhaustive(double tau = 0.05) const;

  /// y_p = clip01(max_j sum_n s_n w_{p,j,n}): currents add per axon segment,
  /// then the brightest segment sets the pixel.
  Percept forward_nonlinear(std::span<const double> stimulus) const;

 private:
  struct Window {
    std::size_t first = 0;
    std::size_t last = 0;  // exclusive
  };
  Window electrode_cols_near(double x, double reach) const noexcept;
  Window electrode_rows_near(double y, double reach) const noexcept;
  double spread(double dx, double dy) const noexcept;
  std::size_t segment_index(std::size_t pixel, std::size_t j) const noexcept {
    return pixel * segments_ + j;
  }

  PatientParams patient_;
  ImplantGrid implant_;
  PerceptGrid grid_;
  std::size_t segments_;
  double inv_two_rho_sq_;
  double cutoff_sq_;
  double cutoff_;
  std::vector<double> electrode_x_;
  std::vector<double> electrode_y_;
  std::vector<double> axon_length_;  // per pixel
  std::vector<Point2> segment_pos_;  // pixel-major, segments_ per pixel
  std::vector<double> segment_decay_;
};

CsrMatrix build_perception_matrix(const PatientParams& patient, const ImplantGrid& implant,
                                  const PerceptGrid& grid, double tau = 0.05);

Percept forward_nonlinear(std::span<const double> stimulus, const PatientParams& patient,
                          const ImplantGrid& implant, const PerceptGrid& grid);

/// P s clipped to [0, 1], for reporting. The solver works on the unclipped product.
Percept forward_linear(const CsrMatrix& p, std::span<const double> stimulus);

void clip01_inplace(std::span<double> v) noexcept;
std::vector<double> clip01(std::span<const double> v);

}  // namespace sparsestim
