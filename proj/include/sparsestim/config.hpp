#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sparsestim/perception.hpp"
#include "sparsestim/solver.hpp"

namespace sparsestim {

/// Raised for any invalid experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PatientSpec {
  std::string id;
  PatientParams params;
};

struct ImplantSpec {
  std::string id;
  ImplantGrid grid;
};

enum class Method { kNearest, kLanczos, kPinv, kOurs };

std::string_view to_string(Method m) noexcept;
Method parse_method(std::string_view name);

enum class DatasetFormat { kIdx, kPgm, kSynthetic };

struct DatasetSpec {
  /// IDX3 file, or a directory of .pgm files read in name order.
  std::filesystem::path path;
  DatasetFormat format = DatasetFormat::kIdx;
  /// Image count for the synthetic format (random blobs from `seed`).
  std::size_t synthetic_count = 20;
};

/// Which iterate of our solver is scored.
enum class ReportedIterate { kBest, kLast };

struct MismatchSpec {
  PatientParams truth{250.0, 200.0, {4000.0, 0.0}, 300};
  std::vector<double> rho_values{100.0, 175.0, 250.0, 375.0, 500.0, 800.0};
  std::vector<double> lambda_values{50.0, 100.0, 200.0, 400.0, 800.0, 1600.0};
  /// Also apply the max-brightness rescaling (under the assumed model) to our
  /// stimulus. Off by default so an exact guess reproduces the standard run.
  bool rescale_ours = false;
};

struct AnytimeSpec {
  /// Iterations at which the best iterate is scored; empty = every iteration
  /// up to `dense_until`, then a geometric ladder (ratio 1.5) up to the
  /// solver budget.
  std::vector<std::size_t> checkpoints;
  std::size_t dense_until = 32;
};

struct BenchSpec {
  std::size_t min_iterations = 1000;
  std::size_t repeats = 2;
};

struct WarmStartSpec {
  std::size_t frames = 10;
  std::size_t shift_px = 1;
  /// Iteration budget per frame; large enough to converge.
  std::size_t iters_per_frame = 10000;
  double target_factor = 1.05;
};

struct ExperimentConfig {
  std::vector<PatientSpec> patients;
  std::vector<ImplantSpec> implants;
  std::size_t grid_width_px = 28;
  std::size_t grid_height_px = 28;
  double margin_um = 0.0;
  double tau = 0.05;
  DatasetSpec dataset;
  std::vector<Method> methods{Method::kNearest, Method::kLanczos, Method::kPinv, Method::kOurs};
  SolverOptions solver;
  ReportedIterate report = ReportedIterate::kBest;
  std::size_t subset = 100;  ///< first N images; 0 = all
  std::uint64_t seed = 0;
  std::vector<double> taus{0.0, 0.01, 0.05, 0.1, 0.2};
  std::size_t histogram_bins = 20;
  std::size_t pinv_entry_cap = 10'000'000;
  bool save_images = true;
  MismatchSpec mismatch;
  AnytimeSpec anytime;
  BenchSpec bench;
  WarmStartSpec warm_start;

  PerceptGrid grid_for(const ImplantGrid& implant) const;
  /// Structural checks; `need_dataset` also checks that the dataset exists.
  void validate(bool need_dataset) const;
};

/// The four patients and three implants of the default study.
std::vector<PatientSpec> default_patients();
std::vector<ImplantSpec> default_implants();

/// Parses a JSON document. Accepts either a flat single-patient/single-implant
/// form (rho_um, lambda_um, optic_disc_um, axon_segments, rows, cols,
/// pitch_h_um, pitch_v_um, center_um, grid_px, margin_um, tau) or `patients`
/// and `implants` lists. Unknown keys are rejected. Relative dataset paths are
/// resolved against `base_dir`.
ExperimentConfig parse_config(std::string_view json_text,
                              const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace sparsestim
