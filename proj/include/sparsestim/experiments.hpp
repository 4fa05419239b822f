#pragma once

// Experiment runners behind the command-line tool. Every runner writes its
// CSV outputs under `out` when `out` is non-empty and also returns the
// numbers it wrote, so tests can inspect them without parsing files.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sparsestim/baselines.hpp"
#include "sparsestim/config.hpp"
#include "sparsestim/csr_matrix.hpp"
#include "sparsestim/imageio.hpp"
#include "sparsestim/metrics.hpp"
#include "sparsestim/perception.hpp"
#include "sparsestim/solver.hpp"

namespace sparsestim {

// ---------------------------------------------------------------- stimuli

/// Little-endian f64 vector file: "SVEC", u32 version 1, u64 length, values.
std::vector<std::uint8_t> encode_svec(std::span<const double> v);
std::vector<double> decode_svec(std::span<const std::uint8_t> bytes);
void write_svec(const std::filesystem::path& path, std::span<const double> v);
std::vector<double> read_svec(const std::filesystem::path& path);

// ---------------------------------------------------------------- data

/// First `cfg.subset` images of the configured dataset, values in [0, 1].
std::vector<GrayImage> load_images(const ExperimentConfig& cfg);

/// Image on the percept grid; resampled with Lanczos-3 when sizes differ.
Percept image_to_target(const GrayImage& img, const PerceptGrid& grid);

/// Shifts an image right by `dx` pixels, filling with zeros.
GrayImage translate_image(const GrayImage& img, std::size_t dx);

// ---------------------------------------------------------------- problems

struct MethodOutput {
  Stimulus stimulus;
  std::size_t iterations = 0;
  double seconds = 0.0;
  bool flagged = false;
  /// 0.5 ||P s - x||^2 of `stimulus` under the problem's matrix.
  double f = 0.0;
  /// pinv only: 0.5 ||P s~ - x||^2 before any feasibility step.
  std::optional<double> f_unconstrained;
  /// ours only.
  std::optional<EncodeResult> solve;
};

/// One patient/implant pair: the perceptual model, its truncated matrix, and
/// the encoders that run against it.
class Problem {
 public:
  Problem(const ExperimentConfig& cfg, PatientSpec patient, ImplantSpec implant, double tau);
  Problem(const ExperimentConfig& cfg, PatientSpec patient, ImplantSpec implant, CsrMatrix p);

  const PatientSpec& patient() const noexcept { return patient_; }
  const ImplantSpec& implant() const noexcept { return implant_; }
  const PerceptGrid& grid() const noexcept { return model_.grid(); }
  const PerceptionModel& model() const noexcept { return model_; }
  const CsrMatrix& matrix() const noexcept { return op_.matrix(); }
  const LinearOperator& op() const noexcept { return op_; }
  double build_seconds() const noexcept { return build_seconds_; }

  /// Throws std::length_error when the dense pseudo-inverse exceeds the cap.
  MethodOutput run(Method method, const Percept& x, const SolverOptions& opts,
                   ReportedIterate report = ReportedIterate::kBest) const;

  /// Linear evaluation uses clip01(P s) with `linear` (default: this matrix).
  MetricReport evaluate_linear(const Stimulus& s, const Percept& x,
                               const CsrMatrix* linear = nullptr) const;
  MetricReport evaluate_nonlinear(const Stimulus& s, const Percept& x) const;

 private:
  PatientSpec patient_;
  ImplantSpec implant_;
  PerceptionModel model_;
  double build_seconds_ = 0.0;
  LinearOperator op_;
  std::size_t pinv_entry_cap_;
  mutable std::unique_ptr<PseudoInverse> pinv_;
};

// ---------------------------------------------------------------- records

struct RunRecord {
  std::string patient;
  std::string implant;
  Method method = Method::kOurs;
  std::size_t image = 0;
  MetricReport linear;
  MetricReport nonlinear;
  std::size_t iterations = 0;
  double seconds = 0.0;
  double f = 0.0;
  std::optional<double> f_unconstrained;
};

inline constexpr const char* kRecordHeader =
    "patient,implant,method,image,ssim_lin,psnr_lin,mae_lin,ssim_nl,psnr_nl,mae_nl,iters,seconds";

std::string format_record(const RunRecord& r);
std::vector<RunRecord> read_records(const std::filesystem::path& csv);

struct MethodSummary {
  std::string patient;
  std::string implant;
  Method method = Method::kOurs;
  std::size_t images = 0;
  MetricReport linear;     ///< means
  MetricReport nonlinear;  ///< means
  double iterations = 0.0;
  double seconds = 0.0;
};

/// Means over images per (patient, implant, method), in first-seen order.
std::vector<MethodSummary> summarize(const std::vector<RunRecord>& records);

// ---------------------------------------------------------------- commands

struct MatrixReportRow {
  std::string patient;
  std::string implant;
  std::size_t rows = 0;
  std::size_t cols = 0;
  SparsityStats stats;
  std::vector<double> histogram;
  double build_seconds = 0.0;
};

/// Builds and saves P for every patient x implant; sparsity.csv and
/// mass_histogram.csv.
std::vector<MatrixReportRow> cmd_gen_matrix(const ExperimentConfig& cfg,
                                            const std::filesystem::path& out);

struct EncodeReport {
  std::vector<RunRecord> records;
  std::vector<MethodSummary> summary;
  /// (patient, implant) pairs for which pinv was refused by the size cap.
  std::vector<std::string> skipped;
};

/// Every image x method x patient x implant; records.csv, summary.csv,
/// residuals.csv, stimuli/*.svec, percepts/*.pgm, history/*.csv.
EncodeReport cmd_encode(const ExperimentConfig& cfg, const std::filesystem::path& out);

struct AnytimePoint {
  std::size_t iteration = 0;
  double seconds = 0.0;  ///< mean cumulative solver time over images
  double f_best = 0.0;   ///< mean
  double ssim_lin = 0.0;
  double ssim_nl = 0.0;
};

struct AnytimeCurve {
  std::string patient;
  std::string implant;
  std::vector<AnytimePoint> points;
  double lanczos_ssim_nl = 0.0;
  /// First checkpoint whose mean nonlinear SSIM reaches Lanczos.
  std::optional<std::size_t> crossover_iteration;
  std::optional<double> crossover_seconds;
};

std::vector<std::size_t> anytime_checkpoints(const ExperimentConfig& cfg);
std::vector<AnytimeCurve> cmd_anytime(const ExperimentConfig& cfg,
                                      const std::filesystem::path& out);

struct TruncationRow {
  std::string patient;
  std::string implant;
  double tau = 0.0;
  SparsityStats stats;
  MetricReport linear;
  MetricReport nonlinear;
  double iterations = 0.0;
  std::vector<RunRecord> records;
};

/// Ours at every tau; linear metrics always use the untruncated matrix.
std::vector<TruncationRow> cmd_truncation_ablation(const ExperimentConfig& cfg,
                                                   const std::filesystem::path& out);

struct MismatchCell {
  double rho_um = 0.0;
  double lambda_um = 0.0;
  double ssim_ours = 0.0;
  double ssim_lanczos = 0.0;
  double delta_ssim = 0.0;
};

/// Optimises with each assumed (rho, lambda), evaluates under the true
/// patient, on the first configured implant.
std::vector<MismatchCell> cmd_mismatch_grid(const ExperimentConfig& cfg,
                                            const std::filesystem::path& out);

struct BenchRow {
  std::string patient;
  std::string implant;
  std::size_t nnz = 0;
  std::size_t repeat = 0;
  std::size_t iterations = 0;
  double mean_ms = 0.0;
  double stddev_ms = 0.0;
  double load_seconds = 0.0;
  double build_seconds = 0.0;
};

std::vector<BenchRow> cmd_bench(const ExperimentConfig& cfg, const std::filesystem::path& out);

struct WarmStartRow {
  std::string patient;
  std::string implant;
  std::string sequence;  ///< "translated" or "identical"
  std::size_t frame = 0;
  double f_converged = 0.0;
  double f_initial = 0.0;
  std::optional<std::size_t> iterations_to_target;
  std::optional<std::size_t> cold_iterations_to_target;
  std::size_t iterations_run = 0;
};

/// Translated-image sequence and an identical-frame pair built from the
/// first dataset image.
std::vector<WarmStartRow> cmd_warm_start(const ExperimentConfig& cfg,
                                         const std::filesystem::path& out);

struct AuditReport {
  std::size_t records = 0;
  double max_abs_deviation = 0.0;
  std::size_t mismatches = 0;
};

/// Re-derives every record in `encode_dir`/records.csv from the stored
/// stimuli and compares within `tolerance`.
AuditReport cmd_audit(const ExperimentConfig& cfg, const std::filesystem::path& encode_dir,
                      double tolerance = 1e-9);

}  // namespace sparsestim
