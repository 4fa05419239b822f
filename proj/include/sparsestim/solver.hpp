#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sparsestim/csr_matrix.hpp"
#include "sparsestim/perception.hpp"

namespace sparsestim {

/// How the exact line-search step treats coordinates pinned at a bound.
enum class StepRule {
  /// Gradient components that push an iterate further past a bound it already
  /// sits on are zeroed before the step length and the update are computed.
  kBoundAware,
  /// alpha from the full gradient, then clip. Can stall on the box boundary.
  kFullGradient,
};

enum class StopReason {
  kMaxIterations,
  kGradientTolerance,  ///< (projected) gradient norm <= grad_tol
  kStagnation,         ///< ||P g||^2 underflowed: direction in the null space of P
  kFixedPoint,         ///< projected update left the iterate unchanged
  kRelativeResidual,   ///< f_best improved too little over the last window
};

std::string_view to_string(StopReason reason) noexcept;

struct IterationState {
  std::size_t iteration = 0;  ///< k; 0 is the starting point
  double f = 0.0;             ///< f(s^(k))
  double f_best = 0.0;
  std::span<const double> s;
  std::span<const double> s_best;
};

struct SolverOptions {
  std::size_t max_iters = 10000;
  double grad_tol = 1e-10;
  double rel_residual_tol = 1e-9;
  std::size_t rel_residual_window = 10;
  bool record_history = false;
  /// Check after every update that the iterate lies in [0, 1]^N.
  bool check_feasibility = false;
  StepRule step_rule = StepRule::kBoundAware;
  /// Called for k = 0 and after every update. Time spent here is not counted
  /// in the iteration timings.
  std::function<void(const IterationState&)> observer;

  void validate() const;
};

struct HistoryEntry {
  std::size_t iteration = 0;
  double f = 0.0;
  double seconds_cumulative = 0.0;
};

struct EncodeResult {
  Stimulus s_best;
  double f_best = 0.0;
  Stimulus s_last;
  double f_last = 0.0;
  double f_initial = 0.0;
  std::size_t iterations_run = 0;
  StopReason stop_reason = StopReason::kMaxIterations;
  /// f(s^(k)) for k = 0..iterations_run when record_history is set.
  std::vector<HistoryEntry> residual_history;
  double total_seconds = 0.0;
  double per_iteration_seconds = 0.0;
};

/// f(s) = 0.5 ||P s - x||^2.
double objective(const CsrMatrix& p, std::span<const double> s, std::span<const double> x);

/// grad f(s) = P^T (P s - x).
std::vector<double> gradient(const CsrMatrix& p, std::span<const double> s,
                             std::span<const double> x);

/// Exact minimiser of f(s - alpha g) along g: ||g||^2 / ||P g||^2. Returns
/// nullopt when the denominator underflows (g in the null space of P).
std::optional<double> step_size(const CsrMatrix& p, std::span<const double> g);

/// Projected residual-norm steepest descent on 0.5 ||P s - x||^2 over
/// [0, 1]^N, started from clip01(s0). Returns the best iterate seen.
EncodeResult encode(const LinearOperator& p, std::span<const double> x,
                    std::span<const double> s0, const SolverOptions& opts = {});
EncodeResult encode(const CsrMatrix& p, std::span<const double> x, std::span<const double> s0,
                    const SolverOptions& opts = {});

/// Encodes frames in order, starting each frame from the previous frame's
/// final iterate. Every frame runs under `opts` with max_iters = iters_per_frame.
std::vector<EncodeResult> encode_sequence(const LinearOperator& p,
                                          std::span<const Percept> frames,
                                          std::size_t iters_per_frame,
                                          std::span<const double> s0,
                                          SolverOptions opts = {});
std::vector<EncodeResult> encode_sequence(const CsrMatrix& p, std::span<const Percept> frames,
                                          std::size_t iters_per_frame,
                                          std::span<const double> s0,
                                          SolverOptions opts = {});

}  // namespace sparsestim
