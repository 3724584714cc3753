#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadstab/control.hpp"
#include "quadstab/fixpoint.hpp"

namespace quadstab::stability {

using fixpoint::FunctionExpr;
using fixpoint::GridSpec;

enum class Branch { Auto, Plus, Minus };

/// Full description of one stability experiment.
struct StabilityConfig {
  int c = 2;                        // equation parameter, c != 0, +1, -1
  FunctionExpr f;                   // perturbed function under test
  ControlFunction control;          // dominating control family
  bool fit_control = false;         // fit the parameter from the sample instead
  Branch branch = Branch::Auto;     // j selection; Auto picks from the family
  GridSpec grid;
  double tol = 1e-10;               // iteration stopping tolerance (on d_psi)
  double verify_tol = 1e-9;         // verification slack for certified checks
  int max_iter = 200;
  std::uint64_t seed = 0;           // drives triple subsampling only
};

struct PointRecord {
  double x = 0.0;
  double f = 0.0;
  double q = 0.0;
  double abs_err = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// Everything a run produces: hypothesis and checkpoint verdicts, iteration
/// diagnostics, the extracted fixed point with per-point certification, and
/// the residual check of the extracted function.
struct StabilityReport {
  int c = 0;
  int j = 0;
  double lipschitz = 0.0;      // contraction constant in use, 2^((p-2)j)
  double lipschitz_alt = 0.0;  // the 2^((p-3)j) variant, kept for comparison
  std::string control_kind;    // "power" | "constant"
  double control_parameter = 0.0;
  double control_p = 0.0;      // power family only; 0 otherwise
  bool control_fitted = false;

  bool hypothesis_ok = false;      // |residual| <= phi on the sampled triples
  double hypothesis_max_ratio = 0.0;  // max |residual| / phi observed
  int sample_triples = 0;

  double d_f_tf = 0.0;             // measured d(f, Tf)
  double checkpoint = 0.0;         // L^((j+1)/2) / c^2
  bool checkpoint_ok = false;

  bool converged = false;
  int n_converged = -1;
  std::vector<double> distances;   // successive d(T^n f, T^(n+1) f)
  std::optional<double> empirical_lipschitz;  // mean successive-distance ratio
  bool ratio_ok = false;           // empirical within 5% of theoretical

  double delta_q_max = 0.0;        // max |residual of Q| over closed triples
  int closed_triples = 0;
  bool delta_q_ok = false;

  std::vector<PointRecord> points;
  std::string failure;             // "", "hypothesis", "non-convergence"
  bool pass = false;

  // Echo of run parameters, for reproducibility of the report file.
  double grid_scale = 0.0;
  int grid_m_min = 0, grid_m_max = 0;
  double tol = 0.0;
  double verify_tol = 0.0;
  int max_iter = 0;
  std::uint64_t seed = 0;
  std::string function_desc;
};

/// Deterministic sample of (x, y, z) triples from (grid points plus the
/// origin)^3 minus the all-zero triple, capped by stratified seeded selection.
std::vector<std::array<double, 3>> sample_control_triples(const GridSpec& grid,
                                                          std::uint64_t seed,
                                                          std::size_t cap = 4096);

/// Smallest family parameter making the control dominate the residual on the
/// sampled triples: sup |residual(f)| / phi_unit.
double empirical_control_fit(const FunctionExpr& f, int c,
                             const ControlFunction& shape, const GridSpec& grid,
                             std::uint64_t seed);

/// Analytic ceiling for the residual of a quadratic plus bounded noise of
/// amplitude eta: the residual touches f at nine points with total absolute
/// weight 4 + 10 c^2, and the quadratic part cancels exactly.
double noise_control_ceiling(double eta, int c);

/// Triples (x, y, z) of grid points for which every argument the equation
/// evaluates lands on the grid or at the origin, so a function known only as
/// a grid table can be run through the residual.
std::vector<std::array<double, 3>> closed_equation_triples(const GridSpec& grid, int c);

/// End-to-end stability experiment: resolves branch and contraction constant,
/// checks control domination, extracts the nearby quadratic by fixed-point
/// iteration, and certifies the pointwise error bounds.
StabilityReport run_experiment(const StabilityConfig& config);

/// Grid metadata needed when echoing a config into a report.
struct GridMeta {
  double scale;
  int m_min, m_max;
};

StabilityReport run_experiment(const StabilityConfig& config, const GridMeta& meta);

}  // namespace quadstab::stability
