#pragma once

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace obm {

struct SparseEntry {
  int index;
  double value;
};

struct LpRow {
  std::vector<SparseEntry> coeffs;
  double rhs = 0.0;
  std::string tag;
};

// maximize c.x  subject to  A x <= b,  x >= 0.
class LpModel {
 public:
  LpModel() = default;
  explicit LpModel(int num_vars) : objective_(num_vars, 0.0) {}

  int num_vars() const { return static_cast<int>(objective_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }

  int add_var(double objective = 0.0);
  void set_objective(int var, double c);
  void set_objective(std::vector<double> c);
  const std::vector<double>& objective() const { return objective_; }

  // Throws std::invalid_argument on an index outside [0, num_vars) or a
  // non-finite coefficient.
  int add_row(std::vector<SparseEntry> coeffs, double rhs, std::string tag = {});
  void add_row(LpRow row) { add_row(std::move(row.coeffs), row.rhs, std::move(row.tag)); }
  const std::vector<LpRow>& rows() const { return rows_; }

  double row_activity(int r, std::span<const double> x) const;

 private:
  std::vector<double> objective_;
  std::vector<LpRow> rows_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

enum class BasisStatus : unsigned char { kNonbasic, kBasic };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> primal;
  std::vector<double> duals;  // one per row, >= 0 at optimum
  double objective_value = 0.0;
  long iterations = 0;
  // Warm-start data: one status per column and per row slack.
  std::vector<BasisStatus> col_basis;
  std::vector<BasisStatus> row_basis;
};

enum class LpBackend { kAuto, kDenseSimplex, kHighs };

struct LpOptions {
  LpBackend backend = LpBackend::kAuto;
  double feas_tol = 1e-7;
  double comp_tol = 1e-6;
  double pivot_tol = 1e-9;
  double optimality_tol = 1e-9;
  long iteration_limit = 0;  // 0 picks a size-based default
  bool scale_rows = true;
  // HiGHS only: "choose", "simplex" or "ipm".
  std::string highs_solver = "choose";
  // HiGHS ipm only: recover a vertex (and a basis) after the interior solve.
  bool highs_crossover = true;
  // kAuto switches to HiGHS above this many dense tableau entries.
  long dense_limit = 4'000'000;
};

bool highs_available();

// Throws SolverError on numerical failure or iteration limit.
LpSolution solve(const LpModel& model, const LpOptions& options = {});

LpModel add_rows(LpModel model, std::span<const LpRow> rows);
// Same optimum as a cold solve of the enlarged model; `warm` seeds the basis
// when the backend can use it.
LpSolution resolve(const LpModel& model, const LpSolution& warm, const LpOptions& options = {});

struct LpResiduals {
  double primal_violation = 0.0;      // max over rows of (a.x - b)+ and (-x)+
  double dual_violation = 0.0;        // max over columns of (c - A^T y)+ and (-y)+
  double complementarity = 0.0;       // max |y_r * slack_r|
  double duality_gap = 0.0;           // |c.x - b.y|
};
LpResiduals check_solution(const LpModel& model, const LpSolution& sol);

// Stateful solver for cutting-plane loops: keeps the backend alive so that
// added rows re-solve from the previous basis.
class LpSolver {
 public:
  explicit LpSolver(LpModel model, LpOptions options = {});
  ~LpSolver();
  LpSolver(LpSolver&&) noexcept;
  LpSolver& operator=(LpSolver&&) noexcept;

  const LpSolution& solve();
  void add_rows(std::span<const LpRow> rows);
  void set_objective(std::vector<double> c);
  const LpModel& model() const { return model_; }
  const LpSolution& solution() const { return solution_; }
  LpBackend backend() const { return backend_; }

  class Impl;

 private:
  LpModel model_;
  LpOptions options_;
  LpBackend backend_;
  LpSolution solution_;
  std::unique_ptr<Impl> impl_;
};

// CPLEX LP text format, variables x0..x{n-1}, rows named by tag or r<k>.
void write_lp_format(const LpModel& model, const std::filesystem::path& path);
std::string format_lp(const LpModel& model);

}  // namespace obm
