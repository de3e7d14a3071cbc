#include <cmath>
#include <cstdlib>
#include <limits>

#include "lp_internal.hpp"
#include "obm/error.hpp"

#ifdef OBM_HAVE_HIGHS
#include "Highs.h"
#endif

namespace obm {

#ifdef OBM_HAVE_HIGHS

bool highs_available() { return true; }

namespace detail {

// Sign applied to HiGHS row duals so that a binding <= row in a maximization
// gets a nonnegative multiplier. Checked by the LP unit tests.
constexpr double kHighsDualSign = 1.0;

struct HighsSession::State {
  Highs highs;
  LpOptions options;
  int num_vars = 0;
  std::vector<double> scale;
  std::vector<double> objective;
};

namespace {

void append_rows(Highs& highs, std::span<const LpRow> rows, std::span<const double> scale) {
  if (rows.empty()) return;
  std::vector<double> lower(rows.size(), -kHighsInf);
  std::vector<double> upper;
  std::vector<HighsInt> starts;
  std::vector<HighsInt> index;
  std::vector<double> value;
  upper.reserve(rows.size());
  starts.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    starts.push_back(static_cast<HighsInt>(index.size()));
    upper.push_back(rows[r].rhs * scale[r]);
    for (const SparseEntry& e : rows[r].coeffs) {
      index.push_back(e.index);
      value.push_back(e.value * scale[r]);
    }
  }
  const HighsStatus st = highs.addRows(static_cast<HighsInt>(rows.size()), lower.data(), upper.data(),
                                       static_cast<HighsInt>(index.size()), starts.data(), index.data(),
                                       value.data());
  if (st == HighsStatus::kError) throw SolverError("HiGHS rejected added rows", 0);
}

}  // namespace

HighsSession::HighsSession(const LpModel& model, const LpOptions& options)
    : state_(std::make_unique<State>()) {
  State& s = *state_;
  s.options = options;
  s.num_vars = model.num_vars();
  s.scale = row_scales(model, options.scale_rows);
  s.objective = model.objective();
  Highs& h = s.highs;
  h.setOptionValue("output_flag", false);
  h.setOptionValue("primal_feasibility_tolerance", std::min(options.feas_tol, 1e-7) * 1e-2);
  h.setOptionValue("dual_feasibility_tolerance", std::min(options.optimality_tol, 1e-7) * 1e-2);
  h.setOptionValue("solver", options.highs_solver);
  h.setOptionValue("threads", 1);
  h.setOptionValue("run_crossover", options.highs_crossover ? "on" : "off");

  HighsLp lp;
  lp.num_col_ = model.num_vars();
  lp.num_row_ = 0;
  lp.sense_ = ObjSense::kMaximize;
  lp.col_cost_ = model.objective();
  lp.col_lower_.assign(lp.num_col_, 0.0);
  lp.col_upper_.assign(lp.num_col_, kHighsInf);
  lp.a_matrix_.format_ = MatrixFormat::kColwise;
  lp.a_matrix_.num_col_ = lp.num_col_;
  lp.a_matrix_.num_row_ = 0;
  lp.a_matrix_.start_.assign(lp.num_col_ + 1, 0);
  if (h.passModel(std::move(lp)) == HighsStatus::kError) throw SolverError("HiGHS rejected the model", 0);
  append_rows(h, model.rows(), s.scale);
}

HighsSession::~HighsSession() = default;

void HighsSession::add_rows(std::span<const LpRow> rows) {
  State& s = *state_;
  std::vector<double> extra;
  extra.reserve(rows.size());
  for (const LpRow& row : rows) {
    double mx = 0.0;
    for (const SparseEntry& e : row.coeffs) mx = std::max(mx, std::abs(e.value));
    extra.push_back(s.options.scale_rows && mx > 0.0 ? 1.0 / mx : 1.0);
  }
  append_rows(s.highs, rows, extra);
  s.scale.insert(s.scale.end(), extra.begin(), extra.end());
}

void HighsSession::set_objective(const std::vector<double>& c) {
  State& s = *state_;
  s.objective = c;
  if (s.highs.changeColsCost(0, s.num_vars - 1, c.data()) == HighsStatus::kError) {
    throw SolverError("HiGHS rejected the objective", 0);
  }
}

void HighsSession::set_basis(const LpSolution& warm) {
  State& s = *state_;
  const HighsInt rows = s.highs.getNumRow();
  if (static_cast<int>(warm.col_basis.size()) != s.num_vars) return;
  HighsBasis basis;
  basis.valid = true;
  basis.alien = true;
  basis.col_status.resize(s.num_vars);
  for (int j = 0; j < s.num_vars; ++j) {
    basis.col_status[j] = warm.col_basis[j] == BasisStatus::kBasic ? HighsBasisStatus::kBasic
                                                                   : HighsBasisStatus::kLower;
  }
  basis.row_status.assign(rows, HighsBasisStatus::kBasic);
  for (std::size_t r = 0; r < warm.row_basis.size() && static_cast<HighsInt>(r) < rows; ++r) {
    basis.row_status[r] = warm.row_basis[r] == BasisStatus::kBasic ? HighsBasisStatus::kBasic
                                                                   : HighsBasisStatus::kUpper;
  }
  s.highs.setBasis(basis);
}

LpSolution HighsSession::solve() {
  State& s = *state_;
  Highs& h = s.highs;
  HighsStatus st = h.run();
  HighsModelStatus ms = h.getModelStatus();
  if (ms == HighsModelStatus::kUnboundedOrInfeasible) {
    h.setOptionValue("presolve", "off");
    st = h.run();
    ms = h.getModelStatus();
    h.setOptionValue("presolve", "choose");
  }
  LpSolution sol;
  sol.iterations = h.getInfo().simplex_iteration_count + h.getInfo().ipm_iteration_count;
  if (ms == HighsModelStatus::kInfeasible) {
    sol.status = LpStatus::kInfeasible;
    return sol;
  }
  if (ms == HighsModelStatus::kUnbounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }
  if (st == HighsStatus::kError || ms != HighsModelStatus::kOptimal) {
    throw SolverError("HiGHS finished with status " + h.modelStatusToString(ms), sol.iterations);
  }
  const HighsSolution& hs = h.getSolution();
  sol.status = LpStatus::kOptimal;
  sol.primal.resize(s.num_vars);
  for (int j = 0; j < s.num_vars; ++j) sol.primal[j] = std::max(0.0, hs.col_value[j]);
  const int rows = h.getNumRow();
  sol.duals.resize(rows);
  for (int r = 0; r < rows; ++r) sol.duals[r] = std::max(0.0, kHighsDualSign * hs.row_dual[r]);
  sol.objective_value = 0.0;
  for (int j = 0; j < s.num_vars; ++j) sol.objective_value += s.objective[j] * sol.primal[j];
  const HighsBasis& b = h.getBasis();
  if (b.valid) {
    sol.col_basis.resize(s.num_vars);
    for (int j = 0; j < s.num_vars; ++j) {
      sol.col_basis[j] = b.col_status[j] == HighsBasisStatus::kBasic ? BasisStatus::kBasic : BasisStatus::kNonbasic;
    }
    sol.row_basis.resize(rows);
    for (int r = 0; r < rows; ++r) {
      sol.row_basis[r] = b.row_status[r] == HighsBasisStatus::kBasic ? BasisStatus::kBasic : BasisStatus::kNonbasic;
    }
  }
  unscale_duals(sol, s.scale);
  return sol;
}

}  // namespace detail

#else

bool highs_available() { return false; }

namespace detail {

struct HighsSession::State {};

HighsSession::HighsSession(const LpModel&, const LpOptions&) {
  throw UnsupportedModelError("built without HiGHS");
}
HighsSession::~HighsSession() = default;
LpSolution HighsSession::solve() { return {}; }
void HighsSession::add_rows(std::span<const LpRow>) {}
void HighsSession::set_objective(const std::vector<double>&) {}
void HighsSession::set_basis(const LpSolution&) {}

}  // namespace detail

#endif

}  // namespace obm
