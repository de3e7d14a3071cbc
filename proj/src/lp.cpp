#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lp_internal.hpp"
#include "obm/error.hpp"

namespace obm {

int LpModel::add_var(double objective) {
  if (!std::isfinite(objective)) throw std::invalid_argument("non-finite objective coefficient");
  objective_.push_back(objective);
  return num_vars() - 1;
}

void LpModel::set_objective(int var, double c) {
  if (var < 0 || var >= num_vars()) throw std::invalid_argument("objective index out of range");
  if (!std::isfinite(c)) throw std::invalid_argument("non-finite objective coefficient");
  objective_[var] = c;
}

void LpModel::set_objective(std::vector<double> c) {
  if (static_cast<int>(c.size()) != num_vars()) throw std::invalid_argument("objective size mismatch");
  for (double v : c) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite objective coefficient");
  }
  objective_ = std::move(c);
}

int LpModel::add_row(std::vector<SparseEntry> coeffs, double rhs, std::string tag) {
  if (!std::isfinite(rhs)) throw std::invalid_argument("non-finite right-hand side");
  std::sort(coeffs.begin(), coeffs.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  std::vector<SparseEntry> merged;
  merged.reserve(coeffs.size());
  for (const SparseEntry& e : coeffs) {
    if (e.index < 0 || e.index >= num_vars()) {
      throw std::invalid_argument("row coefficient index " + std::to_string(e.index) + " out of range");
    }
    if (!std::isfinite(e.value)) throw std::invalid_argument("non-finite row coefficient");
    if (!merged.empty() && merged.back().index == e.index) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const SparseEntry& e) { return e.value == 0.0; });
  rows_.push_back(LpRow{std::move(merged), rhs, std::move(tag)});
  return num_rows() - 1;
}

double LpModel::row_activity(int r, std::span<const double> x) const {
  double acc = 0.0;
  for (const SparseEntry& e : rows_.at(r).coeffs) acc += e.value * x[e.index];
  return acc;
}

namespace detail {

std::vector<double> row_scales(const LpModel& model, bool enabled) {
  std::vector<double> scale(model.num_rows(), 1.0);
  if (!enabled) return scale;
  for (int r = 0; r < model.num_rows(); ++r) {
    double mx = 0.0;
    for (const SparseEntry& e : model.rows()[r].coeffs) mx = std::max(mx, std::abs(e.value));
    if (mx > 0.0) scale[r] = 1.0 / mx;
  }
  return scale;
}

LpRow scaled_row(const LpRow& row, double scale) {
  LpRow out = row;
  out.rhs *= scale;
  for (SparseEntry& e : out.coeffs) e.value *= scale;
  return out;
}

void unscale_duals(LpSolution& sol, std::span<const double> scale) {
  for (std::size_t r = 0; r < sol.duals.size() && r < scale.size(); ++r) sol.duals[r] *= scale[r];
}

long default_iteration_limit(const LpModel& model, const LpOptions& options) {
  if (options.iteration_limit > 0) return options.iteration_limit;
  return 50L * (model.num_vars() + model.num_rows()) + 10000;
}

}  // namespace detail

namespace {

LpBackend pick_backend(const LpModel& model, const LpOptions& options) {
  if (options.backend != LpBackend::kAuto) {
    if (options.backend == LpBackend::kHighs && !highs_available()) {
      throw UnsupportedModelError("HiGHS backend requested but not built");
    }
    return options.backend;
  }
  const double entries = static_cast<double>(model.num_rows()) *
                         (static_cast<double>(model.num_rows()) + model.num_vars());
  if (highs_available() && entries > static_cast<double>(options.dense_limit)) return LpBackend::kHighs;
  return LpBackend::kDenseSimplex;
}

}  // namespace

LpSolution solve(const LpModel& model, const LpOptions& options) {
  if (pick_backend(model, options) == LpBackend::kHighs) {
    detail::HighsSession session(model, options);
    return session.solve();
  }
  return detail::dense_simplex_solve(model, options);
}

LpModel add_rows(LpModel model, std::span<const LpRow> rows) {
  for (const LpRow& row : rows) model.add_row(row);
  return model;
}

LpSolution resolve(const LpModel& model, const LpSolution& warm, const LpOptions& options) {
  if (pick_backend(model, options) == LpBackend::kHighs) {
    detail::HighsSession session(model, options);
    session.set_basis(warm);
    return session.solve();
  }
  return detail::dense_simplex_solve(model, options);
}

LpResiduals check_solution(const LpModel& model, const LpSolution& sol) {
  LpResiduals res;
  const auto& x = sol.primal;
  const auto& y = sol.duals;
  for (double v : x) res.primal_violation = std::max(res.primal_violation, -v);
  for (double v : y) res.dual_violation = std::max(res.dual_violation, -v);
  std::vector<double> aty(model.num_vars(), 0.0);
  double by = 0.0;
  for (int r = 0; r < model.num_rows(); ++r) {
    const LpRow& row = model.rows()[r];
    const double act = model.row_activity(r, x);
    res.primal_violation = std::max(res.primal_violation, act - row.rhs);
    const double yr = r < static_cast<int>(y.size()) ? y[r] : 0.0;
    res.complementarity = std::max(res.complementarity, std::abs(yr * (row.rhs - act)));
    by += yr * row.rhs;
    for (const SparseEntry& e : row.coeffs) aty[e.index] += yr * e.value;
  }
  double cx = 0.0;
  for (int j = 0; j < model.num_vars(); ++j) {
    res.dual_violation = std::max(res.dual_violation, model.objective()[j] - aty[j]);
    cx += model.objective()[j] * x[j];
  }
  res.duality_gap = std::abs(cx - by);
  return res;
}

class LpSolver::Impl {
 public:
  std::unique_ptr<detail::HighsSession> session;
};

LpSolver::LpSolver(LpModel model, LpOptions options)
    : model_(std::move(model)), options_(std::move(options)), impl_(std::make_unique<Impl>()) {
  backend_ = pick_backend(model_, options_);
  // Cut loops grow the model; stay on HiGHS once it is the natural choice
  // for the final size. Small loops keep the dense path.
  if (backend_ == LpBackend::kHighs) impl_->session = std::make_unique<detail::HighsSession>(model_, options_);
}

LpSolver::~LpSolver() = default;
LpSolver::LpSolver(LpSolver&&) noexcept = default;
LpSolver& LpSolver::operator=(LpSolver&&) noexcept = default;

const LpSolution& LpSolver::solve() {
  if (impl_->session) {
    solution_ = impl_->session->solve();
  } else {
    solution_ = detail::dense_simplex_solve(model_, options_);
  }
  return solution_;
}

void LpSolver::add_rows(std::span<const LpRow> rows) {
  for (const LpRow& row : rows) model_.add_row(row);
  if (impl_->session) {
    // Normalized copies so the session sees the same merged coefficients.
    std::span<const LpRow> added(model_.rows().end() - static_cast<std::ptrdiff_t>(rows.size()), model_.rows().end());
    impl_->session->add_rows(added);
  } else if (options_.backend == LpBackend::kAuto && pick_backend(model_, options_) == LpBackend::kHighs) {
    backend_ = LpBackend::kHighs;
    impl_->session = std::make_unique<detail::HighsSession>(model_, options_);
  }
}

void LpSolver::set_objective(std::vector<double> c) {
  model_.set_objective(c);
  if (impl_->session) impl_->session->set_objective(model_.objective());
}

namespace {

std::string row_name(const LpRow& row, int r) {
  if (row.tag.empty()) return "r" + std::to_string(r);
  std::string out;
  for (char ch : row.tag) out += std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ? ch : '_';
  if (!std::isalpha(static_cast<unsigned char>(out[0]))) out = "r_" + out;
  return out + "_" + std::to_string(r);
}

void write_terms(std::ostream& out, const std::vector<SparseEntry>& terms) {
  bool first = true;
  for (const SparseEntry& e : terms) {
    if (e.value == 0.0) continue;
    if (!first || e.value < 0.0) out << (e.value < 0.0 ? " - " : " + ");
    out << std::abs(e.value) << " x" << e.index;
    first = false;
  }
  if (first) out << "0 x0";
}

}  // namespace

std::string format_lp(const LpModel& model) {
  std::ostringstream out;
  out.precision(17);
  out << "Maximize\n obj: ";
  std::vector<SparseEntry> obj;
  for (int j = 0; j < model.num_vars(); ++j) {
    if (model.objective()[j] != 0.0) obj.push_back({j, model.objective()[j]});
  }
  write_terms(out, obj);
  out << "\nSubject To\n";
  for (int r = 0; r < model.num_rows(); ++r) {
    const LpRow& row = model.rows()[r];
    out << ' ' << row_name(row, r) << ": ";
    write_terms(out, row.coeffs);
    out << " <= " << row.rhs << '\n';
  }
  out << "End\n";
  return out.str();
}

void write_lp_format(const LpModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_lp(model);
}

}  // namespace obm
