#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lp_internal.hpp"
#include "obm/error.hpp"

namespace obm::detail {
namespace {

// Bounded-free revised simplex on  max c.x, A x + s = b, x, s >= 0  with an
// explicit dense basis inverse. Rows with negative right-hand side are
// negated and receive an artificial column for phase one.
class DenseSimplex {
 public:
  DenseSimplex(const LpModel& model, const LpOptions& options, std::span<const double> scale)
      : options_(options), m_(model.num_rows()), n_(model.num_vars()) {
    sigma_.assign(m_, 1.0);
    b_.assign(m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      const double rhs = model.rows()[r].rhs * scale[r];
      if (rhs < 0.0) sigma_[r] = -1.0;
      b_[r] = sigma_[r] * rhs;
    }
    for (int r = 0; r < m_; ++r) {
      if (sigma_[r] < 0.0) artificial_rows_.push_back(r);
    }
    n_art_ = static_cast<int>(artificial_rows_.size());
    cols_ = n_ + m_ + n_art_;
    a_.assign(static_cast<std::size_t>(cols_) * m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      for (const SparseEntry& e : model.rows()[r].coeffs) {
        at(r, e.index) += sigma_[r] * scale[r] * e.value;
      }
      at(r, n_ + r) = sigma_[r];
    }
    for (int k = 0; k < n_art_; ++k) at(artificial_rows_[k], n_ + m_ + k) = 1.0;

    objective_.assign(cols_, 0.0);
    for (int j = 0; j < n_; ++j) objective_[j] = model.objective()[j];

    basis_.assign(m_, -1);
    pos_.assign(cols_, -1);
    for (int r = 0; r < m_; ++r) basis_[r] = n_ + r;
    for (int k = 0; k < n_art_; ++k) basis_[artificial_rows_[k]] = n_ + m_ + k;
    for (int r = 0; r < m_; ++r) pos_[basis_[r]] = r;
    barred_.assign(cols_, false);
    limit_ = default_iteration_limit(model, options);
  }

  LpSolution run() {
    LpSolution sol;
    refactor();
    if (n_art_ > 0) {
      std::vector<double> phase1(cols_, 0.0);
      for (int k = 0; k < n_art_; ++k) phase1[n_ + m_ + k] = -1.0;
      const Outcome first = iterate(phase1);
      if (first == Outcome::kUnbounded) throw SolverError("dense simplex: phase one unbounded", iterations_);
      double infeasibility = 0.0;
      for (int r = 0; r < m_; ++r) {
        if (basis_[r] >= n_ + m_) infeasibility += std::max(0.0, x_basic_[r]);
      }
      if (infeasibility > options_.feas_tol * std::max(1.0, static_cast<double>(m_)) * 1e-2 &&
          infeasibility > options_.feas_tol) {
        sol.status = LpStatus::kInfeasible;
        sol.iterations = iterations_;
        return sol;
      }
      drive_out_artificials();
      for (int k = 0; k < n_art_; ++k) barred_[n_ + m_ + k] = true;
    }
    const Outcome second = iterate(objective_);
    sol.iterations = iterations_;
    if (second == Outcome::kUnbounded) {
      sol.status = LpStatus::kUnbounded;
      return sol;
    }
    sol.status = LpStatus::kOptimal;
    sol.primal.assign(n_, 0.0);
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) sol.primal[basis_[r]] = std::max(0.0, x_basic_[r]);
    }
    const std::vector<double> y = prices(objective_);
    sol.duals.assign(m_, 0.0);
    for (int r = 0; r < m_; ++r) sol.duals[r] = std::max(0.0, sigma_[r] * y[r]);
    sol.objective_value = 0.0;
    for (int j = 0; j < n_; ++j) sol.objective_value += objective_[j] * sol.primal[j];
    sol.col_basis.assign(n_, BasisStatus::kNonbasic);
    sol.row_basis.assign(m_, BasisStatus::kNonbasic);
    for (int r = 0; r < m_; ++r) {
      const int c = basis_[r];
      if (c < n_) sol.col_basis[c] = BasisStatus::kBasic;
      else if (c < n_ + m_) sol.row_basis[c - n_] = BasisStatus::kBasic;
    }
    return sol;
  }

 private:
  enum class Outcome { kOptimal, kUnbounded };

  double& at(int r, int c) { return a_[static_cast<std::size_t>(c) * m_ + r]; }
  double at(int r, int c) const { return a_[static_cast<std::size_t>(c) * m_ + r]; }
  double& inv(int r, int k) { return binv_[static_cast<std::size_t>(r) * m_ + k]; }

  std::vector<double> prices(const std::vector<double>& cost) const {
    std::vector<double> y(m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      const double* row = &binv_[static_cast<std::size_t>(r) * m_];
      for (int k = 0; k < m_; ++k) y[k] += cb * row[k];
    }
    return y;
  }

  double reduced_cost(const std::vector<double>& cost, const std::vector<double>& y, int c) const {
    const double* col = &a_[static_cast<std::size_t>(c) * m_];
    double d = cost[c];
    for (int k = 0; k < m_; ++k) d -= y[k] * col[k];
    return d;
  }

  std::vector<double> ftran(int c) const {
    std::vector<double> alpha(m_, 0.0);
    const double* col = &a_[static_cast<std::size_t>(c) * m_];
    for (int k = 0; k < m_; ++k) {
      if (col[k] == 0.0) continue;
      for (int r = 0; r < m_; ++r) alpha[r] += binv_[static_cast<std::size_t>(r) * m_ + k] * col[k];
    }
    return alpha;
  }

  void pivot(int row, int entering, const std::vector<double>& alpha) {
    const double theta = x_basic_[row] / alpha[row];
    for (int r = 0; r < m_; ++r) x_basic_[r] -= theta * alpha[r];
    x_basic_[row] = theta;
    double* prow = &binv_[static_cast<std::size_t>(row) * m_];
    const double inv_pivot = 1.0 / alpha[row];
    for (int k = 0; k < m_; ++k) prow[k] *= inv_pivot;
    for (int r = 0; r < m_; ++r) {
      if (r == row || alpha[r] == 0.0) continue;
      double* target = &binv_[static_cast<std::size_t>(r) * m_];
      const double f = alpha[r];
      for (int k = 0; k < m_; ++k) target[k] -= f * prow[k];
    }
    pos_[basis_[row]] = -1;
    basis_[row] = entering;
    pos_[entering] = row;
    ++iterations_;
    if (++since_refactor_ >= kRefactorEvery) refactor();
  }

  // Gauss-Jordan inverse of the current basis matrix.
  void refactor() {
    std::vector<double> work(static_cast<std::size_t>(m_) * m_, 0.0);
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      for (int k = 0; k < m_; ++k) work[static_cast<std::size_t>(k) * m_ + r] = at(k, basis_[r]);
      inv(r, r) = 1.0;
    }
    for (int col = 0; col < m_; ++col) {
      int best = col;
      for (int r = col + 1; r < m_; ++r) {
        if (std::abs(work[static_cast<std::size_t>(r) * m_ + col]) >
            std::abs(work[static_cast<std::size_t>(best) * m_ + col])) {
          best = r;
        }
      }
      const double p = work[static_cast<std::size_t>(best) * m_ + col];
      if (std::abs(p) < 1e-13) throw SolverError("dense simplex: singular basis", iterations_);
      if (best != col) {
        for (int k = 0; k < m_; ++k) {
          std::swap(work[static_cast<std::size_t>(best) * m_ + k], work[static_cast<std::size_t>(col) * m_ + k]);
          std::swap(inv(best, k), inv(col, k));
        }
      }
      const double ip = 1.0 / p;
      for (int k = 0; k < m_; ++k) {
        work[static_cast<std::size_t>(col) * m_ + k] *= ip;
        inv(col, k) *= ip;
      }
      for (int r = 0; r < m_; ++r) {
        if (r == col) continue;
        const double f = work[static_cast<std::size_t>(r) * m_ + col];
        if (f == 0.0) continue;
        for (int k = 0; k < m_; ++k) {
          work[static_cast<std::size_t>(r) * m_ + k] -= f * work[static_cast<std::size_t>(col) * m_ + k];
          inv(r, k) -= f * inv(col, k);
        }
      }
    }
    x_basic_.assign(m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      double v = 0.0;
      for (int k = 0; k < m_; ++k) v += binv_[static_cast<std::size_t>(r) * m_ + k] * b_[k];
      x_basic_[r] = std::abs(v) < 1e-13 ? 0.0 : v;
    }
    since_refactor_ = 0;
  }

  Outcome iterate(const std::vector<double>& cost) {
    bool bland = false;
    int stalled = 0;
    double last_obj = -std::numeric_limits<double>::infinity();
    bool refreshed_at_optimum = false;
    while (true) {
      if (iterations_ >= limit_) throw SolverError("dense simplex: iteration limit", iterations_);
      const std::vector<double> y = prices(cost);
      int entering = -1;
      double best_d = options_.optimality_tol;
      for (int c = 0; c < cols_; ++c) {
        if (pos_[c] >= 0 || barred_[c]) continue;
        const double d = reduced_cost(cost, y, c);
        if (d > best_d) {
          entering = c;
          best_d = d;
          if (bland) break;
        }
      }
      if (entering < 0) {
        if (!refreshed_at_optimum && since_refactor_ > 0) {
          refactor();
          refreshed_at_optimum = true;
          continue;
        }
        return Outcome::kOptimal;
      }
      refreshed_at_optimum = false;
      const std::vector<double> alpha = ftran(entering);
      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m_; ++r) {
        if (alpha[r] <= options_.pivot_tol) continue;
        const double ratio = std::max(0.0, x_basic_[r]) / alpha[r];
        if (leave < 0 || ratio < best_ratio - 1e-12) {
          leave = r;
          best_ratio = ratio;
        } else if (ratio <= best_ratio + 1e-12) {
          const bool prefer = bland ? basis_[r] < basis_[leave] : alpha[r] > alpha[leave];
          if (prefer) {
            leave = r;
            best_ratio = std::min(best_ratio, ratio);
          }
        }
      }
      if (leave < 0) return Outcome::kUnbounded;
      if (x_basic_[leave] < 0.0) x_basic_[leave] = 0.0;
      pivot(leave, entering, alpha);
      for (double& x : x_basic_) {
        if (x < 0.0 && x > -options_.feas_tol) x = 0.0;
      }
      double obj = 0.0;
      for (int r = 0; r < m_; ++r) obj += cost[basis_[r]] * x_basic_[r];
      if (obj > last_obj + 1e-12 * std::max(1.0, std::abs(obj))) {
        last_obj = obj;
        stalled = 0;
        bland = false;
      } else if (++stalled >= kStallLimit) {
        bland = true;
      }
    }
  }

  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_ + m_) continue;
      const double* row = &binv_[static_cast<std::size_t>(r) * m_];
      int entering = -1;
      double best = 1e-7;
      for (int c = 0; c < n_ + m_; ++c) {
        if (pos_[c] >= 0) continue;
        const double* col = &a_[static_cast<std::size_t>(c) * m_];
        double v = 0.0;
        for (int k = 0; k < m_; ++k) v += row[k] * col[k];
        if (std::abs(v) > best) {
          best = std::abs(v);
          entering = c;
        }
      }
      if (entering < 0) continue;  // redundant row; the artificial stays basic at zero
      std::vector<double> alpha = ftran(entering);
      x_basic_[r] = 0.0;
      pivot(r, entering, alpha);
    }
  }

  static constexpr int kRefactorEvery = 60;
  static constexpr int kStallLimit = 50;

  LpOptions options_;
  int m_;
  int n_;
  int n_art_ = 0;
  int cols_ = 0;
  std::vector<int> artificial_rows_;
  std::vector<double> sigma_;
  std::vector<double> b_;
  std::vector<double> a_;
  std::vector<double> objective_;
  std::vector<int> basis_;
  std::vector<int> pos_;
  std::vector<bool> barred_;
  std::vector<double> binv_;
  std::vector<double> x_basic_;
  long iterations_ = 0;
  long limit_ = 0;
  int since_refactor_ = 0;
};

}  // namespace

LpSolution dense_simplex_solve(const LpModel& model, const LpOptions& options) {
  const std::vector<double> scale = row_scales(model, options.scale_rows);
  if (model.num_rows() == 0) {
    LpSolution sol;
    sol.primal.assign(model.num_vars(), 0.0);
    for (double c : model.objective()) {
      if (c > 0.0) {
        sol.status = LpStatus::kUnbounded;
        return sol;
      }
    }
    sol.status = LpStatus::kOptimal;
    sol.col_basis.assign(model.num_vars(), BasisStatus::kNonbasic);
    return sol;
  }
  DenseSimplex simplex(model, options, scale);
  LpSolution sol = simplex.run();
  unscale_duals(sol, scale);
  return sol;
}

}  // namespace obm::detail
