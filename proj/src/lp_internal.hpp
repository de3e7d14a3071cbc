#pragma once

#include <memory>
#include <span>
#include <vector>

#include "obm/lp.hpp"

namespace obm::detail {

// Row i is multiplied by scale[i] before it reaches a backend; duals come
// back multiplied by the same factor.
std::vector<double> row_scales(const LpModel& model, bool enabled);
LpRow scaled_row(const LpRow& row, double scale);
void unscale_duals(LpSolution& sol, std::span<const double> scale);

long default_iteration_limit(const LpModel& model, const LpOptions& options);

LpSolution dense_simplex_solve(const LpModel& model, const LpOptions& options);

class HighsSession {
 public:
  HighsSession(const LpModel& model, const LpOptions& options);
  ~HighsSession();
  LpSolution solve();
  void add_rows(std::span<const LpRow> rows);
  void set_objective(const std::vector<double>& c);
  void set_basis(const LpSolution& warm);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

}  // namespace obm::detail
