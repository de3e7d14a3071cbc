#include "obm/polytope_verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "obm/error.hpp"

namespace obm {
namespace {

void check_cap(int n, int cap) {
  if (n < 1) throw std::invalid_argument("policy LP needs n >= 1");
  if (n > cap) throw CapacityError("policy LP size " + std::to_string(n), cap);
}

AdMask full(int n) { return full_mask(n); }

ZVector cut_coefficients(int n, const Cut& cut) {
  if (cut.n != n) throw std::invalid_argument("cut size differs from n");
  ZVector c(n);
  for (const CutTerm& term : cut.terms()) c.at(term.impression, term.ad, term.stage) += to_double_checked(term.coef);
  return c;
}

LpRow lifted_row(const FullPolicyLp& lp, const ZVector& c, double sign, double rhs, std::string tag) {
  LpRow row;
  const std::vector<double> obj = lp.lift(c);
  for (int k = 0; k < static_cast<int>(obj.size()); ++k) {
    if (obj[k] != 0.0) row.coeffs.push_back({k, sign * obj[k]});
  }
  row.rhs = rhs;
  row.tag = std::move(tag);
  return row;
}

LpOptions dense_options() {
  LpOptions o;
  o.backend = LpBackend::kDenseSimplex;
  return o;
}

// Incremental exact affine hull: difference vectors in reduced echelon form.
class AffineHull {
 public:
  bool add(const ExactZVector& p) {
    if (!has_base_) {
      base_ = p.raw();
      has_base_ = true;
      return true;
    }
    std::vector<Rational> v(p.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = p.raw()[k] - base_[k];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (rows_[r][k] != 0) v[k] -= f * rows_[r][k];
      }
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return false;
    const Rational inv = 1 / v[piv];
    for (Rational& x : v) x *= inv;
    for (auto& row : rows_) {
      const Rational f = row[piv];
      if (f == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] != 0) row[k] -= f * v[k];
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }
  int rank() const { return has_base_ ? static_cast<int>(rows_.size()) : -1; }

 private:
  bool has_base_ = false;
  std::vector<Rational> base_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

int FullPolicyLp::x(int i, int j, int t, AdMask s) const {
  if (contains(s, j)) throw std::invalid_argument("x(i, j, t, S) needs j outside S");
  // Drop bit j: S ranges over the 2^(n-1) subsets of V - j.
  const AdMask low = s & ((AdMask{1} << j) - 1);
  const AdMask packed = low | ((s >> (j + 1)) << j);
  const std::size_t half = std::size_t{1} << (n - 1);
  return static_cast<int>(((static_cast<std::size_t>(t - 1) * n + i) * n + j) * half + packed);
}

int FullPolicyLp::y(int i, int t, AdMask s) const {
  const std::size_t states = std::size_t{1} << n;
  return num_x + static_cast<int>((static_cast<std::size_t>(t - 1) * n + i) * states + s);
}

ZVector FullPolicyLp::project(const std::vector<double>& primal) const {
  ZVector z(n);
  for (int t = 1; t <= n; ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (AdMask s = 0; s <= full(n); ++s) {
          if (!contains(s, j)) acc += primal[x(i, j, t, s)];
        }
        z.at(i, j, t) = acc;
      }
    }
  }
  return z;
}

std::vector<double> FullPolicyLp::lift(const ZVector& c) const {
  std::vector<double> obj(model.num_vars(), 0.0);
  for (int t = 1; t <= n; ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double v = c.at(i, j, t);
        if (v == 0.0) continue;
        for (AdMask s = 0; s <= full(n); ++s) {
          if (!contains(s, j)) obj[x(i, j, t, s)] = v;
        }
      }
    }
  }
  return obj;
}

FullPolicyLp build_policy_lp(int n, int cap) {
  check_cap(n, cap);
  FullPolicyLp lp;
  lp.n = n;
  const int states = 1 << n;
  lp.num_x = n * n * n * (states / 2);
  lp.num_y = n * n * states;
  lp.model = LpModel(lp.num_x + lp.num_y);
  const AdMask all = full(n);
  const double inv = 1.0 / n;

  for (int i = 0; i < n; ++i) {
    std::vector<SparseEntry> row;
    for (int j = 0; j < n; ++j) row.push_back({lp.x(i, j, n, all & ~(AdMask{1} << j)), 1.0});
    row.push_back({lp.y(i, n, all), 1.0});
    lp.model.add_row(std::move(row), inv, "start_" + std::to_string(i));
  }
  for (int t = 1; t <= n - 1; ++t) {
    for (int i = 0; i < n; ++i) {
      for (AdMask s = 1; s <= all; ++s) {
        const int size = std::popcount(s);
        if (size < t) continue;
        std::vector<SparseEntry> row;
        for (int j = 0; j < n; ++j) {
          if (contains(s, j)) row.push_back({lp.x(i, j, t, s & ~(AdMask{1} << j)), 1.0});
        }
        if (t != 1) row.push_back({lp.y(i, t, s), 1.0});
        if (s == all || size > t) {
          for (int k = 0; k < n; ++k) row.push_back({lp.y(k, t + 1, s), -inv});
        }
        if (s != all) {
          for (int k = 0; k < n; ++k) {
            for (int j = 0; j < n; ++j) {
              if (!contains(s, j)) row.push_back({lp.x(k, j, t + 1, s), -inv});
            }
          }
        }
        lp.model.add_row(std::move(row), 0.0, "flow_" + std::to_string(t) + "_" + std::to_string(i) + "_" +
                                                  std::to_string(s));
      }
    }
  }
  std::vector<SparseEntry> pinned;
  for (int t = 1; t <= n; ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (AdMask s = 0; s <= all; ++s) {
          if (!contains(s, j) && std::popcount(s) + 1 < t) pinned.push_back({lp.x(i, j, t, s), 1.0});
        }
      }
    }
  }
  if (!pinned.empty()) lp.model.add_row(std::move(pinned), 0.0, "unreachable");
  return lp;
}

double solve_policy_lp(const Instance& inst, int cap) {
  const int n = inst.n_ads();
  if (inst.n_impressions() != n || inst.horizon() != n) {
    throw std::invalid_argument("policy LP needs a square instance");
  }
  FullPolicyLp lp = build_policy_lp(n, cap);
  ZVector w(n);
  for (int t = 1; t <= n; ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) w.at(i, j, t) = inst.weight(i, j, t);
    }
  }
  lp.model.set_objective(lp.lift(w));
  const LpSolution sol = solve(lp.model, dense_options());
  if (sol.status != LpStatus::kOptimal) throw SolverError("policy LP not optimal", sol.iterations);
  return sol.objective_value;
}

double solve_value_lp(const Instance& inst, int cap) {
  const int n = inst.n_ads();
  if (inst.n_impressions() != n || inst.horizon() != n) {
    throw std::invalid_argument("value LP needs a square instance");
  }
  check_cap(n, cap);
  const int states = 1 << n;
  const AdMask all = full(n);
  auto v = [&](int t, int i, AdMask s) { return ((t - 1) * n + i) * states + static_cast<int>(s); };
  LpModel model(n * n * states);
  // max -E v_n(eta, V) with the >= rows negated.
  for (int i = 0; i < n; ++i) model.set_objective(v(n, i, all), -1.0 / n);
  auto future = [&](int t, AdMask s, std::vector<SparseEntry>& row) {
    if (t == 1) return;
    for (int k = 0; k < n; ++k) row.push_back({v(t - 1, k, s), 1.0 / n});
  };
  for (int t = 1; t <= n; ++t) {
    for (int i = 0; i < n; ++i) {
      for (AdMask s = 0; s <= all; ++s) {
        std::vector<SparseEntry> stay{{v(t, i, s), -1.0}};
        future(t, s, stay);
        model.add_row(std::move(stay), 0.0);
        for (int j = 0; j < n; ++j) {
          if (contains(s, j)) continue;
          std::vector<SparseEntry> take{{v(t, i, s | (AdMask{1} << j)), -1.0}};
          future(t, s, take);
          model.add_row(std::move(take), -inst.weight(i, j, t));
        }
      }
    }
  }
  const LpSolution sol = solve(model, dense_options());
  if (sol.status != LpStatus::kOptimal) throw SolverError("value LP not optimal", sol.iterations);
  return -sol.objective_value;
}

double max_over_Q(int n, const Cut& cut, int cap) {
  FullPolicyLp lp = build_policy_lp(n, cap);
  lp.model.set_objective(lp.lift(cut_coefficients(n, cut)));
  const LpSolution sol = solve(lp.model, dense_options());
  if (sol.status != LpStatus::kOptimal) throw SolverError("max over Q not optimal", sol.iterations);
  return sol.objective_value;
}

const char* verdict_name(FacetVerdict v) {
  switch (v) {
    case FacetVerdict::kValidAndFacet: return "valid_and_facet";
    case FacetVerdict::kValidNotCertified: return "valid_not_certified";
    case FacetVerdict::kInvalid: return "invalid";
  }
  return "?";
}

FacetCertificate facet_dimension(int n, const Cut& cut, int trials, std::uint64_t seed, int cap) {
  FacetCertificate cert;
  cert.cut = cut;
  cert.target_rank = n * n * n - 1;
  const double rhs = to_double_checked(cut.rhs);
  const double tol = 1e-8 * std::max(1.0, std::abs(rhs));
  cert.face_max = max_over_Q(n, cut, cap);
  if (cert.face_max > rhs + tol) {
    cert.verdict = FacetVerdict::kInvalid;
    return cert;
  }
  if (cert.face_max < rhs - tol) {
    throw ContractViolation("facet_dimension: face LHS = rhs is empty (max " + std::to_string(cert.face_max) + ")");
  }

  FullPolicyLp lp = build_policy_lp(n, cap);
  const ZVector coeffs = cut_coefficients(n, cut);
  lp.model.add_row(lifted_row(lp, coeffs, 1.0, rhs, "face_le"));
  lp.model.add_row(lifted_row(lp, coeffs, -1.0, -rhs, "face_ge"));

  BigInt scale = ipow(n, n);
  const double scale_d = scale.convert_to<double>();
  std::vector<CutTerm> terms = cut.terms();
  AffineHull hull;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < trials && hull.rank() < cert.target_rank; ++trial) {
    ++cert.trials;
    ZVector c(n);
    for (double& v : c.raw()) v = u(rng);
    lp.model.set_objective(lp.lift(c));
    const LpSolution sol = solve(lp.model, dense_options());
    if (sol.status != LpStatus::kOptimal) continue;
    const ZVector z = lp.project(sol.primal);
    ExactZVector exact(n);
    bool integral = true;
    for (std::size_t k = 0; k < z.size(); ++k) {
      const double scaled = z.raw()[k] * scale_d;
      const double r = std::round(scaled);
      if (std::abs(scaled - r) > 1e-6) {
        integral = false;
        break;
      }
      exact.raw()[k] = Rational(static_cast<long long>(r)) / scale;
    }
    if (!integral) continue;
    Rational lhs = 0;
    for (const CutTerm& term : terms) lhs += term.coef * exact.at(term.impression, term.ad, term.stage);
    if (lhs != cut.rhs) continue;  // rounding landed off the face
    ++cert.points_used;
    hull.add(exact);
  }
  cert.affine_rank = hull.rank();
  cert.verdict = cert.affine_rank == cert.target_rank ? FacetVerdict::kValidAndFacet : FacetVerdict::kValidNotCertified;
  return cert;
}

std::vector<ExactZVector> sample_achievable(int n, int count, const RngSpec& rng) {
  if (n > 20) throw CapacityError("sample_achievable size " + std::to_string(n), 20);
  std::vector<StaticWeight> ws;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) ws.push_back({i, j, 1.0});
  }
  const Instance complete = Instance::from_static(n, n, n, ws);
  std::vector<ExactZVector> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    const std::uint64_t key = mix_seed(mix_seed(rng.master_seed, rng.stream_id), static_cast<std::uint64_t>(k));
    const PolicyFn policy = [key, n](int stage, int impression, AdMask available) {
      const std::uint64_t h = mix_seed(key, (static_cast<std::uint64_t>(stage) * 64 + impression) << 32 | available);
      const int options = std::popcount(available) + 1;
      int pick = static_cast<int>(h % static_cast<std::uint64_t>(options));
      if (pick == 0) return Action::discard();
      for (int j = 0; j < n; ++j) {
        if (contains(available, j) && --pick == 0) return Action::match(j);
      }
      return Action::discard();
    };
    out.push_back(eval_policy_exact_rational(complete, policy).z);
  }
  return out;
}

int affine_rank(const std::vector<ExactZVector>& points) {
  AffineHull hull;
  for (const ExactZVector& p : points) hull.add(p);
  return hull.rank();
}

std::string format_certificate(const FacetCertificate& cert) {
  nlohmann::ordered_json j;
  j["cut"] = nlohmann::json::parse(format_cut(cert.cut));
  j["face_max"] = cert.face_max;
  j["affine_rank"] = cert.affine_rank;
  j["target_rank"] = cert.target_rank;
  j["points_used"] = cert.points_used;
  j["trials"] = cert.trials;
  j["verdict"] = verdict_name(cert.verdict);
  return j.dump(2);
}

}  // namespace obm
