#pragma once

#include <span>
#include <string>
#include <vector>

#include "obm/rational.hpp"
#include "obm/zvector.hpp"

namespace obm {

enum class CutFamily {
  kProbBound,   // Z_{i,V}^t <= 1/n
  kJ1,          // one ad, stages after t weighted 1, stage t weighted n
  kJ2,          // two ads, weights 1 / n / n^2
  kGenH,        // |J| = h, one impression per stage, powers of n
  kGenIJ,       // as kGenH with a set I at the last weighted stage
  kGenQ,        // shifted variant with parameter q
  kRightStar,   // static star cut, all stages weighted 1
  kCustomDp,    // any (alpha, I_t, J) with oracle right-hand side
};

std::string family_name(CutFamily f);
CutFamily parse_family(const std::string& name);

// One stage of a cut: alpha * Z_{I,J}^stage.
struct StageBlock {
  int stage = 0;
  Rational alpha;
  std::vector<int> impressions;  // sorted
  friend bool operator==(const StageBlock&, const StageBlock&) = default;
};

struct CutTerm {
  int impression;
  int ad;
  int stage;
  Rational coef;
};

// sum_t alpha_t Z_{I_t,J}^t <= rhs over the square shape n = m = T.
struct Cut {
  CutFamily family = CutFamily::kCustomDp;
  int n = 0;
  std::vector<int> params;  // family specific, see the make_* functions
  std::vector<int> ads;     // J, sorted
  std::vector<StageBlock> blocks;  // descending stage, disjoint
  Rational rhs;

  std::vector<CutTerm> terms() const;
  // Canonical identity used for pool deduplication.
  std::string key() const;

  friend bool operator==(const Cut&, const Cut&) = default;
};

// Max over achievable z of sum_t alpha_t Z_{I_t,J}^t. Only |I_t| matters.
// alpha[t-1] and i_sizes[t-1] refer to stage t.
double oracle_R(int n, std::span<const double> alpha, std::span<const int> i_sizes, int j_size);
Rational oracle_R(int n, std::span<const Rational> alpha, std::span<const int> i_sizes, int j_size);
Rational oracle_R(const Cut& cut);

// params: {i, t}
Cut make_prob_bound(int n, int i, int t);
// params: {i, j, t}
Cut make_j1(int n, int i, int j, int t);
// params: {i_t, i_t1, j1, j2, t}; i_t sits at stage t, i_t1 at stage t + 1.
Cut make_j2(int n, int i_t, int i_t1, int j1, int j2, int t);
// |J| = h in [1, n-1], t in [1, n-h], iseq[k] is the impression at stage t+k
// (length h). params: {h, t, iseq...}
Cut make_gen_h(int n, std::vector<int> ads, int t, std::span<const int> iseq);
// |J| = h in [2, n-1], |I| = r in [1, n-1], t in [1, n-h], iseq length h-1
// covering stages t..t+h-2. params: {h, r, t, iseq...}
Cut make_gen_ij(int n, std::vector<int> ads, std::vector<int> imps, int t, std::span<const int> iseq);
// As make_gen_ij with q in [0, h-2]: I sits at stage s = t+h-q-1, stages
// above s get weight r, iseq (length h-q-1) covers stages t..s-1 with
// weights n^(s+1-tau). params: {h, r, t, q, iseq...}
Cut make_general(int n, std::vector<int> ads, std::vector<int> imps, int t, int q, std::span<const int> iseq);
// sum_{i in I} sum_t z_ij^t <= 1 - (1 - |I|/n)^n. params: {j}
Cut make_right_star(int n, int j, std::vector<int> imps);
// Right-hand side from the oracle.
Cut make_custom(int n, std::vector<int> ads, std::vector<StageBlock> blocks);

// Every admissible parameter tuple of a family at size n. kCustomDp and
// kRightStar are not enumerable here.
std::vector<Cut> enumerate_family(int n, CutFamily f);

struct Validity {
  bool satisfied = true;
  double violation = 0.0;  // lhs - rhs when positive
  Rational exact_violation;
};

// Exact when z is rational; the double overload allows 1e-9 slack.
Validity check_validity(const Cut& cut, const ExactZVector& z);
Validity check_validity(const Cut& cut, const ZVector& z);

// Integer-scaled copy for sweeps: lhs * scale computed in int64.
class CompiledCut {
 public:
  explicit CompiledCut(const Cut& cut);
  // z_scaled = z * denominator, integral; returns lhs * denominator.
  long long lhs_scaled(std::span<const long long> z_scaled) const;
  // rhs * denominator as an exact rational.
  Rational rhs_scaled(long long denominator) const { return cut_rhs_ * denominator; }
  const Cut& cut() const { return cut_; }

 private:
  Cut cut_;
  Rational cut_rhs_;
  std::vector<std::size_t> offsets_;
  std::vector<long long> coefs_;
};

std::string format_cut(const Cut& cut);
Cut parse_cut(const std::string& text);

}  // namespace obm
