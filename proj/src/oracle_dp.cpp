#include "obm/oracle_dp.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "obm/error.hpp"

namespace obm {

namespace {

const std::map<CutFamily, std::string>& family_names() {
  static const std::map<CutFamily, std::string> names{
      {CutFamily::kProbBound, "prob_bound"}, {CutFamily::kJ1, "j1"},
      {CutFamily::kJ2, "j2"},                {CutFamily::kGenH, "gen_h"},
      {CutFamily::kGenIJ, "gen_IJ"},         {CutFamily::kGenQ, "gen_q"},
      {CutFamily::kRightStar, "right_star"}, {CutFamily::kCustomDp, "custom_dp"},
  };
  return names;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<int> all_of(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void check_set(int n, std::vector<int>& s, const char* what) {
  std::sort(s.begin(), s.end());
  require(std::adjacent_find(s.begin(), s.end()) == s.end(), std::string(what) + ": repeated index");
  for (int x : s) require(x >= 0 && x < n, std::string(what) + ": index out of range");
}

template <class T>
T oracle_impl(int n, std::span<const T> alpha, std::span<const int> i_sizes, int j_size) {
  require(n >= 1, "oracle_R: n must be positive");
  require(static_cast<int>(alpha.size()) == n && static_cast<int>(i_sizes.size()) == n,
          "oracle_R: alpha and I sizes need one entry per stage");
  require(j_size >= 1 && j_size <= n, "oracle_R: |J| must lie in [1, n]");
  for (int t = 0; t < n; ++t) {
    require(i_sizes[t] >= 0 && i_sizes[t] <= n, "oracle_R: |I_t| must lie in [0, n]");
    require(!(alpha[t] < T(0)), "oracle_R: alpha must be nonnegative");
  }
  // before[d]: value of stages 1..t-1 with d ads of J left, before the
  // arrival of stage t-1 is seen.
  std::vector<T> before(j_size + 1, T(0));
  std::vector<T> next(j_size + 1, T(0));
  for (int t = 1; t <= n; ++t) {
    const T hit = T(i_sizes[t - 1]) / T(n);
    const T miss = T(1) - hit;
    for (int d = 0; d <= j_size; ++d) {
      T on_hit = before[d];
      if (d >= 1) on_hit = std::max(on_hit, T(alpha[t - 1] + before[d - 1]));
      next[d] = miss * before[d] + hit * on_hit;
    }
    std::swap(before, next);
  }
  return before[j_size];
}

StageBlock block(int stage, Rational alpha, std::vector<int> imps) {
  return StageBlock{stage, std::move(alpha), std::move(imps)};
}

Cut finish(CutFamily f, int n, std::vector<int> params, std::vector<int> ads, std::vector<StageBlock> blocks,
           Rational rhs) {
  Cut c;
  c.family = f;
  c.n = n;
  c.params = std::move(params);
  c.ads = std::move(ads);
  std::sort(blocks.begin(), blocks.end(), [](const StageBlock& a, const StageBlock& b) { return a.stage > b.stage; });
  std::erase_if(blocks, [](const StageBlock& b) { return b.alpha == 0 || b.impressions.empty(); });
  c.blocks = std::move(blocks);
  c.rhs = std::move(rhs);
  return c;
}

// Stages above `top` (exclusive) weighted `w` over all impressions.
void add_tail(std::vector<StageBlock>& blocks, int n, int top, const Rational& w) {
  for (int tau = top + 1; tau <= n; ++tau) blocks.push_back(block(tau, w, all_of(n)));
}

Rational power_sum(int n, int upto) {
  Rational s = 0;
  for (int k = 1; k <= upto; ++k) s += Rational(ipow(n, k));
  return s;
}

void check_iseq(int n, std::span<const int> iseq, std::size_t len) {
  require(iseq.size() == len, "impression sequence has length " + std::to_string(iseq.size()) +
                                  ", expected " + std::to_string(len));
  for (int i : iseq) require(i >= 0 && i < n, "impression sequence: index out of range");
}

}  // namespace

std::string family_name(CutFamily f) { return family_names().at(f); }

CutFamily parse_family(const std::string& name) {
  for (const auto& [f, s] : family_names()) {
    if (s == name) return f;
  }
  throw std::invalid_argument("unknown cut family '" + name + "'");
}

std::vector<CutTerm> Cut::terms() const {
  std::vector<CutTerm> out;
  for (const StageBlock& b : blocks) {
    for (int i : b.impressions) {
      for (int j : ads) out.push_back({i, j, b.stage, b.alpha});
    }
  }
  return out;
}

std::string Cut::key() const {
  std::ostringstream out;
  out << family_name(family) << '|' << n << '|';
  for (int p : params) out << p << ',';
  out << '|';
  for (int j : ads) out << j << ',';
  out << '|';
  for (const StageBlock& b : blocks) {
    out << b.stage << ':' << b.alpha << ':';
    for (int i : b.impressions) out << i << '.';
    out << ';';
  }
  return out.str();
}

double oracle_R(int n, std::span<const double> alpha, std::span<const int> i_sizes, int j_size) {
  return oracle_impl<double>(n, alpha, i_sizes, j_size);
}

Rational oracle_R(int n, std::span<const Rational> alpha, std::span<const int> i_sizes, int j_size) {
  return oracle_impl<Rational>(n, alpha, i_sizes, j_size);
}

Rational oracle_R(const Cut& cut) {
  std::vector<Rational> alpha(cut.n, Rational(0));
  std::vector<int> sizes(cut.n, 0);
  for (const StageBlock& b : cut.blocks) {
    alpha[b.stage - 1] = b.alpha;
    sizes[b.stage - 1] = static_cast<int>(b.impressions.size());
  }
  return oracle_R(cut.n, alpha, sizes, static_cast<int>(cut.ads.size()));
}

Cut make_prob_bound(int n, int i, int t) {
  require(n >= 1 && i >= 0 && i < n && t >= 1 && t <= n, "prob_bound: parameter out of range");
  return finish(CutFamily::kProbBound, n, {i, t}, all_of(n), {block(t, 1, {i})}, Rational(1, n));
}

Cut make_j1(int n, int i, int j, int t) {
  require(n >= 1 && i >= 0 && i < n && j >= 0 && j < n && t >= 1 && t <= n, "j1: parameter out of range");
  std::vector<StageBlock> blocks{block(t, n, {i})};
  add_tail(blocks, n, t, 1);
  return finish(CutFamily::kJ1, n, {i, j, t}, {j}, std::move(blocks), 1);
}

Cut make_j2(int n, int i_t, int i_t1, int j1, int j2, int t) {
  require(n >= 3 && t >= 1 && t <= n - 2, "j2: stage must lie in [1, n-2]");
  require(i_t >= 0 && i_t < n && i_t1 >= 0 && i_t1 < n, "j2: impression out of range");
  require(j1 >= 0 && j1 < n && j2 >= 0 && j2 < n, "j2: ad out of range");
  require(j1 != j2, "j2: the two ads must differ");
  std::vector<StageBlock> blocks{block(t, n * n, {i_t}), block(t + 1, n, {i_t1})};
  add_tail(blocks, n, t + 1, 1);
  return finish(CutFamily::kJ2, n, {i_t, i_t1, j1, j2, t}, {std::min(j1, j2), std::max(j1, j2)},
                std::move(blocks), 1 + n);
}

Cut make_gen_h(int n, std::vector<int> ads, int t, std::span<const int> iseq) {
  check_set(n, ads, "gen_h ads");
  const int h = static_cast<int>(ads.size());
  require(h >= 1 && h <= n - 1, "gen_h: |J| must lie in [1, n-1]");
  require(t >= 1 && t <= n - h, "gen_h: stage must lie in [1, n-h]");
  check_iseq(n, iseq, h);
  std::vector<StageBlock> blocks;
  for (int k = 0; k < h; ++k) blocks.push_back(block(t + k, Rational(ipow(n, h - k)), {iseq[k]}));
  add_tail(blocks, n, t + h - 1, 1);
  std::vector<int> params{h, t};
  params.insert(params.end(), iseq.begin(), iseq.end());
  return finish(CutFamily::kGenH, n, std::move(params), std::move(ads), std::move(blocks), 1 + power_sum(n, h - 1));
}

Cut make_general(int n, std::vector<int> ads, std::vector<int> imps, int t, int q, std::span<const int> iseq) {
  check_set(n, ads, "general ads");
  check_set(n, imps, "general impressions");
  const int h = static_cast<int>(ads.size());
  const int r = static_cast<int>(imps.size());
  require(h >= 2 && h <= n - 1, "general: |J| must lie in [2, n-1]");
  require(r >= 1 && r <= n - 1, "general: |I| must lie in [1, n-1]");
  require(t >= 1 && t <= n - h, "general: stage must lie in [1, n-h]");
  require(q >= 0 && q <= h - 2, "general: q must lie in [0, h-2]");
  const int s = t + h - q - 1;
  check_iseq(n, iseq, s - t);
  std::vector<StageBlock> blocks{block(s, n, imps)};
  for (int tau = t; tau < s; ++tau) blocks.push_back(block(tau, Rational(ipow(n, s + 1 - tau)), {iseq[tau - t]}));
  add_tail(blocks, n, s, r);
  std::vector<int> params{h, r, t, q};
  params.insert(params.end(), iseq.begin(), iseq.end());
  return finish(CutFamily::kGenQ, n, std::move(params), std::move(ads), std::move(blocks),
                Rational(r * (q + 1)) + power_sum(n, h - q - 1));
}

Cut make_gen_ij(int n, std::vector<int> ads, std::vector<int> imps, int t, std::span<const int> iseq) {
  Cut c = make_general(n, std::move(ads), std::move(imps), t, 0, iseq);
  c.family = CutFamily::kGenIJ;
  c.params.erase(c.params.begin() + 3);  // drop q
  return c;
}

Cut make_right_star(int n, int j, std::vector<int> imps) {
  require(n >= 1 && j >= 0 && j < n, "right_star: ad out of range");
  check_set(n, imps, "right_star impressions");
  require(!imps.empty(), "right_star: impression set must be nonempty");
  std::vector<StageBlock> blocks;
  for (int t = 1; t <= n; ++t) blocks.push_back(block(t, 1, imps));
  Rational miss = 1 - Rational(static_cast<long>(imps.size()), n);
  Rational p = 1;
  for (int k = 0; k < n; ++k) p *= miss;
  return finish(CutFamily::kRightStar, n, {j}, {j}, std::move(blocks), 1 - p);
}

Cut make_custom(int n, std::vector<int> ads, std::vector<StageBlock> blocks) {
  check_set(n, ads, "custom ads");
  require(!ads.empty(), "custom: ad set must be nonempty");
  std::vector<bool> seen(n + 1, false);
  for (StageBlock& b : blocks) {
    require(b.stage >= 1 && b.stage <= n, "custom: stage out of range");
    require(!seen[b.stage], "custom: repeated stage");
    seen[b.stage] = true;
    require(b.alpha >= 0, "custom: alpha must be nonnegative");
    check_set(n, b.impressions, "custom impressions");
  }
  Cut c = finish(CutFamily::kCustomDp, n, {}, std::move(ads), std::move(blocks), 0);
  c.rhs = oracle_R(c);
  return c;
}

namespace {

void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != size) continue;
    std::vector<int> s;
    for (int k = 0; k < n; ++k) {
      if ((mask >> k) & 1U) s.push_back(k);
    }
    fn(s);
  }
}

void for_each_sequence(int n, int len, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> seq(len, 0);
  while (true) {
    fn(seq);
    int k = len - 1;
    while (k >= 0 && ++seq[k] == n) seq[k--] = 0;
    if (k < 0) return;
  }
}

}  // namespace

std::vector<Cut> enumerate_family(int n, CutFamily f) {
  require(n >= 1 && n <= 8, "enumerate_family: n must lie in [1, 8]");
  std::vector<Cut> out;
  switch (f) {
    case CutFamily::kProbBound:
      for (int i = 0; i < n; ++i) {
        for (int t = 1; t <= n; ++t) out.push_back(make_prob_bound(n, i, t));
      }
      break;
    case CutFamily::kJ1:
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int t = 1; t <= n; ++t) out.push_back(make_j1(n, i, j, t));
        }
      }
      break;
    case CutFamily::kJ2:
      for (int t = 1; t <= n - 2; ++t) {
        for (int j1 = 0; j1 < n; ++j1) {
          for (int j2 = j1 + 1; j2 < n; ++j2) {
            for (int a = 0; a < n; ++a) {
              for (int b = 0; b < n; ++b) out.push_back(make_j2(n, a, b, j1, j2, t));
            }
          }
        }
      }
      break;
    case CutFamily::kGenH:
      for (int h = 1; h <= n - 1; ++h) {
        for_each_subset(n, h, [&](const std::vector<int>& ads) {
          for (int t = 1; t <= n - h; ++t) {
            for_each_sequence(n, h, [&](const std::vector<int>& seq) { out.push_back(make_gen_h(n, ads, t, seq)); });
          }
        });
      }
      break;
    case CutFamily::kGenIJ:
    case CutFamily::kGenQ:
      for (int h = 2; h <= n - 1; ++h) {
        for_each_subset(n, h, [&](const std::vector<int>& ads) {
          for (int r = 1; r <= n - 1; ++r) {
            for_each_subset(n, r, [&](const std::vector<int>& imps) {
              for (int t = 1; t <= n - h; ++t) {
                const int q_max = f == CutFamily::kGenIJ ? 0 : h - 2;
                for (int q = 0; q <= q_max; ++q) {
                  for_each_sequence(n, h - q - 1, [&](const std::vector<int>& seq) {
                    out.push_back(f == CutFamily::kGenIJ ? make_gen_ij(n, ads, imps, t, seq)
                                                         : make_general(n, ads, imps, t, q, seq));
                  });
                }
              }
            });
          }
        });
      }
      break;
    case CutFamily::kRightStar:
    case CutFamily::kCustomDp:
      throw std::invalid_argument("enumerate_family: family " + family_name(f) + " is not enumerable");
  }
  return out;
}

namespace {

void check_shape(const Cut& cut, int n_imp, int n_ads, int horizon) {
  if (n_imp != cut.n || n_ads != cut.n || horizon != cut.n) {
    throw std::invalid_argument("check_validity: z shape does not match cut size " + std::to_string(cut.n));
  }
}

}  // namespace

Validity check_validity(const Cut& cut, const ExactZVector& z) {
  check_shape(cut, z.n_impressions(), z.n_ads(), z.horizon());
  Rational lhs = 0;
  for (const StageBlock& b : cut.blocks) {
    Rational sum = 0;
    for (int i : b.impressions) {
      for (int j : cut.ads) sum += z.at(i, j, b.stage);
    }
    lhs += b.alpha * sum;
  }
  Validity v;
  v.exact_violation = lhs - cut.rhs;
  v.satisfied = v.exact_violation <= 0;
  v.violation = v.satisfied ? 0.0 : v.exact_violation.convert_to<double>();
  if (v.satisfied) v.exact_violation = 0;
  return v;
}

Validity check_validity(const Cut& cut, const ZVector& z) {
  check_shape(cut, z.n_impressions(), z.n_ads(), z.horizon());
  double lhs = 0.0;
  for (const StageBlock& b : cut.blocks) {
    double sum = 0.0;
    for (int i : b.impressions) {
      for (int j : cut.ads) sum += z.at(i, j, b.stage);
    }
    lhs += to_double_checked(b.alpha) * sum;
  }
  const double gap = lhs - to_double_checked(cut.rhs);
  Validity v;
  v.satisfied = gap <= 1e-9;
  v.violation = std::max(0.0, gap);
  return v;
}

CompiledCut::CompiledCut(const Cut& cut) : cut_(cut), cut_rhs_(cut.rhs) {
  const ZVector shape(cut.n);
  for (const CutTerm& term : cut.terms()) {
    if (!is_integral(term.coef)) throw std::invalid_argument("CompiledCut: coefficients must be integral");
    offsets_.push_back(shape.offset(term.impression, term.ad, term.stage));
    coefs_.push_back(static_cast<long long>(numerator(term.coef)));
  }
}

long long CompiledCut::lhs_scaled(std::span<const long long> z_scaled) const {
  long long acc = 0;
  for (std::size_t k = 0; k < offsets_.size(); ++k) acc += coefs_[k] * z_scaled[offsets_[k]];
  return acc;
}

namespace {

using nlohmann::json;

std::string rational_text(const Rational& x) { return x.str(); }

Rational parse_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) throw ParseError(where + ": expected a rational string");
  try {
    return Rational(v.get<std::string>());
  } catch (const std::exception&) {
    throw ParseError(where + ": malformed rational '" + v.get<std::string>() + "'");
  }
}

std::vector<int> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  std::vector<int> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_number_integer()) throw ParseError(where + "[" + std::to_string(k) + "]: expected an integer");
    out.push_back(v[k].get<int>());
  }
  return out;
}

}  // namespace

std::string format_cut(const Cut& cut) {
  json doc;
  doc["family"] = family_name(cut.family);
  doc["n"] = cut.n;
  doc["params"] = cut.params;
  doc["ads"] = cut.ads;
  json blocks = json::array();
  for (const StageBlock& b : cut.blocks) {
    blocks.push_back({{"stage", b.stage}, {"alpha", rational_text(b.alpha)}, {"impressions", b.impressions}});
  }
  doc["blocks"] = blocks;
  json coeffs = json::array();
  for (const CutTerm& t : cut.terms()) {
    coeffs.push_back({t.impression, t.ad, t.stage, to_double_checked(t.coef)});
  }
  doc["coeffs"] = coeffs;
  doc["rhs"] = to_double_checked(cut.rhs);
  doc["rhs_exact"] = rational_text(cut.rhs);
  return doc.dump();
}

Cut parse_cut(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("cut JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("cut JSON: top level must be an object");
  for (const char* field : {"family", "n", "ads", "blocks", "rhs_exact"}) {
    if (!doc.contains(field)) throw ParseError(std::string("cut JSON: missing field '") + field + "'");
  }
  Cut c;
  try {
    c.family = parse_family(doc["family"].get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("family: ") + e.what());
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<int>() < 1) throw ParseError("n: expected a positive integer");
  c.n = doc["n"].get<int>();
  if (doc.contains("params")) c.params = int_list(doc["params"], "params");
  c.ads = int_list(doc["ads"], "ads");
  const json& blocks = doc["blocks"];
  if (!blocks.is_array()) throw ParseError("blocks: expected an array");
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const std::string where = "blocks[" + std::to_string(k) + "]";
    const json& b = blocks[k];
    if (!b.is_object() || !b.contains("stage") || !b.contains("alpha") || !b.contains("impressions")) {
      throw ParseError(where + ": expected {stage, alpha, impressions}");
    }
    if (!b["stage"].is_number_integer()) throw ParseError(where + ".stage: expected an integer");
    c.blocks.push_back(
        {b["stage"].get<int>(), parse_rational(b["alpha"], where + ".alpha"), int_list(b["impressions"], where + ".impressions")});
  }
  c.rhs = parse_rational(doc["rhs_exact"], "rhs_exact");
  for (int j : c.ads) {
    if (j < 0 || j >= c.n) throw ParseError("ads: index out of range");
  }
  for (const StageBlock& b : c.blocks) {
    if (b.stage < 1 || b.stage > c.n) throw ParseError("blocks: stage out of range");
    for (int i : b.impressions) {
      if (i < 0 || i >= c.n) throw ParseError("blocks: impression out of range");
    }
  }
  return c;
}

}  // namespace obm
