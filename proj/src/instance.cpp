#include "obm/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "obm/error.hpp"

namespace obm {
namespace {

void check_dims(int n_impressions, int n_ads, int horizon) {
  if (n_impressions < 1 || n_ads < 1 || horizon < 1) {
    throw std::invalid_argument("instance sizes must be positive");
  }
}

void check_weight(double w, const std::string& where) {
  if (!std::isfinite(w) || w < 0.0) {
    throw std::invalid_argument(where + ": weight must be finite and nonnegative");
  }
}

void check_pair(int i, int j, int n_impressions, int n_ads, const std::string& where) {
  if (i < 0 || i >= n_impressions) throw std::invalid_argument(where + ": impression out of range");
  if (j < 0 || j >= n_ads) throw std::invalid_argument(where + ": ad out of range");
}

std::string entry_name(std::size_t k) { return "entry " + std::to_string(k); }

}  // namespace

Instance Instance::from_static(int n_impressions, int n_ads, int horizon,
                               std::span<const StaticWeight> weights, std::string label) {
  check_dims(n_impressions, n_ads, horizon);
  std::map<std::pair<int, int>, double> by_pair;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const auto& e = weights[k];
    check_pair(e.impression, e.ad, n_impressions, n_ads, entry_name(k));
    check_weight(e.weight, entry_name(k));
    if (!by_pair.emplace(std::pair{e.impression, e.ad}, e.weight).second) {
      throw std::invalid_argument(entry_name(k) + ": duplicate (impression, ad) pair");
    }
  }
  Instance inst;
  inst.n_impressions_ = n_impressions;
  inst.n_ads_ = n_ads;
  inst.horizon_ = horizon;
  inst.time_constant_ = true;
  inst.label_ = std::move(label);
  for (const auto& [key, w] : by_pair) {
    if (w > 0.0) {
      inst.edges_.push_back({key.first, key.second});
      inst.weights_.push_back(w);
    }
  }
  inst.build_indices();
  return inst;
}

Instance Instance::from_time(int n_impressions, int n_ads, int horizon,
                             std::span<const TimeWeight> weights, std::string label) {
  check_dims(n_impressions, n_ads, horizon);
  std::map<std::pair<int, int>, std::vector<double>> by_pair;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const auto& e = weights[k];
    check_pair(e.impression, e.ad, n_impressions, n_ads, entry_name(k));
    if (e.stage < 1 || e.stage > horizon) {
      throw std::invalid_argument(entry_name(k) + ": stage out of range");
    }
    check_weight(e.weight, entry_name(k));
    auto& row = by_pair[{e.impression, e.ad}];
    if (row.empty()) row.assign(horizon, -1.0);
    if (row[e.stage - 1] >= 0.0) {
      throw std::invalid_argument(entry_name(k) + ": duplicate (impression, ad, stage) triple");
    }
    row[e.stage - 1] = e.weight;
  }
  Instance inst;
  inst.n_impressions_ = n_impressions;
  inst.n_ads_ = n_ads;
  inst.horizon_ = horizon;
  inst.time_constant_ = false;
  inst.label_ = std::move(label);
  for (auto& [key, row] : by_pair) {
    bool positive = false;
    for (double& w : row) {
      if (w < 0.0) w = 0.0;
      positive = positive || w > 0.0;
    }
    if (positive) {
      inst.edges_.push_back({key.first, key.second});
      inst.weights_.insert(inst.weights_.end(), row.begin(), row.end());
    }
  }
  inst.build_indices();
  return inst;
}

void Instance::build_indices() {
  index_.assign(static_cast<std::size_t>(n_impressions_) * n_ads_, -1);
  by_impression_start_.assign(n_impressions_ + 1, 0);
  by_ad_start_.assign(n_ads_ + 1, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    index_[edges_[e].impression * n_ads_ + edges_[e].ad] = static_cast<int>(e);
    ++by_impression_start_[edges_[e].impression + 1];
    ++by_ad_start_[edges_[e].ad + 1];
  }
  std::partial_sum(by_impression_start_.begin(), by_impression_start_.end(),
                   by_impression_start_.begin());
  std::partial_sum(by_ad_start_.begin(), by_ad_start_.end(), by_ad_start_.begin());
  by_impression_.resize(edges_.size());
  by_ad_.resize(edges_.size());
  std::vector<int> fill_i(by_impression_start_.begin(), by_impression_start_.end() - 1);
  std::vector<int> fill_j(by_ad_start_.begin(), by_ad_start_.end() - 1);
  // edges_ is sorted by (i, j), so both adjacency lists come out in ascending order.
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    by_impression_[fill_i[edges_[e].impression]++] = static_cast<int>(e);
    by_ad_[fill_j[edges_[e].ad]++] = static_cast<int>(e);
  }
}

double Instance::weight(int impression, int ad, int stage) const {
  if (impression < 0 || impression >= n_impressions_ || ad < 0 || ad >= n_ads_ || stage < 1 ||
      stage > horizon_) {
    throw std::out_of_range("weight index out of range");
  }
  const int e = edge_index(impression, ad);
  return e < 0 ? 0.0 : edge_weight(static_cast<std::size_t>(e), stage);
}

std::span<const int> Instance::edges_of_impression(int impression) const {
  return {by_impression_.data() + by_impression_start_[impression],
          by_impression_.data() + by_impression_start_[impression + 1]};
}

std::span<const int> Instance::edges_of_ad(int ad) const {
  return {by_ad_.data() + by_ad_start_[ad], by_ad_.data() + by_ad_start_[ad + 1]};
}

bool Instance::binary_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 0.0 || w == 1.0; });
}

Instance Instance::with_label(std::string label) const {
  Instance copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

bool operator==(const Instance& a, const Instance& b) {
  return a.n_impressions_ == b.n_impressions_ && a.n_ads_ == b.n_ads_ &&
         a.horizon_ == b.horizon_ && a.time_constant_ == b.time_constant_ &&
         a.label_ == b.label_ && a.edges_ == b.edges_ && a.weights_ == b.weights_;
}

NormalizedInstance normalize(const Instance& inst) {
  const int n0 = inst.n_impressions();
  const int m0 = inst.n_ads();
  const int t0 = inst.horizon();

  int m = std::max(m0, t0);
  int kappa = 1;
  int n_types = n0;
  if (n0 > m) {
    m = n0;
  } else if (n0 < m) {
    kappa = (m + n0 - 1) / n0;
    n_types = kappa * n0;
    m = n_types;
  }
  const int n = m;

  const bool padded_stages = n > t0;
  if (inst.time_constant() && !padded_stages) {
    std::vector<StaticWeight> w;
    w.reserve(inst.edges().size() * kappa);
    for (int c = 0; c < kappa; ++c) {
      for (std::size_t e = 0; e < inst.edges().size(); ++e) {
        const Edge& edge = inst.edges()[e];
        w.push_back({c * n0 + edge.impression, edge.ad, inst.edge_weight(e, 1)});
      }
    }
    return NormalizedInstance(Instance::from_static(n, n, n, w, inst.label()), kappa);
  }
  std::vector<TimeWeight> w;
  for (int c = 0; c < kappa; ++c) {
    for (std::size_t e = 0; e < inst.edges().size(); ++e) {
      const Edge& edge = inst.edges()[e];
      for (int t = 1; t <= t0; ++t) {
        const double x = inst.edge_weight(e, t);
        if (x > 0.0) w.push_back({c * n0 + edge.impression, edge.ad, t, x});
      }
    }
  }
  return NormalizedInstance(Instance::from_time(n, n, n, w, inst.label()), kappa);
}

Instance gen_erdos(int n, double edge_prob, const RngSpec& rng) {
  if (n < 1) throw std::invalid_argument("gen_erdos: n must be positive");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw std::invalid_argument("gen_erdos: edge_prob must lie in [0, 1]");
  }
  Engine engine = make_engine(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<StaticWeight> w;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (unit(engine) < edge_prob) w.push_back({i, j, 1.0});
    }
  }
  std::ostringstream label;
  label << "erdos-n" << n << "-p" << edge_prob << "-s" << rng.master_seed << "." << rng.stream_id;
  return Instance::from_static(n, n, n, w, label.str());
}

Instance gen_regular(int n, int k) {
  if (n < 1) throw std::invalid_argument("gen_regular: n must be positive");
  if (k < 1 || k > n) throw std::invalid_argument("gen_regular: k must lie in [1, n]");
  std::vector<StaticWeight> w;
  w.reserve(static_cast<std::size_t>(n) * k);
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < k; ++s) w.push_back({i, (i + s) % n, 1.0});
  }
  return Instance::from_static(n, n, n, w, "regular-n" + std::to_string(n) + "-k" + std::to_string(k));
}

namespace {

using nlohmann::json;

int require_int(const json& doc, const char* field) {
  if (!doc.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
  const json& v = doc.at(field);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + field + "' must be an integer");
  return v.get<int>();
}

int entry_int(const json& row, std::size_t col, const std::string& where) {
  if (!row.at(col).is_number_integer()) throw ParseError(where + ": expected an integer");
  return row.at(col).get<int>();
}

double entry_real(const json& row, std::size_t col, const std::string& where) {
  if (!row.at(col).is_number()) throw ParseError(where + ": expected a number");
  return row.at(col).get<double>();
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance JSON: top level must be an object");
  const int n_imp = require_int(doc, "n_impressions");
  const int n_ads = require_int(doc, "n_ads");
  const int horizon = require_int(doc, "horizon");
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("field 'label' must be a string");
    label = doc["label"].get<std::string>();
  }
  const bool has_static = doc.contains("static_weights");
  const bool has_time = doc.contains("time_weights");
  if (has_static == has_time) {
    throw ParseError("exactly one of 'static_weights' and 'time_weights' must be present");
  }
  const char* field = has_static ? "static_weights" : "time_weights";
  const json& rows = doc[field];
  if (!rows.is_array()) throw ParseError(std::string("field '") + field + "' must be an array");
  const std::size_t width = has_static ? 3 : 4;

  std::vector<StaticWeight> sw;
  std::vector<TimeWeight> tw;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string where = std::string(field) + "[" + std::to_string(k) + "]";
    const json& row = rows[k];
    if (!row.is_array() || row.size() != width) {
      throw ParseError(where + ": expected an array of " + std::to_string(width) + " values");
    }
    const int i = entry_int(row, 0, where + "[0]");
    const int j = entry_int(row, 1, where + "[1]");
    if (i < 0 || i >= n_imp) throw ParseError(where + "[0]: impression index out of range");
    if (j < 0 || j >= n_ads) throw ParseError(where + "[1]: ad index out of range");
    if (has_static) {
      const double w = entry_real(row, 2, where + "[2]");
      if (!std::isfinite(w) || w < 0.0) throw ParseError(where + "[2]: negative or non-finite weight");
      sw.push_back({i, j, w});
    } else {
      const int t = entry_int(row, 2, where + "[2]");
      if (t < 1 || t > horizon) throw ParseError(where + "[2]: stage out of range");
      const double w = entry_real(row, 3, where + "[3]");
      if (!std::isfinite(w) || w < 0.0) throw ParseError(where + "[3]: negative or non-finite weight");
      tw.push_back({i, j, t, w});
    }
  }
  try {
    return has_static ? Instance::from_static(n_imp, n_ads, horizon, sw, label)
                      : Instance::from_time(n_imp, n_ads, horizon, tw, label);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(field) + ": " + e.what());
  }
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_instance(const Instance& inst) {
  json doc;
  doc["n_impressions"] = inst.n_impressions();
  doc["n_ads"] = inst.n_ads();
  doc["horizon"] = inst.horizon();
  json rows = json::array();
  for (std::size_t e = 0; e < inst.edges().size(); ++e) {
    const Edge& edge = inst.edges()[e];
    if (inst.time_constant()) {
      rows.push_back({edge.impression, edge.ad, inst.edge_weight(e, 1)});
    } else {
      for (int t = 1; t <= inst.horizon(); ++t) {
        const double w = inst.edge_weight(e, t);
        if (w > 0.0) rows.push_back({edge.impression, edge.ad, t, w});
      }
    }
  }
  doc[inst.time_constant() ? "static_weights" : "time_weights"] = std::move(rows);
  doc["label"] = inst.label();
  return doc.dump() + "\n";
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file " + path.string());
  out << format_instance(inst);
}

}  // namespace obm
