#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "obm/error.hpp"
#include "obm/exact_dp.hpp"
#include "obm/instance.hpp"
#include "obm/oracle_dp.hpp"
#include "obm/polytope_verify.hpp"
#include "obm/report.hpp"

namespace fs = std::filesystem;
using namespace obm;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string two_digits(int k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d", k);
  return buf;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad " + what + " '" + s + "'");
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad " + what + " '" + s + "'");
}

// small|dense|sparse[:count], regular, erdos:n:p[:count], regular:n:k
std::vector<Instance> generate_spec(const std::string& spec, std::uint64_t seed) {
  const std::vector<std::string> parts = split(spec, ':');
  if (parts.empty()) throw std::invalid_argument("empty instance spec");
  std::vector<Instance> out;
  if (parts[0] == "small" || parts[0] == "dense" || parts[0] == "sparse") {
    return rubric_instances(parts[0], parts.size() > 1 ? to_int(parts[1], "count") : 20, seed);
  }
  if (parts[0] == "regular" && parts.size() == 1) {
    for (int k = 3; k <= 6; ++k) out.push_back(gen_regular(100, k).with_label("regular-k" + std::to_string(k)));
    return out;
  }
  if (parts[0] == "regular" && parts.size() == 3) {
    const int n = to_int(parts[1], "n");
    const int k = to_int(parts[2], "k");
    out.push_back(gen_regular(n, k).with_label("regular" + std::to_string(n) + "-k" + std::to_string(k)));
    return out;
  }
  if (parts[0] == "erdos" && (parts.size() == 3 || parts.size() == 4)) {
    const int n = to_int(parts[1], "n");
    const double p = to_double(parts[2], "edge probability");
    const int count = parts.size() == 4 ? to_int(parts[3], "count") : 1;
    for (int k = 1; k <= count; ++k) {
      out.push_back(gen_erdos(n, p, {seed, static_cast<std::uint64_t>(k)})
                        .with_label("erdos" + std::to_string(n) + "-" + two_digits(k)));
    }
    return out;
  }
  throw std::invalid_argument("unknown instance spec '" + spec +
                              "' (small|dense|sparse[:count], regular, regular:n:k, erdos:n:p[:count], or a file)");
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::vector<fs::path> json_files(const std::string& arg) {
  std::vector<fs::path> out;
  if (fs::is_directory(arg)) {
    for (const auto& e : fs::directory_iterator(arg)) {
      if (e.path().extension() == ".json") out.push_back(e.path());
    }
    std::sort(out.begin(), out.end());
  } else if (fs::exists(arg)) {
    out.push_back(arg);
  }
  return out;
}

// Files, directories of instance files, or generator specs.
std::vector<Instance> load_instances(const std::vector<std::string>& args, std::uint64_t seed) {
  std::vector<Instance> out;
  for (const std::string& a : args) {
    const std::vector<fs::path> files = json_files(a);
    if (files.empty()) {
      for (Instance& inst : generate_spec(a, seed)) out.push_back(std::move(inst));
      continue;
    }
    for (const fs::path& f : files) {
      Instance inst = read_instance(f);
      if (inst.label().empty()) inst = inst.with_label(f.stem().string());
      out.push_back(std::move(inst));
    }
  }
  if (out.empty()) throw std::invalid_argument("no instances given (--instance)");
  return out;
}

struct Common {
  std::vector<std::string> instances;
  std::uint64_t seed = 1;
  long samples = 20000;
  std::string bounds;
  std::string policies;
  std::string out;
  bool j2 = false;
  int cap_dp = 16;
  bool symmetrize = false;
  bool random_ties = false;
};

ExperimentConfig make_config(const Common& c, const std::string& default_bounds, const std::string& default_policies,
                             bool offline) {
  ExperimentConfig cfg;
  for (const std::string& b : split(c.bounds.empty() ? default_bounds : c.bounds, ',')) {
    if (b != "none") cfg.bounds.insert(parse_bound(b));
  }
  if (c.j2) cfg.bounds.insert(BoundKind::kDynamicJ2);
  for (const std::string& p : split(c.policies.empty() ? default_policies : c.policies, ',')) {
    if (p != "none") cfg.policies.insert(parse_policy(p));
  }
  cfg.offline = offline;
  if (c.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  cfg.samples = c.samples;
  cfg.seed = c.seed;
  cfg.dp_cap = c.cap_dp;
  cfg.symmetrize = c.symmetrize;
  cfg.random_ties = c.random_ties;
  if (cfg.bounds.empty() && cfg.policies.empty() && !cfg.offline) {
    throw std::invalid_argument("nothing to compute: select at least one bound or policy");
  }
  return cfg;
}

void print_row(const ReportRow& row) {
  std::printf("%s (n=%d, %d edges)\n", row.label.c_str(), row.n, row.edges);
  for (const auto& [k, v] : row.bounds) std::printf("  %-14s %.4f  (%.1fs)\n", k.c_str(), v, row.bound_seconds.at(k));
  if (row.dp_value) std::printf("  %-14s %.4f\n", "dp", *row.dp_value);
  if (row.offline) std::printf("  %-14s %.4f  (sd %.4f)\n", "offline", row.offline->mean, row.offline->stddev);
  for (const auto& [k, r] : row.policies) std::printf("  %-14s %.4f  (sd %.4f)\n", k.c_str(), r.mean, r.stddev);
  for (const std::string& v : sandwich_violations(row)) std::printf("  ordering violated: %s\n", v.c_str());
}

void write_rows(const std::string& out, const std::vector<ReportRow>& rows, bool with_timing = true) {
  if (out.empty()) return;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) arr.push_back(nlohmann::ordered_json::parse(format_row(r, with_timing)));
  write_text(out, arr.dump(2));
}

int run_rows(const Common& c, const ExperimentConfig& cfg) {
  const std::vector<ReportRow> rows = run_batch(load_instances(c.instances, c.seed), cfg, [](const ReportRow& row) {
    print_row(row);
    std::fflush(stdout);
  });
  write_rows(c.out, rows);
  return 0;
}

int cmd_generate(const Common& c) {
  if (c.out.empty()) throw std::invalid_argument("generate needs --out DIR");
  if (c.instances.empty()) throw std::invalid_argument("generate needs --instance SPEC");
  fs::create_directories(c.out);
  for (const std::string& spec : c.instances) {
    for (const Instance& inst : generate_spec(spec, c.seed)) {
      const fs::path path = fs::path(c.out) / (inst.label() + ".json");
      write_instance(inst, path);
      std::printf("%s\n", path.string().c_str());
    }
  }
  return 0;
}

// Random stage-dependent weights on a random support.
Instance random_weighted(int n, const RngSpec& spec) {
  Engine rng = make_engine(spec);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  std::bernoulli_distribution keep(0.6);
  std::vector<TimeWeight> ws;
  for (int t = 1; t <= n; ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (keep(rng)) ws.push_back({i, j, t, w(rng)});
      }
    }
  }
  return Instance::from_time(n, n, n, ws, "weighted" + std::to_string(n) + "-" + two_digits(static_cast<int>(spec.stream_id)));
}

struct VerifyArgs {
  int n = 3;
  int trials = 400;
  std::string suite = "all";
};

int cmd_verify(const Common& c, const VerifyArgs& v) {
  if (v.n < 2 || v.n > kPolicyLpCap) throw CapacityError("verify size " + std::to_string(v.n), kPolicyLpCap);
  const bool all = v.suite == "all";
  if (!all && v.suite != "validity" && v.suite != "facet" && v.suite != "duality" && v.suite != "achievable") {
    throw std::invalid_argument("unknown suite '" + v.suite + "'");
  }
  const std::vector<CutFamily> families{CutFamily::kProbBound, CutFamily::kJ1,   CutFamily::kJ2,
                                        CutFamily::kGenH,      CutFamily::kGenIJ, CutFamily::kGenQ};
  nlohmann::ordered_json doc;
  doc["n"] = v.n;
  int failures = 0;
  if (all || v.suite == "validity") {
    nlohmann::ordered_json fam = nlohmann::ordered_json::object();
    for (CutFamily f : families) {
      int checked = 0, bad = 0;
      double worst = 0.0;
      for (const Cut& cut : enumerate_family(v.n, f)) {
        const double rhs = to_double_checked(cut.rhs);
        const double gap = std::abs(max_over_Q(v.n, cut) - rhs) / std::max(1.0, rhs);
        worst = std::max(worst, gap);
        ++checked;
        if (gap > 1e-8) ++bad;
      }
      std::printf("validity %-10s %5d cuts, max |max_Q - rhs| %.2e, %d off\n", family_name(f).c_str(), checked, worst, bad);
      fam[family_name(f)] = {{"cuts", checked}, {"worst_gap", worst}, {"mismatches", bad}};
      failures += bad;
    }
    doc["validity"] = fam;
  }
  if (all || v.suite == "facet") {
    nlohmann::ordered_json certs = nlohmann::ordered_json::array();
    for (CutFamily f : families) {
      int facets = 0, total = 0;
      for (const Cut& cut : enumerate_family(v.n, f)) {
        // The one-ad rows are facets only below the top stage.
        if (f == CutFamily::kJ1 && cut.params[2] == v.n) continue;
        const FacetCertificate cert = facet_dimension(v.n, cut, v.trials, c.seed + total);
        ++total;
        if (cert.verdict == FacetVerdict::kValidAndFacet) ++facets;
        certs.push_back(nlohmann::ordered_json::parse(format_certificate(cert)));
      }
      std::printf("facet    %-10s %d/%d certified\n", family_name(f).c_str(), facets, total);
      failures += total - facets;
    }
    doc["facets"] = certs;
  }
  if (all || v.suite == "duality") {
    int bad = 0;
    for (int k = 0; k < 10; ++k) {
      const Instance inst = random_weighted(v.n, {c.seed, static_cast<std::uint64_t>(k + 1)});
      const double dp = solve_dp(inst).optimal_value;
      const double pol = solve_policy_lp(inst);
      const double val = solve_value_lp(inst);
      const bool ok = std::abs(dp - pol) <= 1e-8 && std::abs(dp - val) <= 1e-8;
      if (!ok) ++bad;
      std::printf("duality  %-22s dp %.10f policy_lp %.10f value_lp %.10f %s\n", inst.label().c_str(), dp, pol, val,
                  ok ? "ok" : "MISMATCH");
    }
    failures += bad;
    doc["duality_mismatches"] = bad;
  }
  if (all || v.suite == "achievable") {
    const std::vector<ExactZVector> pts = sample_achievable(v.n, 1000, {c.seed, 0});
    long violations = 0;
    for (CutFamily f : families) {
      for (const Cut& cut : enumerate_family(v.n, f)) {
        for (const ExactZVector& z : pts) violations += check_validity(cut, z).satisfied ? 0 : 1;
      }
    }
    const int rank = affine_rank(pts);
    std::printf("achievable 1000 policies: %ld violations, affine rank %d of %d\n", violations, rank, v.n * v.n * v.n);
    doc["achievable"] = {{"points", pts.size()}, {"violations", violations}, {"affine_rank", rank}};
    failures += violations > 0 ? 1 : 0;
  }
  if (!c.out.empty()) write_text(c.out, doc.dump(2));
  if (failures > 0) {
    std::fprintf(stderr, "obm: verify found %d failures\n", failures);
    return 1;
  }
  return 0;
}

int cmd_report(const Common& c) {
  std::map<std::string, ReportRow> merged;
  std::vector<std::string> order;
  std::vector<Instance> to_run;
  for (const std::string& a : c.instances) {
    const std::vector<fs::path> files = json_files(a);
    if (files.empty()) {
      for (Instance& inst : generate_spec(a, c.seed)) to_run.push_back(std::move(inst));
      continue;
    }
    for (const fs::path& f : files) {
      const nlohmann::json j = nlohmann::json::parse(read_text(f));
      std::vector<nlohmann::json> items = j.is_array() ? j.get<std::vector<nlohmann::json>>() : std::vector{j};
      for (const nlohmann::json& item : items) {
        if (item.contains("bounds")) {
          ReportRow row = parse_row(item.dump());
          auto it = merged.find(row.label);
          if (it == merged.end()) {
            order.push_back(row.label);
            merged.emplace(row.label, std::move(row));
          } else {
            it->second = merge_rows(it->second, row);
          }
        } else {
          Instance inst = parse_instance(item.dump());
          if (inst.label().empty()) inst = inst.with_label(f.stem().string());
          to_run.push_back(std::move(inst));
        }
      }
    }
  }
  if (!to_run.empty()) {
    const ExperimentConfig cfg = make_config(c, "static_full,dynamic", "dual_price,greedy", true);
    std::vector<ReportRow> fresh = run_batch(to_run, cfg, [](const ReportRow& row) {
      print_row(row);
      std::fflush(stdout);
    });
    for (ReportRow& row : fresh) {
      auto it = merged.find(row.label);
      if (it == merged.end()) {
        order.push_back(row.label);
        merged.emplace(row.label, std::move(row));
      } else {
        it->second = merge_rows(it->second, row);
      }
    }
  }
  if (merged.empty()) throw std::invalid_argument("report: no rows or instances found");
  std::vector<ReportRow> rows;
  for (const std::string& l : order) rows.push_back(merged.at(l));
  const std::string summary = format_summary(rows);
  std::printf("\n%s", summary.c_str());
  int violations = 0;
  for (const ReportRow& r : rows) {
    for (const std::string& v : sandwich_violations(r)) {
      std::printf("ordering violated: %s\n", v.c_str());
      ++violations;
    }
  }
  if (!c.out.empty()) {
    write_text(c.out + ".csv", rows_to_csv(rows));
    write_rows(c.out + ".json", rows, false);
    write_text(c.out + "_summary.txt", summary);
    write_text(c.out + "_timing.csv", rows_timing_csv(rows));
  }
  if (violations > 0) {
    std::fprintf(stderr, "obm: %d ordering violations\n", violations);
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-indexed relaxations and policies for i.i.d. online bipartite matching"};
  app.require_subcommand(1);
  Common c;
  VerifyArgs v;
  auto add_common = [&](CLI::App* sub, bool sim) {
    sub->add_option("--instance", c.instances, "instance file, directory of files, or generator spec")->expected(1, -1);
    sub->add_option("--seed", c.seed, "master seed");
    sub->add_option("--out", c.out, "output path");
    if (sim) {
      sub->add_option("--samples", c.samples, "Monte Carlo samples");
      sub->add_option("--policies", c.policies, "comma list: dual_price,greedy,random_feasible,exact_dp");
      sub->add_flag("--symmetrize", c.symmetrize, "average prices over rotations (regular graphs)");
      sub->add_flag("--random-ties", c.random_ties, "dual_price picks uniformly among equal best scores");
    }
    sub->add_option("--cap-dp", c.cap_dp, "largest n for the exact DP benchmark");
  };
  CLI::App* gen = app.add_subcommand("generate", "write instance files");
  add_common(gen, false);
  CLI::App* bound = app.add_subcommand("bound", "compute upper bounds");
  add_common(bound, false);
  bound->add_option("--bounds", c.bounds, "comma list: static_full,dynamic,dynamic_j2,prob_j2_only");
  bound->add_flag("--j2", c.j2, "also run two-ad constraint generation");
  CLI::App* policy = app.add_subcommand("policy", "simulate policies and the offline benchmark");
  add_common(policy, true);
  CLI::App* verify = app.add_subcommand("verify", "small-n polytope checks");
  verify->add_option("--n", v.n, "size (2..4)");
  verify->add_option("--trials", v.trials, "random objectives per facet certificate");
  verify->add_option("--suite", v.suite, "validity|facet|duality|achievable|all");
  verify->add_option("--seed", c.seed, "master seed");
  verify->add_option("--out", c.out, "JSON output");
  CLI::App* report = app.add_subcommand("report", "run or aggregate experiments into CSV and a summary");
  add_common(report, true);
  report->add_option("--bounds", c.bounds, "bounds for instances that still need running");
  report->add_flag("--j2", c.j2, "also run two-ad constraint generation");

  CLI11_PARSE(app, argc, argv);
  try {
    if (gen->parsed()) return cmd_generate(c);
    if (bound->parsed()) return run_rows(c, make_config(c, "static_full,dynamic", "none", false));
    if (policy->parsed()) return run_rows(c, make_config(c, "none", "dual_price,greedy", true));
    if (verify->parsed()) return cmd_verify(c, v);
    if (report->parsed()) return cmd_report(c);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "obm: error: %s\n", e.what());
    return 1;
  }
  return 1;
}
