// Copyright 2026 The motifwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "motifwalk_app/app.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "motifwalk/class_registry.hpp"
#include "motifwalk/enumeration.hpp"
#include "motifwalk/estimators.hpp"
#include "motifwalk/fixtures.hpp"
#include "motifwalk/log.hpp"
#include "motifwalk/nullmodel.hpp"
#include "motifwalk/parallel.hpp"
#include "motifwalk/query_oracle.hpp"
#include "motifwalk/version.hpp"
#include "motifwalk/walkers.hpp"

namespace motifwalk::app {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

/// Bad flags or flag combinations; exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kStepsPerBudgetNode = 200;

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(const std::string& text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(fmt::format("bad {} '{}' in fixture name", what, text));
  }
  return value;
}

LabeledGraph fixture_graph(const std::string& spec, GraphMode mode) {
  const auto parts = split(spec, ':');
  const std::string& name = parts[0];
  auto need_args = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi) {
      throw UsageError(fmt::format("fixture '{}' takes {} to {} arguments", name, lo, hi));
    }
  };
  auto undirected_only = [&] {
    if (mode != GraphMode::kUndirected) {
      throw UsageError(fmt::format("fixture '{}' exists only in undirected mode", name));
    }
  };
  if (name == "fig1") {
    need_args(0, 0);
    undirected_only();
    return fixtures::fig1();
  }
  if (name == "complete" || name == "cycle" || name == "path" || name == "star") {
    need_args(1, 1);
    undirected_only();
    const auto n = parse_number<std::size_t>(parts[1], "size");
    if (name == "complete") return fixtures::complete(n);
    if (name == "cycle") return fixtures::cycle(n);
    if (name == "path") return fixtures::path(n);
    return fixtures::star(n);
  }
  if (name == "random") {
    need_args(2, 3);
    const auto n = parse_number<std::size_t>(parts[1], "size");
    const double p = parse_number<double>(parts[2], "probability");
    const std::uint64_t seed = parts.size() > 3 ? parse_number<std::uint64_t>(parts[3], "seed") : 1;
    return fixtures::random_connected(n, p, seed, mode);
  }
  if (name == "gnutella-surrogate") {
    need_args(0, 1);
    const std::uint64_t seed = parts.size() > 1 ? parse_number<std::uint64_t>(parts[1], "seed") : 8;
    return fixtures::gnutella_surrogate(seed, mode);
  }
  throw UsageError(fmt::format(
      "unknown fixture '{}' (fig1, complete:N, cycle:N, path:N, star:N, random:N:P[:SEED], "
      "gnutella-surrogate[:SEED])",
      name));
}

std::vector<int> sizes_for(Method method, int k) {
  switch (method) {
    case Method::kMss:
      return {k - 1, k, k + 1};
    case Method::kGuise:
      return {3, 4, 5};
    default:
      return {k};
  }
}

/// One walk chain: what to run and how far.
struct ChainPlan {
  Method method = Method::kSrw;
  int k = 3;
  std::uint64_t steps = 0;
  QueryBudget budget;
  LatencyModel latency;
  std::uint64_t burn_in = 0;
  bool lazy = false;
  std::vector<double> esu_probs;
};

/// Walk steps B, from --steps or derived from B* or T.
std::uint64_t plan_steps(const ExperimentConfig& cfg, std::optional<std::uint64_t> nodes) {
  if (cfg.steps) return *cfg.steps;
  if (nodes) return kStepsPerBudgetNode * *nodes;
  if (cfg.budget_ms) {
    if (cfg.query_delay_ms <= 0) {
      throw UsageError("--budget-ms without --steps needs --query-delay-ms > 0");
    }
    return kStepsPerBudgetNode *
           static_cast<std::uint64_t>(std::ceil(*cfg.budget_ms / cfg.query_delay_ms));
  }
  throw UsageError("set at least one budget: --steps, --budget-nodes or --budget-ms");
}

ChainPlan base_plan(const ExperimentConfig& cfg, Method method, int k) {
  ChainPlan plan;
  plan.method = method;
  plan.k = k;
  plan.budget = QueryBudget{cfg.budget_nodes, cfg.budget_ms};
  plan.latency = LatencyModel{cfg.query_delay_ms, cfg.step_compute_ms};
  plan.steps = plan_steps(cfg, cfg.budget_nodes);
  plan.burn_in = cfg.burn_in;
  plan.lazy = cfg.lazy;
  plan.esu_probs = cfg.esu_probs.empty() ? default_esu_probs(k) : cfg.esu_probs;
  if (method == Method::kRandEsu && plan.esu_probs.size() != static_cast<std::size_t>(k)) {
    throw UsageError(fmt::format("--esu-probs needs {} values for k={}", k, k));
  }
  return plan;
}

struct RunOutcome {
  std::map<int, std::optional<ConcentrationVector>> estimates;
  OracleStats stats;
  std::uint64_t states = 0;
  std::uint64_t samples = 0;
  bool truncated = false;
};

std::optional<ConcentrationVector> guarded(const std::function<ConcentrationVector()>& fn) {
  try {
    return fn();
  } catch (const EstimatorError&) {
    return std::nullopt;
  }
}

void absorb(RunOutcome& out, const TraceInfo& info, std::size_t samples) {
  out.stats = info.stats;
  out.states = info.states;
  out.samples = samples;
  out.truncated = info.truncated;
}

RunOutcome run_chain(const LabeledGraph& g, const ChainPlan& plan, const RegistrySet& regs,
                     std::uint64_t seed) {
  QueryOracle oracle(g, plan.budget, plan.latency);
  WalkConfig wc;
  wc.method = plan.method;
  wc.k = plan.k;
  wc.steps = plan.steps;
  wc.burn_in = plan.burn_in;
  wc.seed = seed;
  wc.lazy = plan.lazy;
  RunOutcome out;
  const int k = plan.k;
  switch (plan.method) {
    case Method::kSrw: {
      const WalkTrace t = run_srw(oracle, wc, regs);
      absorb(out, t.info, t.samples.size());
      out.estimates[k] = guarded([&] { return ht_node_estimate(t, regs.at(k)); });
      break;
    }
    case Method::kMhsrw: {
      const WalkTrace t = run_mhsrw(oracle, wc, regs);
      absorb(out, t.info, t.samples.size());
      out.estimates[k] = guarded([&] { return plain_average(t, regs.at(k)); });
      break;
    }
    case Method::kPsrw: {
      const PairTrace t = run_psrw(oracle, wc, regs);
      absorb(out, t.info, t.samples.size());
      out.estimates[k] = guarded([&] { return ht_edge_estimate(t, regs.at(k)); });
      break;
    }
    case Method::kMss: {
      const MssResult r = run_mss(oracle, wc, regs);
      absorb(out, r.size_k.info, r.size_k.samples.size());
      out.estimates[k - 1] = guarded([&] { return ht_reduce_estimate(r.size_k_minus, regs.at(k - 1)); });
      out.estimates[k] = guarded([&] { return ht_node_estimate(r.size_k, regs.at(k)); });
      out.estimates[k + 1] = guarded([&] { return ht_edge_estimate(r.size_k_plus, regs.at(k + 1)); });
      break;
    }
    case Method::kGuise: {
      const WalkTrace t = run_guise(oracle, wc, regs);
      absorb(out, t.info, t.samples.size());
      for (const int s : {3, 4, 5}) {
        out.estimates[s] = guarded([&] { return plain_average(t, regs.at(s)); });
      }
      break;
    }
    case Method::kRandEsu: {
      const RandEsuResult r = rand_esu(oracle, k, plan.esu_probs, seed);
      out.stats = r.stats;
      out.samples = r.samples.size();
      out.truncated = r.truncated;
      out.estimates[k] = guarded([&] { return rand_esu_estimate(r, regs.at(k)); });
      break;
    }
  }
  return out;
}

RegistrySet make_registries(GraphMode mode, const std::vector<int>& sizes) {
  RegistrySet regs;
  std::vector<int> wanted = sizes;
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  regs = RegistrySet(mode, std::span<const int>(wanted));
  return regs;
}

/// Ground truth by size, read from --truth files whose header k is wanted.
struct TruthSet {
  std::map<int, ConcentrationVector> by_size;
  std::vector<std::string> notes;
};

std::optional<int> header_k(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open truth file {}", path.string()));
  std::string line;
  while (std::getline(in, line) && !line.empty() && line.front() == '#') {
    std::istringstream fields(line.substr(1));
    std::string field;
    while (fields >> field) {
      if (field.rfind("k=", 0) == 0) return std::stoi(field.substr(2));
    }
  }
  return std::nullopt;
}

TruthSet load_truth(const ExperimentConfig& cfg, const LabeledGraph& g, const RegistrySet& regs) {
  TruthSet truth;
  for (const fs::path& path : cfg.truth) {
    const auto k = header_k(path);
    if (!k) throw std::runtime_error(fmt::format("truth file {} has no k= header", path.string()));
    if (!regs.has(*k)) continue;
    std::ifstream in(path);
    std::uint64_t fingerprint = 0;
    const ClassCounts counts = read_ground_truth(in, regs.at(*k), &fingerprint);
    if (fingerprint != g.fingerprint()) {
      throw std::runtime_error(fmt::format(
          "truth file {} belongs to graph {:016x}, not {:016x}", path.string(), fingerprint,
          g.fingerprint()));
    }
    truth.by_size[*k] = to_concentrations(counts);
  }
  return truth;
}

std::string format_value(double v) { return fmt::format("{:.10g}", v); }

std::string optional_value(const std::optional<double>& v) {
  return v ? format_value(*v) : std::string();
}

/// Fixed-width variants for the console tables.
std::string shown(double v) { return fmt::format("{:.5f}", v); }
std::string shown(const std::optional<double>& v) { return v ? shown(*v) : std::string("-"); }

/// Per-size result over all runs of one method.
struct SizeSummary {
  int size = 0;
  std::vector<double> mean;
  std::size_t runs_used = 0;
  std::optional<ErrorReport> report;
  std::vector<std::string> notes;
};

SizeSummary summarize(int size, const std::vector<RunOutcome>& runs, const TruthSet& truth) {
  SizeSummary s;
  s.size = size;
  std::vector<ConcentrationVector> used;
  for (const RunOutcome& r : runs) {
    const auto it = r.estimates.find(size);
    if (it != r.estimates.end() && it->second) used.push_back(*it->second);
  }
  s.runs_used = used.size();
  if (used.size() < runs.size()) {
    s.notes.push_back(fmt::format("size {}: {} of {} runs had no samples", size,
                                  runs.size() - used.size(), runs.size()));
  }
  std::size_t width = 0;
  for (const auto& v : used) width = std::max(width, v.size());
  const auto t = truth.by_size.find(size);
  if (t != truth.by_size.end()) width = std::max(width, t->second.size());
  s.mean.assign(width, 0.0);
  for (const auto& v : used) {
    for (std::size_t i = 0; i < v.size(); ++i) s.mean[i] += v.values[i];
  }
  if (!used.empty()) {
    for (double& m : s.mean) m /= static_cast<double>(used.size());
  }
  if (t == truth.by_size.end()) {
    s.notes.push_back(fmt::format("size {}: no ground truth, errors omitted", size));
  } else if (used.size() < 2) {
    s.notes.push_back(fmt::format("size {}: fewer than two runs, errors omitted", size));
  } else {
    s.report = nrmse(used, t->second);
    for (const auto& n : s.report->notes) s.notes.push_back(fmt::format("size {}: {}", size, n));
  }
  return s;
}

std::string class_name(const RegistrySet& regs, int size, ClassId id) {
  const ClassRegistry& reg = regs.at(size);
  return id <= reg.size() ? reg.info(id).name : std::string();
}

std::optional<double> class_nrmse(const SizeSummary& s, ClassId id) {
  if (!s.report) return std::nullopt;
  for (const ClassError& e : s.report->per_class) {
    if (e.id == id) return e.nrmse;
  }
  return std::nullopt;
}

std::optional<double> class_truth(const TruthSet& truth, int size, ClassId id) {
  const auto t = truth.by_size.find(size);
  if (t == truth.by_size.end() || id > t->second.size()) return std::nullopt;
  return t->second.at(id);
}

std::vector<RunOutcome> run_many(const LabeledGraph& g, const std::vector<ChainPlan>& chains,
                                 const RegistrySet& regs, const ExperimentConfig& cfg,
                                 std::uint64_t master) {
  std::vector<RunOutcome> runs(cfg.runs);
  parallel_for(cfg.runs, cfg.threads, [&](std::size_t, std::size_t i) {
    const std::uint64_t run_seed = derive_seed(master, i);
    if (chains.size() == 1) {
      runs[i] = run_chain(g, chains.front(), regs, run_seed);
      return;
    }
    RunOutcome merged;
    for (std::size_t c = 0; c < chains.size(); ++c) {
      RunOutcome part = run_chain(g, chains[c], regs, derive_seed(run_seed, c));
      for (auto& [size, est] : part.estimates) merged.estimates[size] = std::move(est);
      merged.stats.distinct_queried += part.stats.distinct_queried;
      merged.stats.simulated_elapsed_ms += part.stats.simulated_elapsed_ms;
      merged.stats.cache_hits += part.stats.cache_hits;
      merged.stats.steps += part.stats.steps;
      merged.states += part.states;
      merged.samples += part.samples;
      merged.truncated = merged.truncated || part.truncated;
    }
    runs[i] = std::move(merged);
  });
  return runs;
}

void check_common(const ExperimentConfig& cfg) {
  if (cfg.graph.empty()) throw UsageError("--graph is required");
  if (cfg.runs < 1) throw UsageError("--runs must be at least 1");
}

void warn_dynamic(const RegistrySet& regs, const std::vector<int>& sizes, std::size_t threads) {
  if (resolve_threads(threads) <= 1) return;
  for (const int s : sizes) {
    if (regs.at(s).is_dynamic()) {
      warn(fmt::format("size {} uses a dynamic registry; class ids depend on thread timing", s));
      return;
    }
  }
}

ordered_json manifest(const ExperimentConfig& cfg, const LabeledGraph& g) {
  ordered_json doc;
  doc["tool"] = "motifwalk";
  doc["version"] = std::string(kVersion);
  doc["config"] = to_json(cfg);
  doc["graph_summary"] = {{"nodes", g.node_count()},
                          {"edges", g.edge_count()},
                          {"fingerprint", fmt::format("{:016x}", g.fingerprint())}};
  return doc;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
  return out;
}

void write_json(const fs::path& path, const ordered_json& doc) {
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
}

void print_graph_line(std::ostream& out, const ExperimentConfig& cfg, const LabeledGraph& g) {
  fmt::print(out, "graph {} ({}): {} nodes, {} edges\n", cfg.graph, to_string(g.mode()),
             g.node_count(), g.edge_count());
}

Method method_of(const std::string& name) {
  try {
    return parse_method(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

nlohmann::ordered_json to_json(const ExperimentConfig& cfg) {
  ordered_json j;
  j["command"] = cfg.command;
  j["graph"] = cfg.graph;
  j["mode"] = std::string(to_string(cfg.mode));
  j["methods"] = cfg.methods;
  j["k"] = cfg.k;
  j["steps"] = cfg.steps ? ordered_json(*cfg.steps) : ordered_json(nullptr);
  j["budget_nodes"] = cfg.budget_nodes ? ordered_json(*cfg.budget_nodes) : ordered_json(nullptr);
  j["budget_ms"] = cfg.budget_ms ? ordered_json(*cfg.budget_ms) : ordered_json(nullptr);
  j["query_delay_ms"] = cfg.query_delay_ms;
  j["step_compute_ms"] = cfg.step_compute_ms;
  j["runs"] = cfg.runs;
  j["seed"] = cfg.seed;
  j["burn_in"] = cfg.burn_in;
  j["out"] = cfg.out.string();
  std::vector<std::string> truth;
  for (const auto& p : cfg.truth) truth.push_back(p.string());
  j["truth"] = truth;
  j["lazy"] = cfg.lazy;
  j["esu_probs"] = cfg.esu_probs;
  j["max_cises"] = cfg.max_cises ? ordered_json(*cfg.max_cises) : ordered_json(nullptr);
  j["joint"] = cfg.joint;
  j["step_equalized"] = cfg.step_equalized;
  j["null_source"] = cfg.null_source;
  j["n_random"] = cfg.n_random;
  j["jdd_steps"] = cfg.jdd_steps;
  return j;
}

LabeledGraph load_graph(const ExperimentConfig& cfg) {
  constexpr std::string_view kPrefix = "fixture:";
  if (cfg.graph.rfind(kPrefix, 0) == 0) {
    return largest_connected_component(fixture_graph(cfg.graph.substr(kPrefix.size()), cfg.mode));
  }
  return largest_connected_component(load_edge_list(fs::path(cfg.graph), cfg.mode));
}

int cmd_enumerate(const ExperimentConfig& cfg, std::ostream& out) {
  check_common(cfg);
  if (cfg.k < 2 || cfg.k > kMaxCisSize) {
    throw UsageError(fmt::format("--k must be in 2..{}", kMaxCisSize));
  }
  const LabeledGraph g = load_graph(cfg);
  const auto registry = build_registry(cfg.k, cfg.mode);
  EnumerationOptions options;
  options.threads = cfg.threads;
  options.max_cises = cfg.max_cises;
  const ClassCounts counts = count_classes(g, cfg.k, *registry, options);
  print_graph_line(out, cfg, g);
  fmt::print(out, "k={} total={} classes={}\n", counts.k, counts.total, counts.counts.size());
  if (cfg.out.empty()) {
    write_ground_truth(out, counts, *registry, g.fingerprint());
    return 0;
  }
  {
    auto file = open_out(cfg.out);
    write_ground_truth(file, counts, *registry, g.fingerprint());
  }
  ordered_json doc = manifest(cfg, g);
  doc["total"] = counts.total;
  doc["counts"] = counts.counts;
  write_json(fs::path(cfg.out.string() + ".manifest.json"), doc);
  for (std::size_t i = 0; i < counts.counts.size(); ++i) {
    fmt::print(out, "  class {:>3}  {:>14}  {}\n", i + 1, counts.counts[i],
               registry->info(static_cast<ClassId>(i + 1)).name);
  }
  fmt::print(out, "wrote {}\n", cfg.out.string());
  return 0;
}

int cmd_sample(const ExperimentConfig& cfg, std::ostream& out) {
  check_common(cfg);
  if (cfg.methods.size() != 1) throw UsageError("sample takes exactly one --method");
  const Method method = method_of(cfg.methods.front());
  const std::vector<int> sizes = sizes_for(method, cfg.k);
  const ChainPlan plan = base_plan(cfg, method, cfg.k);
  const LabeledGraph g = load_graph(cfg);
  const RegistrySet regs = make_registries(cfg.mode, sizes);
  warn_dynamic(regs, sizes, cfg.threads);
  const TruthSet truth = load_truth(cfg, g, regs);
  const std::vector<RunOutcome> runs = run_many(g, {plan}, regs, cfg, cfg.seed);

  std::vector<SizeSummary> summaries;
  for (const int s : sizes) summaries.push_back(summarize(s, runs, truth));

  print_graph_line(out, cfg, g);
  fmt::print(out, "method={} k={} runs={} steps={}\n", to_string(method), cfg.k, cfg.runs,
             plan.steps);
  for (const SizeSummary& s : summaries) {
    fmt::print(out, "size {} ({} runs with samples)\n", s.size, s.runs_used);
    fmt::print(out, "  {:>5}  {:<24} {:>10} {:>10} {:>10}\n", "class", "name", "truth", "mean",
               "nrmse");
    for (std::size_t i = 0; i < s.mean.size(); ++i) {
      const auto id = static_cast<ClassId>(i + 1);
      fmt::print(out, "  {:>5}  {:<24} {:>10} {:>10} {:>10}\n", id, class_name(regs, s.size, id),
                 shown(class_truth(truth, s.size, id)), shown(s.mean[i]),
                 shown(class_nrmse(s, id)));
    }
    if (s.report) fmt::print(out, "  rmse {}\n", shown(s.report->rmse));
  }
  for (const SizeSummary& s : summaries) {
    for (const auto& n : s.notes) fmt::print(out, "note: {}\n", n);
  }
  if (cfg.out.empty()) return 0;

  fs::create_directories(cfg.out);
  {
    auto f = open_out(cfg.out / "estimates.csv");
    f << "run,size,class_id,concentration\n";
    for (std::size_t r = 0; r < runs.size(); ++r) {
      for (const auto& [size, est] : runs[r].estimates) {
        if (!est) continue;
        for (std::size_t i = 0; i < est->size(); ++i) {
          fmt::print(f, "{},{},{},{}\n", r, size, i + 1, format_value(est->values[i]));
        }
      }
    }
  }
  {
    auto f = open_out(cfg.out / "runs.csv");
    f << "run,seed,states,samples,steps,distinct_queried,cache_hits,simulated_ms,truncated\n";
    for (std::size_t r = 0; r < runs.size(); ++r) {
      const RunOutcome& o = runs[r];
      fmt::print(f, "{},{},{},{},{},{},{},{},{}\n", r, derive_seed(cfg.seed, r), o.states,
                 o.samples, o.stats.steps, o.stats.distinct_queried, o.stats.cache_hits,
                 format_value(o.stats.simulated_elapsed_ms), o.truncated ? 1 : 0);
    }
  }
  {
    auto f = open_out(cfg.out / "summary.csv");
    f << "size,class_id,name,truth,mean,nrmse\n";
    for (const SizeSummary& s : summaries) {
      for (std::size_t i = 0; i < s.mean.size(); ++i) {
        const auto id = static_cast<ClassId>(i + 1);
        fmt::print(f, "{},{},{},{},{},{}\n", s.size, id, class_name(regs, s.size, id),
                   optional_value(class_truth(truth, s.size, id)), format_value(s.mean[i]),
                   optional_value(class_nrmse(s, id)));
      }
    }
  }
  {
    auto f = open_out(cfg.out / "sizes.csv");
    f << "size,runs_used,rmse\n";
    for (const SizeSummary& s : summaries) {
      fmt::print(f, "{},{},{}\n", s.size, s.runs_used,
                 s.report ? format_value(s.report->rmse) : std::string());
    }
  }
  ordered_json doc = manifest(cfg, g);
  doc["steps_per_chain"] = plan.steps;
  std::vector<std::string> notes;
  for (const SizeSummary& s : summaries) notes.insert(notes.end(), s.notes.begin(), s.notes.end());
  doc["notes"] = notes;
  write_json(cfg.out / "manifest.json", doc);
  return 0;
}

int cmd_compare(const ExperimentConfig& cfg, std::ostream& out) {
  check_common(cfg);
  if (cfg.methods.empty()) throw UsageError("compare needs at least one --method");
  if (cfg.step_equalized ? !cfg.steps : !cfg.budget_nodes) {
    throw UsageError(cfg.step_equalized ? "--step-equalized needs --steps"
                                        : "compare equalizes --budget-nodes; set it");
  }
  std::vector<Method> methods;
  for (const auto& name : cfg.methods) methods.push_back(method_of(name));

  ExperimentConfig eq = cfg;
  if (cfg.step_equalized) {
    eq.budget_nodes.reset();
  } else {
    eq.steps.reset();
  }

  struct MethodRun {
    Method method;
    std::vector<ChainPlan> chains;
    std::vector<int> sizes;
  };
  std::vector<MethodRun> plans;
  std::vector<int> all_sizes;
  for (const Method m : methods) {
    MethodRun mr{m, {}, {}};
    if (!cfg.joint || m == Method::kGuise) {
      mr.chains.push_back(base_plan(eq, m, cfg.k));
      mr.sizes = sizes_for(m, cfg.k);
    } else if (m == Method::kMss) {
      mr.chains.push_back(base_plan(eq, m, 4));
      mr.sizes = {3, 4, 5};
    } else {
      // Single-size methods get a third of the budget per size.
      ExperimentConfig third = eq;
      if (third.budget_nodes) third.budget_nodes = std::max<std::uint64_t>(1, *third.budget_nodes / 3);
      if (third.steps) third.steps = std::max<std::uint64_t>(1, *third.steps / 3);
      for (const int s : {3, 4, 5}) mr.chains.push_back(base_plan(third, m, s));
      mr.sizes = {3, 4, 5};
    }
    all_sizes.insert(all_sizes.end(), mr.sizes.begin(), mr.sizes.end());
    plans.push_back(std::move(mr));
  }

  const LabeledGraph g = load_graph(cfg);
  const RegistrySet regs = make_registries(cfg.mode, all_sizes);
  warn_dynamic(regs, all_sizes, cfg.threads);
  const TruthSet truth = load_truth(cfg, g, regs);
  for (const int s : all_sizes) {
    if (!truth.by_size.contains(s)) {
      throw UsageError(fmt::format("compare needs ground truth for size {} (--truth)", s));
    }
  }

  struct Row {
    Method method;
    SizeSummary summary;
  };
  std::vector<Row> rows;
  for (std::size_t m = 0; m < plans.size(); ++m) {
    const auto runs = run_many(g, plans[m].chains, regs, cfg, derive_seed(cfg.seed, m));
    for (const int s : plans[m].sizes) rows.push_back({plans[m].method, summarize(s, runs, truth)});
  }

  print_graph_line(out, cfg, g);
  fmt::print(out, "{} at {} {} per method, {} runs{}\n", cfg.joint ? "joint 3/4/5" : "compare",
             cfg.step_equalized ? *cfg.steps : *cfg.budget_nodes,
             cfg.step_equalized ? "steps" : "distinct nodes", cfg.runs,
             cfg.joint ? ", single-size methods split evenly" : "");
  fmt::print(out, "  {:<9} {:>4} {:>12} {:>12}\n", "method", "size", "rmse", "mean nrmse");
  for (const Row& r : rows) {
    double sum = 0;
    std::size_t n = 0;
    if (r.summary.report) {
      for (const auto& e : r.summary.report->per_class) {
        if (e.nrmse) {
          sum += *e.nrmse;
          ++n;
        }
      }
    }
    fmt::print(out, "  {:<9} {:>4} {:>12} {:>12}\n", to_string(r.method), r.summary.size,
               r.summary.report ? shown(r.summary.report->rmse) : "-",
               n ? shown(sum / static_cast<double>(n)) : "-");
  }
  for (const Row& r : rows) {
    for (const auto& n : r.summary.notes) fmt::print(out, "note: {}: {}\n", to_string(r.method), n);
  }
  if (cfg.out.empty()) return 0;

  fs::create_directories(cfg.out);
  {
    auto f = open_out(cfg.out / "compare.csv");
    f << "method,size,class_id,name,truth,mean,nrmse\n";
    for (const Row& r : rows) {
      const SizeSummary& s = r.summary;
      for (std::size_t i = 0; i < s.mean.size(); ++i) {
        const auto id = static_cast<ClassId>(i + 1);
        fmt::print(f, "{},{},{},{},{},{},{}\n", to_string(r.method), s.size, id,
                   class_name(regs, s.size, id), optional_value(class_truth(truth, s.size, id)),
                   format_value(s.mean[i]), optional_value(class_nrmse(s, id)));
      }
    }
  }
  {
    auto f = open_out(cfg.out / "rmse.csv");
    f << "method,size,runs_used,rmse\n";
    for (const Row& r : rows) {
      fmt::print(f, "{},{},{},{}\n", to_string(r.method), r.summary.size, r.summary.runs_used,
                 r.summary.report ? format_value(r.summary.report->rmse) : std::string());
    }
  }
  write_json(cfg.out / "manifest.json", manifest(cfg, g));
  return 0;
}

int cmd_zscore(const ExperimentConfig& cfg, std::ostream& out) {
  check_common(cfg);
  if (cfg.n_random < 2) throw UsageError("--n-random must be at least 2");
  if (cfg.null_source != "sampled" && cfg.null_source != "exact") {
    throw UsageError("--null-source is sampled or exact");
  }
  if (cfg.methods.size() > 1) throw UsageError("zscore takes at most one --method");
  const std::string method_name = cfg.methods.empty() ? "psrw" : cfg.methods.front();
  const LabeledGraph g = load_graph(cfg);
  const auto registry = build_registry(cfg.k, cfg.mode);
  RegistrySet regs;

  ConcentrationVector omega;
  std::size_t omega_runs = 0;
  if (method_name == "exact") {
    omega = exact_concentrations(g, cfg.k, *registry);
  } else {
    const Method method = method_of(method_name);
    if (method == Method::kGuise || method == Method::kMss) {
      throw UsageError("zscore estimates one size; use srw, psrw, mhsrw, rand_esu or exact");
    }
    regs = make_registries(cfg.mode, sizes_for(method, cfg.k));
    regs.put(registry);
    const ChainPlan plan = base_plan(cfg, method, cfg.k);
    const auto runs = run_many(g, {plan}, regs, cfg, cfg.seed);
    SizeSummary s = summarize(cfg.k, runs, TruthSet{});
    if (s.runs_used == 0) throw std::runtime_error("no run produced an estimate");
    omega.k = cfg.k;
    omega.mode = cfg.mode;
    omega.values = s.mean;
    omega.observed.assign(s.mean.size(), true);
    omega_runs = s.runs_used;
  }

  NullSource source;
  bool jdd_truncated = false;
  if (cfg.null_source == "exact") {
    source = NullSource::from_graph(g);
  } else {
    QueryOracle oracle(g, QueryBudget{cfg.budget_nodes, cfg.budget_ms},
                       LatencyModel{cfg.query_delay_ms, cfg.step_compute_ms});
    const JointDegreeDistribution phi =
        estimate_joint_degree_dist(oracle, cfg.jdd_steps, derive_seed(cfg.seed, 0x6a6464));
    jdd_truncated = phi.truncated;
    source = NullSource::from_distribution(phi, phi.node_count_estimate, positive_fraction(g));
  }
  NullOptions options;
  options.n_random = cfg.n_random;
  options.seed = derive_seed(cfg.seed, 0x6e756c6c);
  options.threads = cfg.threads;
  const NullStats stats = compute_null_stats(source, registry, options);
  omega.values.resize(std::max(omega.values.size(), stats.mu.size()), 0.0);
  omega.observed.resize(omega.values.size(), false);
  const ZScoreReport report = z_scores(omega, stats);

  print_graph_line(out, cfg, g);
  fmt::print(out, "k={} omega from {}{}; null: {} graphs ({}), degrees {}\n", cfg.k, method_name,
             omega_runs ? fmt::format(" ({} runs)", omega_runs) : std::string(), stats.n_random,
             report.method, cfg.null_source);
  fmt::print(out, "  {:>5}  {:<24} {:>10} {:>10} {:>10} {:>10}\n", "class", "name", "omega", "mu",
             "sigma", "z");
  for (const ZScoreRow& r : report.rows) {
    fmt::print(out, "  {:>5}  {:<24} {:>10} {:>10} {:>10} {:>10}\n", r.id,
               r.id <= registry->size() ? registry->info(r.id).name : "",
               shown(r.omega), shown(r.mu), shown(r.sigma), r.z ? shown(*r.z) : "undefined");
  }
  if (jdd_truncated) fmt::print(out, "note: degree distribution walk stopped at the budget\n");
  if (cfg.out.empty()) return 0;

  fs::create_directories(cfg.out);
  {
    auto f = open_out(cfg.out / "zscore.csv");
    f << "class_id,name,omega,mu,sigma,z\n";
    for (const ZScoreRow& r : report.rows) {
      fmt::print(f, "{},{},{},{},{},{}\n", r.id,
                 r.id <= registry->size() ? registry->info(r.id).name : "",
                 format_value(r.omega), format_value(r.mu), format_value(r.sigma),
                 r.z ? format_value(*r.z) : "undefined");
    }
  }
  {
    auto f = open_out(cfg.out / "nulls.csv");
    f << "graph,class_id,concentration\n";
    for (std::size_t i = 0; i < stats.per_graph.size(); ++i) {
      const auto& v = stats.per_graph[i];
      for (std::size_t c = 0; c < v.size(); ++c) {
        fmt::print(f, "{},{},{}\n", i, c + 1, format_value(v.values[c]));
      }
    }
  }
  ordered_json doc = manifest(cfg, g);
  doc["null_method"] = report.method;
  doc["jdd_truncated"] = jdd_truncated;
  write_json(cfg.out / "manifest.json", doc);
  return 0;
}

int cmd_fixture(const ExperimentConfig& cfg, const std::string& name, std::ostream& out) {
  const LabeledGraph g = fixture_graph(name, cfg.mode);
  if (cfg.out.empty()) {
    write_edge_list(out, g);
    return 0;
  }
  auto f = open_out(cfg.out);
  write_edge_list(f, g);
  fmt::print(out, "wrote {} ({} nodes, {} edges)\n", cfg.out.string(), g.node_count(),
             g.edge_count());
  return 0;
}

int cmd_classes(const ExperimentConfig& cfg, bool drawings, std::ostream& out) {
  if (!ClassRegistry::has_built_in(cfg.k, cfg.mode)) {
    throw UsageError(fmt::format("no built-in class table for k={} {}", cfg.k, to_string(cfg.mode)));
  }
  const auto registry = ClassRegistry::built_in(cfg.k, cfg.mode);
  if (!drawings) {
    out << export_registry_table(*registry);
    return 0;
  }
  for (const ClassInfo& c : registry->classes()) {
    const Cis rep = c.code.to_cis();
    fmt::print(out, "class {} {} ({} edges): {}\n", c.id, c.name, c.edge_count,
               describe_edges(rep, cfg.mode));
    out << ascii_drawing(rep, cfg.mode) << '\n';
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Random-walk subgraph concentration estimation"};
  cli.set_version_flag("--version", std::string(kVersion));
  cli.require_subcommand(1);

  ExperimentConfig cfg;
  std::string mode_text = "undirected";
  std::string fixture_name;
  bool drawings = false;
  std::vector<std::string> truth_paths;
  std::string out_path;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph, "edge list path or fixture:<name>");
    sub->add_option("--mode", mode_text, "undirected, directed or signed")
        ->check(CLI::IsMember({"undirected", "directed", "signed"}));
    sub->add_option("--k", cfg.k, "subgraph size");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    sub->add_option("--out", out_path, "output file or directory");
  };
  auto add_walk = [&](CLI::App* sub) {
    sub->add_option("--steps", cfg.steps, "walk steps B");
    sub->add_option("--budget-nodes", cfg.budget_nodes, "distinct-node budget B*");
    sub->add_option("--budget-ms", cfg.budget_ms, "simulated time budget T");
    sub->add_option("--query-delay-ms", cfg.query_delay_ms, "simulated latency per new node");
    sub->add_option("--step-compute-ms", cfg.step_compute_ms, "simulated compute per step");
    sub->add_option("--runs", cfg.runs, "independent chains")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "master seed");
    sub->add_option("--burn-in", cfg.burn_in, "steps discarded before sampling");
    sub->add_option("--truth", truth_paths, "ground-truth files from enumerate");
    sub->add_flag("--lazy", cfg.lazy, "lazy walk (stay put with probability 1/2)");
    sub->add_option("--esu-probs", cfg.esu_probs, "rand_esu survival probability per depth")
        ->delimiter(',');
  };

  auto* enumerate = cli.add_subcommand("enumerate", "exact class counts by ESU");
  add_graph(enumerate);
  enumerate->add_option("--max-cises", cfg.max_cises, "stop with an error past this many");

  auto* sample = cli.add_subcommand("sample", "independent estimation runs of one method");
  add_graph(sample);
  add_walk(sample);
  sample->add_option("--method", cfg.methods, "srw, psrw, mss, mhsrw, guise or rand_esu")
      ->expected(1);

  auto* compare = cli.add_subcommand("compare", "methods side by side at an equal budget");
  add_graph(compare);
  add_walk(compare);
  compare->add_option("--method,--methods", cfg.methods, "methods to compare")->delimiter(',');
  compare->add_flag("--joint", cfg.joint, "compare 3-, 4- and 5-node vectors together");
  compare->add_flag("--step-equalized", cfg.step_equalized, "equalize walk steps, not B*");

  auto* zscore = cli.add_subcommand("zscore", "Z-scores against configuration-model graphs");
  add_graph(zscore);
  add_walk(zscore);
  zscore->add_option("--method", cfg.methods, "estimator for omega, or exact")->expected(1);
  zscore->add_option("--n-random", cfg.n_random, "null graphs");
  zscore->add_option("--null-source", cfg.null_source, "sampled or exact degrees");
  zscore->add_option("--jdd-steps", cfg.jdd_steps, "walk steps for the degree distribution");

  auto* fixture = cli.add_subcommand("fixture", "write a built-in test graph as an edge list");
  fixture->add_option("name", fixture_name, "fig1, complete:N, random:N:P[:SEED], ...")
      ->required();
  fixture->add_option("--mode", mode_text)->check(CLI::IsMember({"undirected", "directed", "signed"}));
  fixture->add_option("--out", out_path, "output file");

  auto* classes = cli.add_subcommand("classes", "list the built-in classes of one size");
  classes->add_option("--k", cfg.k, "subgraph size");
  classes->add_option("--mode", mode_text)->check(CLI::IsMember({"undirected", "directed", "signed"}));
  classes->add_flag("--drawings", drawings, "draw each class");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e, out, err);
  }

  cfg.mode = parse_graph_mode(mode_text);
  cfg.out = out_path;
  for (const auto& p : truth_paths) cfg.truth.emplace_back(p);
  try {
    if (enumerate->parsed()) {
      cfg.command = "enumerate";
      return cmd_enumerate(cfg, out);
    }
    if (sample->parsed()) {
      cfg.command = "sample";
      return cmd_sample(cfg, out);
    }
    if (compare->parsed()) {
      cfg.command = "compare";
      return cmd_compare(cfg, out);
    }
    if (zscore->parsed()) {
      cfg.command = "zscore";
      return cmd_zscore(cfg, out);
    }
    if (fixture->parsed()) {
      cfg.command = "fixture";
      return cmd_fixture(cfg, fixture_name, out);
    }
    cfg.command = "classes";
    return cmd_classes(cfg, drawings, out);
  } catch (const UsageError& e) {
    fmt::print(err, "motifwalk: usage: {}\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fmt::print(err, "motifwalk: error: {}\n", e.what());
    return 1;
  }
}

}  // namespace motifwalk::app
