#include "graphbatch/experiment.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "graphbatch/errors.hpp"

namespace graphbatch {

namespace {

using Clock = std::chrono::steady_clock;

double clock_resolution_ns() {
  return 1e9 * static_cast<double>(Clock::period::num) /
         static_cast<double>(Clock::period::den);
}

struct AnyBatcher {
  std::optional<StaticBatcher> stat;
  std::optional<DynamicBatcher> dyn;

  PaddedBatch next() { return stat ? stat->next() : dyn->next(); }
};

AnyBatcher make_batcher(const ExperimentConfig& cfg, GraphStream stream,
                        const std::optional<PaddingBudget>& budget) {
  AnyBatcher b;
  switch (cfg.algorithm) {
    case Algorithm::kStatic64:
      b.stat.emplace(std::move(stream), cfg.batch_size, StaticMode::kMult64);
      break;
    case Algorithm::kStatic2N:
      b.stat.emplace(std::move(stream), cfg.batch_size, StaticMode::kPow2);
      break;
    case Algorithm::kStaticConstant:
      b.stat.emplace(std::move(stream), cfg.batch_size, StaticMode::kConstant,
                     budget);
      break;
    case Algorithm::kDynamic:
      b.dyn.emplace(std::move(stream), *budget);
      break;
  }
  return b;
}

}  // namespace

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kStatic64: return "static64";
    case Algorithm::kStatic2N: return "static2n";
    case Algorithm::kStaticConstant: return "static-constant";
    case Algorithm::kDynamic: return "dynamic";
  }
  return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "static64") return Algorithm::kStatic64;
  if (name == "static2n" || name == "static-2n") return Algorithm::kStatic2N;
  if (name == "static-constant") return Algorithm::kStaticConstant;
  if (name == "dynamic") return Algorithm::kDynamic;
  throw InvalidParams("unknown algorithm: " + name);
}

ExperimentReport run_experiment(
    const ExperimentConfig& cfg,
    std::shared_ptr<const std::vector<Graph>> dataset) {
  if (cfg.steps < 1 || cfg.iterations < 1 || cfg.batch_size < 2)
    throw InvalidParams("steps >= 1, iterations >= 1, batch_size >= 2 required");

  ExperimentReport report;
  report.config = cfg;
  report.clock_resolution_ns = clock_resolution_ns();
  report.pre_pad_nodes = Histogram{};
  report.pre_pad_edges = Histogram{};
  report.real_graphs = Histogram{};

  // The budget is derived once, before any iteration, so all iterations
  // share one target shape.
  if (cfg.algorithm == Algorithm::kDynamic) {
    GraphStream sample_stream(dataset, cfg.seed);
    report.budget = estimate_padding_budget(sample_stream, cfg.batch_size,
                                            cfg.budget_sample_size);
  } else if (cfg.algorithm == Algorithm::kStaticConstant) {
    report.budget = scan_max_budget(*dataset, cfg.batch_size, cfg.constant_factor);
  }

  for (Count iter = 0; iter < cfg.iterations; ++iter) {
    GraphStream stream(dataset, cfg.seed + static_cast<std::uint64_t>(iter));
    AnyBatcher batcher = make_batcher(cfg, std::move(stream), report.budget);
    ShapeRegistry registry;

    IterationResult result;
    result.iteration = iter;
    result.steps.reserve(static_cast<std::size_t>(cfg.steps));
    std::vector<TimingRecord> records;
    records.reserve(static_cast<std::size_t>(cfg.steps));

    for (Count step = 0; step < cfg.steps; ++step) {
      const auto t0 = Clock::now();
      const PaddedBatch pb = batcher.next();
      const auto t1 = Clock::now();

      const bool is_new = registry.record_step(step, pb.shape);
      const std::int64_t batch_ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
      const std::int64_t update_ns = static_cast<std::int64_t>(
          std::llround(simulate_update_cost(pb.shape, cfg.cost_model, is_new)));

      StepRow row;
      row.step = step;
      row.batch_time_ns = batch_ns;
      row.update_time_ns = update_ns;
      row.combined_time_ns = batch_ns + update_ns;
      row.shape = pb.shape;
      row.real_graphs = pb.batch.num_real_graphs;
      row.new_shape = is_new;
      result.steps.push_back(row);

      records.push_back({step, static_cast<double>(batch_ns),
                         static_cast<double>(update_ns),
                         static_cast<double>(batch_ns + update_ns)});

      report.pre_pad_nodes.add(static_cast<double>(pb.batch.pre_pad_size.nodes));
      report.pre_pad_edges.add(static_cast<double>(pb.batch.pre_pad_size.edges));
      report.real_graphs.add(static_cast<double>(pb.batch.num_real_graphs));
    }

    result.aggregates = aggregate(records);
    result.recompilation_count = registry.recompilation_count();
    result.compile_events = registry.events();
    report.iterations.push_back(std::move(result));
  }
  return report;
}

namespace {

nlohmann::json aggregate_to_json(const SampleAggregate& a) {
  return {{"mean", a.mean},
          {"median", a.median},
          {"std", a.stddev},
          {"degenerate", a.degenerate}};
}

SampleAggregate aggregate_from_json(const nlohmann::json& j) {
  SampleAggregate a;
  a.mean = j.at("mean");
  a.median = j.at("median");
  a.stddev = j.at("std");
  a.degenerate = j.at("degenerate");
  return a;
}

nlohmann::json histogram_to_json(const Histogram& h) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [bin, count] : h.counts)
    counts[std::to_string(bin)] = count;
  return {{"bin_width", h.bin_width},
          {"origin", h.origin},
          {"counts", counts},
          {"total", h.total}};
}

Histogram histogram_from_json(const nlohmann::json& j) {
  Histogram h;
  h.bin_width = j.at("bin_width");
  h.origin = j.at("origin");
  h.total = j.at("total");
  for (const auto& [key, value] : j.at("counts").items())
    h.counts[std::stoll(key)] = value.get<Count>();
  return h;
}

}  // namespace

nlohmann::json report_to_json(const ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  nlohmann::json j;
  j["config"] = {
      {"algorithm", algorithm_name(cfg.algorithm)},
      {"batch_size", cfg.batch_size},
      {"steps", cfg.steps},
      {"iterations", cfg.iterations},
      {"dataset", cfg.dataset_path},
      {"seed", cfg.seed},
      {"budget_sample_size", cfg.budget_sample_size},
      {"cost_model",
       {{"base_cost", cfg.cost_model.base_cost},
        {"node_cost", cfg.cost_model.node_cost},
        {"edge_cost", cfg.cost_model.edge_cost},
        {"compile_penalty", cfg.cost_model.compile_penalty}}},
      {"constant_factor",
       cfg.constant_factor == ConstantFactor::kMinusOne ? "minus-one" : "full"},
  };
  j["clock_resolution_ns"] = report.clock_resolution_ns;
  if (report.budget) {
    j["budget"] = {{"node_target", report.budget->node_target},
                   {"edge_target", report.budget->edge_target},
                   {"graph_target", report.budget->graph_target}};
  } else {
    j["budget"] = nullptr;
  }

  j["iterations"] = nlohmann::json::array();
  for (const IterationResult& it : report.iterations) {
    nlohmann::json events = nlohmann::json::array();
    for (const auto& e : it.compile_events)
      events.push_back({{"step", e.step},
                        {"padded_nodes", e.shape.nodes},
                        {"padded_edges", e.shape.edges},
                        {"num_graphs", e.shape.graphs}});
    j["iterations"].push_back(
        {{"iteration", it.iteration},
         {"recompilation_count", it.recompilation_count},
         {"compile_events", events},
         {"aggregates",
          {{"batch_time_ns", aggregate_to_json(it.aggregates.batch)},
           {"update_time_ns", aggregate_to_json(it.aggregates.update)},
           {"combined_time_ns", aggregate_to_json(it.aggregates.combined)}}}});
  }

  j["histograms"] = {{"pre_pad_nodes", histogram_to_json(report.pre_pad_nodes)},
                     {"pre_pad_edges", histogram_to_json(report.pre_pad_edges)},
                     {"real_graphs", histogram_to_json(report.real_graphs)}};
  return j;
}

ExperimentReport report_from_json(const nlohmann::json& j) {
  ExperimentReport report;
  const nlohmann::json& c = j.at("config");
  report.config.algorithm = parse_algorithm(c.at("algorithm"));
  report.config.batch_size = c.at("batch_size");
  report.config.steps = c.at("steps");
  report.config.iterations = c.at("iterations");
  report.config.dataset_path = c.at("dataset");
  report.config.seed = c.at("seed");
  report.config.budget_sample_size = c.at("budget_sample_size");
  const nlohmann::json& cm = c.at("cost_model");
  report.config.cost_model = {cm.at("base_cost"), cm.at("node_cost"),
                              cm.at("edge_cost"), cm.at("compile_penalty")};
  report.config.constant_factor = c.at("constant_factor") == "full"
                                      ? ConstantFactor::kFull
                                      : ConstantFactor::kMinusOne;
  report.clock_resolution_ns = j.at("clock_resolution_ns");
  if (!j.at("budget").is_null()) {
    const nlohmann::json& b = j.at("budget");
    report.budget = PaddingBudget{b.at("node_target"), b.at("edge_target"),
                                  b.at("graph_target")};
  }
  for (const nlohmann::json& ji : j.at("iterations")) {
    IterationResult it;
    it.iteration = ji.at("iteration");
    it.recompilation_count = ji.at("recompilation_count");
    for (const nlohmann::json& je : ji.at("compile_events"))
      it.compile_events.push_back(
          {je.at("step"),
           ShapeKey{je.at("padded_nodes"), je.at("padded_edges"),
                    je.at("num_graphs")}});
    const nlohmann::json& ja = ji.at("aggregates");
    it.aggregates.batch = aggregate_from_json(ja.at("batch_time_ns"));
    it.aggregates.update = aggregate_from_json(ja.at("update_time_ns"));
    it.aggregates.combined = aggregate_from_json(ja.at("combined_time_ns"));
    report.iterations.push_back(std::move(it));
  }
  const nlohmann::json& h = j.at("histograms");
  report.pre_pad_nodes = histogram_from_json(h.at("pre_pad_nodes"));
  report.pre_pad_edges = histogram_from_json(h.at("pre_pad_edges"));
  report.real_graphs = histogram_from_json(h.at("real_graphs"));
  return report;
}

void write_report(const ExperimentReport& report, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir);

  const std::filesystem::path base(dir);
  {
    std::ofstream out(base / "report.json");
    if (!out) throw IoError("cannot write report.json in " + dir);
    out << report_to_json(report).dump(2) << '\n';
  }
  for (const IterationResult& it : report.iterations) {
    std::ofstream csv(base / ("steps_" + std::to_string(it.iteration) + ".csv"));
    if (!csv) throw IoError("cannot write step CSV in " + dir);
    csv << "step,batch_time_ns,update_time_ns,combined_time_ns,padded_nodes,"
           "padded_edges,num_graphs,real_graphs,new_shape\n";
    for (const StepRow& r : it.steps) {
      csv << r.step << ',' << r.batch_time_ns << ',' << r.update_time_ns << ','
          << r.combined_time_ns << ',' << r.shape.nodes << ',' << r.shape.edges
          << ',' << r.shape.graphs << ',' << r.real_graphs << ','
          << (r.new_shape ? 1 : 0) << '\n';
    }
  }
}

ExperimentReport read_report(const std::string& report_json_path) {
  std::ifstream in(report_json_path);
  if (!in) throw IoError("cannot open " + report_json_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  }
  return report_from_json(j);
}

}  // namespace graphbatch
