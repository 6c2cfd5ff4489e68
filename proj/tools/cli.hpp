// Copyright 2026 The plcroute Authors
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

#ifndef PLCROUTE_TOOLS_CLI_HPP_
#define PLCROUTE_TOOLS_CLI_HPP_

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plcroute/channel.hpp"
#include "plcroute/dlc_analytic.hpp"
#include "plcroute/metrics.hpp"
#include "plcroute/sfn_analytic.hpp"
#include "plcroute/simulator.hpp"
#include "report.hpp"

namespace plcroute::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kValidation = 1, kInternal = 2 };

using json = nlohmann::json;

struct CommonOptions {
  double slot_time = 1.0;
  std::size_t max_level = 4;
  std::uint64_t max_retries = 2;
  std::uint64_t seed = 1;
  std::size_t horizon = 0;  // 0: node count
  unsigned threads = 1;
  std::string format = "text";
  std::string output;
};

/// A channel model in a comparison batch: either a file or a generator spec.
struct ModelSource {
  std::string name;
  std::optional<ChannelSpec> spec;
  std::string path;

  PerMatrix load() const { return spec ? make_channel(*spec) : load_matrix(path); }
};

/// The five stand-in models used by `compare --defaults`.
inline std::vector<ModelSource> default_models() {
  auto ring = [](std::size_t n) {
    ChannelSpec s;
    s.kind = ChannelKind::ring;
    s.node_count = n;
    return s;
  };
  auto area = [](std::size_t n, std::uint64_t seed) {
    ChannelSpec s;
    s.kind = ChannelKind::rand_area;
    s.node_count = n;
    s.rand_area.seed = seed;
    return s;
  };
  return {{"Ring_10", ring(10), {}},
          {"Ring_100", ring(100), {}},
          {"RandArea_20", area(20, 20), {}},
          {"RandArea_100", area(100, 100), {}},
          {"RandArea_200", area(200, 200), {}}};
}

inline json spec_to_json(const ChannelSpec& s) {
  switch (s.kind) {
    case ChannelKind::ring:
      return {{"kind", "ring"},
              {"node_count", s.node_count},
              {"per_adjacent", s.ring.per_adjacent},
              {"per_two_hop", s.ring.per_two_hop}};
    case ChannelKind::rand_area:
      return {{"kind", "rand_area"},
              {"node_count", s.node_count},
              {"d50", s.rand_area.d50},
              {"width", s.rand_area.width},
              {"seed", s.rand_area.seed}};
    case ChannelKind::file:
      return {{"kind", "file"}, {"path", s.file.path}};
  }
  return {};
}

inline json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

inline json dlc_to_json(const dlc::CycleAnalysis& a) {
  json slaves = json::array();
  for (const auto& s : a.slaves) {
    json levels = json::array();
    for (const auto& l : s.per_level) {
      levels.push_back({{"level", l.level},
                        {"repeaters", l.path.repeaters},
                        {"success_prob", l.path.success_prob},
                        {"expected_duration", optional_json(l.expected_duration)}});
    }
    slaves.push_back({{"slave", s.slave},
                      {"best_level", s.best_level},
                      {"repeaters", s.best().path.repeaters},
                      {"success_prob", s.best().path.success_prob},
                      {"expected_duration", optional_json(s.expected_duration)},
                      {"per_level", std::move(levels)}});
  }
  return {{"total", optional_json(a.total())},
          {"partial_total", a.partial_total},
          {"complete", a.complete()},
          {"unreachable", a.unreachable},
          {"slaves", std::move(slaves)}};
}

inline json sfn_to_json(const sfn::CycleAnalysis& a) {
  json slaves = json::array();
  for (const auto& s : a.slaves) {
    json cands = json::array();
    for (const auto& c : s.candidates) {
      cands.push_back({{"r_dl", c.r_dl},
                       {"r_ul", c.r_ul},
                       {"poll_success", c.poll_success},
                       {"expected_duration", optional_json(c.expected_duration)}});
    }
    slaves.push_back({{"slave", s.slave},
                      {"r_dl", s.r_dl},
                      {"r_ul", s.r_ul},
                      {"mean_dl_level", s.mean_dl},
                      {"poll_success", s.poll_success},
                      {"expected_duration", optional_json(s.expected_duration)},
                      {"candidates", std::move(cands)}});
  }
  return {{"total", optional_json(a.total())},
          {"partial_total", a.partial_total},
          {"complete", a.complete()},
          {"unreachable", a.unreachable},
          {"slaves", std::move(slaves)}};
}

inline json sim_to_json(const sim::SimReport& r) {
  json slaves = json::array();
  for (const auto& s : r.per_slave) {
    slaves.push_back({{"slave", s.slave},
                      {"r_dl", s.r_dl},
                      {"r_ul", s.r_ul},
                      {"polls", s.polls},
                      {"attempts", s.attempts},
                      {"successes", s.successes},
                      {"give_ups", s.give_ups},
                      {"slots", s.slots},
                      {"mean_round_trip_slots", s.mean_round_trip_slots()},
                      {"tries_histogram", s.tries_histogram}});
  }
  return {{"protocol", to_string(r.protocol)},
          {"cycles", r.cycles},
          {"max_retries", r.max_retries},
          {"max_level", r.max_level},
          {"slot_time", r.slot_time},
          {"mean_cycle_duration", r.mean_cycle_duration},
          {"reached_count", r.reached_count},
          {"total_slots", r.total_slots},
          {"seed_echo", r.seed_echo},
          {"per_slave", std::move(slaves)}};
}

/// Signed gap between model and measurement, relative to the measurement:
/// negative when the simulation is slower than predicted.
inline double relative_difference(double analytic, double simulated) {
  return (analytic - simulated) / simulated;
}

inline std::size_t horizon_for(const CommonOptions& o, const PerMatrix& per) {
  return o.horizon ? o.horizon : sfn::default_horizon(per);
}

inline json manifest(const std::string& command, const CommonOptions& o, json inputs,
                     json extra = json::object()) {
  json m = {{"tool", "plcroute"},
            {"version", kToolVersion},
            {"command", command},
            {"inputs", std::move(inputs)},
            {"parameters",
             {{"slot_time", o.slot_time},
              {"max_level", o.max_level},
              {"max_retries", o.max_retries},
              {"seed", o.seed},
              {"horizon", o.horizon},
              {"format", o.format}}}};
  for (auto& [k, v] : extra.items()) m["parameters"][k] = v;
  return m;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"PLC routing performance models: DLC1000 source routing vs SFN flooding",
                 "plcroute"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    CommonOptions o;
    auto add_common = [&o](CLI::App* sub) {
      sub->add_option("--slot-time", o.slot_time, "Slot duration T_s")->check(CLI::PositiveNumber);
      sub->add_option("--max-level", o.max_level, "DLC1000 maximum repeater count");
      sub->add_option("--max-retries", o.max_retries, "Retries per poll before giving up");
      sub->add_option("--seed", o.seed, "Seed");
      sub->add_option("--horizon", o.horizon, "SFN level horizon (0: node count)");
      sub->add_option("--threads", o.threads, "Simulation threads")->check(CLI::PositiveNumber);
      sub->add_option("--format", o.format, "Output format")
          ->check(CLI::IsMember({"text", "csv", "json", "json-like"}));
      sub->add_option("-o,--output", o.output, "Output file (default: standard output)");
    };

    // generate
    auto* gen = app.add_subcommand("generate", "Generate a synthetic PER matrix");
    gen->require_subcommand(1);
    std::size_t nodes = 10;
    RingParams ring;
    RandAreaParams area;
    std::string matrix_format;
    std::string gen_out;
    auto add_gen_common = [&](CLI::App* sub) {
      sub->add_option("--nodes", nodes, "Node count including the master")->required();
      sub->add_option("-o,--output", gen_out, "Matrix file (default: standard output)");
      sub->add_option("--matrix-format", matrix_format, "text or json (default: by extension)")
          ->check(CLI::IsMember({"text", "json"}));
    };
    auto* gen_ring = gen->add_subcommand("ring", "Ring topology");
    add_gen_common(gen_ring);
    gen_ring->add_option("--per-adj", ring.per_adjacent, "PER between ring neighbours");
    gen_ring->add_option("--per-2", ring.per_two_hop, "PER two positions apart");
    auto* gen_area = gen->add_subcommand("rand-area", "Random slaves in the unit square");
    add_gen_common(gen_area);
    gen_area->add_option("--d50", area.d50, "Distance with PER 0.5");
    gen_area->add_option("--width", area.width, "Logistic width");
    gen_area->add_option("--seed", area.seed, "Placement seed");

    // analyze
    auto* ana = app.add_subcommand("analyze", "Analytic expected polling-cycle durations");
    add_common(ana);
    std::string protocol = "both";
    std::string matrix_path;
    ana->add_option("--protocol", protocol)->check(CLI::IsMember({"dlc1000", "sfn", "both"}));
    ana->add_option("matrix", matrix_path, "PER matrix file")->required();

    // simulate
    auto* simc = app.add_subcommand("simulate", "Monte-Carlo polling simulation");
    add_common(simc);
    std::string sim_protocol = "sfn";
    std::uint64_t cycles = 1000;
    simc->add_option("--protocol", sim_protocol)->check(CLI::IsMember({"dlc1000", "sfn"}));
    simc->add_option("--cycles", cycles, "Polling cycles")->check(CLI::PositiveNumber);
    simc->add_option("matrix", matrix_path, "PER matrix file")->required();

    // compare
    auto* cmp = app.add_subcommand("compare", "Analytic and simulated comparison tables");
    add_common(cmp);
    std::vector<std::string> matrices;
    bool defaults = false;
    std::uint32_t packet_bytes = metrics::kDefaultPacketBytes;
    std::uint32_t quality_bits = metrics::kDefaultQualityBits;
    cmp->add_option("--cycles", cycles, "Polling cycles per simulation")->check(CLI::PositiveNumber);
    cmp->add_flag("--defaults", defaults, "Use the five built-in channel models");
    cmp->add_option("--packet-bytes", packet_bytes, "Packet size for the overhead table")
        ->check(CLI::PositiveNumber);
    cmp->add_option("--quality-bits", quality_bits, "Bits per reported channel quality");
    cmp->add_option("matrices", matrices, "PER matrix files");

    std::vector<std::string> argv_store{"plcroute"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kValidation;
    }

    try {
      if (gen->parsed()) {
        ChannelSpec spec;
        spec.node_count = nodes;
        if (gen_ring->parsed()) {
          spec.kind = ChannelKind::ring;
          spec.ring = ring;
        } else {
          spec.kind = ChannelKind::rand_area;
          spec.rand_area = area;
        }
        return cmd_generate(spec, gen_out, matrix_format);
      }
      if (ana->parsed()) return cmd_analyze(o, protocol, matrix_path);
      if (simc->parsed()) {
        return cmd_simulate(o, sim_protocol == "sfn" ? Protocol::sfn : Protocol::dlc1000, cycles,
                            matrix_path);
      }
      if (cmp->parsed()) {
        if (matrices.empty() && !defaults) {
          err_ << "compare: no matrix files given (pass files or --defaults)\n";
          return kValidation;
        }
        std::vector<ModelSource> models = defaults ? default_models() : std::vector<ModelSource>{};
        for (const auto& m : matrices) models.push_back({m, std::nullopt, m});
        return cmd_compare(o, models, cycles, packet_bytes, quality_bits);
      }
    } catch (const ValidationError& e) {
      err_ << "error: " << e.what() << '\n';
      return kValidation;
    } catch (const std::exception& e) {
      err_ << "internal error: " << e.what() << '\n';
      return kInternal;
    }
    return kInternal;
  }

 private:
  void emit(const CommonOptions& o, const std::string& text) {
    if (o.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o.output, std::ios::binary | std::ios::trunc);
    if (!f) throw ValidationError("cannot write '" + o.output + "'");
    f << text;
  }

  static bool is_json(const CommonOptions& o) { return o.format == "json" || o.format == "json-like"; }

  static std::string render(const CommonOptions& o, const std::vector<Table>& tables,
                            const json& doc) {
    if (is_json(o)) return doc.dump(2) + '\n';
    std::string s;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (i) s += '\n';
      s += o.format == "csv" ? tables[i].csv() : tables[i].text();
    }
    return s;
  }

  int cmd_generate(const ChannelSpec& spec, const std::string& path, const std::string& fmt) {
    const PerMatrix m = make_channel(spec);
    const MatrixFormat format =
        fmt.empty() ? format_from_path(path) : fmt == "json" ? MatrixFormat::json : MatrixFormat::text;
    if (path.empty()) {
      out_ << (format == MatrixFormat::json ? matrix_to_json(m).dump(1) + "\n" : format_text_matrix(m));
      return kOk;
    }
    save_matrix(m, path, format);
    const json man = {{"tool", "plcroute"},
                      {"version", kToolVersion},
                      {"command", "generate"},
                      {"channel", spec_to_json(spec)},
                      {"output", path}};
    std::ofstream f(path + ".manifest.json", std::ios::binary | std::ios::trunc);
    if (!f) throw ValidationError("cannot write manifest for '" + path + "'");
    f << man.dump(2) << '\n';
    return kOk;
  }

  int cmd_analyze(const CommonOptions& o, const std::string& protocol, const std::string& path) {
    const PerMatrix per = load_matrix(path);
    json doc = {{"manifest", manifest("analyze", o, json::array({path}), {{"protocol", protocol}})},
                {"node_count", per.node_count()}};
    std::vector<Table> tables;
    std::optional<dlc::CycleAnalysis> d;
    std::optional<sfn::CycleAnalysis> f;
    if (protocol != "sfn") {
      d = dlc::cycle_analysis(per, o.max_level, o.slot_time);
      doc["dlc1000"] = dlc_to_json(*d);
      Table t{"DLC1000 per-slave expected duration", {"slave", "repeaters", "success", "duration"}, {}};
      for (const auto& s : d->slaves) {
        std::string reps;
        for (NodeId r : s.best().path.repeaters) reps += (reps.empty() ? "" : "-") + std::to_string(r);
        t.add({std::to_string(s.slave), reps.empty() ? "-" : reps,
               fixed(s.best().path.success_prob, 6), duration_cell(s.expected_duration)});
      }
      tables.push_back(std::move(t));
    }
    if (protocol != "dlc1000") {
      f = sfn::cycle_analysis(per, o.slot_time, horizon_for(o, per));
      doc["sfn"] = sfn_to_json(*f);
      Table t{"SFN per-slave expected duration", {"slave", "r_dl", "r_ul", "success", "duration"}, {}};
      for (const auto& s : f->slaves) {
        t.add({std::to_string(s.slave), std::to_string(s.r_dl), std::to_string(s.r_ul),
               fixed(s.poll_success, 6), duration_cell(s.expected_duration)});
      }
      tables.push_back(std::move(t));
    }
    Table totals{"Average polling-cycle duration", {"protocol", "total", "unreachable slaves"}, {}};
    if (f) {
      totals.add({"SFN", f->complete() ? fixed(f->partial_total) : fixed(f->partial_total) + " (partial)",
                  std::to_string(f->unreachable.size())});
    }
    if (d) {
      totals.add({"DLC1000", d->complete() ? fixed(d->partial_total) : "inf (partial " + fixed(d->partial_total) + ")",
                  std::to_string(d->unreachable.size())});
    }
    tables.push_back(std::move(totals));
    emit(o, render(o, tables, doc));
    return kOk;
  }

  int cmd_simulate(const CommonOptions& o, Protocol protocol, std::uint64_t cycles,
                   const std::string& path) {
    const PerMatrix per = load_matrix(path);
    sim::SimConfig cfg;
    cfg.protocol = protocol;
    cfg.cycles = cycles;
    cfg.max_retries = o.max_retries;
    cfg.max_level = protocol == Protocol::sfn ? horizon_for(o, per) : o.max_level;
    cfg.slot_time = o.slot_time;
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    const auto report = sim::simulate(per, cfg);

    double analytic = 0.0;
    bool complete = true;
    if (protocol == Protocol::dlc1000) {
      const auto a = dlc::cycle_analysis(per, o.max_level, o.slot_time);
      analytic = a.partial_total;
      complete = a.complete();
    } else {
      const auto a = sfn::cycle_analysis(per, o.slot_time, cfg.max_level);
      analytic = a.partial_total;
      complete = a.complete();
    }
    const double rel = relative_difference(analytic, report.mean_cycle_duration);
    json doc = {{"manifest", manifest("simulate", o, json::array({path}),
                                      {{"protocol", to_string(protocol)}, {"cycles", cycles}})},
                {"analytic_total", complete ? json(analytic) : json(nullptr)},
                {"analytic_partial_total", analytic},
                {"relative_difference", complete && report.mean_cycle_duration > 0 ? json(rel) : json(nullptr)},
                {"report", sim_to_json(report)}};

    Table summary{"Analytic and simulation results (" + to_string(protocol) + ")",
                  {"model", "max level", "analytic", "simulation", "reached", "relative difference"},
                  {}};
    summary.add({path, std::to_string(cfg.max_level), complete ? fixed(analytic) : "inf",
                 fixed(report.mean_cycle_duration),
                 std::to_string(report.reached_count) + "/" + std::to_string(per.slave_count()),
                 complete && report.mean_cycle_duration > 0 ? percent(rel) : "-"});
    Table slaves{"Per-slave results",
                 {"slave", "r_dl", "r_ul", "polls", "attempts", "successes", "give-ups", "mean slots"},
                 {}};
    for (const auto& s : report.per_slave) {
      slaves.add({std::to_string(s.slave), std::to_string(s.r_dl),
                  protocol == Protocol::sfn ? std::to_string(s.r_ul) : "-",
                  std::to_string(s.polls), std::to_string(s.attempts),
                  std::to_string(s.successes), std::to_string(s.give_ups),
                  fixed(s.mean_round_trip_slots())});
    }
    emit(o, render(o, {summary, slaves}, doc));
    return kOk;
  }

  int cmd_compare(const CommonOptions& o, const std::vector<ModelSource>& models,
                  std::uint64_t cycles, std::uint32_t packet_bytes, std::uint32_t quality_bits) {
    Table t1{"Table I: analytic and simulation results of DLC1000",
             {"model", "max repeaters", "analytic", "simulation", "reached", "relative difference"}, {}};
    Table t2{"Table II: analytic and simulation results of SFN",
             {"model", "max level", "analytic", "simulation", "reached", "relative difference"}, {}};
    Table t3{"Table III: average duration of SFN and DLC1000", {"model", "SFN", "DLC1000"}, {}};
    Table t4{"Table IV: routing overhead", {"protocol", "routing bits", "routing bits / packet",
                                            "signaling bits / response"}, {}};
    json rows = json::array();
    int status = kOk;

    for (const auto& model : models) {
      json row = {{"model", model.name}};
      if (model.spec) row["channel"] = spec_to_json(*model.spec);
      try {
        const PerMatrix per = model.load();
        const std::size_t horizon = horizon_for(o, per);
        const auto da = dlc::cycle_analysis(per, o.max_level, o.slot_time);
        const auto fa = sfn::cycle_analysis(per, o.slot_time, horizon);
        sim::SimConfig cfg;
        cfg.cycles = cycles;
        cfg.max_retries = o.max_retries;
        cfg.slot_time = o.slot_time;
        cfg.seed = o.seed;
        cfg.threads = o.threads;
        cfg.protocol = Protocol::dlc1000;
        cfg.max_level = o.max_level;
        const auto ds = sim::simulate(per, cfg);
        cfg.protocol = Protocol::sfn;
        cfg.max_level = horizon;
        const auto fs = sim::simulate(per, cfg);

        auto table_row = [&](Table& t, std::size_t level, double analytic, bool complete,
                             const sim::SimReport& r) {
          const bool has_rel = complete && r.mean_cycle_duration > 0;
          t.add({model.name, std::to_string(level),
                 complete ? fixed(analytic, 1) : "inf (partial " + fixed(analytic, 1) + ")",
                 fixed(r.mean_cycle_duration, 2),
                 std::to_string(r.reached_count) + "/" + std::to_string(per.slave_count()),
                 has_rel ? percent(relative_difference(analytic, r.mean_cycle_duration)) : "-"});
          return has_rel ? json(relative_difference(analytic, r.mean_cycle_duration)) : json(nullptr);
        };
        row["node_count"] = per.node_count();
        row["dlc1000"] = {{"analytic_total", optional_json(da.total())},
                          {"analytic_partial_total", da.partial_total},
                          {"unreachable", da.unreachable},
                          {"max_level", o.max_level},
                          {"simulation", sim_to_json(ds)}};
        row["dlc1000"]["relative_difference"] =
            table_row(t1, o.max_level, da.partial_total, da.complete(), ds);
        row["sfn"] = {{"analytic_total", optional_json(fa.total())},
                      {"analytic_partial_total", fa.partial_total},
                      {"unreachable", fa.unreachable},
                      {"horizon", horizon},
                      {"simulation", sim_to_json(fs)}};
        row["sfn"]["relative_difference"] = table_row(t2, horizon, fa.partial_total, fa.complete(), fs);
        t3.add({model.name,
                fa.complete() ? fixed(fa.partial_total, 1) : "inf (partial " + fixed(fa.partial_total, 1) + ")",
                da.complete() ? fixed(da.partial_total, 1) : "inf (partial " + fixed(da.partial_total, 1) + ")"});
        row["signaling_bits_per_cycle"] = {
            {"dlc1000", metrics::signaling_volume(Protocol::dlc1000, per.node_count(),
                                                  metrics::kRepeaterAddressBits, quality_bits)},
            {"sfn", metrics::signaling_volume(Protocol::sfn, per.node_count())}};
        row["status"] = "ok";
      } catch (const ValidationError& e) {
        status = kValidation;
        row["status"] = "failed";
        row["error"] = e.what();
        for (Table* t : {&t1, &t2}) t->add({model.name, "-", "failed", "-", "-", e.what()});
        t3.add({model.name, "failed", "failed"});
      }
      rows.push_back(std::move(row));
    }

    json overhead = json::array();
    for (Protocol p : {Protocol::dlc1000, Protocol::sfn}) {
      const auto r = metrics::routing_overhead(p, packet_bytes, metrics::kRepeaterAddressBits,
                                               quality_bits);
      t4.add({p == Protocol::dlc1000 ? "DLC1000" : "SFN", std::to_string(r.routing_bits_per_packet),
              percent(r.overhead_ratio), std::to_string(r.signaling_bits_per_poll_response)});
      overhead.push_back({{"protocol", to_string(p)},
                          {"routing_bits_per_packet", r.routing_bits_per_packet},
                          {"packet_bits", r.packet_bits},
                          {"overhead_ratio", r.overhead_ratio},
                          {"signaling_bits_per_poll_response", r.signaling_bits_per_poll_response}});
    }
    json inputs = json::array();
    for (const auto& m : models) inputs.push_back(m.spec ? spec_to_json(*m.spec) : json(m.path));
    const json doc = {{"manifest", manifest("compare", o, std::move(inputs),
                                            {{"cycles", cycles},
                                             {"packet_bytes", packet_bytes},
                                             {"quality_bits", quality_bits}})},
                      {"models", std::move(rows)},
                      {"overhead", std::move(overhead)}};
    emit(o, render(o, {t1, t2, t3, t4}, doc));
    return status;
  }

  std::ostream& out_;
  std::ostream& err_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace plcroute::cli

#endif  // PLCROUTE_TOOLS_CLI_HPP_
