// Command-line front end: solve, oracle, compare, lobe-bench, gen-net,
// gen-traffic, simulate. Documents go to stdout, diagnostics to stderr.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ddpp/ddpp.hpp"

namespace {

using ddpp::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBlocked = 3;

struct ModelFlags {
  std::vector<std::string> cost_model{"additive"};
  std::optional<ddpp::Cost> max_route_cost;

  void attach(CLI::App* cmd) {
    cmd->add_option("--cost-model", cost_model,
                    "additive | modulation FILE")
        ->expected(1, 2);
    cmd->add_option("--max-route-cost", max_route_cost,
                    "per-route cost limit (base relation only)");
  }

  ddpp::CostModel model() const {
    if (cost_model.size() == 1 && cost_model[0] == "additive") {
      return ddpp::CostModel::additive();
    }
    if (cost_model.size() == 2 && cost_model[0] == "modulation") {
      return ddpp::io::cost_model_from_json(
          ddpp::io::parse(ddpp::io::read_file(cost_model[1]), cost_model[1]));
    }
    throw ddpp::InputError("--cost-model expects 'additive' or 'modulation FILE'");
  }
};

std::uint64_t oracle_budget() {
  if (const char* env = std::getenv("DDPP_ORACLE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ddpp::InputError("DDPP_ORACLE_BUDGET must be a non-negative integer");
    }
  }
  return ddpp::kDefaultOracleBudget;
}

ddpp::Network read_network(const std::string& path) {
  return ddpp::io::load_network(ddpp::io::read_file(path));
}

ddpp::Demand read_demand(const std::string& path) {
  return ddpp::io::demand_from_json(ddpp::io::parse(ddpp::io::read_file(path), path));
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

struct CompareSummary {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::size_t blocked = 0;
  std::optional<json> first_bundle;
};

CompareSummary compare_many(const std::vector<ddpp::Instance>& corpus,
                            const ddpp::SearchOptions& opts,
                            std::uint64_t budget, unsigned jobs) {
  std::vector<std::optional<ddpp::CompareReport>> reports(corpus.size());
  std::vector<std::string> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < corpus.size(); i = next++) {
      try {
        reports[i] = ddpp::compare(corpus[i].net, corpus[i].demand, opts, budget);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::max(1U, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  CompareSummary sum;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!errors[i].empty()) {
      throw ddpp::InputError("instance " + std::to_string(i) + ": " + errors[i]);
    }
    ++sum.instances;
    if (!reports[i]->oracle.routed) ++sum.blocked;
    if (!reports[i]->agree) {
      ++sum.mismatches;
      std::cerr << "mismatch on instance " << i << '\n';
      if (!sum.first_bundle) {
        sum.first_bundle = ddpp::counterexample_bundle(corpus[i].net, corpus[i].demand,
                                                       opts, *reports[i]);
      }
    }
  }
  return sum;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dedicated path protection solver for elastic optical networks"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "route a protected demand");
  std::string net_path, demand_path, relation = "prime";
  bool all_efficient = false;
  ModelFlags solve_flags;
  solve_cmd->add_option("--net", net_path, "network document")->required();
  solve_cmd->add_option("--demand", demand_path, "demand document")->required();
  solve_cmd->add_option("--relation", relation, "base | prime")
      ->check(CLI::IsMember({"base", "prime"}));
  solve_cmd->add_flag("--all-efficient", all_efficient,
                      "keep settling after the first destination label");
  solve_flags.attach(solve_cmd);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference minimum");
  ModelFlags oracle_flags;
  oracle_cmd->add_option("--net", net_path, "network document")->required();
  oracle_cmd->add_option("--demand", demand_path, "demand document")->required();
  oracle_flags.attach(oracle_cmd);

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "search versus oracle");
  ModelFlags compare_flags;
  std::size_t random_count = 0;
  std::uint64_t seed = 1;
  std::string bundle_path;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  compare_cmd->add_option("--net", net_path, "network document");
  compare_cmd->add_option("--demand", demand_path, "demand document");
  compare_cmd->add_option("--random", random_count, "size of a seeded random corpus");
  compare_cmd->add_option("--seed", seed, "corpus seed");
  compare_cmd->add_option("--bundle", bundle_path,
                          "where to write the first counterexample bundle");
  compare_cmd->add_option("--jobs", jobs, "worker threads");
  compare_flags.attach(compare_cmd);

  // lobe-bench
  auto* bench_cmd = app.add_subcommand("lobe-bench", "label growth on lobe networks (CSV)");
  int m_max = 8;
  ddpp::Unit bench_units = 1;
  std::string bench_relation = "base";
  bench_cmd->add_option("--m-max", m_max, "largest lobe size")->check(CLI::Range(1, 40));
  bench_cmd->add_option("--relation", bench_relation, "base | prime")
      ->check(CLI::IsMember({"base", "prime"}));
  bench_cmd->add_option("--units", bench_units, "units per link")->check(CLI::PositiveNumber);

  // gen-net
  auto* gen_net_cmd = app.add_subcommand("gen-net", "generate a network document");
  std::optional<int> lobe_m;
  std::optional<std::size_t> random_nodes;
  double avg_degree = 3.0, fill = 1.0;
  ddpp::Unit units = 8;
  gen_net_cmd->add_option("--lobe", lobe_m, "lobe network of size m");
  gen_net_cmd->add_option("--random", random_nodes, "random network with this many nodes");
  gen_net_cmd->add_option("--avg-degree", avg_degree, "target average degree");
  gen_net_cmd->add_option("--units", units, "units per link");
  gen_net_cmd->add_option("--fill", fill, "probability a unit is free");
  gen_net_cmd->add_option("--seed", seed, "generator seed");

  // gen-traffic
  auto* gen_traffic_cmd = app.add_subcommand("gen-traffic", "generate a traffic document");
  ddpp::TrafficParams tp;
  gen_traffic_cmd->add_option("--net", net_path, "network document")->required();
  gen_traffic_cmd->add_option("--count", tp.count, "number of demands")->required();
  gen_traffic_cmd->add_option("--mean-hold", tp.mean_hold, "mean holding time");
  gen_traffic_cmd->add_option("--mean-gap", tp.mean_gap, "mean inter-arrival gap");
  gen_traffic_cmd->add_option("--units-min", tp.units_min, "smallest demand");
  gen_traffic_cmd->add_option("--units-max", tp.units_max, "largest demand");
  gen_traffic_cmd->add_option("--seed", tp.seed, "generator seed");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "replay a traffic document");
  std::string traffic_path;
  ModelFlags sim_flags;
  sim_cmd->add_option("--net", net_path, "network document")->required();
  sim_cmd->add_option("--traffic", traffic_path, "traffic document")->required();
  sim_cmd->add_option("--relation", relation, "base | prime")
      ->check(CLI::IsMember({"base", "prime"}));
  sim_flags.attach(sim_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (solve_cmd->parsed()) {
      ddpp::SearchOptions opts;
      opts.mode = ddpp::parse_relation(relation);
      opts.max_route_cost = solve_flags.max_route_cost;
      opts.cost_model = solve_flags.model();
      opts.enumerate_all = all_efficient;
      ddpp::validate(opts);
      const auto net = read_network(net_path);
      const auto sol = ddpp::solve(net, read_demand(demand_path), opts);
      emit(ddpp::io::to_json(sol));
      return sol.status == ddpp::Status::routed ? kExitOk : kExitBlocked;
    }

    if (oracle_cmd->parsed()) {
      const auto net = read_network(net_path);
      const auto res = ddpp::oracle_solve(net, read_demand(demand_path),
                                          oracle_flags.max_route_cost,
                                          oracle_flags.model(), oracle_budget());
      emit(ddpp::io::to_json(res));
      return res.routed ? kExitOk : kExitBlocked;
    }

    if (compare_cmd->parsed()) {
      ddpp::SearchOptions opts;
      opts.max_route_cost = compare_flags.max_route_cost;
      opts.cost_model = compare_flags.model();
      std::vector<ddpp::Instance> corpus;
      if (random_count > 0) {
        if (!net_path.empty() || !demand_path.empty()) {
          throw ddpp::InputError("--random excludes --net/--demand");
        }
        corpus = ddpp::make_corpus(random_count, seed);
      } else {
        if (net_path.empty() || demand_path.empty()) {
          throw ddpp::InputError("compare needs --net and --demand, or --random N");
        }
        corpus.push_back({read_network(net_path), read_demand(demand_path)});
      }
      const auto sum = compare_many(corpus, opts, oracle_budget(), jobs);
      json doc{{"instances", sum.instances},
               {"blocked", sum.blocked},
               {"mismatches", sum.mismatches}};
      if (sum.first_bundle) {
        if (!bundle_path.empty()) {
          std::ofstream(bundle_path) << sum.first_bundle->dump(2) << '\n';
          doc["bundle"] = bundle_path;
        } else {
          doc["counterexample"] = *sum.first_bundle;
        }
      }
      emit(doc);
      return sum.mismatches == 0 ? kExitOk : kExitMismatch;
    }

    if (bench_cmd->parsed()) {
      ddpp::SearchOptions opts;
      opts.mode = ddpp::parse_relation(bench_relation);
      opts.enumerate_all = true;
      std::cout << "m,labels_at_destination,labels_generated,wall_time\n";
      for (int m = 1; m <= m_max; ++m) {
        const auto net = ddpp::lobe_network(m, bench_units);
        const auto sol = ddpp::solve(net, {"n_s", "n_x", 1}, opts);
        std::cout << m << ',' << sol.stats.labels_at_destination << ','
                  << sol.stats.labels_generated << ','
                  << std::chrono::duration<double>(sol.stats.wall_time).count() << '\n'
                  << std::flush;
      }
      return kExitOk;
    }

    if (gen_net_cmd->parsed()) {
      if (lobe_m.has_value() == random_nodes.has_value()) {
        throw ddpp::InputError("gen-net needs exactly one of --lobe M or --random N");
      }
      if (lobe_m) {
        emit(ddpp::io::to_json(ddpp::lobe_network(*lobe_m, units)));
      } else {
        emit(ddpp::io::to_json(
            ddpp::random_network({*random_nodes, avg_degree, units, fill, seed})));
      }
      return kExitOk;
    }

    if (gen_traffic_cmd->parsed()) {
      const auto net = read_network(net_path);
      emit(ddpp::io::to_json(ddpp::gen_traffic(net, tp)));
      return kExitOk;
    }

    if (sim_cmd->parsed()) {
      ddpp::SearchOptions opts;
      opts.mode = ddpp::parse_relation(relation);
      opts.max_route_cost = sim_flags.max_route_cost;
      opts.cost_model = sim_flags.model();
      const auto net = read_network(net_path);
      const auto events = ddpp::io::traffic_from_json(
          ddpp::io::parse(ddpp::io::read_file(traffic_path), traffic_path));
      emit(ddpp::io::to_json(ddpp::run(net, events, opts)));
      return kExitOk;
    }
  } catch (const ddpp::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ddpp::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
