#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hfsc/bench.hpp"
#include "hfsc/construction.hpp"
#include "hfsc/generator.hpp"
#include "hfsc/io.hpp"
#include "hfsc/model.hpp"
#include "hfsc/solver.hpp"
#include "hfsc/svg.hpp"

namespace hfsc::cli {

enum ExitCode : int {
  kOk = 0,
  kBadArguments = 1,
  kValidationFailed = 2,
  kSolverStall = 3,
};

inline constexpr const char* kCasesFile = "cases.csv";

// "G1,G3" or "all".
inline std::vector<std::string> parse_group_list(const std::string& list) {
  std::vector<std::string> out;
  if (list == "all") {
    for (const auto& g : standard_groups()) out.push_back(g.name);
    return out;
  }
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") return parse_group_list("all");
    if (!find_group(item)) throw CLI::ValidationError("--groups", "unknown group '" + item + "'");
    out.push_back(item);
  }
  if (out.empty()) throw CLI::ValidationError("--groups", "no groups given");
  return out;
}

inline SolveConfig config_for(double time_limit) {
  SolveConfig cfg;
  if (time_limit == 0.0) {
    cfg.time_limit.reset();
  } else {
    cfg.time_limit = time_limit;
  }
  return cfg;
}

inline std::string metrics_line(const SolveResult& result) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "k=%zu mean_ur=%s tc=%.3f", result.plan.k, fixed2(result.plan.mean_ur * 100.0).c_str(),
                result.elapsed);
  return buf;
}

inline void print_report(const ValidationReport& report, std::ostream& os) {
  for (const auto& v : report.violations) os << describe(v) << "\n";
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Lay planner for fabric spreading and cutting"};
  app.name("hfsc");
  app.require_subcommand(1, 1);

  std::string group = "all";
  std::size_t cases = 50;
  std::uint64_t seed = kDefaultSeed;
  std::filesystem::path out_dir;
  auto* generate = app.add_subcommand("generate", "Write benchmark instance files");
  generate->add_option("--group", group, "G1..G10 or all")->capture_default_str();
  generate->add_option("--cases", cases, "Cases per group")->check(CLI::PositiveNumber)->capture_default_str();
  generate->add_option("--seed", seed, "Generator seed")->capture_default_str();
  generate->add_option("--out", out_dir, "Output directory")->required();

  std::filesystem::path instance_path;
  std::filesystem::path plan_path;
  double time_limit = 1200.0;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("instance", instance_path, "Instance JSON")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--time-limit", time_limit, "Seconds; 0 = unlimited")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  solve_cmd->add_option("--out", plan_path, "Plan JSON to write");

  auto* validate_cmd = app.add_subcommand("validate", "Check a plan against an instance");
  validate_cmd->add_option("instance", instance_path, "Instance JSON")->required()->check(CLI::ExistingFile);
  validate_cmd->add_option("plan", plan_path, "Plan JSON")->required()->check(CLI::ExistingFile);

  std::string groups = "all";
  unsigned jobs = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Generate, solve and report benchmark groups");
  bench_cmd->add_option("--groups", groups, "Comma-separated groups or all")->capture_default_str();
  bench_cmd->add_option("--cases", cases, "Cases per group")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();
  bench_cmd->add_option("--time-limit", time_limit, "Seconds per case; 0 = unlimited")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--out", out_dir, "Report directory")->required();

  std::filesystem::path svg_path;
  auto* render_cmd = app.add_subcommand("render", "Draw a plan as SVG");
  render_cmd->add_option("plan", plan_path, "Plan JSON")->required()->check(CLI::ExistingFile);
  render_cmd->add_option("instance", instance_path, "Instance JSON")->required()->check(CLI::ExistingFile);
  render_cmd->add_option("--out", svg_path, "SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kBadArguments;
  }

  auto load_valid_instance = [&](Instance& inst) {
    inst = load_instance(instance_path);
    const ValidationReport report = validate_instance(inst);
    if (!report.valid()) {
      err << "invalid instance " << instance_path.string() << ":\n";
      print_report(report, err);
      return false;
    }
    return true;
  };

  try {
    if (*generate) {
      const std::vector<std::string> names = parse_group_list(group);
      std::filesystem::create_directories(out_dir);
      for (const Instance& inst : generate_suite(names, cases, seed)) {
        save_instance(inst, out_dir / (inst.name + ".json"));
        out << (out_dir / (inst.name + ".json")).string() << "\n";
      }
      return kOk;
    }

    if (*solve_cmd) {
      Instance inst;
      if (!load_valid_instance(inst)) return kValidationFailed;
      const SolveResult result = solve(inst, config_for(time_limit));
      if (!plan_path.empty()) save_plan(result.plan, plan_path);
      out << metrics_line(result) << "\n";
      return kOk;
    }

    if (*validate_cmd) {
      Instance inst;
      if (!load_valid_instance(inst)) return kValidationFailed;
      const CuttingPlan plan = load_plan(plan_path);
      const ValidationReport report = validate_plan(plan, inst);
      if (report.valid()) {
        out << "valid k=" << plan.lays.size() << "\n";
        return kOk;
      }
      print_report(report, out);
      return kValidationFailed;
    }

    if (*bench_cmd) {
      const std::vector<std::string> names = parse_group_list(groups);
      std::filesystem::create_directories(out_dir);
      const std::vector<CaseResult> results = run_benchmark(names, cases, seed, config_for(time_limit), jobs);
      const std::vector<GroupSummary> summaries = summarize(results);
      const auto cases_path = out_dir / kCasesFile;
      write_report(summaries, results, cases_path);
      out << summary_csv(summaries);
      return kOk;
    }

    if (*render_cmd) {
      Instance inst;
      if (!load_valid_instance(inst)) return kValidationFailed;
      const CuttingPlan plan = load_plan(plan_path);
      const ValidationReport report = validate_plan(plan, inst);
      if (!report.valid()) {
        err << "plan does not match instance:\n";
        print_report(report, err);
        return kValidationFailed;
      }
      detail::write_file(svg_path, render_svg(plan, inst));
      return kOk;
    }
  } catch (const StallError& e) {
    err << "solver stalled: " << e.what() << "\n";
    return kSolverStall;
  } catch (const FormatError& e) {
    err << "bad input file: " << e.what() << "\n";
    return kValidationFailed;
  } catch (const BenchmarkError& e) {
    err << e.what() << "\n";
    return kValidationFailed;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kBadArguments;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadArguments;
  }
  return kBadArguments;
}

}  // namespace hfsc::cli
