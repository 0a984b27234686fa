// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "qcorr/serialize.hpp"

namespace qcorr::cli {

namespace {

struct CommonOptions {
  std::uint64_t seed = 20260810;
  int restarts = 20;
  bool restarts_given = false;
  double tol = -1.0;  // command-specific decision tolerance; <0 means default
  std::string out_path;
  std::string format = "json";
  bool serial = false;
};

void add_common(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--seed", opts->seed, "Random seed (echoed in metadata)")
      ->capture_default_str();
  cmd->add_option("--restarts", opts->restarts, "Optimizer restarts")
      ->capture_default_str()
      ->check(CLI::PositiveNumber)
      ->each([opts](const std::string&) { opts->restarts_given = true; });
  cmd->add_option("--tol", opts->tol,
                  "Decision tolerance override (classify-channel, check-cc)");
  cmd->add_option("--out", opts->out_path, "Write the report to this file");
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  cmd->add_flag("--serial", opts->serial,
                "Run restarts and trials on the serial reference path");
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::ParseError, "cannot open input file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                "malformed JSON in " + path + ": " + e.what());
  }
}

Json metadata(const CommonOptions& opts, bool with_optimizer) {
  const Tolerances tol;
  Json meta;
  meta["seed"] = opts.seed;
  if (with_optimizer) meta["restarts"] = opts.restarts;
  Json tols;
  tols["herm"] = json_number(tol.herm);
  tols["trace"] = json_number(tol.trace);
  tols["psd"] = json_number(tol.psd);
  tols["spec"] = json_number(tol.spec);
  tols["supp"] = json_number(tol.supp);
  tols["norm"] = json_number(tol.norm);
  tols["classify"] = json_number(opts.tol > 0 ? opts.tol : kClassifyTol);
  tols["cc"] = json_number(opts.tol > 0 ? opts.tol : kCcTol);
  meta["tolerances"] = std::move(tols);
  return meta;
}

void emit(const CommonOptions& opts, const std::string& command,
          const Json& meta, const Json& result, std::ostream& out) {
  Json envelope;
  envelope["command"] = command;
  envelope["metadata"] = meta;
  envelope["result"] = result;
  std::string text;
  if (opts.format == "table")
    text = to_table(envelope);
  else
    text = envelope.dump(2) + "\n";
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path);
    if (!file)
      throw Error(ErrorKind::ParseError,
                  "cannot open output file: " + opts.out_path);
    file << text;
  } else {
    out << text;
  }
}

OptimizerConfig optimizer_config(const CommonOptions& opts) {
  OptimizerConfig cfg;
  cfg.restarts = opts.restarts;
  cfg.seed = opts.seed;
  cfg.exec = opts.serial ? Exec::Serial : Exec::Parallel;
  return cfg;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite-dimensional quantum correlations toolkit: classify "
               "local noisy channels, detect classically correlated states, "
               "and compute distance-based quantumness measures."};
  app.require_subcommand(1);

  CommonOptions opts;

  std::string channel_path, state_path, case_name, suite_name;
  std::string measure_kind = "geometric";
  int target = 0;
  int trials = 50;

  CLI::App* classify_cmd = app.add_subcommand(
      "classify-channel", "Classify a channel (unital / semi-classical)");
  classify_cmd->add_option("channel", channel_path, "Channel JSON file")
      ->required();
  add_common(classify_cmd, &opts);

  CLI::App* apply_cmd = app.add_subcommand(
      "apply", "Apply a channel to one subsystem of a state");
  apply_cmd->add_option("--channel", channel_path, "Channel JSON file")
      ->required();
  apply_cmd->add_option("--state", state_path, "State JSON file")->required();
  apply_cmd->add_option("--target", target, "Target subsystem index")
      ->capture_default_str();
  add_common(apply_cmd, &opts);

  CLI::App* cc_cmd = app.add_subcommand(
      "check-cc", "Decide whether a bipartite state is classically correlated");
  cc_cmd->add_option("state", state_path, "State JSON file")->required();
  add_common(cc_cmd, &opts);

  CLI::App* measure_cmd = app.add_subcommand(
      "measure", "Compute a quantumness measure by basis optimization");
  measure_cmd->add_option("--kind", measure_kind, "Measure kind")
      ->check(CLI::IsMember({"geometric", "relent"}))
      ->capture_default_str();
  measure_cmd->add_option("state", state_path, "State JSON file")->required();
  add_common(measure_cmd, &opts);

  CLI::App* repro_cmd = app.add_subcommand(
      "repro", "Run a worked-example reproduction case");
  repro_cmd
      ->add_option("case", case_name,
                   "intro-example | qutrit-phase-damping | construct-qc")
      ->required();
  repro_cmd->add_option("--channel", channel_path,
                        "Channel JSON file (construct-qc only)");
  add_common(repro_cmd, &opts);

  CLI::App* suite_cmd =
      app.add_subcommand("suite", "Run a randomized theorem suite");
  suite_cmd
      ->add_option("which", suite_name,
                   "t1-qubit-exhaustive | t2-unital | t2-semiclassical | "
                   "t3-pure")
      ->required();
  suite_cmd->add_option("--trials", trials, "Number of trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(suite_cmd, &opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(classify_cmd)) {
      const KrausChannel ch = channel_from_json(load_json(channel_path));
      const double tol = opts.tol > 0 ? opts.tol : kClassifyTol;
      emit(opts, "classify-channel", metadata(opts, false),
           to_json(classify(ch, tol)), out);
      return 0;
    }
    if (app.got_subcommand(apply_cmd)) {
      const KrausChannel ch = channel_from_json(load_json(channel_path));
      const DensityMatrix rho = density_from_json(load_json(state_path));
      emit(opts, "apply", metadata(opts, false),
           to_json(apply_local(ch, rho, target)), out);
      return 0;
    }
    if (app.got_subcommand(cc_cmd)) {
      const DensityMatrix rho = density_from_json(load_json(state_path));
      const double tol = opts.tol > 0 ? opts.tol : kCcTol;
      const auto verdict =
          is_classically_correlated(rho, optimizer_config(opts), tol);
      emit(opts, "check-cc", metadata(opts, true), to_json(verdict), out);
      return 0;
    }
    if (app.got_subcommand(measure_cmd)) {
      const DensityMatrix rho = density_from_json(load_json(state_path));
      const MeasureKind kind = measure_kind == "relent"
                                   ? MeasureKind::RelativeEntropy
                                   : MeasureKind::Geometric;
      const auto result = quantumness(kind, rho, optimizer_config(opts));
      emit(opts, "measure", metadata(opts, true), to_json(result), out);
      return 0;
    }
    if (app.got_subcommand(repro_cmd)) {
      ReproReport report;
      if (case_name == "intro-example") {
        report = repro_intro_example();
      } else if (case_name == "qutrit-phase-damping") {
        report = repro_qutrit_phase_damping();
      } else if (case_name == "construct-qc") {
        const KrausChannel ch =
            channel_path.empty() ? measure_prepare_example()
                                 : channel_from_json(load_json(channel_path));
        report = construct_qc_input(ch).second;
      } else {
        throw Error(ErrorKind::BadParameter,
                    "unknown repro case: " + case_name);
      }
      emit(opts, "repro", metadata(opts, false), to_json(report), out);
      return report.pass() ? 0 : 1;
    }
    if (app.got_subcommand(suite_cmd)) {
      SuiteOptions so;
      so.trials = trials;
      so.seed = opts.seed;
      so.exec = opts.serial ? Exec::Serial : Exec::Parallel;
      if (opts.restarts_given) so.opt.restarts = opts.restarts;
      so.opt.seed = opts.seed;
      const ReproReport report = theorem_suite(parse_suite_name(suite_name), so);
      emit(opts, "suite", metadata(opts, true), to_json(report), out);
      return report.pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    Json payload;
    payload["error"] = error_kind_name(e.kind());
    payload["message"] = e.what();
    if (!std::isnan(e.defect())) payload["defect"] = json_number(e.defect());
    err << payload.dump(2) << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("qcorr");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qcorr::cli
