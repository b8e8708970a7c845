// Copyright 2026 The petzopt Authors
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

#include "cli/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "cli/sources.hpp"
#include "cli/sweep.hpp"
#include "petzopt/io.hpp"

namespace petzopt::cli {

namespace {

using io::Json;

// Flags shared by the single-point commands.
struct SourceFlags {
  std::string channel;
  std::string generator;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string rho = "fixture";
  std::string sigma = "fixture";
  std::string out;

  ChannelSource source() const {
    ChannelSource s;
    if (!channel.empty()) s.channel_path = channel;
    if (!generator.empty()) s.generator = generator;
    for (const auto& [name, opt] : options) {
      if (opt->count() > 0) s.params[name] = values.at(name);
    }
    return s;
  }
};

void add_generator_params(CLI::App* cmd, SourceFlags& f) {
  for (const auto& name : all_param_names()) {
    f.values[name];
    f.options[name] = cmd->add_option("--" + name, f.values[name], "generator parameter");
  }
}

void add_source_flags(CLI::App* cmd, SourceFlags& f) {
  cmd->add_option("--channel", f.channel, "channel JSON file");
  cmd->add_option("--generator", f.generator, "zoo generator name");
  add_generator_params(cmd, f);
  cmd->add_option("--rho", f.rho, "fixture | maximally-mixed | sqrt-sigma | file:<path>");
  cmd->add_option("--sigma", f.sigma, "fixture | maximally-mixed | file:<path>");
  cmd->add_option("--out", f.out, "write JSON here instead of standard output");
  cmd->add_flag("--json", "JSON output (the default)");
}

struct Inputs {
  ResolvedSource src;
  DensityOperator rho;
  DensityOperator sigma;
};

Inputs load_inputs(const SourceFlags& f) {
  ResolvedSource src = resolve_source(f.source());
  DensityOperator sigma = resolve_sigma(f.sigma, src);
  DensityOperator rho = resolve_rho(f.rho, src, sigma);
  return {std::move(src), std::move(rho), std::move(sigma)};
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text)) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
}

Json expected_json(const std::map<std::string, double>& expected) {
  Json j = Json::object();
  for (const auto& [k, v] : expected) j[k] = v;
  return j;
}

Json optimizer_json(const RecoverySolution& s, OptimizerMethod m) {
  Json j;
  j["method"] = m == OptimizerMethod::Admm ? "admm" : "ascent";
  j["fidelity"] = s.fidelity;
  j["upper_bound"] = s.upper_bound;
  j["iterations"] = s.iterations;
  j["converged"] = s.converged;
  j["monotone"] = s.monotone;
  j["tp_defect"] = s.tp_defect;
  return j;
}

struct OptimizerFlags {
  std::string method = "auto";
  double tol = 1e-10;
  int max_iter = 5000;
  bool require_converged = false;
};

OptimizerOptions make_options(const OptimizerFlags& f, const KrausChannel& ch) {
  OptimizerOptions o;
  o.method = choose_method(f.method, ch.input_dim(), ch.output_dim());
  o.tol = f.tol;
  o.max_iter = f.max_iter;
  return o;
}

int cmd_analyze(const SourceFlags& f, const OptimizerFlags& of, bool optimize, double cert_tol,
                std::ostream& out, std::ostream& err) {
  const Inputs in = load_inputs(f);
  const KrausChannel& ch = in.src.channel;
  Json j;
  j["source"] = in.src.label;
  j["d"] = ch.input_dim();
  j["n"] = ch.output_dim();
  j["n_kraus"] = ch.num_kraus();
  j["tp_defect"] = validate(ch).tp_defect;
  const FidelityReport fr = petz_fidelity_compact(in.rho, in.sigma, ch);
  j["f_petz"] = fr.f_direct;
  j["f_compact"] = fr.f_compact;
  j["f_tc"] = tc_fidelity(qec_matrix(ch));
  j["supports_nested"] = fr.supports_nested;
  if (fr.supports_nested) {
    j["t_norm_sq"] = fr.t_matrix->squaredNorm();
    j["certificate"] = io::certificate_to_json(certify(in.rho, in.sigma, ch, cert_tol));
  } else {
    j["certificate"] = nullptr;
  }
  j["kkt_petz"] = io::kkt_to_json(kkt_certificate(ch, in.rho, in.sigma));
  bool converged = true;
  if (optimize) {
    const OptimizerOptions o = make_options(of, ch);
    const RecoverySolution s = optimize_recovery(ch, in.rho, o);
    converged = s.converged;
    j["f_opt"] = s.fidelity;
    j["gap"] = s.fidelity - fr.f_direct;
    j["optimizer"] = optimizer_json(s, o.method);
  }
  j["expected"] = expected_json(in.src.expected);
  emit(j, f.out, out);
  if (of.require_converged && !converged) {
    err << "error: optimizer did not converge\n";
    return kQualityFailure;
  }
  return kOk;
}

int cmd_certify(const SourceFlags& f, double cert_tol, std::ostream& out) {
  const Inputs in = load_inputs(f);
  emit(io::certificate_to_json(certify(in.rho, in.sigma, in.src.channel, cert_tol)), f.out, out);
  return kOk;
}

int cmd_optimize(const SourceFlags& f, const OptimizerFlags& of, const std::string& init,
                 std::ostream& out, std::ostream& err) {
  const Inputs in = load_inputs(f);
  const KrausChannel& ch = in.src.channel;
  OptimizerOptions o = make_options(of, ch);
  o.petz_reference = in.sigma;
  if (init.rfind("file:", 0) == 0) {
    o.init = io::choi_from_json(io::read_json_file(init.substr(5)), ChoiSide::Recovery);
  } else if (init != "petz") {
    throw Error(ErrorCode::Parse, "--init must be petz or file:<path>");
  }
  const RecoverySolution s = optimize_recovery(ch, in.rho, o);
  Json j = io::solution_to_json(s);
  j["upper_bound"] = s.upper_bound;
  j["kkt"] = io::kkt_to_json(kkt_certificate(ch, in.rho, s.choi));
  emit(j, f.out, out);
  if (of.require_converged && !s.converged) {
    err << "error: optimizer did not converge\n";
    return kQualityFailure;
  }
  return kOk;
}

int cmd_zoo(bool json, std::ostream& out) {
  if (json) {
    Json list = Json::array();
    for (const auto& g : generators()) {
      Json item;
      item["name"] = g.name;
      item["summary"] = g.summary;
      item["provenance"] = g.provenance;
      Json params = Json::array();
      for (const auto& p : g.params) {
        params.push_back({{"name", p.name}, {"default", p.default_value}, {"help", p.help}});
      }
      item["parameters"] = std::move(params);
      list.push_back(std::move(item));
    }
    out << list.dump(2) << "\n";
    return kOk;
  }
  for (const auto& g : generators()) {
    out << g.name << "  " << g.summary << "  [" << g.provenance << "]\n";
    for (const auto& p : g.params) {
      out << "    --" << p.name << " (default " << p.default_value << ")  " << p.help << "\n";
    }
  }
  return kOk;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Petz recovery analysis and optimal-recovery certificates", "petzopt"};
  app.require_subcommand(1);

  SourceFlags analyze_src, certify_src, optimize_src;
  OptimizerFlags analyze_opt, optimize_opt;
  double analyze_cert_tol = kCertTol;
  double certify_tol = kCertTol;
  bool no_optimize = false;
  std::string init = "petz";

  auto* analyze = app.add_subcommand("analyze", "fidelities, certificate and optimizer gap");
  add_source_flags(analyze, analyze_src);
  analyze->add_option("--tol", analyze_cert_tol, "certificate tolerance");
  analyze->add_option("--opt-tol", analyze_opt.tol, "optimizer stopping tolerance");
  analyze->add_option("--max-iter", analyze_opt.max_iter, "optimizer iteration cap");
  analyze->add_option("--method", analyze_opt.method, "auto | ascent | admm");
  analyze->add_flag("--no-optimize", no_optimize, "skip the optimizer");
  analyze->add_flag("--optimize", "run the optimizer (the default)");
  analyze->add_flag("--require-converged", analyze_opt.require_converged,
                    "exit 3 when the optimizer does not converge");

  auto* certify_cmd = app.add_subcommand("certify", "optimality certificate of the Petz map");
  add_source_flags(certify_cmd, certify_src);
  certify_cmd->add_option("--tol", certify_tol, "certificate tolerance");

  auto* optimize = app.add_subcommand("optimize", "numerically optimal recovery");
  add_source_flags(optimize, optimize_src);
  optimize->add_option("--tol", optimize_opt.tol, "optimizer stopping tolerance");
  optimize->add_option("--max-iter", optimize_opt.max_iter, "iteration cap");
  optimize->add_option("--method", optimize_opt.method, "auto | ascent | admm");
  optimize->add_option("--init", init, "petz | file:<recovery Choi JSON>");
  optimize->add_flag("--require-converged", optimize_opt.require_converged,
                     "exit 3 when the optimizer does not converge");

  SweepSpec sweep_spec;
  SourceFlags sweep_src;
  std::string quantities;
  std::string sweep_out;
  int jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "CSV over a one-parameter grid");
  sweep->add_option("--generator", sweep_spec.generator, "zoo generator name")->required();
  add_generator_params(sweep, sweep_src);
  sweep->add_option("--param", sweep_spec.param, "parameter to sweep")->required();
  sweep->add_option("--min", sweep_spec.min, "first grid value")->required();
  sweep->add_option("--max", sweep_spec.max, "last grid value")->required();
  sweep->add_option("--steps", sweep_spec.steps, "number of grid points")->required();
  sweep->add_option("--quantities", quantities, "comma-separated quantity names")->required();
  sweep->add_option("--out", sweep_out, "CSV path")->required();
  sweep->add_option("--jobs", jobs, "worker threads");
  sweep->add_option("--rho", sweep_spec.rho_spec, "state spec for rho");
  sweep->add_option("--sigma", sweep_spec.sigma_spec, "state spec for sigma");
  sweep->add_option("--method", sweep_spec.eval.method, "auto | ascent | admm");
  sweep->add_option("--tol", sweep_spec.eval.tol, "optimizer stopping tolerance");
  sweep->add_option("--max-iter", sweep_spec.eval.max_iter, "optimizer iteration cap");

  bool zoo_json = false;
  auto* zoo = app.add_subcommand("zoo", "list generators and their parameters");
  zoo->add_flag("--json", zoo_json, "machine-readable listing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Prints the help of the subcommand that was asked, or the error.
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) {
      return cmd_analyze(analyze_src, analyze_opt, !no_optimize, analyze_cert_tol, out, err);
    }
    if (*certify_cmd) return cmd_certify(certify_src, certify_tol, out);
    if (*optimize) return cmd_optimize(optimize_src, optimize_opt, init, out, err);
    if (*zoo) return cmd_zoo(zoo_json, out);
    if (*sweep) {
      sweep_spec.fixed = sweep_src.source().params;
      sweep_spec.quantities = split_list(quantities);
      if (jobs < 1) throw Error(ErrorCode::Parse, "--jobs must be at least 1");
      const SweepOutcome o = run_sweep(sweep_spec, sweep_out, jobs, err);
      err << "sweep: " << o.points << " points, " << o.failures << " failed\n";
      if (10 * (o.points - o.failures) < 9 * o.points) {
        err << "error: fewer than 90% of grid points succeeded; output removed\n";
        return kQualityFailure;
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace petzopt::cli
