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

#include "cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include "petzopt/petz.hpp"

namespace petzopt::cli {

const std::vector<std::string>& quantity_names() {
  static const std::vector<std::string> names = {
      "b_min_eig", "commutator_general", "commutator_pgm", "f_opt",
      "f_petz",    "f_tc",               "gap",            "kl_residual"};
  return names;
}

OptimizerMethod choose_method(const std::string& name, Index d, Index n) {
  if (name == "ascent") return OptimizerMethod::ProjectedAscent;
  if (name == "admm") return OptimizerMethod::Admm;
  if (name == "auto") {
    return d * n > 64 ? OptimizerMethod::Admm : OptimizerMethod::ProjectedAscent;
  }
  throw Error(ErrorCode::Parse, "--method must be auto, ascent or admm");
}

std::map<std::string, double> evaluate(const KrausChannel& ch, const DensityOperator& rho,
                                       const DensityOperator& sigma,
                                       const std::set<std::string>& wanted,
                                       const EvalOptions& opts) {
  std::map<std::string, double> out;
  auto want = [&](const char* q) { return wanted.count(q) > 0; };
  std::optional<double> f_petz;
  if (want("f_petz") || want("gap")) {
    f_petz = composed_fidelity(rho, petz_map(ch, sigma), ch);
    if (want("f_petz")) out["f_petz"] = *f_petz;
  }
  if (want("f_tc")) out["f_tc"] = tc_fidelity(qec_matrix(ch));
  if (want("f_opt") || want("gap")) {
    OptimizerOptions o;
    o.method = choose_method(opts.method, ch.input_dim(), ch.output_dim());
    o.tol = opts.tol;
    o.max_iter = opts.max_iter;
    const RecoverySolution s = optimize_recovery(ch, rho, o);
    if (!s.converged) throw Error(ErrorCode::NotConverged, "optimizer did not converge");
    if (want("f_opt")) out["f_opt"] = s.fidelity;
    if (want("gap")) out["gap"] = s.fidelity - *f_petz;
  }
  if (want("b_min_eig") || want("commutator_general") || want("commutator_pgm") ||
      want("kl_residual")) {
    const OptimalityCertificate c = certify(rho, sigma, ch);
    if (want("b_min_eig")) out["b_min_eig"] = c.b_min_eig;
    if (want("commutator_general")) out["commutator_general"] = c.commutator_general;
    if (want("commutator_pgm")) out["commutator_pgm"] = c.commutator_pgm;
    if (want("kl_residual")) out["kl_residual"] = c.kl_residual;
  }
  return out;
}

void validate_sweep(const SweepSpec& spec) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::Parse, what); };
  const GeneratorSpec* g = find_generator(spec.generator);
  if (!g) bad("unknown generator '" + spec.generator + "'");
  const auto it = std::find_if(g->params.begin(), g->params.end(),
                               [&](const ParamSpec& p) { return p.name == spec.param; });
  if (it == g->params.end()) bad("generator '" + spec.generator + "' has no parameter " + spec.param);
  if (!it->numeric) bad("parameter " + spec.param + " is not numeric");
  if (spec.fixed.count(spec.param)) bad("the swept parameter cannot also be fixed");
  if (spec.steps < 2) bad("--steps must be at least 2");
  if (!(spec.min < spec.max)) bad("--min must be below --max");
  if (spec.quantities.empty()) bad("--quantities must name at least one quantity");
  const auto& known = quantity_names();
  for (const auto& q : spec.quantities) {
    if (std::find(known.begin(), known.end(), q) == known.end()) {
      bad("unknown quantity '" + q + "'");
    }
  }
  choose_method(spec.eval.method, 1, 1);
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  std::vector<double> grid(spec.steps);
  const double span = spec.max - spec.min;
  for (int i = 0; i < spec.steps; ++i) {
    grid[i] = spec.min + span * static_cast<double>(i) / static_cast<double>(spec.steps - 1);
  }
  grid.back() = spec.max;
  return grid;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

SweepOutcome run_sweep(const SweepSpec& spec, const std::string& out_path, int jobs,
                       std::ostream& err) {
  validate_sweep(spec);
  const std::vector<double> grid = sweep_grid(spec);
  const std::set<std::string> wanted(spec.quantities.begin(), spec.quantities.end());
  std::vector<std::optional<std::map<std::string, double>>> rows(grid.size());
  std::vector<std::string> errors(grid.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        ParamValues params = spec.fixed;
        params[spec.param] = format_double(grid[i]);
        const ResolvedSource src = resolve_source({std::nullopt, spec.generator, params});
        const DensityOperator sigma = resolve_sigma(spec.sigma_spec, src);
        const DensityOperator rho = resolve_rho(spec.rho_spec, src, sigma);
        rows[i] = evaluate(src.channel, rho, sigma, wanted, spec.eval);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const int workers = std::clamp(jobs, 1, static_cast<int>(grid.size()));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepOutcome outcome;
  outcome.points = static_cast<int>(grid.size());
  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Parse, "cannot write '" + tmp + "'");
    out << spec.param;
    for (const auto& q : spec.quantities) out << ',' << q;
    out << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
      out << format_double(grid[i]);
      for (const auto& q : spec.quantities) {
        out << ',';
        if (rows[i]) out << format_double(rows[i]->at(q));
      }
      out << '\n';
      if (!rows[i]) {
        ++outcome.failures;
        err << "warning: " << spec.param << "=" << format_double(grid[i]) << " failed: "
            << errors[i] << '\n';
      }
    }
    if (!out.flush()) {
      std::filesystem::remove(tmp);
      throw Error(ErrorCode::Parse, "failed writing '" + tmp + "'");
    }
  }
  // Fewer than 90% successful points discards the output.
  if (10 * (outcome.points - outcome.failures) < 9 * outcome.points) {
    std::filesystem::remove(tmp);
    return outcome;
  }
  std::filesystem::rename(tmp, out_path);
  return outcome;
}

}  // namespace petzopt::cli
