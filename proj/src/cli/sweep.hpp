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

#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cli/sources.hpp"
#include "petzopt/optimal.hpp"

namespace petzopt::cli {

/// Quantity names understood by evaluate() and the sweep command.
const std::vector<std::string>& quantity_names();

/// "auto" picks ADMM once the recovery Choi matrix exceeds 64 x 64.
OptimizerMethod choose_method(const std::string& name, Index d, Index n);

struct EvalOptions {
  std::string method = "auto";
  double tol = 1e-10;
  int max_iter = 5000;
};

/// Computes the requested quantities with library calls only.
std::map<std::string, double> evaluate(const KrausChannel& ch, const DensityOperator& rho,
                                       const DensityOperator& sigma,
                                       const std::set<std::string>& wanted,
                                       const EvalOptions& opts);

struct SweepSpec {
  std::string generator;
  ParamValues fixed;
  std::string param;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
  std::vector<std::string> quantities;
  std::string rho_spec = "fixture";
  std::string sigma_spec = "fixture";
  EvalOptions eval;
};

/// Throws Error(Parse) when the spec is malformed.
void validate_sweep(const SweepSpec& spec);

std::vector<double> sweep_grid(const SweepSpec& spec);

struct SweepOutcome {
  int points = 0;
  int failures = 0;
};

/// Writes the CSV through a temporary file renamed into place. Rows follow
/// grid order regardless of `jobs`. Per-point failures become empty cells.
SweepOutcome run_sweep(const SweepSpec& spec, const std::string& out_path, int jobs,
                       std::ostream& err);

/// Shortest round-trip text at 17 significant digits, locale independent.
std::string format_double(double v);

}  // namespace petzopt::cli
