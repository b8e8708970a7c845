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

// Resolution of channel sources (JSON file or named generator) and of the
// --rho / --sigma state specifications.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "petzopt/zoo.hpp"

namespace petzopt::cli {

struct ParamSpec {
  std::string name;
  std::string default_value;
  std::string help;
  bool numeric = true;
};

struct GeneratorSpec {
  std::string name;
  std::string summary;
  std::string provenance;
  std::vector<ParamSpec> params;
};

/// Alphabetized by name.
const std::vector<GeneratorSpec>& generators();

const GeneratorSpec* find_generator(const std::string& name);

/// Every flag name used by some generator, sorted and unique.
std::vector<std::string> all_param_names();

using ParamValues = std::map<std::string, std::string>;

/// Builds the fixture; values missing from `given` take their defaults.
/// Throws Error(Parse) for unknown generators, parameters foreign to the
/// generator, or unparsable numbers.
ZooFixture build_generator(const std::string& name, const ParamValues& given);

struct ChannelSource {
  std::optional<std::string> channel_path;
  std::optional<std::string> generator;
  ParamValues params;
};

struct ResolvedSource {
  KrausChannel channel;
  DensityOperator default_rho;
  DensityOperator default_sigma;
  std::map<std::string, double> expected;
  std::string label;
};

ResolvedSource resolve_source(const ChannelSource& src);

/// Spec grammar: fixture | maximally-mixed | sqrt-sigma | file:<path>.
/// "sqrt-sigma" is sqrt(sigma) / tr sqrt(sigma) and is only valid for rho.
DensityOperator resolve_sigma(const std::string& spec, const ResolvedSource& src);
DensityOperator resolve_rho(const std::string& spec, const ResolvedSource& src,
                            const DensityOperator& sigma);

}  // namespace petzopt::cli
