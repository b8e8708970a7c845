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

#include "cli/sources.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "petzopt/io.hpp"

namespace petzopt::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
    bad("parameter --" + key + " expects a number, got '" + text + "'");
  }
  return v;
}

long long to_int(const std::string& key, const std::string& text) {
  long long v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    // Accept integral values written as doubles, as produced by sweeps.
    const double d = to_double(key, text);
    if (d != std::floor(d)) bad("parameter --" + key + " expects an integer");
    return static_cast<long long>(d);
  }
  return v;
}

std::vector<GeneratorSpec> make_generators() {
  std::vector<GeneratorSpec> g = {
      {"c2c",
       "classical-to-classical channel on |X| letters",
       "closed form: 1/|X| for disjoint rows, 1/|X|^2 for constant columns",
       {{"family", "permutation", "permutation | constant | symmetric", false},
        {"size", "3", "alphabet size |X| = |Y|"},
        {"noise", "0.1", "flip weight for the symmetric family"}}},
      {"direct-sum",
       "direct sum of two KL blocks with non-commuting rho and sigma",
       "closed form: sum of squared block weights",
       {{"seed", "11", "random seed for the blocks"},
        {"weight", "0.6", "tr rho on the first block"}}},
      {"gkp",
       "GKP qubit sent through a beam splitter",
       "numerical: Fock-truncated beam-splitter model",
       {{"cutoff", "80", "Fock cutoff per mode"},
        {"delta", "0.3", "GKP peak width"},
        {"drop", "1e-5", "Kraus 2-norm below which operators are dropped"},
        {"eta", "0.5", "transmissivity sin^2(gt)"}}},
      {"kl",
       "channel with QEC matrix I (x) alpha",
       "closed form: perfect recovery",
       {{"d", "2", "logical dimension"},
        {"nk", "3", "number of Kraus operators"},
        {"seed", "5", "random seed"}}},
      {"pauli",
       "qudit Pauli channel, uniform over a support set",
       "closed form: 1/|S| for uniform support S",
       {{"d", "2", "qudit dimension"},
        {"support", "I,Z", "labels I,X,Y,Z or powers a:b of X^a Z^b", false}}},
      {"qubit-example",
       "parametrized qubit channel where only the general commutator vanishes",
       "reference five-decimal values at the defaults",
       {{"a", "0.5477225575051661", "sqrt(sigma_00)"},
        {"t", "1", "gamma_11"},
        {"x", "0.25", "entry x of sqrt(M_sigma)"},
        {"y", "0.08", "entry y of sqrt(M_sigma)"}}},
      {"random",
       "Haar-random isometry cut into Kraus operators",
       "property-test input",
       {{"d", "2", "input dimension"},
        {"n", "3", "output dimension"},
        {"nk", "2", "number of Kraus operators"},
        {"seed", "7", "random seed"}}},
      {"toy",
       "2 -> 3 toy model",
       "closed form: transpose channel is optimal",
       {{"a", "1", "amplitude a > 0"}, {"b", "1", "amplitude b > 0"}}},
  };
  std::sort(g.begin(), g.end(), [](const auto& l, const auto& r) { return l.name < r.name; });
  return g;
}

}  // namespace

const std::vector<GeneratorSpec>& generators() {
  static const std::vector<GeneratorSpec> g = make_generators();
  return g;
}

const GeneratorSpec* find_generator(const std::string& name) {
  for (const auto& g : generators()) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

std::vector<std::string> all_param_names() {
  std::set<std::string> names;
  for (const auto& g : generators()) {
    for (const auto& p : g.params) names.insert(p.name);
  }
  return {names.begin(), names.end()};
}

ZooFixture build_generator(const std::string& name, const ParamValues& given) {
  const GeneratorSpec* spec = find_generator(name);
  if (!spec) bad("unknown generator '" + name + "'");
  ParamValues v;
  for (const auto& p : spec->params) v[p.name] = p.default_value;
  for (const auto& [key, value] : given) {
    if (!v.count(key)) bad("generator '" + name + "' has no parameter --" + key);
    v[key] = value;
  }
  auto num = [&](const char* key) { return to_double(key, v.at(key)); };
  auto integer = [&](const char* key) { return to_int(key, v.at(key)); };
  auto index = [&](const char* key) {
    const long long i = integer(key);
    if (i <= 0) bad(std::string("parameter --") + key + " must be positive");
    return static_cast<Index>(i);
  };
  auto seed = [&]() {
    const long long s = integer("seed");
    if (s < 0) bad("parameter --seed must be non-negative");
    return static_cast<std::uint64_t>(s);
  };

  if (name == "c2c") {
    const Index size = index("size");
    const std::string& family = v.at("family");
    RealMatrix p = RealMatrix::Zero(size, size);
    if (family == "permutation") {
      for (Index x = 0; x < size; ++x) p((x + 1) % size, x) = 1.0;
    } else if (family == "constant") {
      for (Index y = 0; y < size; ++y) {
        p.row(y).setConstant(static_cast<double>(y + 1) /
                             static_cast<double>(size * (size + 1) / 2));
      }
    } else if (family == "symmetric") {
      const double noise = num("noise");
      p.setConstant(noise / static_cast<double>(size));
      p.diagonal().array() += 1.0 - noise;
    } else {
      bad("c2c --family must be permutation, constant or symmetric");
    }
    return c2c_channel(p);
  }
  if (name == "direct-sum") {
    const double w = num("weight");
    if (!(w > 0.0 && w < 1.0)) bad("direct-sum --weight must lie in (0, 1)");
    return direct_sum_random({{2, 2}, {2, 1}}, {w, 1.0 - w}, seed());
  }
  if (name == "gkp") {
    GkpOptions o;
    o.delta = num("delta");
    o.eta = num("eta");
    o.cutoff = index("cutoff");
    o.kraus_drop_tol = num("drop");
    return gkp_transduction(o);
  }
  if (name == "kl") return kl_fixture(index("d"), index("nk"), seed());
  if (name == "pauli") {
    const Index d = index("d");
    return pauli_channel(d, uniform_pauli(parse_pauli_support(v.at("support"), d)));
  }
  if (name == "qubit-example") {
    return qubit_example(num("a"), num("t"), num("x"), num("y"));
  }
  if (name == "random") {
    const Index d = index("d");
    KrausChannel ch = random_channel(d, index("n"), index("nk"), seed());
    ZooFixture f{"random", std::move(ch), DensityOperator::maximally_mixed(d),
                 DensityOperator::maximally_mixed(d), {}, {}, spec->provenance, 1e-8};
    return f;
  }
  if (name == "toy") return toy_channel(num("a"), num("b"));
  bad("unknown generator '" + name + "'");
}

ResolvedSource resolve_source(const ChannelSource& src) {
  if (src.channel_path && src.generator) bad("give either --channel or --generator, not both");
  if (src.channel_path) {
    if (!src.params.empty()) bad("generator parameters need --generator");
    KrausChannel ch = io::channel_from_json(io::read_json_file(*src.channel_path));
    const Index d = ch.input_dim();
    return {std::move(ch), DensityOperator::maximally_mixed(d),
            DensityOperator::maximally_mixed(d), {}, *src.channel_path};
  }
  if (!src.generator) bad("a channel source is required: --channel <path> or --generator <name>");
  ZooFixture f = build_generator(*src.generator, src.params);
  return {std::move(f.channel), std::move(f.rho), std::move(f.sigma), std::move(f.expected),
          *src.generator};
}

namespace {

std::optional<DensityOperator> common_spec(const std::string& spec, Index d) {
  if (spec == "maximally-mixed") return DensityOperator::maximally_mixed(d);
  if (spec.rfind("file:", 0) == 0) {
    DensityOperator s = io::density_from_json(io::read_json_file(spec.substr(5)));
    if (s.dim() != d) {
      throw Error(ErrorCode::DimensionMismatch, "state in '" + spec.substr(5) +
                                                    "' does not match the channel input");
    }
    return s;
  }
  return std::nullopt;
}

}  // namespace

DensityOperator resolve_sigma(const std::string& spec, const ResolvedSource& src) {
  if (spec == "fixture") return src.default_sigma;
  if (auto s = common_spec(spec, src.channel.input_dim())) return *s;
  bad("--sigma must be fixture, maximally-mixed or file:<path>, got '" + spec + "'");
}

DensityOperator resolve_rho(const std::string& spec, const ResolvedSource& src,
                            const DensityOperator& sigma) {
  if (spec == "fixture") return src.default_rho;
  if (spec == "sqrt-sigma") return DensityOperator(hermitian_power(sigma.matrix(), 0.5));
  if (auto s = common_spec(spec, src.channel.input_dim())) return *s;
  bad("--rho must be fixture, maximally-mixed, sqrt-sigma or file:<path>, got '" + spec + "'");
}

}  // namespace petzopt::cli
