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

// JSON encodings. A matrix is a list of rows, each row a list of [re, im]
// pairs.

#include <json.hpp>

#include <string>

#include "petzopt/optimal.hpp"
#include "petzopt/petz.hpp"
#include "petzopt/zoo.hpp"

namespace petzopt::io {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix& m);
/// Throws Error(Parse) on malformed input.
Matrix matrix_from_json(const Json& j);

Json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const Json& j);

Json choi_to_json(const ChoiMatrix& c);
ChoiMatrix choi_from_json(const Json& j, ChoiSide side);

Json certificate_to_json(const OptimalityCertificate& c);
Json kkt_to_json(const KktCertificate& k);
Json solution_to_json(const RecoverySolution& s);

/// Channel JSON plus the fixture's metadata keys.
Json fixture_to_json(const ZooFixture& f);

/// Accepts a bare matrix or an object with a "matrix" member.
DensityOperator density_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace petzopt::io
