// Copyright 2026 The qmetric Authors
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

#include <filesystem>

#include <json.hpp>

#include "qmetric/channels.hpp"
#include "qmetric/convexity_lab.hpp"
#include "qmetric/entanglement.hpp"
#include "qmetric/metrics_closed.hpp"
#include "qmetric/metrics_sup.hpp"
#include "qmetric/states.hpp"

namespace qmetric::io {

using nlohmann::json;

// Complex matrices are stored as {"re": [[...]], "im": [[...]]}, row-major.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"dim": d, "re": [[...]], "im": [[...]], "label"?: "..."}; reading
// validates every density-matrix invariant.
json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const json& j);

// {"dim": d, "kraus": [{"re": ..., "im": ...}, ...]}; reading checks completeness.
json channel_to_json(const KrausChannel& channel);
KrausChannel channel_from_json(const json& j);

// {"family": "Dp", "p": 3} or {"family": "trace"}.
json metric_to_json(const MetricId& metric);
MetricId metric_from_json(const json& j);

json family_to_json(const ProjectionFamily& family);

json witness_to_json(const Witness& witness);
Witness witness_from_json(const json& j);

json decomposition_to_json(const SeparableDecomposition& d);
SeparableDecomposition decomposition_from_json(const json& j);
json entanglement_to_json(const EntanglementResult& result);

/// Reads and parses a JSON file; failures raise ValidationError("json").
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace qmetric::io
