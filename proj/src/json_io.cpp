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

#include "qmetric/json_io.hpp"

#include <fstream>

#include "qmetric/error.hpp"

namespace qmetric::io {

namespace {

json vector_to_json(const ComplexVector& v) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return {{"re", re}, {"im", im}};
}

ComplexVector vector_from_json(const json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != im.size()) {
    throw ValidationError("json", "vector needs equal-length re/im arrays");
  }
  ComplexVector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = {re[i].get<double>(), im[i].get<double>()};
  }
  return v;
}

const char* kind_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kConvexity: return "convexity";
    case WitnessKind::kContractivity: return "contractivity";
    case WitnessKind::kExpansion: return "expansion";
  }
  return "?";
}

WitnessKind kind_from_name(const std::string& name) {
  if (name == "convexity") return WitnessKind::kConvexity;
  if (name == "contractivity") return WitnessKind::kContractivity;
  if (name == "expansion") return WitnessKind::kExpansion;
  throw ValidationError("json", "unknown witness kind '" + name + "'");
}

// Runs `fn`, converting nlohmann errors into ValidationError("json").
template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ValidationError("json", std::string(what) + ": " + e.what());
  }
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rr = json::array();
    json ir = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ir.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return {{"re", re}, {"im", im}};
}

Matrix matrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty()) {
      throw ValidationError("json", "matrix needs equal-shape nonempty re/im arrays");
    }
    const std::size_t rows = re.size();
    const std::size_t cols = re[0].size();
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      if (re[r].size() != cols || im[r].size() != cols) {
        throw ValidationError("json", "ragged matrix rows");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {re[r][c].get<double>(),
                                                                         im[r][c].get<double>()};
      }
    }
    return m;
  });
}

json state_to_json(const DensityMatrix& rho) {
  json j = matrix_to_json(rho.matrix());
  j["dim"] = rho.dim();
  if (!rho.label().empty()) j["label"] = rho.label();
  return j;
}

DensityMatrix state_from_json(const json& j) {
  return guarded("state", [&] {
    const Matrix m = matrix_from_json(j);
    const auto dim = j.at("dim").get<Eigen::Index>();
    if (m.rows() != dim || m.cols() != dim) {
      throw ValidationError("json", "state entries do not match \"dim\"");
    }
    return new_density(m, j.value("label", std::string{}));
  });
}

json channel_to_json(const KrausChannel& channel) {
  json ks = json::array();
  for (const Matrix& k : channel.kraus()) ks.push_back(matrix_to_json(k));
  return {{"dim", channel.dim()}, {"kraus", ks}};
}

KrausChannel channel_from_json(const json& j) {
  return guarded("channel", [&] {
    const auto dim = j.at("dim").get<Eigen::Index>();
    std::vector<Matrix> kraus;
    for (const json& k : j.at("kraus")) {
      Matrix m = matrix_from_json(k);
      if (m.rows() != dim || m.cols() != dim) {
        throw ValidationError("json", "Kraus operator does not match \"dim\"");
      }
      kraus.push_back(std::move(m));
    }
    return KrausChannel(std::move(kraus));
  });
}

json metric_to_json(const MetricId& metric) {
  json j = {{"family", metric.name()}};
  if (metric.p()) j["p"] = *metric.p();
  return j;
}

MetricId metric_from_json(const json& j) {
  return guarded("metric", [&] {
    std::optional<double> p;
    if (j.contains("p") && !j.at("p").is_null()) p = j.at("p").get<double>();
    return MetricId::parse(j.at("family").get<std::string>(), p);
  });
}

json family_to_json(const ProjectionFamily& family) {
  return {{"dim", family.dim()}, {"basis", matrix_to_json(family.basis())},
          {"partition", family.partition()}};
}

json witness_to_json(const Witness& w) {
  json states = json::array();
  for (const auto& s : w.states) states.push_back(state_to_json(s));
  return {{"kind", kind_name(w.kind)},
          {"metric", metric_to_json(w.metric)},
          {"states", states},
          {"channel", w.channel ? channel_to_json(*w.channel) : json(nullptr)},
          {"lambda", w.lambda ? json(*w.lambda) : json(nullptr)},
          {"gap", w.gap},
          {"seed", w.seed},
          {"trial", w.trial}};
}

Witness witness_from_json(const json& j) {
  return guarded("witness", [&] {
    Witness w;
    w.kind = kind_from_name(j.value("kind", std::string("convexity")));
    w.metric = metric_from_json(j.at("metric"));
    for (const json& s : j.at("states")) w.states.push_back(state_from_json(s));
    if (j.contains("channel") && !j.at("channel").is_null()) w.channel = channel_from_json(j.at("channel"));
    if (j.contains("lambda") && !j.at("lambda").is_null()) w.lambda = j.at("lambda").get<double>();
    w.gap = j.at("gap").get<double>();
    w.seed = j.at("seed").get<std::uint64_t>();
    w.trial = j.at("trial").get<std::int64_t>();
    return w;
  });
}

json decomposition_to_json(const SeparableDecomposition& d) {
  json fa = json::array();
  json fb = json::array();
  for (const auto& v : d.factors_a) fa.push_back(vector_to_json(v));
  for (const auto& v : d.factors_b) fb.push_back(vector_to_json(v));
  return {{"weights", d.weights}, {"factors_a", fa}, {"factors_b", fb}};
}

SeparableDecomposition decomposition_from_json(const json& j) {
  return guarded("decomposition", [&] {
    SeparableDecomposition d;
    d.weights = j.at("weights").get<std::vector<double>>();
    for (const json& v : j.at("factors_a")) d.factors_a.push_back(vector_from_json(v));
    for (const json& v : j.at("factors_b")) d.factors_b.push_back(vector_from_json(v));
    d.validate();
    return d;
  });
}

json entanglement_to_json(const EntanglementResult& result) {
  return {{"metric", metric_to_json(result.metric)},
          {"value", result.value},
          {"converged", result.converged},
          {"closest", decomposition_to_json(result.closest)},
          {"closest_state", state_to_json(result.closest.assemble())}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("io", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("json", path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("io", "cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw ValidationError("io", "write failed for " + path.string());
}

}  // namespace qmetric::io
