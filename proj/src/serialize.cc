// Copyright 2026 The hamsq Authors
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

#include "hamsq/serialize.h"

#include "hamsq/error.h"

namespace hamsq {

Json to_json(const EpsDecomposition& d) {
  Json j;
  j["e"] = d.e_edges;
  j["p"] = d.p_edges;
  j["host-hash"] = host_hash(d.host);
  return j;
}

Json to_json(const JepsDecomposition& d) {
  Json j;
  j["e"] = d.e_edges;
  j["p"] = d.p_edges;
  j["j"] = d.j_edges;
  j["trail"] = {d.trail_start, d.trail_end};
  j["host-hash"] = host_hash(d.host);
  return j;
}

Json to_json(const FkQuery& q, const FkCertificate& cert) {
  Json j;
  j["query"] = {{"n", q.host.order()}, {"edges-hash", host_hash(q.host)}, {"k", q.k}, {"a", q.a}};
  j["path"] = cert.path;
  Json witnesses = Json::object();
  for (const auto& [i, e] : cert.witnesses) witnesses[std::to_string(i)] = e;
  j["witnesses"] = witnesses;
  return j;
}

FkCertificate certificate_from_json(const Json& j) {
  try {
    FkCertificate cert;
    cert.path = j.at("path").get<std::vector<Vertex>>();
    for (const auto& [key, value] : j.at("witnesses").items()) {
      cert.witnesses[std::stoi(key)] = value.get<EdgeId>();
    }
    return cert;
  } catch (const std::exception& e) {
    throw HamsqError(ErrorCode::kInvalidInput, std::string("bad certificate: ") + e.what());
  }
}

Json to_json(const BlockForest& forest) {
  Json blocks = Json::array();
  for (const auto& b : forest.blocks) {
    const char* kind = b.kind == BlockKind::kBridge         ? "bridge"
                       : b.kind == BlockKind::kTwoConnected ? "2-connected"
                                                            : "isolated";
    blocks.push_back({{"kind", kind},
                      {"vertices", b.vertices},
                      {"edges", b.edges},
                      {"cutvertices", b.cutvertices},
                      {"endblock", b.endblock}});
  }
  return {{"blocks", blocks}, {"cutvertices", forest.cutvertices.members()}};
}

Json to_json(const Tally& tally) {
  return {{"checked", tally.checked},
          {"violated", tally.violated},
          {"unknown", tally.unknown},
          {"flagged", tally.flagged}};
}

Json to_json(const SweepReport& report) {
  Json j;
  j["schema-version"] = kSchemaVersion;
  j["target"] = report.target;
  j["graphs"] = report.graphs;
  j["skipped"] = report.skipped;
  j["errors"] = report.errors;
  j["totals"] = to_json(report.total);
  Json findings = Json::array();
  for (const auto& item : report.flagged) {
    if (!item.error.empty()) {
      findings.push_back({{"graph", item.graph},
                          {"index", item.index},
                          {"query", nullptr},
                          {"result", "error"},
                          {"detail", item.error}});
    }
    for (const auto& f : item.tally.findings) {
      findings.push_back({{"graph", item.graph},
                          {"index", item.index},
                          {"query", f.query},
                          {"result", outcome_name(f.outcome)},
                          {"detail", f.detail}});
    }
  }
  j["findings"] = findings;
  return j;
}

}  // namespace hamsq
