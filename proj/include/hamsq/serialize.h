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

#ifndef HAMSQ_SERIALIZE_H_
#define HAMSQ_SERIALIZE_H_

#include <json.hpp>

#include "hamsq/decomposition.h"
#include "hamsq/eps.h"
#include "hamsq/harness.h"
#include "hamsq/hamilton.h"

namespace hamsq {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {e, p, host-hash}; the JEPS form adds j and trail.
Json to_json(const EpsDecomposition& d);
Json to_json(const JepsDecomposition& d);

// {query: {n, edges-hash, k, a}, path, witnesses: {"3": id, ...}}.
Json to_json(const FkQuery& q, const FkCertificate& cert);
// Reads the path and witnesses back. Throws kInvalidInput.
FkCertificate certificate_from_json(const Json& j);

Json to_json(const BlockForest& forest);
Json to_json(const Tally& tally);
// Carries schema-version; findings are listed as {graph, index, query,
// result, detail}.
Json to_json(const SweepReport& report);

}  // namespace hamsq

#endif  // HAMSQ_SERIALIZE_H_
