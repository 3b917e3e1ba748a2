// Copyright 2026 The netcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETCERT_SERIALIZE_H
#define NETCERT_SERIALIZE_H

#include <string>
#include <string_view>

#include "json.hpp"
#include "netcert/certify.h"
#include "netcert/ghzbound.h"
#include "netcert/oracle.h"

namespace netcert {

using Json = nlohmann::ordered_json;

/// Field order is fixed, so equal certificates serialize to identical bytes.
Json certificate_json(const Certificate &cert);
std::string certificate_to_string(const Certificate &cert, int indent = 2);

/// Inverse of certificate_json. Throws ParseError on missing or mistyped fields.
/// Values are taken as written; run verify_obs3 to check them.
Certificate certificate_from_json(const Json &j);
Certificate parse_certificate(std::string_view text);

Json pauli_json(const PauliOperator &p);
PauliOperator pauli_from_json(int d, const Json &j);

Json graph_json(const Multigraph &g);
Multigraph graph_from_json(const Json &j);

Json not_certified_json(const Multigraph &g, const NotCertified &nc);
Json verification_json(const VerificationReport &report);
Json table_json(const TableReport &report);
Json bound_json(const BoundReport &report);
Json chain_json(const GhzChainRecord &record);
Json property_json(const PropertyReport &report);

}  // namespace netcert

#endif
