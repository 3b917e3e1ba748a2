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

#ifndef NETCERT_NETWORK_H
#define NETCERT_NETWORK_H

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "netcert/pauli.h"

namespace netcert {

using Source = std::vector<Party>;  ///< sorted, distinct parties

/// Parties plus a multiset of sources. A one-party source is a broken edge whose
/// other half has been traced out.
class Network {
   public:
    Network() = default;
    /// Sorts each source and the source list. Throws StructureError for empty sources,
    /// repeated parties inside a source, or sources mentioning unknown parties.
    Network(std::set<Party> parties, std::vector<Source> sources);

    const std::set<Party> &parties() const {
        return parties_;
    }
    const std::vector<Source> &sources() const {
        return sources_;
    }

    bool operator==(const Network &) const = default;
    std::string str() const;

   private:
    std::set<Party> parties_;
    std::vector<Source> sources_;
};

/// One bipartite source per unordered pair of parties.
Network complete_bipartite_network(const std::set<Party> &parties);

/// Restriction to T: every source is intersected with T, empty intersections dropped.
Network reduce(const Network &n, const std::set<Party> &t);

/// Renames parties (missing keys are kept). Throws StructureError if the map is not injective
/// on the network's parties.
Network relabel(const Network &n, const std::map<Party, Party> &relabeling);

/// True iff reduce(n1, t1) mapped through `bijection` equals reduce(n2, t2) as source
/// multisets. Throws StructureError unless `bijection` is a bijection from t1 onto t2.
bool reduced_equal(
    const Network &n1,
    const std::set<Party> &t1,
    const Network &n2,
    const std::set<Party> &t2,
    const std::map<Party, Party> &bijection);

/// A network whose parties are split into four disjoint groups.
struct GroupedNetwork {
    Network base;
    std::array<std::set<Party>, 4> groups;

    /// Throws StructureError unless the groups partition the base parties and no
    /// group contains a copied party.
    void validate() const;
};

enum class InflationKind { gamma, eta };

struct InflationSpec {
    InflationKind kind = InflationKind::gamma;
    GroupedNetwork grouping;
};

/// Maps each party of G1 to its first copy (one extra prime).
std::map<Party, Party> copy_relabeling(const std::set<Party> &g1);

/// gamma: every G1-G2 source is replaced by its two broken halves.
/// eta: a copy G1' of G1 is added. Sources inside G1 are duplicated on G1'. A G1-G2 or
/// G1-G3 source {u, w} becomes {u', w} plus the broken half {u}. A G1-G4 source {u, w}
/// stays and gains the broken half {u'}. Sources avoiding G1 are kept.
/// Throws UnsupportedSource for a source with three or more parties that touches the
/// rewired pairs, and StructureError for an invalid grouping.
Network build_inflation(const InflationSpec &spec);

/// The operators and grouping behind one run of the inflation argument.
struct MarginalChainInput {
    GroupedNetwork grouping;
    PauliOperator s1, s2, s3, s4;
};

struct MarginalCheck {
    std::string name;
    bool holds = false;
};

/// The four reduced-network equalities: S1 and S2 (rho vs gamma), S3 (gamma vs eta),
/// and S4 on rho vs S4' on eta with G1 renamed to G1'.
std::vector<MarginalCheck> verify_marginal_chain(const MarginalChainInput &input);

}  // namespace netcert

#endif
