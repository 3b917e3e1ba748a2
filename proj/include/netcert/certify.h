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

#ifndef NETCERT_CERTIFY_H
#define NETCERT_CERTIFY_H

#include <array>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "netcert/multigraph.h"
#include "netcert/network.h"
#include "netcert/stabilizer.h"

namespace netcert {

/// Largest fidelity bound any certificate can carry: (7 + sqrt(6.5)) / 10, rounded up.
constexpr double UNIVERSAL_FIDELITY_CAP = 0.954951;

struct PowerSelection {
    long long t = 0;
    double cos_value = 0;  ///< |cos(t m pi / d)|
};

/// With g = gcd(m, d), m' = m/g, d' = d/g and t0 = m'^{-1} mod d': t = t0 * floor(d'/2).
/// |cos(t m pi / d)| is 0 for even d' and sin(pi / (2 d')) for odd d'.
/// Throws DegenerateMultiplicity when m = 0 mod d.
PowerSelection select_power_t(long long m, int d);

/// |cos(k pi / d)|, exact at the rational angles where it is 0, 1/2 or 1.
double abs_cos_phase(long long k, int d);

/// (7 + sqrt(4 + 5 lambda / 2)) / 10. Throws RangeError unless 0 <= lambda <= 2.
double fidelity_bound_from_lambda(double lambda_prime);

enum class Method { obs1, obs4 };
const char *method_name(Method m);

/// A self-contained witness that a graph state cannot come from a network of
/// bipartite sources, with the fidelity bound it implies.
///
/// Operators are products of generators of the working graph, i.e. the input graph
/// after the local complementations listed in lc_path.
struct Certificate {
    Method method = Method::obs1;
    Multigraph graph{2, 1};
    std::vector<Vertex> lc_path;
    Triple triple;
    std::array<std::set<Vertex>, 4> groups;
    std::array<StabilizerWord, 4> operators{
        StabilizerWord{PauliOperator(2), {}},
        StabilizerWord{PauliOperator(2), {}},
        StabilizerWord{PauliOperator(2), {}},
        StabilizerWord{PauliOperator(2), {}}};
    std::map<Party, Party> s4_prime_relabel;
    std::map<std::string, long long> exponents;
    int kappa = 0;
    double lambda_prime = 0;
    double fidelity_bound = 1;
};

/// The input graph with lc_path applied. Throws RangeError on a bad vertex.
Multigraph working_graph(const Certificate &cert);
Multigraph apply_lc_path(const Multigraph &g, const std::vector<Vertex> &path);

/// Why no certificate was produced. Says nothing about preparability.
struct NotCertified {
    std::vector<std::string> reasons;
};

using CertifyResult = std::variant<Certificate, NotCertified>;

inline bool is_certified(const CertifyResult &r) {
    return std::holds_alternative<Certificate>(r);
}

/// For connected graphs whose nonzero multiplicities all equal m.
/// Throws WrongFamily for mixed multiplicities and StructureError when n < 3 or the
/// graph is disconnected.
CertifyResult certify_constant_multiplicity(const Multigraph &g);

/// Tries the angle or triangle construction with the given vertex roles. Throws
/// StructureError for an invalid triple or one whose kind disagrees with the graph.
CertifyResult certify_obs4(const Multigraph &g, const Triple &triple);

/// certify_obs4 over every ordered triple, first success wins.
CertifyResult certify_obs4_any(const Multigraph &g);

struct CertifyOptions {
    size_t orbit_cap = 1000000;
};

/// Constant-multiplicity construction, then certify_obs4_any, then both again on each
/// graph in the local-complementation orbit (breadth first).
CertifyResult certify_any(const Multigraph &g, const CertifyOptions &options = {});

enum class CheckStatus { pass, fail, skipped };
const char *status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    size_t failures() const;
};

struct VerifyOptions {
    /// Largest dimension for the numeric common-eigenvector check. 0 skips it.
    size_t dense_limit = 256;
};

/// Re-derives every property of the certificate from its graph, groups and words.
VerificationReport verify_obs3(const Certificate &cert, const VerifyOptions &options = {});

/// Grouped complete network and operators for the inflation checks.
MarginalChainInput chain_input(const Certificate &cert);

struct Budget {
    size_t max_graphs = std::numeric_limits<size_t>::max();
    size_t orbit_cap = 1000000;
    double time_limit_seconds = std::numeric_limits<double>::infinity();
    int workers = 1;
};

struct UncertifiedGraph {
    Multigraph graph;
    std::vector<std::string> reasons;
};

struct TableReport {
    int n = 0;
    int d = 0;
    size_t classes = 0;
    size_t certified = 0;
    size_t by_obs1 = 0;
    size_t by_obs4 = 0;
    size_t via_local_complement = 0;
    double max_fidelity_bound = 0;
    std::vector<UncertifiedGraph> uncertified;  ///< sorted by graph
    bool complete = true;
    std::string incomplete_reason;
    double elapsed_seconds = 0;

    bool all_certified() const {
        return complete && uncertified.empty();
    }
};

/// Certifies one representative of every connected class on n >= 3 vertices.
TableReport exhaustive_table(int n, int d, const Budget &budget = {});

}  // namespace netcert

#endif
