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

#ifndef NETCERT_STABILIZER_H
#define NETCERT_STABILIZER_H

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "netcert/multigraph.h"
#include "netcert/pauli.h"

namespace netcert {

/// A product of graph-state generators, kept together with the exponents that
/// produced it so it can be re-derived from the graph alone.
struct StabilizerWord {
    PauliOperator op;
    std::vector<std::pair<Vertex, int>> factorization;  ///< (vertex, exponent mod d), nonzero, sorted

    bool operator==(const StabilizerWord &) const = default;
};

/// g_i = X_i prod_{j in N_i} Z_j^{m_ij}.
PauliOperator graph_generator(const Multigraph &g, Vertex i);

/// prod_i g_i^{e_i} in increasing vertex order. Exponents are reduced mod d.
StabilizerWord word(const Multigraph &g, const std::map<Vertex, long long> &exponents);

/// Recomputes a word's operator from its factorization.
PauliOperator evaluate_factorization(const Multigraph &g, const std::vector<std::pair<Vertex, int>> &factorization);

/// S_abc = Z^a X^c (x) Z^{b-a} X^c (x) Z^{-b} X^c on sites 0, 1, 2.
/// Throws RangeError unless a, b, c are in [0, d).
PauliOperator ghz_stabilizer_element(int d, int a, int b, int c);

/// All d^3 elements, index a*d*d + b*d + c.
std::vector<PauliOperator> ghz_group(int d);

/// The four generators Z_1 Z_0^dag, Z_0 Z_2^dag, Z_1 Z_2^dag, X_0 X_1 X_2.
std::array<PauliOperator, 4> ghz_generators(int d);

}  // namespace netcert

#endif
