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

#include "netcert/stabilizer.h"

#include "netcert/errors.h"
#include "netcert/modular.h"

namespace netcert {

PauliOperator graph_generator(const Multigraph &g, Vertex i) {
    if (i < 0 || i >= g.size()) {
        throw RangeError("vertex " + std::to_string(i) + " out of range");
    }
    std::map<Party, SiteExponents> sites;
    sites[original(i)] = SiteExponents{1, 0};
    for (Vertex j : g.neighbors(i)) {
        sites[original(j)] = SiteExponents{0, g.multiplicity(i, j)};
    }
    return PauliOperator::from_sites(g.dimension(), sites);
}

PauliOperator evaluate_factorization(const Multigraph &g, const std::vector<std::pair<Vertex, int>> &factorization) {
    PauliOperator result(g.dimension());
    for (const auto &[v, e] : factorization) {
        result = result * power(graph_generator(g, v), e);
    }
    return result;
}

StabilizerWord word(const Multigraph &g, const std::map<Vertex, long long> &exponents) {
    std::vector<std::pair<Vertex, int>> factorization;
    for (const auto &[v, e] : exponents) {
        int r = mod(e, g.dimension());
        if (r) {
            factorization.emplace_back(v, r);
        }
    }
    return StabilizerWord{evaluate_factorization(g, factorization), factorization};
}

PauliOperator ghz_stabilizer_element(int d, int a, int b, int c) {
    for (int v : {a, b, c}) {
        if (v < 0 || v >= d) {
            throw RangeError("GHZ stabilizer exponent " + std::to_string(v) + " outside [0, " + std::to_string(d) + ")");
        }
    }
    int z_exps[3] = {a, b - a, -b};
    PauliOperator result(d);
    for (int k = 0; k < 3; k++) {
        result = result * PauliOperator::z_on(d, original(k), z_exps[k]) * PauliOperator::x_on(d, original(k), c);
    }
    return result;
}

std::vector<PauliOperator> ghz_group(int d) {
    std::vector<PauliOperator> result;
    result.reserve(static_cast<size_t>(d) * d * d);
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            for (int c = 0; c < d; c++) {
                result.push_back(ghz_stabilizer_element(d, a, b, c));
            }
        }
    }
    return result;
}

std::array<PauliOperator, 4> ghz_generators(int d) {
    auto z = [d](int v, int p) {
        return PauliOperator::z_on(d, original(v), p);
    };
    auto x = [d](int v) {
        return PauliOperator::x_on(d, original(v));
    };
    return {z(1, 1) * z(0, -1), z(0, 1) * z(2, -1), z(1, 1) * z(2, -1), x(0) * x(1) * x(2)};
}

}  // namespace netcert
