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

#ifndef NETCERT_PAULI_H
#define NETCERT_PAULI_H

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "netcert/modular.h"

namespace netcert {

/// A party of a network: a graph vertex, or an inflated copy of one.
///
/// Copy 0 is the original party; copy k is printed with k primes ("3''").
struct Party {
    int vertex = 0;
    int copy = 0;

    auto operator<=>(const Party &) const = default;

    std::string str() const;
    static Party parse(std::string_view label);
};

inline Party original(int vertex) {
    return Party{vertex, 0};
}

/// Exponents of X^x Z^z acting on one site, both reduced mod d.
struct SiteExponents {
    int x = 0;
    int z = 0;

    auto operator<=>(const SiteExponents &) const = default;
};

/// A multi-site generalized Pauli (Weyl) operator over Z_d.
///
/// Represents tau^phase_exp * tensor_site X^x Z^z with tau = exp(i pi / d), so that
/// omega = tau^2 and -1 = tau^d are both exact. Each site factor is normal ordered
/// with X before Z. Sites whose exponents are both zero are never stored.
class PauliOperator {
   public:
    /// The identity over local dimension d.
    explicit PauliOperator(int d);

    /// Builds an operator from raw (possibly unreduced) exponents.
    static PauliOperator from_sites(int d, const std::map<Party, SiteExponents> &sites, long long phase_exp = 0);
    static PauliOperator x_on(int d, Party p, long long power = 1);
    static PauliOperator z_on(int d, Party p, long long power = 1);

    int dimension() const {
        return d_;
    }
    /// Phase in units of tau, in [0, 2d).
    int phase_exp() const {
        return phase_;
    }
    const std::map<Party, SiteExponents> &sites() const {
        return sites_;
    }
    SiteExponents at(Party p) const;
    bool is_identity() const {
        return phase_ == 0 && sites_.empty();
    }

    bool operator==(const PauliOperator &) const = default;

    std::string str() const;

   private:
    int d_;
    int phase_ = 0;
    std::map<Party, SiteExponents> sites_;
};

/// Normal-ordered product PQ.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);
inline PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) {
    return multiply(p, q);
}

/// The k in [0, d) with PQ = omega^k QP.
int commutation_phase(const PauliOperator &p, const PauliOperator &q);

PauliOperator dagger(const PauliOperator &p);

/// P^t. Negative t is a power of the adjoint; t = 0 gives the identity.
PauliOperator power(const PauliOperator &p, long long t);

std::set<Party> support(const PauliOperator &p);

/// Keeps the sites in `keep` and resets the global phase to 0.
PauliOperator restrict_to(const PauliOperator &p, const std::set<Party> &keep);

/// Renames sites through `relabel`; sites missing from the map keep their label.
PauliOperator relabel(const PauliOperator &p, const std::map<Party, Party> &relabel);

}  // namespace netcert

#endif
