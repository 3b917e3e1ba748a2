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

#ifndef NETCERT_GHZBOUND_H
#define NETCERT_GHZBOUND_H

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "netcert/network.h"
#include "netcert/pauli.h"

namespace netcert {

/// 0 for even d, pi / (2d) for odd d.
double theta_d(int d);

/// (7 + sqrt(4 + 5 sin theta_d)) / 10.
double ghz_closed_form_bound(int d);

/// Largest f in [3/4, 1] with f <= [d^2 + (d^3 - d^2) sqrt(1 + s - (4f - 3)^2)] / d^3,
/// where s = sin(pi / 2d) for odd primes and 0 for d = 2. Throws WrongFamily unless d is prime.
double ghz_prime_bound(int d);

/// Knobs of the constraint-system bound. The relax_* fields loosen one constraint
/// family each (added to its right-hand side); all zero gives the actual bound.
struct NumericOptions {
    size_t grid = 4000;
    double tolerance = 1e-10;
    double relax_fidelity = 0;     ///< |<S_xy0>_eta| >= 4f - 3
    double relax_corr_sum = 0;     ///< the two -3/2 composition inequalities
    double relax_phase = 0;        ///< |<S_abc>|^2 + |<S_xy0>_eta|^2 <= 1 + |cos(c e pi / d)|
    double relax_uncertainty = 0;  ///< the variance-product inequality
};

struct SolverStep {
    double f = 0;
    bool feasible = false;
    double objective_upper = 0;  ///< certified upper bound on the objective at this f
};

struct BoundReport {
    int d = 0;
    double bound_closed_form = 0;
    std::optional<double> bound_prime;
    std::optional<double> bound_numeric;
    std::vector<std::string> constraints_active;
    std::vector<SolverStep> solver_trace;
    bool converged = false;
};

/// Whether fidelity f survives the constraint system (a sound relaxation: false means
/// f is impossible). Optionally reports the objective upper bound.
bool ghz_numeric_feasible(int d, double f, const NumericOptions &options = {}, double *objective_upper = nullptr);

/// Bisection on f using ghz_numeric_feasible. Throws RangeError unless 2 <= d <= 8.
BoundReport ghz_numeric_bound(int d, const NumericOptions &options = {});

/// All three bounds that apply to d (prime bound only for primes, numeric for d <= 8).
BoundReport ghz_bound_report(int d);

/// Replay of the three-party argument: GHZ stabilizers, both inflations of the
/// triangle network, the marginal premises, and the resulting bound.
struct GhzChainRecord {
    int d = 0;
    std::array<PauliOperator, 4> operators{PauliOperator(2), PauliOperator(2), PauliOperator(2), PauliOperator(2)};
    int power = 0;  ///< floor(d / 2)
    std::vector<MarginalCheck> checks;
    bool product_holds = false;  ///< S3 = S1 S2
    bool supports_avoid_groups = false;
    int kappa = 0;
    double lambda_prime = 0;
    double bound = 0;

    bool premises_hold() const;
};

GhzChainRecord ghz_inflation_chain(int d);

}  // namespace netcert

#endif
