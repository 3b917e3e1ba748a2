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

#include "netcert/ghzbound.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "netcert/certify.h"
#include "netcert/errors.h"
#include "netcert/modular.h"
#include "netcert/stabilizer.h"

namespace netcert {

double theta_d(int d) {
    if (d < 2) {
        throw RangeError("dimension must be at least 2");
    }
    return d % 2 == 0 ? 0.0 : std::numbers::pi / (2 * d);
}

double ghz_closed_form_bound(int d) {
    return (7 + std::sqrt(4 + 5 * std::sin(theta_d(d)))) / 10;
}

static bool is_prime(int d) {
    if (d < 2) {
        return false;
    }
    for (int k = 2; k * k <= d; k++) {
        if (d % k == 0) {
            return false;
        }
    }
    return true;
}

double ghz_prime_bound(int d) {
    if (!is_prime(d)) {
        throw WrongFamily("the prime-dimension bound needs prime d, got " + std::to_string(d));
    }
    double s = d == 2 ? 0.0 : std::sin(std::numbers::pi / (2 * d));
    double d2 = static_cast<double>(d) * d;
    double d3 = d2 * d;
    auto residual = [&](double f) {
        double q = 4 * f - 3;
        return (d2 + (d3 - d2) * std::sqrt(std::max(0.0, 1 + s - q * q))) / d3 - f;
    };
    double lo = 0.75, hi = 1.0;
    if (residual(hi) >= 0) {
        return hi;
    }
    while (hi - lo > 1e-12) {
        double mid = (lo + hi) / 2;
        (residual(mid) >= 0 ? lo : hi) = mid;
    }
    return hi;
}

namespace {

/// Pair operators S_{x00}, S_{0x0}, S_{xx0} share an exponent e; e and -e are
/// adjoint, so <Re S> agrees across the class {e, -e}.
struct PairClass {
    int weight = 0;              ///< number of pair operators with <Re S> = p
    std::vector<double> kappas;  ///< |cos(c e pi / d)| of each c paired with this class
};

std::map<int, PairClass> pair_classes(int d) {
    std::map<int, PairClass> classes;
    for (int e = 1; e < d; e++) {
        classes[std::min(e, d - e)].weight += 3;
    }
    for (int c = 1; c < d; c++) {
        // e = -t makes c e = -t c, whose |cos| is what select_power_t minimizes.
        PowerSelection sel = select_power_t(c, d);
        int e = mod(-sel.t, d);
        classes[std::min(e, d - e)].kappas.push_back(abs_cos_phase(static_cast<long long>(c) * e, d));
    }
    return classes;
}

/// Lower bound on |<S_xy0>_eta| for p ranging over [p_lo, p_hi].
double q_lower(double p_lo, double p_hi, double f, const NumericOptions &o, int *active = nullptr) {
    double min_sq = (p_lo <= 0 && p_hi >= 0) ? 0.0 : std::min(p_lo * p_lo, p_hi * p_hi);
    double terms[3] = {
        4 * f - 3 - o.relax_fidelity,
        2 * p_lo - 1.5 - o.relax_corr_sum,
        std::sqrt(std::max(0.0, 2 * min_sq - 1.5 - o.relax_corr_sum)),
    };
    int best = static_cast<int>(std::max_element(terms, terms + 3) - terms);
    if (active) {
        *active = best;
    }
    return terms[best];
}

/// Largest |<S_abc>_rho| allowed when |<S_xy0>_eta| >= q; negative when infeasible.
double r_upper(double q, double kappa, const NumericOptions &o, int *active = nullptr) {
    if (q > 1) {
        return -1;
    }
    double slack = 1 + kappa + o.relax_phase - q * q;
    if (slack < 0) {
        return -1;
    }
    double r = 1;
    int which = 0;
    if (std::sqrt(slack) < r) {
        r = std::sqrt(slack);
        which = 1;
    }
    if (q > kappa) {
        double u = kappa * q + std::sqrt(std::max(0.0, (1 - kappa * kappa) * (1 - q * q))) + o.relax_uncertainty;
        if (u < r) {
            r = u;
            which = 2;
        }
    }
    if (active) {
        *active = which;
    }
    return r;
}

const char *Q_NAMES[3] = {"fidelity-link", "corr-sum-mean", "corr-sum-square"};
const char *R_NAMES[3] = {"unit-modulus", "phase", "uncertainty"};

/// Upper envelope of weight * p + d^2 sum_c r(q(p), kappa_c) over the grid cells.
/// Returns -inf when no p is feasible.
double class_upper(
    int d, double f, const PairClass &cls, const NumericOptions &o, std::vector<std::string> *active = nullptr) {
    double best = -std::numeric_limits<double>::infinity();
    int best_q = -1;
    std::vector<int> best_r;
    size_t n = std::max<size_t>(o.grid, 2);
    for (size_t i = 0; i < n; i++) {
        double p_lo = -1 + 2.0 * static_cast<double>(i) / static_cast<double>(n);
        double p_hi = -1 + 2.0 * static_cast<double>(i + 1) / static_cast<double>(n);
        int qa = 0;
        double q = q_lower(p_lo, p_hi, f, o, &qa);
        double value = cls.weight * p_hi;
        bool ok = true;
        std::vector<int> ra;
        for (double kappa : cls.kappas) {
            int which = 0;
            double r = r_upper(q, kappa, o, &which);
            if (r < 0) {
                ok = false;
                break;
            }
            value += static_cast<double>(d) * d * r;
            ra.push_back(which);
        }
        if (ok && value > best) {
            best = value;
            best_q = qa;
            best_r = std::move(ra);
        }
    }
    if (active && best_q >= 0) {
        if (!cls.kappas.empty()) {
            active->push_back(Q_NAMES[best_q]);
        }
        for (int w : best_r) {
            active->push_back(R_NAMES[w]);
        }
    }
    return best;
}

double objective_upper(int d, double f, const NumericOptions &o, std::vector<std::string> *active) {
    double total = 1 + static_cast<double>(d - 1) * (d - 2);
    for (const auto &[key, cls] : pair_classes(d)) {
        double c = class_upper(d, f, cls, o, active);
        if (!std::isfinite(c)) {
            return -std::numeric_limits<double>::infinity();
        }
        total += c;
    }
    return total / (static_cast<double>(d) * d * d);
}

}  // namespace

bool ghz_numeric_feasible(int d, double f, const NumericOptions &options, double *objective) {
    if (d < 2 || d > 8) {
        throw RangeError("the numeric bound is implemented for 2 <= d <= 8");
    }
    double u = objective_upper(d, f, options, nullptr);
    if (objective) {
        *objective = u;
    }
    return u >= f;
}

BoundReport ghz_numeric_bound(int d, const NumericOptions &options) {
    if (d < 2 || d > 8) {
        throw RangeError("the numeric bound is implemented for 2 <= d <= 8");
    }
    BoundReport report;
    report.d = d;
    report.bound_closed_form = ghz_closed_form_bound(d);
    auto step = [&](double f) {
        SolverStep s;
        s.f = f;
        s.feasible = ghz_numeric_feasible(d, f, options, &s.objective_upper);
        report.solver_trace.push_back(s);
        return s.feasible;
    };
    double lo = 0.75, hi = 1.0;
    if (step(hi)) {
        report.bound_numeric = 1.0;
        report.converged = true;
        return report;
    }
    if (!step(lo)) {
        // Even f = 3/4 is excluded; 3/4 is then still a valid upper bound.
        report.bound_numeric = lo;
        report.converged = true;
        return report;
    }
    for (int iter = 0; iter < 200 && hi - lo > options.tolerance; iter++) {
        double mid = (lo + hi) / 2;
        (step(mid) ? lo : hi) = mid;
    }
    report.converged = hi - lo <= options.tolerance;
    report.bound_numeric = hi;
    std::vector<std::string> active;
    objective_upper(d, lo, options, &active);
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());
    report.constraints_active = std::move(active);
    return report;
}

BoundReport ghz_bound_report(int d) {
    BoundReport report;
    if (d >= 2 && d <= 8) {
        report = ghz_numeric_bound(d);
    } else {
        report.d = d;
        report.bound_closed_form = ghz_closed_form_bound(d);
        report.converged = true;
    }
    if (is_prime(d)) {
        report.bound_prime = ghz_prime_bound(d);
    }
    return report;
}

bool GhzChainRecord::premises_hold() const {
    return product_holds && supports_avoid_groups && kappa != 0 &&
           std::all_of(checks.begin(), checks.end(), [](const MarginalCheck &c) {
               return c.holds;
           });
}

GhzChainRecord ghz_inflation_chain(int d) {
    GhzChainRecord rec;
    rec.d = d;
    rec.power = d / 2;
    auto gens = ghz_generators(d);
    rec.operators = {gens[0], gens[1], gens[2], power(gens[3], rec.power)};
    rec.product_holds = gens[0] * gens[1] == gens[2];

    // Parties A, B, C are 0, 1, 2; C is copied, the B-C source is broken.
    std::set<Party> parties{original(0), original(1), original(2)};
    GroupedNetwork gn{complete_bipartite_network(parties), {{{original(2)}, {original(1)}, {original(0)}, {}}}};
    rec.supports_avoid_groups = true;
    for (int k = 0; k < 4; k++) {
        for (const Party &p : support(rec.operators[k])) {
            rec.supports_avoid_groups &= gn.groups[k].count(p) == 0;
        }
    }
    rec.checks = verify_marginal_chain(
        MarginalChainInput{gn, rec.operators[0], rec.operators[1], rec.operators[2], rec.operators[3]});
    PauliOperator s4p = relabel(rec.operators[3], copy_relabeling(gn.groups[0]));
    rec.kappa = commutation_phase(rec.operators[2], s4p);
    rec.lambda_prime = 2 * abs_cos_phase(rec.kappa, d);
    rec.bound = fidelity_bound_from_lambda(rec.lambda_prime);
    return rec;
}

}  // namespace netcert
