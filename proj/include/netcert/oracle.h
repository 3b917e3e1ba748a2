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

#ifndef NETCERT_ORACLE_H
#define NETCERT_ORACLE_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netcert/multigraph.h"
#include "netcert/pauli.h"

namespace netcert {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Largest Hilbert-space dimension the dense routines will touch. Reads NETCERT_CAP,
/// default 4096.
size_t dense_cap();

/// d^k, or ResourceError when it exceeds the cap.
size_t checked_dimension(int d, size_t k, size_t cap = dense_cap());

/// Matrix of P on the tensor product of `order` (first party is the most significant
/// digit). Throws StructureError if P acts outside `order`.
DenseMatrix dense(const PauliOperator &p, const std::vector<Party> &order);

/// Same, over the original vertices 0..n-1.
DenseMatrix dense(const PauliOperator &p, int n);

/// P|psi> computed straight from X^x Z^z |q> = omega^{zq} |q + x>, without forming a matrix.
DenseVector apply(const PauliOperator &p, const std::vector<Party> &order, const DenseVector &psi);

std::vector<Party> original_parties(int n);

/// |+>^n followed by CZ^{m_ij} on every edge.
DenseVector build_graph_state(const Multigraph &g);

/// The common +1 eigenvector found by projecting a random vector with
/// prod_i (1/d) sum_k g_i^k. Normalized; the global phase is fixed so the
/// amplitude of |0...0> is real and positive.
DenseVector build_graph_state_by_projection(const Multigraph &g, uint64_t seed = 1);

/// (1/sqrt d) sum_q |qqq>.
DenseVector ghz_state(int d);

/// Projector onto the eigenvalue-1 eigenspace of a unitary, using eigenvalue angles
/// |arg lambda| < angle_tol.
DenseMatrix plus_one_projector(const DenseMatrix &u, double angle_tol = 1e-8);

double mean_plus_one(const DenseMatrix &u, const DenseVector &psi);
double mean_plus_one_density(const DenseMatrix &u, const DenseMatrix &rho);

/// Whether U1 and U2 share a +1 eigenvector: the top eigenvalue of P1 P2 P1 is 1.
bool common_plus_one_eigenvector(const DenseMatrix &u1, const DenseMatrix &u2, double tol = 1e-8);

/// Outcome of one randomized lemma suite.
struct PropertyReport {
    std::string name;
    uint64_t seed = 0;
    size_t trials = 0;
    size_t violations = 0;
    double min_slack = 0;           ///< smallest (rhs-side margin) seen; >= -1e-9 when passing
    std::string tightest_instance;  ///< description of the instance achieving min_slack
    size_t trivial_branch = 0;      ///< hinge inactive (uncertainty lemma only)
    size_t active_branch = 0;       ///< hinge active (uncertainty lemma only)
};

constexpr double LEMMA_SLACK = 1e-9;

/// Seed used when none is given.
constexpr uint64_t DEFAULT_SEED = 20260415;

/// Each throws PropertyViolation on a counterexample.
PropertyReport check_lemma_product(size_t trials, uint64_t seed);
PropertyReport check_lemma_fidelity(size_t trials, uint64_t seed);
PropertyReport check_lemma_eigenvalue(size_t trials, uint64_t seed);
PropertyReport check_lemma_incompatible(size_t trials, uint64_t seed);
PropertyReport check_lemma_corr_sum(size_t trials, uint64_t seed);
PropertyReport check_lemma_uncertainty(size_t trials, uint64_t seed);

std::vector<PropertyReport> check_all_lemmas(size_t trials, uint64_t seed);

/// Random operator pairs over every (d, n) with d^n <= max_dim: products, adjoints,
/// powers, commutation phases and supports against the definitional action on states.
/// Each trial counts one pair. Throws PropertyViolation on a mismatch above 1e-10.
PropertyReport check_pauli_equivalence(size_t trials, uint64_t seed, size_t max_dim = 4096);

/// g_i |G> = |G> for every class with n <= max_enumerated_n and d^n <= enumerated_dim,
/// plus `samples` random labeled graphs for every other (d, n) with d^n <= max_dim.
/// Both graph-state constructions are compared as well. Each trial counts one graph.
PropertyReport check_graph_state_stabilization(
    uint64_t seed,
    size_t max_dim = 4096,
    int max_enumerated_n = 4,
    size_t enumerated_dim = 1024,
    size_t samples = 20);

}  // namespace netcert

#endif
