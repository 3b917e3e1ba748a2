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

#include "netcert/oracle.h"

#include <cstdlib>

#include "gtest/gtest.h"

#include "netcert/errors.h"
#include "netcert/stabilizer.h"
#include "test_util.test.h"

using namespace netcert;
using namespace netcert_test;

TEST(oracle, dense_matches_reference_kronecker) {
    std::mt19937_64 rng(61);
    for (int d = 2; d <= 5; d++) {
        for (int n = 1; n <= 3; n++) {
            for (int trial = 0; trial < 10; trial++) {
                auto p = random_pauli(rng, d, n);
                ASSERT_LT((dense(p, n) - reference_matrix(p, vertices(n))).norm(), 1e-12);
            }
        }
    }
    auto p = PauliOperator::x_on(2, original(3));
    ASSERT_THROW(dense(p, 2), StructureError);
}

TEST(oracle, apply_matches_dense) {
    std::mt19937_64 rng(67);
    for (int d = 2; d <= 4; d++) {
        for (int n = 1; n <= 3; n++) {
            auto order = vertices(n);
            for (int trial = 0; trial < 10; trial++) {
                auto p = random_pauli(rng, d, n);
                DenseVector v = DenseVector::Random(reference_matrix(p, order).rows());
                ASSERT_LT((apply(p, order, v) - reference_matrix(p, order) * v).norm(), 1e-12);
            }
        }
    }
}

TEST(oracle, dimension_cap) {
    ASSERT_EQ(checked_dimension(3, 4, 100), 81u);
    ASSERT_THROW(checked_dimension(3, 5, 100), ResourceError);
    ASSERT_THROW(checked_dimension(2, 200, 4096), ResourceError);
    const char *old = std::getenv("NETCERT_CAP");
    std::string saved = old ? old : "";
    setenv("NETCERT_CAP", "64", 1);
    ASSERT_EQ(dense_cap(), 64u);
    ASSERT_THROW(dense(PauliOperator::x_on(2, original(0)), 7), ResourceError);
    unsetenv("NETCERT_CAP");
    ASSERT_EQ(dense_cap(), 4096u);
    if (old) {
        setenv("NETCERT_CAP", saved.c_str(), 1);
    }
}

TEST(oracle, graph_state_constructions_agree) {
    std::vector<Multigraph> graphs;
    for (int n = 1; n <= 6; n++) {
        for (const auto &g : connected_multigraph_classes(n, 2)) {
            graphs.push_back(g);
        }
    }
    for (int d = 3; d <= 9; d++) {
        for (const auto &g : connected_multigraph_classes(3, d)) {
            graphs.push_back(g);
        }
    }
    for (const auto &g : graphs) {
        DenseVector psi = build_graph_state(g);
        DenseVector ref = reference_graph_state(g);
        ASSERT_LT((psi - ref).norm(), 1e-10) << g.str();
        DenseVector projected = build_graph_state_by_projection(g, 5);
        ASSERT_LT((projected - ref).norm(), 1e-10) << g.str();
        auto order = vertices(g.size());
        for (int i = 0; i < g.size(); i++) {
            ASSERT_LT((apply(graph_generator(g, i), order, psi) - psi).norm(), 1e-10);
        }
    }
}

TEST(oracle, ghz_state) {
    DenseVector psi = ghz_state(3);
    ASSERT_EQ(psi.size(), 27);
    ASSERT_NEAR(psi.norm(), 1, 1e-12);
    ASSERT_NEAR(std::abs(psi[13]), 1 / std::sqrt(3.0), 1e-12);
}

TEST(oracle, projector_examples) {
    DenseMatrix id = DenseMatrix::Identity(4, 4);
    ASSERT_LT((plus_one_projector(id) - id).norm(), 1e-12);
    DenseVector plus = DenseVector::Ones(2) / std::sqrt(2.0);
    DenseMatrix z = dense(PauliOperator::z_on(2, original(0)), 1);
    ASSERT_NEAR(mean_plus_one(z, plus), 0.5, 1e-12);
    ASSERT_NEAR(mean_plus_one(id, DenseVector::Unit(4, 2)), 1, 1e-12);
    DenseMatrix x = dense(PauliOperator::x_on(3, original(0)), 1);
    ASSERT_NEAR(plus_one_projector(x).trace().real(), 1, 1e-12);
    DenseMatrix minus = -DenseMatrix::Identity(3, 3);
    ASSERT_LT(plus_one_projector(minus).norm(), 1e-12);
}

TEST(oracle, generators_have_mean_one_on_graph_states) {
    for (int d = 2; d <= 3; d++) {
        for (int n = 2; n <= 4; n++) {
            for (const auto &g : connected_multigraph_classes(n, d)) {
                DenseVector psi = build_graph_state(g);
                for (int i = 0; i < n; i++) {
                    ASSERT_NEAR(mean_plus_one(dense(graph_generator(g, i), n), psi), 1, 1e-10) << g.str();
                }
            }
        }
    }
}

TEST(oracle, projector_properties) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; trial++) {
        int d = 2 + static_cast<int>(rng() % 3);
        int n = 1 + static_cast<int>(rng() % 2);
        auto p = random_pauli(rng, d, n);
        DenseMatrix u = dense(p, n);
        DenseMatrix proj = plus_one_projector(u);
        ASSERT_LT((proj * proj - proj).norm(), 1e-12);
        ASSERT_LT((proj - proj.adjoint()).norm(), 1e-12);
        ASSERT_LT((u * proj - proj).norm(), 1e-10);
        DenseVector v = DenseVector::Random(u.rows()).normalized();
        double m = mean_plus_one(u, v);
        ASSERT_GE(m, -1e-12);
        ASSERT_LE(m, 1 + 1e-12);
        DenseMatrix rho = v * v.adjoint();
        ASSERT_NEAR(mean_plus_one_density(u, rho), m, 1e-12);
    }
}

TEST(oracle, common_eigenvector) {
    DenseMatrix z = dense(PauliOperator::z_on(3, original(0)), 1);
    DenseMatrix x = dense(PauliOperator::x_on(3, original(0)), 1);
    ASSERT_TRUE(common_plus_one_eigenvector(z, z));
    ASSERT_FALSE(common_plus_one_eigenvector(x, z));
    // Commuting two-site operators share a +1 eigenvector.
    auto xx = PauliOperator::x_on(2, original(0)) * PauliOperator::x_on(2, original(1));
    auto zz = PauliOperator::z_on(2, original(0)) * PauliOperator::z_on(2, original(1));
    ASSERT_TRUE(common_plus_one_eigenvector(dense(xx, 2), dense(zz, 2)));
    // A Weyl pair with nontrivial commutation phase never does.
    for (int d = 2; d <= 6; d++) {
        for (int k = 1; k < d; k++) {
            auto a = PauliOperator::x_on(d, original(0), k);
            auto b = PauliOperator::z_on(d, original(0));
            ASSERT_NE(commutation_phase(a, b), 0);
            ASSERT_FALSE(common_plus_one_eigenvector(dense(a, 1), dense(b, 1)));
        }
    }
}

TEST(oracle, lemma_suites_have_no_violations) {
    auto reports = check_all_lemmas(1000, DEFAULT_SEED);
    ASSERT_EQ(reports.size(), 6u);
    for (const auto &r : reports) {
        ASSERT_EQ(r.trials, 1000u) << r.name;
        ASSERT_EQ(r.violations, 0u) << r.name;
        ASSERT_GE(r.min_slack, -LEMMA_SLACK) << r.name << ": " << r.tightest_instance;
        ASSERT_EQ(r.seed, DEFAULT_SEED);
    }
    const auto &uncertainty = reports.back();
    ASSERT_EQ(uncertainty.name, "uncertainty");
    ASSERT_GT(uncertainty.trivial_branch, 0u);
    ASSERT_GT(uncertainty.active_branch, 0u);
}

TEST(oracle, lemma_suites_are_reproducible) {
    auto a = check_lemma_corr_sum(200, 99);
    auto b = check_lemma_corr_sum(200, 99);
    ASSERT_EQ(a.min_slack, b.min_slack);
    ASSERT_EQ(a.tightest_instance, b.tightest_instance);
}

TEST(oracle, symbolic_dense_equivalence) {
    auto pauli = check_pauli_equivalence(1000, DEFAULT_SEED, 4096);
    ASSERT_EQ(pauli.trials, 1000u);
    ASSERT_EQ(pauli.violations, 0u);
    auto states = check_graph_state_stabilization(DEFAULT_SEED, 256, 4, 256, 5);
    ASSERT_GT(states.trials, 100u);
    ASSERT_EQ(states.violations, 0u);
}
