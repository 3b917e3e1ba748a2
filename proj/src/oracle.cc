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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>

#include "netcert/errors.h"
#include "netcert/modular.h"
#include "netcert/stabilizer.h"

namespace netcert {

size_t dense_cap() {
    const char *env = std::getenv("NETCERT_CAP");
    if (env == nullptr || *env == '\0') {
        return 4096;
    }
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        throw RangeError(std::string("NETCERT_CAP must be a positive integer, got '") + env + "'");
    }
    return static_cast<size_t>(v);
}

size_t checked_dimension(int d, size_t k, size_t cap) {
    size_t dim = 1;
    for (size_t i = 0; i < k; i++) {
        if (dim > cap / static_cast<size_t>(d)) {
            throw ResourceError(
                "dense dimension " + std::to_string(d) + "^" + std::to_string(k) + " exceeds cap " + std::to_string(cap));
        }
        dim *= static_cast<size_t>(d);
    }
    if (dim > cap) {
        throw ResourceError("dense dimension exceeds cap " + std::to_string(cap));
    }
    return dim;
}

std::vector<Party> original_parties(int n) {
    std::vector<Party> result;
    for (int v = 0; v < n; v++) {
        result.push_back(original(v));
    }
    return result;
}

namespace {

Complex root_of_unity(long long k, int order) {
    double angle = 2 * std::numbers::pi * static_cast<double>(mod(k, order)) / order;
    return std::polar(1.0, angle);
}

/// Per-party exponents aligned with `order`, checking that P does not act elsewhere.
std::vector<SiteExponents> aligned_exponents(const PauliOperator &p, const std::vector<Party> &order) {
    std::vector<SiteExponents> result;
    size_t matched = 0;
    for (const Party &party : order) {
        SiteExponents e = p.at(party);
        matched += e.x != 0 || e.z != 0;
        result.push_back(e);
    }
    if (matched != p.sites().size()) {
        throw StructureError("operator acts outside the listed parties");
    }
    return result;
}

}  // namespace

DenseVector apply(const PauliOperator &p, const std::vector<Party> &order, const DenseVector &psi) {
    int d = p.dimension();
    size_t dim = checked_dimension(d, order.size());
    if (static_cast<size_t>(psi.size()) != dim) {
        throw DimensionError("state has the wrong dimension");
    }
    auto exps = aligned_exponents(p, order);
    Complex global = std::polar(1.0, std::numbers::pi * p.phase_exp() / d);
    DenseVector out = DenseVector::Zero(static_cast<Eigen::Index>(dim));
    std::vector<int> digits(order.size(), 0);
    for (size_t q = 0; q < dim; q++) {
        // Digits of q, most significant first.
        size_t rem = q;
        for (size_t k = order.size(); k-- > 0;) {
            digits[k] = static_cast<int>(rem % d);
            rem /= d;
        }
        long long zphase = 0;
        size_t target = 0;
        for (size_t k = 0; k < order.size(); k++) {
            zphase += static_cast<long long>(exps[k].z) * digits[k];
            target = target * d + static_cast<size_t>((digits[k] + exps[k].x) % d);
        }
        out[static_cast<Eigen::Index>(target)] += global * root_of_unity(zphase, d) * psi[static_cast<Eigen::Index>(q)];
    }
    return out;
}

DenseMatrix dense(const PauliOperator &p, const std::vector<Party> &order) {
    int d = p.dimension();
    checked_dimension(d, order.size());
    auto exps = aligned_exponents(p, order);
    DenseMatrix result = DenseMatrix::Identity(1, 1) * std::polar(1.0, std::numbers::pi * p.phase_exp() / d);
    for (const SiteExponents &e : exps) {
        DenseMatrix x = DenseMatrix::Zero(d, d);
        DenseMatrix z = DenseMatrix::Zero(d, d);
        for (int q = 0; q < d; q++) {
            x((q + 1) % d, q) = 1;
            z(q, q) = root_of_unity(q, d);
        }
        DenseMatrix local = DenseMatrix::Identity(d, d);
        for (int k = 0; k < e.x; k++) {
            local = local * x;
        }
        for (int k = 0; k < e.z; k++) {
            local = local * z;
        }
        DenseMatrix next(result.rows() * d, result.cols() * d);
        for (Eigen::Index r = 0; r < result.rows(); r++) {
            for (Eigen::Index c = 0; c < result.cols(); c++) {
                next.block(r * d, c * d, d, d) = result(r, c) * local;
            }
        }
        result = std::move(next);
    }
    return result;
}

DenseMatrix dense(const PauliOperator &p, int n) {
    return dense(p, original_parties(n));
}

DenseVector build_graph_state(const Multigraph &g) {
    int d = g.dimension();
    int n = g.size();
    size_t dim = checked_dimension(d, static_cast<size_t>(n));
    DenseVector psi(static_cast<Eigen::Index>(dim));
    double amp = 1 / std::sqrt(static_cast<double>(dim));
    std::vector<int> digits(static_cast<size_t>(n));
    for (size_t q = 0; q < dim; q++) {
        size_t rem = q;
        for (int k = n; k-- > 0;) {
            digits[k] = static_cast<int>(rem % d);
            rem /= d;
        }
        long long phase = 0;
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                phase += static_cast<long long>(g.multiplicity(i, j)) * digits[i] * digits[j];
            }
        }
        psi[static_cast<Eigen::Index>(q)] = amp * root_of_unity(phase, d);
    }
    return psi;
}

DenseVector build_graph_state_by_projection(const Multigraph &g, uint64_t seed) {
    int d = g.dimension();
    int n = g.size();
    size_t dim = checked_dimension(d, static_cast<size_t>(n));
    auto order = original_parties(n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    DenseVector psi(static_cast<Eigen::Index>(dim));
    for (auto &a : psi) {
        a = Complex(normal(rng), normal(rng));
    }
    for (Vertex i = 0; i < n; i++) {
        PauliOperator gi = graph_generator(g, i);
        DenseVector acc = psi;
        DenseVector cur = psi;
        for (int k = 1; k < d; k++) {
            cur = apply(gi, order, cur);
            acc += cur;
        }
        psi = acc / static_cast<double>(d);
    }
    double norm = psi.norm();
    if (norm < 1e-9) {
        throw PropertyViolation("projection onto the stabilized subspace vanished");
    }
    psi /= norm;
    Complex lead = psi[0];
    if (std::abs(lead) > 1e-12) {
        psi *= std::conj(lead) / std::abs(lead);
    }
    return psi;
}

DenseVector ghz_state(int d) {
    size_t dim = checked_dimension(d, 3);
    DenseVector psi = DenseVector::Zero(static_cast<Eigen::Index>(dim));
    for (int q = 0; q < d; q++) {
        psi[static_cast<Eigen::Index>(q * d * d + q * d + q)] = 1 / std::sqrt(static_cast<double>(d));
    }
    return psi;
}

DenseMatrix plus_one_projector(const DenseMatrix &u, double angle_tol) {
    if (u.rows() != u.cols()) {
        throw DimensionError("projector needs a square matrix");
    }
    Eigen::ComplexSchur<DenseMatrix> schur(u);
    const DenseMatrix &t = schur.matrixT();
    const DenseMatrix &q = schur.matrixU();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < t.rows(); k++) {
        if (std::abs(std::arg(t(k, k))) < angle_tol && std::abs(std::abs(t(k, k)) - 1) < 1e-6) {
            keep.push_back(k);
        }
    }
    DenseMatrix basis(u.rows(), static_cast<Eigen::Index>(keep.size()));
    for (size_t c = 0; c < keep.size(); c++) {
        basis.col(static_cast<Eigen::Index>(c)) = q.col(keep[c]);
    }
    return basis * basis.adjoint();
}

double mean_plus_one(const DenseMatrix &u, const DenseVector &psi) {
    return std::clamp(psi.dot(plus_one_projector(u) * psi).real(), 0.0, 1.0);
}

double mean_plus_one_density(const DenseMatrix &u, const DenseMatrix &rho) {
    return std::clamp((plus_one_projector(u) * rho).trace().real(), 0.0, 1.0);
}

bool common_plus_one_eigenvector(const DenseMatrix &u1, const DenseMatrix &u2, double tol) {
    if (u1.rows() != u2.rows()) {
        throw DimensionError("operators have different dimensions");
    }
    DenseMatrix p1 = plus_one_projector(u1);
    DenseMatrix p2 = plus_one_projector(u2);
    DenseMatrix m = p1 * p2 * p1;
    m = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(m, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().maxCoeff() > 1 - tol;
}

// ---------------------------------------------------------------------------
// Randomized lemma suites.

namespace {

using Rng = std::mt19937_64;

DenseMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
    std::normal_distribution<double> normal;
    DenseMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; r++) {
        for (Eigen::Index c = 0; c < cols; c++) {
            m(r, c) = Complex(normal(rng), normal(rng));
        }
    }
    return m;
}

DenseMatrix random_unitary(Eigen::Index dim, Rng &rng) {
    Eigen::HouseholderQR<DenseMatrix> qr(random_gaussian(dim, dim, rng));
    return qr.householderQ() * DenseMatrix::Identity(dim, dim);
}

DenseMatrix random_density(Eigen::Index dim, Rng &rng) {
    Eigen::Index rank = std::uniform_int_distribution<Eigen::Index>(1, dim)(rng);
    DenseMatrix a = random_gaussian(dim, rank, rng);
    DenseMatrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

DenseMatrix pure(const DenseVector &psi) {
    return psi * psi.adjoint();
}

Complex expect(const DenseMatrix &op, const DenseMatrix &rho) {
    return (rho * op).trace();
}

DenseMatrix re_part(const DenseMatrix &s) {
    return (s + s.adjoint()) / 2.0;
}

/// Eigenphases mixing exact roots of unity (so +1 eigenvalues occur) and generic angles.
Eigen::VectorXd random_phases(Eigen::Index dim, Rng &rng) {
    std::uniform_real_distribution<double> unit(0, 1);
    int order = std::uniform_int_distribution<int>(1, 6)(rng);
    bool generic = unit(rng) < 0.3;
    Eigen::VectorXd phases(dim);
    for (Eigen::Index k = 0; k < dim; k++) {
        if (generic) {
            phases[k] = 2 * std::numbers::pi * unit(rng);
        } else {
            phases[k] = 2 * std::numbers::pi * std::uniform_int_distribution<int>(0, order - 1)(rng) / order;
        }
    }
    return phases;
}

DenseMatrix diagonal_unitary(const DenseMatrix &basis, const Eigen::VectorXd &phases) {
    DenseVector diag(phases.size());
    for (Eigen::Index k = 0; k < phases.size(); k++) {
        diag[k] = std::polar(1.0, phases[k]);
    }
    return basis * diag.asDiagonal() * basis.adjoint();
}

/// A one-qudit Weyl operator X^a Z^b times a random global phase.
PauliOperator random_weyl(int d, int sites, Rng &rng) {
    std::uniform_int_distribution<int> exp(0, d - 1);
    std::map<Party, SiteExponents> m;
    for (int s = 0; s < sites; s++) {
        m[original(s)] = SiteExponents{exp(rng), exp(rng)};
    }
    return PauliOperator::from_sites(d, m, std::uniform_int_distribution<int>(0, 2 * d - 1)(rng));
}

struct Tracker {
    PropertyReport report;
    bool first = true;

    Tracker(std::string name, uint64_t seed) {
        report.name = std::move(name);
        report.seed = seed;
    }

    void record(double slack, const std::function<std::string()> &describe) {
        report.trials++;
        if (first || slack < report.min_slack) {
            report.min_slack = slack;
            report.tightest_instance = describe();
            first = false;
        }
        if (slack < -LEMMA_SLACK) {
            report.violations++;
            throw PropertyViolation(report.name + " violated by " + std::to_string(slack) + ": " + describe());
        }
    }
};

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

}  // namespace

PropertyReport check_lemma_product(size_t trials, uint64_t seed) {
    Tracker t("product", seed);
    Rng rng(seed);
    for (size_t trial = 0; trial < trials; trial++) {
        Eigen::Index dim = std::uniform_int_distribution<Eigen::Index>(1, 8)(rng);
        DenseMatrix basis = random_unitary(dim, rng);
        DenseMatrix s1 = trial == 0 ? DenseMatrix::Identity(dim, dim) : diagonal_unitary(basis, random_phases(dim, rng));
        DenseMatrix s2 = trial == 0 ? DenseMatrix::Identity(dim, dim) : diagonal_unitary(basis, random_phases(dim, rng));
        DenseMatrix s3 = s1 * s2;
        DenseMatrix rho = random_density(dim, rng);
        DenseMatrix p1 = plus_one_projector(s1);
        DenseMatrix p2 = plus_one_projector(s2);
        double m1 = mean_plus_one_density(s1, rho);
        double m2 = mean_plus_one_density(s2, rho);
        double m3 = mean_plus_one_density(s3, rho);
        double both = (p1 * p2 * rho).trace().real();
        double slack = std::min(m3 - both, both - (m1 + m2 - 1));
        t.record(slack, [&] {
            return "dim=" + std::to_string(dim) + " m1=" + fmt(m1) + " m2=" + fmt(m2) + " m3=" + fmt(m3);
        });
    }
    return t.report;
}

PropertyReport check_lemma_fidelity(size_t trials, uint64_t seed) {
    Tracker t("fidelity", seed);
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0, 1);
    for (size_t trial = 0; trial < trials; trial++) {
        int d = std::uniform_int_distribution<int>(2, 4)(rng);
        int n = std::uniform_int_distribution<int>(2, d == 4 ? 2 : 3)(rng);
        DenseVector sigma;
        PauliOperator s(d);
        std::string what;
        if (n == 3 && unit(rng) < 0.3) {
            sigma = ghz_state(d);
            std::uniform_int_distribution<int> e(0, d - 1);
            int a = e(rng), b = e(rng), c = e(rng);
            s = ghz_stabilizer_element(d, a, b, c);
            what = "ghz d=" + std::to_string(d);
        } else {
            Multigraph g(d, n);
            std::uniform_int_distribution<int> m(0, d - 1);
            for (int i = 0; i < n; i++) {
                for (int j = i + 1; j < n; j++) {
                    g.set_multiplicity(i, j, m(rng));
                }
            }
            sigma = build_graph_state(g);
            std::map<Vertex, long long> exps;
            for (int i = 0; i < n; i++) {
                exps[i] = m(rng);
            }
            s = word(g, exps).op;
            what = "graph " + g.str();
        }
        DenseMatrix op = dense(s, n);
        Eigen::Index dim = op.rows();
        double eps = unit(rng);
        eps = eps * eps * eps;
        DenseMatrix rho = (1 - eps) * pure(sigma) + eps * random_density(dim, rng);
        double fid = sigma.dot(rho * sigma).real();
        double m = mean_plus_one_density(op, rho);
        Complex mean = expect(op, rho);
        double slack = std::min({m - fid, mean.real() - (2 * m - 1), std::abs(mean) - mean.real()});
        t.record(slack, [&] {
            return what + " S=" + s.str() + " F=" + fmt(fid) + " m=" + fmt(m);
        });
    }
    return t.report;
}

namespace {

/// Matrix (i, j) -> <{S_i, S_j^dag}> and its largest eigenvalue.
double anticommutator_lambda_max(const std::vector<DenseMatrix> &ops, const DenseMatrix &rho) {
    Eigen::Index k = static_cast<Eigen::Index>(ops.size());
    DenseMatrix s(k, k);
    for (Eigen::Index i = 0; i < k; i++) {
        for (Eigen::Index j = 0; j < k; j++) {
            DenseMatrix sj = ops[j].adjoint();
            s(i, j) = expect(ops[i] * sj + sj * ops[i], rho);
        }
    }
    s = (s + s.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(s, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().maxCoeff();
}

}  // namespace

PropertyReport check_lemma_eigenvalue(size_t trials, uint64_t seed) {
    Tracker t("eigenvalue", seed);
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0, 1);
    for (size_t trial = 0; trial < trials; trial++) {
        int count = std::uniform_int_distribution<int>(1, 5)(rng);
        int d = std::uniform_int_distribution<int>(2, 5)(rng);
        int sites = d <= 3 ? std::uniform_int_distribution<int>(1, 2)(rng) : 1;
        bool weyl = unit(rng) < 0.7;
        Eigen::Index dim = static_cast<Eigen::Index>(std::pow(d, sites));
        std::vector<DenseMatrix> ops;
        for (int i = 0; i < count; i++) {
            ops.push_back(weyl ? dense(random_weyl(d, sites, rng), sites) : random_unitary(dim, rng));
        }
        DenseMatrix rho = random_density(dim, rng);
        double lhs = 0;
        for (const auto &op : ops) {
            lhs += std::norm(expect(op, rho));
        }
        double rhs = anticommutator_lambda_max(ops, rho) / 2;
        t.record(rhs - lhs, [&] {
            return std::to_string(count) + (weyl ? " Weyl" : " unitary") + " operators, dim=" + std::to_string(dim) +
                   " sum=" + fmt(lhs) + " bound=" + fmt(rhs);
        });
    }
    return t.report;
}

namespace {

/// theta in (-pi, pi] with S1 S2 = -e^{i theta} S2 S1, read off numerically.
double anticommutation_angle(const DenseMatrix &s1, const DenseMatrix &s2) {
    DenseMatrix lhs = s1 * s2;
    DenseMatrix rhs = s2 * s1;
    Complex c = (rhs.adjoint() * lhs).trace() / static_cast<double>(s1.rows());
    double theta = std::arg(-c);
    if (theta <= -std::numbers::pi) {
        theta += 2 * std::numbers::pi;
    }
    return theta;
}

}  // namespace

PropertyReport check_lemma_incompatible(size_t trials, uint64_t seed) {
    Tracker t("incompatible", seed);
    Rng rng(seed);
    for (size_t trial = 0; trial < trials; trial++) {
        int d = std::uniform_int_distribution<int>(2, 5)(rng);
        int sites = d <= 3 ? std::uniform_int_distribution<int>(1, 2)(rng) : 1;
        int count = std::uniform_int_distribution<int>(2, 5)(rng);
        Eigen::Index dim = static_cast<Eigen::Index>(std::pow(d, sites));
        std::vector<DenseMatrix> ops;
        if (trial == 0) {
            // The anticommuting qubit pair X, Z.
            d = 2, sites = 1, count = 2, dim = 2;
            ops.push_back(dense(PauliOperator::x_on(2, original(0)), 1));
            ops.push_back(dense(PauliOperator::z_on(2, original(0)), 1));
        } else {
            DenseMatrix frame = random_unitary(dim, rng);
            for (int i = 0; i < count; i++) {
                ops.push_back(frame * dense(random_weyl(d, sites, rng), sites) * frame.adjoint());
            }
        }
        double theta = 0;
        for (int i = 0; i < count; i++) {
            for (int j = 0; j < count; j++) {
                if (i != j) {
                    theta = std::max(theta, std::abs(anticommutation_angle(ops[i], ops[j])));
                }
            }
        }
        DenseMatrix rho = random_density(dim, rng);
        double lambda = anticommutator_lambda_max(ops, rho);
        double bound = 2 * (1 + (count - 1) * std::sin(theta / 2));
        t.record(bound - lambda, [&] {
            return std::to_string(count) + " Weyl operators, d=" + std::to_string(d) + " theta=" + fmt(theta) +
                   " lambda=" + fmt(lambda) + " bound=" + fmt(bound);
        });
    }
    return t.report;
}

PropertyReport check_lemma_corr_sum(size_t trials, uint64_t seed) {
    Tracker t("corr_sum", seed);
    Rng rng(seed);
    for (size_t trial = 0; trial < trials; trial++) {
        Eigen::Index dim = std::uniform_int_distribution<Eigen::Index>(1, 8)(rng);
        DenseMatrix basis = random_unitary(dim, rng);
        DenseMatrix s1 = diagonal_unitary(basis, random_phases(dim, rng));
        DenseMatrix s2 = diagonal_unitary(basis, random_phases(dim, rng));
        DenseMatrix s3 = s1 * s2;
        DenseMatrix rho = random_density(dim, rng);
        double r1 = expect(re_part(s1), rho).real();
        double r2 = expect(re_part(s2), rho).real();
        double r3 = expect(re_part(s3), rho).real();
        double a1 = std::norm(expect(s1, rho));
        double a2 = std::norm(expect(s2, rho));
        double a3 = std::norm(expect(s3, rho));
        // Populations of rho in the joint eigenbasis.
        DenseMatrix local = basis.adjoint() * rho * basis;
        double purity_of_populations = 0;
        for (Eigen::Index k = 0; k < dim; k++) {
            purity_of_populations += std::norm(local(k, k).real());
        }
        double mean_slack = r3 - (r1 + r2 - 1.5);
        double sharp_slack = (a3 - a1 - a2) + (3 - purity_of_populations) / 2;
        double dim_slack = (a3 - a1 - a2) + (3 - 1.0 / static_cast<double>(dim)) / 2;
        // The printed inequality is strict; the sharp form shows the margin is at least sum p_j^2 / 2 > 0.
        double strict_slack = (a3 - a1 - a2 + 1.5) - purity_of_populations / 2;
        t.record(std::min({mean_slack, sharp_slack, dim_slack, strict_slack}), [&] {
            return "dim=" + std::to_string(dim) + " Re: " + fmt(r1) + "," + fmt(r2) + "," + fmt(r3) + " |.|^2: " + fmt(a1) +
                   "," + fmt(a2) + "," + fmt(a3);
        });
    }
    return t.report;
}

PropertyReport check_lemma_uncertainty(size_t trials, uint64_t seed) {
    Tracker t("uncertainty", seed);
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0, 1);
    for (size_t trial = 0; trial < trials; trial++) {
        int d = std::uniform_int_distribution<int>(2, 7)(rng);
        int sites = d <= 3 ? std::uniform_int_distribution<int>(1, 2)(rng) : 1;
        Eigen::Index dim = static_cast<Eigen::Index>(std::pow(d, sites));
        DenseMatrix frame = random_unitary(dim, rng);
        DenseMatrix s1 = frame * dense(random_weyl(d, sites, rng), sites) * frame.adjoint();
        DenseMatrix s2 = frame * dense(random_weyl(d, sites, rng), sites) * frame.adjoint();
        DenseMatrix re1 = re_part(s1);
        DenseMatrix re2 = re_part(s2);
        DenseMatrix rho;
        if (unit(rng) < 0.5) {
            rho = random_density(dim, rng);
        } else {
            // Push toward large <Re S1><Re S2> so the hinge is active.
            DenseMatrix sum = re1 + re2;
            Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(sum);
            DenseVector top = eig.eigenvectors().col(dim - 1);
            double noise = 0.2 * unit(rng);
            rho = (1 - noise) * pure(top) + noise * random_density(dim, rng);
        }
        double theta = anticommutation_angle(s1, s2);
        double m1 = expect(re1, rho).real();
        double m2 = expect(re2, rho).real();
        double v1 = expect(re1 * re1, rho).real() - m1 * m1;
        double v2 = expect(re2 * re2, rho).real() - m2 * m2;
        double hinge = m1 * m2 - std::abs(std::sin(theta / 2));
        if (hinge > 0) {
            t.report.active_branch++;
        } else {
            t.report.trivial_branch++;
        }
        double rhs = std::max(0.0, hinge);
        t.record(v1 * v2 - rhs * rhs, [&] {
            return "d=" + std::to_string(d) + " theta=" + fmt(theta) + " <Re S1>=" + fmt(m1) + " <Re S2>=" + fmt(m2) +
                   " var product=" + fmt(v1 * v2);
        });
    }
    return t.report;
}

std::vector<PropertyReport> check_all_lemmas(size_t trials, uint64_t seed) {
    return {
        check_lemma_product(trials, seed),
        check_lemma_fidelity(trials, seed),
        check_lemma_eigenvalue(trials, seed),
        check_lemma_incompatible(trials, seed),
        check_lemma_corr_sum(trials, seed),
        check_lemma_uncertainty(trials, seed),
    };
}

PropertyReport check_pauli_equivalence(size_t trials, uint64_t seed, size_t max_dim) {
    Tracker t("pauli_equivalence", seed);
    Rng rng(seed);
    std::vector<std::pair<int, int>> shapes;
    for (int d = 2; static_cast<size_t>(d) <= max_dim; d++) {
        size_t dim = static_cast<size_t>(d);
        for (int n = 1; dim <= max_dim; n++, dim *= static_cast<size_t>(d)) {
            shapes.emplace_back(d, n);
        }
    }
    if (shapes.empty()) {
        throw RangeError("max_dim admits no operator");
    }
    std::normal_distribution<double> normal;
    for (size_t trial = 0; trial < trials; trial++) {
        auto [d, n] = shapes[trial % shapes.size()];
        auto order = original_parties(n);
        std::uniform_int_distribution<int> exp(0, d - 1);
        std::uniform_real_distribution<double> unit(0, 1);
        auto random_op = [&] {
            std::map<Party, SiteExponents> m;
            for (int s = 0; s < n; s++) {
                if (unit(rng) < 0.7) {
                    m[original(s)] = SiteExponents{exp(rng), exp(rng)};
                }
            }
            return PauliOperator::from_sites(d, m, std::uniform_int_distribution<int>(0, 2 * d - 1)(rng));
        };
        PauliOperator p = random_op();
        PauliOperator q = random_op();
        Eigen::Index dim = static_cast<Eigen::Index>(checked_dimension(d, static_cast<size_t>(n), max_dim));
        DenseVector v(dim);
        for (auto &a : v) {
            a = Complex(normal(rng), normal(rng));
        }
        v.normalize();
        auto act = [&](const PauliOperator &op, const DenseVector &x) {
            return apply(op, order, x);
        };
        double err = 0;
        err = std::max(err, (act(p * q, v) - act(p, act(q, v))).norm());
        int k = commutation_phase(p, q);
        err = std::max(err, (act(p, act(q, v)) - root_of_unity(k, d) * act(q, act(p, v))).norm());
        err = std::max(err, (act(dagger(p), act(p, v)) - v).norm());
        int power_t = std::uniform_int_distribution<int>(-2 * d, 2 * d)(rng);
        DenseVector repeated = v;
        PauliOperator step = power_t >= 0 ? p : dagger(p);
        for (int i = 0; i < std::abs(power_t); i++) {
            repeated = act(step, repeated);
        }
        err = std::max(err, (act(power(p, power_t), v) - repeated).norm());
        if (dim <= 64) {
            DenseMatrix mp = dense(p, order);
            DenseMatrix mq = dense(q, order);
            err = std::max(err, (dense(p * q, order) - mp * mq).norm());
            err = std::max(err, (mp * mp.adjoint() - DenseMatrix::Identity(dim, dim)).norm());
        }
        // A site is outside the support iff the operator commutes with X and Z there.
        PauliOperator pq = p * q;
        std::set<Party> sp = support(p), sq = support(q), spq = support(pq);
        bool support_ok = true;
        for (const Party &s : order) {
            PauliOperator xs = PauliOperator::x_on(d, s);
            PauliOperator zs = PauliOperator::z_on(d, s);
            bool trivial = (act(pq, act(xs, v)) - act(xs, act(pq, v))).norm() < 1e-10 &&
                           (act(pq, act(zs, v)) - act(zs, act(pq, v))).norm() < 1e-10;
            support_ok &= trivial != (spq.count(s) > 0);
            support_ok &= !spq.count(s) || sp.count(s) || sq.count(s);
        }
        double slack = support_ok ? 1e-10 - err : -1;
        t.record(slack, [&] {
            return "d=" + std::to_string(d) + " n=" + std::to_string(n) + " P=" + p.str() + " Q=" + q.str() +
                   " err=" + fmt(err);
        });
    }
    return t.report;
}

PropertyReport check_graph_state_stabilization(
    uint64_t seed, size_t max_dim, int max_enumerated_n, size_t enumerated_dim, size_t samples) {
    Tracker t("graph_state_stabilization", seed);
    Rng rng(seed);
    auto check = [&](const Multigraph &g) {
        DenseVector psi = build_graph_state(g);
        auto order = original_parties(g.size());
        double err = 0;
        for (Vertex i = 0; i < g.size(); i++) {
            err = std::max(err, (apply(graph_generator(g, i), order, psi) - psi).norm());
        }
        DenseVector other = build_graph_state_by_projection(g, rng());
        Complex lead = psi[0];
        DenseVector aligned = psi * (std::conj(lead) / std::abs(lead));
        err = std::max(err, (aligned - other).norm());
        t.record(1e-10 - err, [&] {
            return g.str() + " err=" + fmt(err);
        });
    };
    for (int d = 2; static_cast<size_t>(d) * d <= max_dim; d++) {
        size_t dim = static_cast<size_t>(d) * d;
        for (int n = 2; dim <= max_dim; n++, dim *= static_cast<size_t>(d)) {
            if (n <= max_enumerated_n && dim <= enumerated_dim) {
                enumerate_connected_multigraphs(n, d, [&](const Multigraph &g) {
                    check(g);
                    return true;
                });
                continue;
            }
            std::uniform_int_distribution<int> m(0, d - 1);
            for (size_t s = 0; s < samples; s++) {
                Multigraph g(d, n);
                for (int i = 0; i < n; i++) {
                    for (int j = i + 1; j < n; j++) {
                        g.set_multiplicity(i, j, m(rng));
                    }
                }
                check(g);
            }
        }
    }
    return t.report;
}

}  // namespace netcert
