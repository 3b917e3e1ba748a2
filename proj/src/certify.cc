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

#include "netcert/certify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

#include "netcert/errors.h"
#include "netcert/modular.h"
#include "netcert/oracle.h"

namespace netcert {

PowerSelection select_power_t(long long m, int d) {
    if (d < 2) {
        throw RangeError("dimension must be at least 2");
    }
    long long r = mod(m, d);
    if (r == 0) {
        throw DegenerateMultiplicity("multiplicity " + std::to_string(m) + " is 0 mod " + std::to_string(d));
    }
    long long g = std::gcd(r, static_cast<long long>(d));
    int mp = static_cast<int>(r / g);
    int dp = static_cast<int>(d / g);
    long long t0 = mod_inverse(mp, dp);
    PowerSelection s;
    s.t = t0 * (dp / 2);
    s.cos_value = dp % 2 == 0 ? 0.0 : std::sin(std::numbers::pi / (2 * dp));
    return s;
}

double abs_cos_phase(long long k, int d) {
    long long r = mod(k, 2 * d);
    long long g = std::gcd(r, static_cast<long long>(d));
    long long p = r / g;
    long long q = d / g;
    // The angle is p pi / q in lowest terms.
    if (q == 1) {
        return 1.0;
    }
    if (q == 2) {
        return 0.0;
    }
    if (q == 3) {
        return 0.5;
    }
    return std::abs(std::cos(std::numbers::pi * static_cast<double>(p) / static_cast<double>(q)));
}

double fidelity_bound_from_lambda(double lambda_prime) {
    if (!(lambda_prime >= 0 && lambda_prime <= 2)) {
        throw RangeError("lambda' must lie in [0, 2]");
    }
    return (7 + std::sqrt(4 + 5 * lambda_prime / 2)) / 10;
}

const char *method_name(Method m) {
    return m == Method::obs1 ? "obs1" : "obs4";
}

Multigraph apply_lc_path(const Multigraph &g, const std::vector<Vertex> &path) {
    Multigraph w = g;
    for (Vertex a : path) {
        w = local_complement(w, a);
    }
    return w;
}

Multigraph working_graph(const Certificate &cert) {
    return apply_lc_path(cert.graph, cert.lc_path);
}

namespace {

std::set<Vertex> unite(std::initializer_list<std::set<Vertex>> parts) {
    std::set<Vertex> out;
    for (const auto &p : parts) {
        out.insert(p.begin(), p.end());
    }
    return out;
}

std::set<Party> parties_of(const std::set<Vertex> &vs) {
    std::set<Party> out;
    for (Vertex v : vs) {
        out.insert(original(v));
    }
    return out;
}

std::set<Party> all_parties(int n) {
    std::set<Party> out;
    for (Vertex v = 0; v < n; v++) {
        out.insert(original(v));
    }
    return out;
}

std::string triple_str(const Triple &t) {
    return "(A=" + std::to_string(t.a) + ",B=" + std::to_string(t.b) + ",C=" + std::to_string(t.c) + ") " +
           kind_name(t.kind);
}

/// Fills operators, kappa, lambda' and the bound from the exponent maps of S1, S2, S4.
Certificate assemble(
    Method method,
    const Multigraph &input,
    const std::vector<Vertex> &lc_path,
    const Multigraph &working,
    const Triple &triple,
    const std::array<std::set<Vertex>, 4> &groups,
    const std::map<Vertex, long long> &e1,
    const std::map<Vertex, long long> &e2,
    const std::map<Vertex, long long> &e4,
    std::map<std::string, long long> exponents) {
    Certificate c;
    c.method = method;
    c.graph = input;
    c.lc_path = lc_path;
    c.triple = triple;
    c.groups = groups;
    std::map<Vertex, long long> e3 = e1;
    for (const auto &[v, e] : e2) {
        e3[v] += e;
    }
    c.operators = {word(working, e1), word(working, e2), word(working, e3), word(working, e4)};
    c.s4_prime_relabel = copy_relabeling(parties_of(groups[0]));
    c.exponents = std::move(exponents);
    PauliOperator s4p = relabel(c.operators[3].op, c.s4_prime_relabel);
    c.kappa = commutation_phase(c.operators[2].op, s4p);
    c.lambda_prime = 2 * abs_cos_phase(c.kappa, working.dimension());
    c.fidelity_bound = fidelity_bound_from_lambda(c.lambda_prime);
    return c;
}

/// Symbolic checks only; used to gate every certificate before it is returned.
bool self_check(const Certificate &c) {
    VerifyOptions symbolic;
    symbolic.dense_limit = 0;
    return verify_obs3(c, symbolic).all_passed();
}

void require_search_preconditions(const Multigraph &g) {
    if (g.size() < 3) {
        throw StructureError("certification needs at least 3 vertices");
    }
    if (!is_connected(g)) {
        throw StructureError("certification needs a connected graph");
    }
}

CertifyResult constant_on(const Multigraph &input, const std::vector<Vertex> &lc_path, const Multigraph &g) {
    NotCertified failure;
    int d = g.dimension();
    for (const Triple &tr : find_angle_or_triangle(g)) {
        int m = g.multiplicity(tr.a, tr.b);
        PowerSelection sel = select_power_t(m, d);
        NeighborhoodPartition p = partition_neighborhoods(g, tr.a, tr.b, tr.c);
        std::array<std::set<Vertex>, 4> groups;
        std::map<Vertex, long long> e1, e2, e4;
        if (tr.kind == TripleKind::triangle) {
            groups = {
                unite({{tr.c}, p.e_c}),
                unite({{tr.b}, p.j_ca}),
                unite({{tr.a}, p.j_bc, p.t_abc}),
                unite({p.e_a, p.e_b, p.j_ab, p.rest})};
            e1 = {{tr.a, 1}, {tr.b, -1}};
            e2 = {{tr.a, -1}, {tr.c, 1}};
            e4 = {{tr.c, sel.t}};
        } else {
            groups = {
                unite({{tr.b}, p.j_ab}),
                unite({{tr.c}, p.j_ca}),
                unite({{tr.a}, p.e_a, p.t_abc}),
                unite({p.e_b, p.e_c, p.j_bc, p.rest})};
            e1 = {{tr.c, -1}};
            e2 = {{tr.b, 1}};
            e4 = {{tr.a, sel.t}};
        }
        Certificate c = assemble(Method::obs1, input, lc_path, g, tr, groups, e1, e2, e4, {{"m", m}, {"t", sel.t}});
        if (self_check(c)) {
            return c;
        }
        failure.reasons.push_back("triple " + triple_str(tr) + ": constant-multiplicity construction failed its checks");
    }
    return failure;
}

/// Returns the certificate, or appends a reason for this triple.
std::optional<Certificate> obs4_on(
    const Multigraph &input,
    const std::vector<Vertex> &lc_path,
    const Multigraph &g,
    const Triple &tr,
    std::vector<std::string> &reasons) {
    int d = g.dimension();
    NeighborhoodPartition p = partition_neighborhoods(g, tr.a, tr.b, tr.c);
    std::string label = "triple " + triple_str(tr) + ": ";
    long long m_ab = g.multiplicity(tr.a, tr.b);
    long long m_ca = g.multiplicity(tr.c, tr.a);
    long long m_bc = g.multiplicity(tr.b, tr.c);
    if (!p.t_abc.empty()) {
        reasons.push_back(label + "T_ABC is not empty");
        return std::nullopt;
    }
    std::array<std::set<Vertex>, 4> groups;
    std::map<Vertex, long long> e1, e2;
    std::map<std::string, long long> exps;
    long long h = 0;
    if (tr.kind == TripleKind::triangle) {
        if (!p.j_ab.empty() || !p.j_ca.empty()) {
            reasons.push_back(label + "J_AB or J_CA is not empty");
            return std::nullopt;
        }
        h = std::gcd(std::gcd(m_ab, m_ca), m_bc);
    } else {
        h = std::gcd(m_ab, m_ca);
    }
    long long m_tilde = mod(m_ab * m_ca / h, d);
    if (m_tilde == 0) {
        reasons.push_back(
            label + "m_tilde = " + std::to_string(m_ab) + "*" + std::to_string(m_ca) + "/" + std::to_string(h) +
            " = 0 mod " + std::to_string(d));
        return std::nullopt;
    }
    PowerSelection sel = select_power_t(m_tilde, d);
    long long e = mod(-sel.t, d);
    if (tr.kind == TripleKind::triangle) {
        long long c = m_ab / h, b = m_ca / h, a = -m_bc / h;
        groups = {
            std::set<Vertex>{tr.b},
            std::set<Vertex>{tr.c},
            unite({{tr.a}, p.e_a}),
            unite({p.e_b, p.e_c, p.j_bc, p.rest})};
        e1 = {{tr.a, a}, {tr.c, c}};
        e2 = {{tr.a, -a}, {tr.b, -b}};
        exps = {{"a", a}, {"b", b}, {"c", c}, {"e", e}, {"h", h}, {"m_tilde", m_tilde}};
    } else {
        long long c = m_ab / h, b = -m_ca / h;
        groups = {
            unite({{tr.b}, p.j_ab}),
            unite({{tr.c}, p.j_ca}),
            unite({{tr.a}, p.e_a}),
            unite({p.e_b, p.e_c, p.j_bc, p.rest})};
        e1 = {{tr.c, c}};
        e2 = {{tr.b, b}};
        exps = {{"b", b}, {"c", c}, {"e", e}, {"h", h}, {"m_tilde", m_tilde}};
    }
    Certificate cert = assemble(Method::obs4, input, lc_path, g, tr, groups, e1, e2, {{tr.a, e}}, exps);
    if (!self_check(cert)) {
        reasons.push_back(label + "construction failed its checks");
        return std::nullopt;
    }
    return cert;
}

CertifyResult obs4_any_on(const Multigraph &input, const std::vector<Vertex> &lc_path, const Multigraph &g) {
    NotCertified failure;
    for (const Triple &tr : find_angle_or_triangle(g)) {
        if (auto c = obs4_on(input, lc_path, g, tr, failure.reasons)) {
            return *c;
        }
    }
    return failure;
}

CertifyResult try_direct(
    const Multigraph &input, const std::vector<Vertex> &lc_path, const Multigraph &g, std::vector<std::string> *reasons) {
    if (g.has_constant_multiplicity()) {
        CertifyResult r = constant_on(input, lc_path, g);
        if (is_certified(r)) {
            return r;
        }
        if (reasons) {
            auto &more = std::get<NotCertified>(r).reasons;
            reasons->insert(reasons->end(), more.begin(), more.end());
        }
    }
    CertifyResult r = obs4_any_on(input, lc_path, g);
    if (!is_certified(r) && reasons) {
        auto &more = std::get<NotCertified>(r).reasons;
        reasons->insert(reasons->end(), more.begin(), more.end());
    }
    return r;
}

}  // namespace

CertifyResult certify_constant_multiplicity(const Multigraph &g) {
    require_search_preconditions(g);
    if (!g.has_constant_multiplicity()) {
        throw WrongFamily("nonzero multiplicities are not all equal");
    }
    return constant_on(g, {}, g);
}

CertifyResult certify_obs4(const Multigraph &g, const Triple &triple) {
    require_search_preconditions(g);
    if (partition_neighborhoods(g, triple.a, triple.b, triple.c).triple.kind != triple.kind) {
        throw StructureError("triple kind does not match the B-C edge of the graph");
    }
    NotCertified failure;
    if (auto c = obs4_on(g, {}, g, triple, failure.reasons)) {
        return *c;
    }
    return failure;
}

CertifyResult certify_obs4_any(const Multigraph &g) {
    require_search_preconditions(g);
    return obs4_any_on(g, {}, g);
}

CertifyResult certify_any(const Multigraph &g, const CertifyOptions &options) {
    require_search_preconditions(g);
    std::vector<std::string> direct_reasons;
    CertifyResult direct = try_direct(g, {}, g, &direct_reasons);
    if (is_certified(direct)) {
        return direct;
    }

    struct Node {
        Multigraph graph;
        std::vector<Vertex> path;
    };
    std::set<Multigraph> seen{canonical_form(g)};
    std::deque<Node> frontier{Node{g, {}}};
    bool truncated = false;
    while (!frontier.empty()) {
        Node cur = std::move(frontier.front());
        frontier.pop_front();
        if (!cur.path.empty()) {
            CertifyResult r = try_direct(g, cur.path, cur.graph, nullptr);
            if (is_certified(r)) {
                return r;
            }
        }
        for (Vertex a = 0; a < cur.graph.size(); a++) {
            Multigraph next = local_complement(cur.graph, a);
            if (!seen.insert(canonical_form(next)).second) {
                continue;
            }
            if (seen.size() > options.orbit_cap) {
                truncated = true;
                break;
            }
            std::vector<Vertex> path = cur.path;
            path.push_back(a);
            frontier.push_back(Node{std::move(next), std::move(path)});
        }
        if (truncated) {
            break;
        }
    }
    NotCertified failure;
    failure.reasons = std::move(direct_reasons);
    if (truncated) {
        failure.reasons.push_back(
            "local-complementation orbit truncated at " + std::to_string(options.orbit_cap) + " classes");
    } else {
        failure.reasons.push_back(
            "no construction applies anywhere in the local-complementation orbit (" + std::to_string(seen.size()) +
            " classes)");
    }
    return failure;
}

const char *status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::fail:
            return "fail";
        default:
            return "skipped";
    }
}

bool VerificationReport::all_passed() const {
    return failures() == 0;
}

size_t VerificationReport::failures() const {
    return static_cast<size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) {
        return c.status == CheckStatus::fail;
    }));
}

MarginalChainInput chain_input(const Certificate &cert) {
    int n = cert.graph.size();
    GroupedNetwork gn{complete_bipartite_network(all_parties(n)), {}};
    for (int k = 0; k < 4; k++) {
        gn.groups[k] = parties_of(cert.groups[k]);
    }
    return MarginalChainInput{
        gn, cert.operators[0].op, cert.operators[1].op, cert.operators[2].op, cert.operators[3].op};
}

VerificationReport verify_obs3(const Certificate &cert, const VerifyOptions &options) {
    VerificationReport report;
    auto add = [&](std::string name, bool ok, std::string detail = "") {
        report.checks.push_back(CheckResult{std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
        return ok;
    };

    const Multigraph &input = cert.graph;
    int n = input.size();
    int d = input.dimension();
    bool path_ok = std::all_of(cert.lc_path.begin(), cert.lc_path.end(), [&](Vertex a) {
        return a >= 0 && a < n;
    });
    if (!add("lc_path", path_ok, path_ok ? "" : "vertex out of range")) {
        return report;
    }
    Multigraph g = working_graph(cert);

    const Triple &tr = cert.triple;
    bool triple_ok = n >= 3 && tr.a >= 0 && tr.b >= 0 && tr.c >= 0 && tr.a < n && tr.b < n && tr.c < n &&
                     tr.a != tr.b && tr.b != tr.c && tr.a != tr.c && g.adjacent(tr.a, tr.b) && g.adjacent(tr.a, tr.c) &&
                     (tr.kind == TripleKind::triangle) == g.adjacent(tr.b, tr.c);
    add("triple", triple_ok);

    std::array<PauliOperator, 4> ops{cert.operators[0].op, cert.operators[1].op, cert.operators[2].op, cert.operators[3].op};
    bool dims_ok = true;
    for (int k = 0; k < 4; k++) {
        dims_ok &= ops[k].dimension() == d;
    }
    if (!add("operator dimension", dims_ok)) {
        return report;
    }
    for (int k = 0; k < 4; k++) {
        bool ok = false;
        try {
            ok = evaluate_factorization(g, cert.operators[k].factorization) == ops[k];
        } catch (const std::exception &) {
            ok = false;
        }
        add("S" + std::to_string(k + 1) + " factorization", ok);
    }
    add("S3 = S1 S2", ops[0] * ops[1] == ops[2]);
    add("S1 S2 commute", commutation_phase(ops[0], ops[1]) == 0);

    std::set<Vertex> covered;
    size_t total = 0;
    for (const auto &grp : cert.groups) {
        covered.insert(grp.begin(), grp.end());
        total += grp.size();
    }
    bool partition_ok = total == covered.size() && covered.size() == static_cast<size_t>(n) &&
                        (covered.empty() || (*covered.begin() >= 0 && *covered.rbegin() < n));
    add("groups partition vertices", partition_ok);

    for (int k = 0; k < 4; k++) {
        std::set<Party> grp = parties_of(cert.groups[k]);
        std::string hit;
        for (const Party &p : support(ops[k])) {
            if (grp.count(p)) {
                hit += (hit.empty() ? "" : ",") + p.str();
            }
        }
        add("supp(S" + std::to_string(k + 1) + ") avoids G" + std::to_string(k + 1), hit.empty(), hit);
    }

    add("S4' relabeling", cert.s4_prime_relabel == copy_relabeling(parties_of(cert.groups[0])));
    PauliOperator s4p(d);
    try {
        s4p = relabel(ops[3], cert.s4_prime_relabel);
    } catch (const StructureError &) {
        add("S4' defined", false);
        return report;
    }
    std::set<Party> g2 = parties_of(cert.groups[1]);
    PauliOperator s3_g2 = restrict_to(ops[2], g2);
    PauliOperator s4p_g2 = restrict_to(s4p, g2);
    int kappa_g2 = commutation_phase(s3_g2, s4p_g2);
    int kappa_full = commutation_phase(ops[2], s4p);
    add("kappa on G2", kappa_g2 == mod(cert.kappa, d) && kappa_full == kappa_g2,
        "G2: " + std::to_string(kappa_g2) + ", full: " + std::to_string(kappa_full) + ", claimed: " +
            std::to_string(cert.kappa));
    add("kappa nonzero", mod(cert.kappa, d) != 0);
    double lambda = 2 * abs_cos_phase(kappa_g2, d);
    add("lambda'", std::abs(cert.lambda_prime - lambda) <= 1e-12 && cert.lambda_prime <= 2);
    bool bound_ok = false;
    try {
        bound_ok = std::abs(cert.fidelity_bound - fidelity_bound_from_lambda(cert.lambda_prime)) <= 1e-12;
    } catch (const RangeError &) {
    }
    add("fidelity bound", bound_ok);

    if (partition_ok) {
        try {
            for (const MarginalCheck &m : verify_marginal_chain(chain_input(cert))) {
                add("marginal " + m.name, m.holds);
            }
        } catch (const std::invalid_argument &e) {
            add("marginal chain", false, e.what());
        }
    } else {
        add("marginal chain", false, "groups are not a partition");
    }

    // Numeric cross-check of the symbolic criterion.
    std::set<Party> dense_sites = support(s3_g2);
    for (const Party &p : support(s4p_g2)) {
        dense_sites.insert(p);
    }
    std::vector<Party> order(dense_sites.begin(), dense_sites.end());
    double dim = std::pow(static_cast<double>(d), static_cast<double>(order.size()));
    if (options.dense_limit == 0 || dim > static_cast<double>(std::min(options.dense_limit, dense_cap()))) {
        report.checks.push_back(
            CheckResult{"no common +1 eigenvector (dense)", CheckStatus::skipped, "dimension " + std::to_string(dim)});
    } else {
        bool common = common_plus_one_eigenvector(dense(s3_g2, order), dense(s4p_g2, order));
        add("no common +1 eigenvector (dense)", !common);
    }
    return report;
}

// ---------------------------------------------------------------------------

namespace {

struct Tally {
    size_t certified = 0, obs1 = 0, obs4 = 0, lc = 0;
    double max_bound = 0;
    std::vector<UncertifiedGraph> uncertified;

    void add(const Multigraph &g, const CertifyResult &r) {
        if (const auto *c = std::get_if<Certificate>(&r)) {
            certified++;
            (c->method == Method::obs1 ? obs1 : obs4)++;
            lc += !c->lc_path.empty();
            max_bound = std::max(max_bound, c->fidelity_bound);
        } else {
            uncertified.push_back(UncertifiedGraph{g, std::get<NotCertified>(r).reasons});
        }
    }
};

}  // namespace

TableReport exhaustive_table(int n, int d, const Budget &budget) {
    if (n < 3 || d < 2) {
        throw RangeError("exhaustive tables need n >= 3 and d >= 2");
    }
    using Clock = std::chrono::steady_clock;
    auto start = Clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(Clock::now() - start).count();
    };
    CertifyOptions opts;
    opts.orbit_cap = budget.orbit_cap;
    int workers = std::max(1, budget.workers);

    TableReport report;
    report.n = n;
    report.d = d;
    Tally tally;
    std::vector<Multigraph> batch;
    bool out_of_time = false;

    auto flush = [&] {
        std::vector<CertifyResult> results(batch.size(), NotCertified{});
        if (workers == 1 || batch.size() < 2) {
            for (size_t i = 0; i < batch.size(); i++) {
                results[i] = certify_any(batch[i], opts);
            }
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; w++) {
                pool.emplace_back([&, w] {
                    for (size_t i = static_cast<size_t>(w); i < batch.size(); i += static_cast<size_t>(workers)) {
                        results[i] = certify_any(batch[i], opts);
                    }
                });
            }
            for (auto &t : pool) {
                t.join();
            }
        }
        for (size_t i = 0; i < batch.size(); i++) {
            tally.add(batch[i], results[i]);
        }
        report.classes += batch.size();
        batch.clear();
    };

    try {
        enumerate_connected_multigraphs(
            n,
            d,
            [&](const Multigraph &g) {
                batch.push_back(g);
                if (batch.size() >= static_cast<size_t>(16 * workers)) {
                    flush();
                    if (elapsed() > budget.time_limit_seconds) {
                        out_of_time = true;
                        return false;
                    }
                }
                return true;
            },
            budget.max_graphs);
        flush();
    } catch (const EnumerationOverflow &e) {
        flush();
        report.complete = false;
        report.incomplete_reason = e.what();
    }
    if (out_of_time) {
        report.complete = false;
        report.incomplete_reason = "time limit of " + std::to_string(budget.time_limit_seconds) + " s reached";
    }
    report.certified = tally.certified;
    report.by_obs1 = tally.obs1;
    report.by_obs4 = tally.obs4;
    report.via_local_complement = tally.lc;
    report.max_fidelity_bound = tally.max_bound;
    report.uncertified = std::move(tally.uncertified);
    std::sort(report.uncertified.begin(), report.uncertified.end(), [](const auto &a, const auto &b) {
        return a.graph < b.graph;
    });
    report.elapsed_seconds = elapsed();
    return report;
}

}  // namespace netcert
