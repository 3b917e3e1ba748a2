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

#include "netcert/serialize.h"

#include "netcert/errors.h"

namespace netcert {

Json graph_json(const Multigraph &g) {
    Json j;
    j["d"] = g.dimension();
    j["n"] = g.size();
    j["edges"] = Json::array();
    for (Vertex a = 0; a < g.size(); a++) {
        for (Vertex b = a + 1; b < g.size(); b++) {
            if (g.adjacent(a, b)) {
                j["edges"].push_back(Json::array({a, b, g.multiplicity(a, b)}));
            }
        }
    }
    return j;
}

namespace {

template <typename T>
T field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("field \"") + key + "\" has the wrong type: " + e.what());
    }
}

const Json &object(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

}  // namespace

Multigraph graph_from_json(const Json &j) {
    int d = field<int>(j, "d");
    int n = field<int>(j, "n");
    if (d < 2 || d > 255 || n < 1) {
        throw ParseError("graph has an invalid d or n");
    }
    Multigraph g(d, n);
    for (const auto &e : object(j, "edges")) {
        if (!e.is_array() || e.size() != 3) {
            throw ParseError("each edge must be [i, j, m]");
        }
        try {
            g.set_multiplicity(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
        } catch (const std::exception &ex) {
            throw ParseError(std::string("bad edge: ") + ex.what());
        }
    }
    return g;
}

Json pauli_json(const PauliOperator &p) {
    Json j;
    j["phase_exp"] = p.phase_exp();
    j["sites"] = Json::object();
    for (const auto &[party, e] : p.sites()) {
        j["sites"][party.str()] = Json::array({e.x, e.z});
    }
    return j;
}

PauliOperator pauli_from_json(int d, const Json &j) {
    std::map<Party, SiteExponents> sites;
    for (const auto &[label, xz] : object(j, "sites").items()) {
        if (!xz.is_array() || xz.size() != 2 || !xz[0].is_number_integer() || !xz[1].is_number_integer()) {
            throw ParseError("site exponents must be [x, z]");
        }
        sites[Party::parse(label)] = SiteExponents{xz[0].get<int>(), xz[1].get<int>()};
    }
    return PauliOperator::from_sites(d, sites, field<long long>(j, "phase_exp"));
}

Json certificate_json(const Certificate &c) {
    Json j;
    j["method"] = method_name(c.method);
    j["graph"] = graph_json(c.graph);
    j["lc_path"] = c.lc_path;
    j["triple"] = Json{{"A", c.triple.a}, {"B", c.triple.b}, {"C", c.triple.c}};
    j["kind"] = kind_name(c.triple.kind);
    Json groups;
    for (int k = 0; k < 4; k++) {
        groups["G" + std::to_string(k + 1)] = Json(std::vector<Vertex>(c.groups[k].begin(), c.groups[k].end()));
    }
    j["groups"] = groups;
    Json ops;
    for (int k = 0; k < 4; k++) {
        Json op = pauli_json(c.operators[k].op);
        op["factorization"] = Json::array();
        for (const auto &[v, e] : c.operators[k].factorization) {
            op["factorization"].push_back(Json::array({v, e}));
        }
        ops["S" + std::to_string(k + 1)] = op;
    }
    Json relabel_map = Json::object();
    for (const auto &[from, to] : c.s4_prime_relabel) {
        relabel_map[from.str()] = to.str();
    }
    ops["S4prime_relabel"] = relabel_map;
    j["operators"] = ops;
    Json exps = Json::object();
    for (const auto &[name, value] : c.exponents) {
        exps[name] = value;
    }
    j["exponents"] = exps;
    j["kappa"] = c.kappa;
    j["lambda_prime"] = c.lambda_prime;
    j["fidelity_bound"] = c.fidelity_bound;
    return j;
}

std::string certificate_to_string(const Certificate &cert, int indent) {
    return certificate_json(cert).dump(indent);
}

Certificate certificate_from_json(const Json &j) {
    Certificate c;
    std::string method = field<std::string>(j, "method");
    if (method == "obs1") {
        c.method = Method::obs1;
    } else if (method == "obs4") {
        c.method = Method::obs4;
    } else {
        throw ParseError("unknown method '" + method + "'");
    }
    c.graph = graph_from_json(object(j, "graph"));
    int d = c.graph.dimension();
    c.lc_path = field<std::vector<Vertex>>(j, "lc_path");
    const Json &tr = object(j, "triple");
    c.triple.a = field<int>(tr, "A");
    c.triple.b = field<int>(tr, "B");
    c.triple.c = field<int>(tr, "C");
    std::string kind = field<std::string>(j, "kind");
    if (kind != "angle" && kind != "triangle") {
        throw ParseError("unknown kind '" + kind + "'");
    }
    c.triple.kind = kind == "angle" ? TripleKind::angle : TripleKind::triangle;
    const Json &groups = object(j, "groups");
    for (int k = 0; k < 4; k++) {
        auto members = field<std::vector<Vertex>>(groups, ("G" + std::to_string(k + 1)).c_str());
        c.groups[k] = std::set<Vertex>(members.begin(), members.end());
    }
    const Json &ops = object(j, "operators");
    for (int k = 0; k < 4; k++) {
        const Json &op = object(ops, ("S" + std::to_string(k + 1)).c_str());
        c.operators[k].op = pauli_from_json(d, op);
        c.operators[k].factorization.clear();
        for (const auto &f : object(op, "factorization")) {
            if (!f.is_array() || f.size() != 2) {
                throw ParseError("factorization entries must be [vertex, exponent]");
            }
            c.operators[k].factorization.emplace_back(f[0].get<int>(), f[1].get<int>());
        }
    }
    for (const auto &[from, to] : object(ops, "S4prime_relabel").items()) {
        if (!to.is_string()) {
            throw ParseError("relabeling targets must be party labels");
        }
        c.s4_prime_relabel[Party::parse(from)] = Party::parse(to.get<std::string>());
    }
    for (const auto &[name, value] : object(j, "exponents").items()) {
        if (!value.is_number_integer()) {
            throw ParseError("exponent '" + name + "' must be an integer");
        }
        c.exponents[name] = value.get<long long>();
    }
    c.kappa = field<int>(j, "kappa");
    c.lambda_prime = field<double>(j, "lambda_prime");
    c.fidelity_bound = field<double>(j, "fidelity_bound");
    return c;
}

Certificate parse_certificate(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return certificate_from_json(j);
    } catch (const ParseError &) {
        throw;
    } catch (const std::exception &e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

Json not_certified_json(const Multigraph &g, const NotCertified &nc) {
    Json j;
    j["status"] = "not_certified";
    j["graph"] = graph_json(g);
    j["reasons"] = nc.reasons;
    return j;
}

Json verification_json(const VerificationReport &report) {
    Json j;
    j["all_passed"] = report.all_passed();
    j["failures"] = report.failures();
    j["checks"] = Json::array();
    for (const auto &c : report.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["status"] = status_name(c.status);
        if (!c.detail.empty()) {
            cj["detail"] = c.detail;
        }
        j["checks"].push_back(cj);
    }
    return j;
}

Json table_json(const TableReport &r) {
    Json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["complete"] = r.complete;
    if (!r.complete) {
        j["incomplete_reason"] = r.incomplete_reason;
    }
    j["all_certified"] = r.all_certified();
    j["classes"] = r.classes;
    j["certified"] = r.certified;
    j["by_obs1"] = r.by_obs1;
    j["by_obs4"] = r.by_obs4;
    j["via_local_complement"] = r.via_local_complement;
    j["max_fidelity_bound"] = r.max_fidelity_bound;
    j["uncertified"] = Json::array();
    for (const auto &u : r.uncertified) {
        j["uncertified"].push_back(Json{{"graph", graph_json(u.graph)}, {"reasons", u.reasons}});
    }
    return j;
}

Json bound_json(const BoundReport &r) {
    Json j;
    j["d"] = r.d;
    j["bound_closed_form"] = r.bound_closed_form;
    j["bound_prime"] = r.bound_prime ? Json(*r.bound_prime) : Json(nullptr);
    j["bound_numeric"] = r.bound_numeric ? Json(*r.bound_numeric) : Json(nullptr);
    j["constraints_active"] = r.constraints_active;
    j["converged"] = r.converged;
    j["solver_steps"] = r.solver_trace.size();
    return j;
}

Json chain_json(const GhzChainRecord &r) {
    Json j;
    j["d"] = r.d;
    j["power"] = r.power;
    Json ops;
    for (int k = 0; k < 4; k++) {
        ops["S" + std::to_string(k + 1)] = pauli_json(r.operators[k]);
    }
    j["operators"] = ops;
    j["product_holds"] = r.product_holds;
    j["supports_avoid_groups"] = r.supports_avoid_groups;
    j["marginals"] = Json::array();
    for (const auto &c : r.checks) {
        j["marginals"].push_back(Json{{"name", c.name}, {"holds", c.holds}});
    }
    j["kappa"] = r.kappa;
    j["lambda_prime"] = r.lambda_prime;
    j["bound"] = r.bound;
    j["premises_hold"] = r.premises_hold();
    return j;
}

Json property_json(const PropertyReport &r) {
    Json j;
    j["name"] = r.name;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["violations"] = r.violations;
    j["min_slack"] = r.min_slack;
    j["tightest_instance"] = r.tightest_instance;
    if (r.name == "uncertainty") {
        j["trivial_branch"] = r.trivial_branch;
        j["active_branch"] = r.active_branch;
    }
    return j;
}

}  // namespace netcert
