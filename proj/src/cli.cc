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

#include "netcert/cli.h"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "netcert/certify.h"
#include "netcert/errors.h"
#include "netcert/ghzbound.h"
#include "netcert/graph_io.h"
#include "netcert/oracle.h"
#include "netcert/serialize.h"

namespace netcert {

namespace {

enum class Format { json, tsv, human };

struct RunConfig {
    std::string inline_graph;
    std::string input;
    std::string n_range;
    std::string d_range;
    size_t budget_graphs = std::numeric_limits<size_t>::max();
    size_t budget_orbit = 1000000;
    double budget_time = std::numeric_limits<double>::infinity();
    int workers = 1;
    uint64_t seed = DEFAULT_SEED;
    Format format = Format::json;
    bool verify = false;
    std::string output;
    size_t trials = 1000;
};

std::string sig6(double x) {
    std::ostringstream ss;
    ss << std::setprecision(6) << x;
    return ss.str();
}

std::string join(const std::vector<std::string> &items, const char *sep) {
    std::string r;
    for (size_t i = 0; i < items.size(); i++) {
        r += (i ? sep : "") + items[i];
    }
    return r;
}

std::string set_str(const std::set<Vertex> &s) {
    std::vector<std::string> items;
    for (Vertex v : s) {
        items.push_back(std::to_string(v));
    }
    return "{" + join(items, ",") + "}";
}

Multigraph load_graph(const RunConfig &cfg) {
    if (!cfg.inline_graph.empty() && !cfg.input.empty()) {
        throw ParseError("give either --inline or an input file, not both");
    }
    if (!cfg.inline_graph.empty()) {
        return parse_graph(cfg.inline_graph);
    }
    if (cfg.input.empty()) {
        throw ParseError("no graph given (use --inline or an input file)");
    }
    return read_graph_file(cfg.input);
}

std::string read_text(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_json(std::ostream &out, const Json &j) {
    out << j.dump(2) << "\n";
}

void human_certificate(std::ostream &out, const Certificate &c) {
    out << "certified: " << c.graph.str() << "\n";
    out << "method: " << method_name(c.method) << "\n";
    std::vector<std::string> path;
    for (Vertex v : c.lc_path) {
        path.push_back(std::to_string(v));
    }
    out << "lc_path: [" << join(path, ",") << "]\n";
    out << "triple: A=" << c.triple.a << " B=" << c.triple.b << " C=" << c.triple.c << " ("
        << kind_name(c.triple.kind) << ")\n";
    for (size_t i = 0; i < 4; i++) {
        out << "G" << i + 1 << ": " << set_str(c.groups[i]) << "\n";
    }
    for (size_t i = 0; i < 4; i++) {
        out << "S" << i + 1 << ": " << c.operators[i].op.str() << "\n";
    }
    out << "kappa: " << c.kappa << "\n";
    out << "lambda_prime: " << sig6(c.lambda_prime) << "\n";
    out << "fidelity_bound: " << sig6(c.fidelity_bound) << "\n";
}

void human_verification(std::ostream &out, const VerificationReport &r) {
    for (const auto &c : r.checks) {
        out << status_name(c.status) << "  " << c.name;
        if (!c.detail.empty()) {
            out << "  (" << c.detail << ")";
        }
        out << "\n";
    }
    out << (r.all_passed() ? "all checks passed" : std::to_string(r.failures()) + " check(s) failed") << "\n";
}

int cmd_certify(const RunConfig &cfg, std::ostream &out) {
    Multigraph g = load_graph(cfg);
    CertifyResult result = certify_any(g, CertifyOptions{cfg.budget_orbit});
    if (auto *nc = std::get_if<NotCertified>(&result)) {
        switch (cfg.format) {
            case Format::json:
                write_json(out, not_certified_json(g, *nc));
                break;
            case Format::tsv:
                out << "graph\tstatus\tmethod\tfidelity_bound\n";
                out << g.str() << "\tnot_certified\t-\t-\n";
                break;
            case Format::human:
                out << "not certified: " << g.str() << "\n";
                for (const auto &r : nc->reasons) {
                    out << "  " << r << "\n";
                }
                break;
        }
        return EXIT_NOT_CERTIFIED;
    }
    const Certificate &cert = std::get<Certificate>(result);
    std::optional<VerificationReport> report;
    if (cfg.verify) {
        report = verify_obs3(cert);
    }
    switch (cfg.format) {
        case Format::json:
            if (report) {
                Json j;
                j["certificate"] = certificate_json(cert);
                j["verification"] = verification_json(*report);
                write_json(out, j);
            } else {
                write_json(out, certificate_json(cert));
            }
            break;
        case Format::tsv:
            out << "graph\tstatus\tmethod\tfidelity_bound";
            out << (report ? "\tverified\n" : "\n");
            out << g.str() << "\tcertified\t" << method_name(cert.method) << "\t" << sig6(cert.fidelity_bound);
            if (report) {
                out << "\t" << (report->all_passed() ? "yes" : "no");
            }
            out << "\n";
            break;
        case Format::human:
            human_certificate(out, cert);
            if (report) {
                human_verification(out, *report);
            }
            break;
    }
    return report && !report->all_passed() ? EXIT_NOT_CERTIFIED : EXIT_OK;
}

int cmd_enumerate(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.n_range.empty() || cfg.d_range.empty()) {
        throw ParseError("enumerate needs --n and --d");
    }
    std::vector<int> ns = parse_int_range(cfg.n_range);
    std::vector<int> ds = parse_int_range(cfg.d_range);
    Budget budget{cfg.budget_graphs, cfg.budget_orbit, cfg.budget_time, cfg.workers};
    std::vector<TableReport> reports;
    for (int d : ds) {
        for (int n : ns) {
            reports.push_back(exhaustive_table(n, d, budget));
            if (!reports.back().complete) {
                err << "budget exhausted at n=" << n << " d=" << d << ": " << reports.back().incomplete_reason
                    << "\n";
            }
        }
    }
    switch (cfg.format) {
        case Format::json: {
            Json j = Json::array();
            for (const auto &r : reports) {
                j.push_back(table_json(r));
            }
            write_json(out, j);
            break;
        }
        case Format::tsv:
            out << "n\td\tclasses\tcertified\tby_obs1\tby_obs4\tvia_lc\tmax_fidelity_bound\tall_certified\tcomplete\n";
            for (const auto &r : reports) {
                out << r.n << "\t" << r.d << "\t" << r.classes << "\t" << r.certified << "\t" << r.by_obs1 << "\t"
                    << r.by_obs4 << "\t" << r.via_local_complement << "\t" << sig6(r.max_fidelity_bound) << "\t"
                    << (r.all_certified() ? "yes" : "no") << "\t" << (r.complete ? "yes" : "no") << "\n";
            }
            for (const auto &r : reports) {
                for (const auto &u : r.uncertified) {
                    out << "# uncertified\t" << u.graph.str() << "\n";
                }
            }
            break;
        case Format::human:
            for (const auto &r : reports) {
                out << "n=" << r.n << " d=" << r.d << ": " << r.certified << "/" << r.classes << " certified ("
                    << r.by_obs1 << " obs1, " << r.by_obs4 << " obs4, " << r.via_local_complement
                    << " via LC), max bound " << sig6(r.max_fidelity_bound)
                    << (r.complete ? "" : " [INCOMPLETE: " + r.incomplete_reason + "]") << "\n";
                for (const auto &u : r.uncertified) {
                    out << "  uncertified: " << u.graph.str() << "\n";
                }
            }
            break;
    }
    bool complete = true, certified = true;
    for (const auto &r : reports) {
        complete &= r.complete;
        certified &= r.uncertified.empty();
    }
    if (!complete) {
        return EXIT_BUDGET;
    }
    return certified ? EXIT_OK : EXIT_NOT_CERTIFIED;
}

int cmd_ghz_bound(const RunConfig &cfg, std::ostream &out) {
    if (cfg.d_range.empty()) {
        throw ParseError("ghz-bound needs --d");
    }
    std::vector<BoundReport> reports;
    for (int d : parse_int_range(cfg.d_range)) {
        reports.push_back(ghz_bound_report(d));
    }
    auto opt = [](const std::optional<double> &v) {
        return v ? sig6(*v) : std::string("-");
    };
    switch (cfg.format) {
        case Format::json: {
            Json j = Json::array();
            for (const auto &r : reports) {
                j.push_back(bound_json(r));
            }
            write_json(out, j);
            break;
        }
        case Format::tsv:
            out << "d\tclosed_form\tprime\tnumeric\n";
            for (const auto &r : reports) {
                out << r.d << "\t" << sig6(r.bound_closed_form) << "\t" << opt(r.bound_prime) << "\t"
                    << opt(r.bound_numeric) << "\n";
            }
            break;
        case Format::human:
            for (const auto &r : reports) {
                out << "d=" << r.d << ": closed form " << sig6(r.bound_closed_form) << ", prime "
                    << opt(r.bound_prime) << ", numeric " << opt(r.bound_numeric) << "\n";
            }
            break;
    }
    return EXIT_OK;
}

int cmd_orbit(const RunConfig &cfg, std::ostream &out) {
    Multigraph g = load_graph(cfg);
    LcOrbit orbit = lc_orbit(g, cfg.budget_orbit);
    switch (cfg.format) {
        case Format::json: {
            Json j;
            j["graph"] = graph_json(g);
            j["size"] = orbit.members.size();
            j["truncated"] = orbit.truncated;
            Json members = Json::array();
            for (const auto &m : orbit.members) {
                members.push_back(m.str());
            }
            j["members"] = members;
            write_json(out, j);
            break;
        }
        case Format::tsv:
            for (const auto &m : orbit.members) {
                out << m.str() << "\n";
            }
            break;
        case Format::human:
            out << "LC orbit of " << g.str() << ": " << orbit.members.size() << " class(es)"
                << (orbit.truncated ? " [TRUNCATED]" : "") << "\n";
            for (const auto &m : orbit.members) {
                out << "  " << m.str() << "\n";
            }
            break;
    }
    return orbit.truncated ? EXIT_BUDGET : EXIT_OK;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    if (!cfg.inline_graph.empty()) {
        throw ParseError("verify takes a certificate file, not --inline");
    }
    if (cfg.input.empty()) {
        throw ParseError("verify needs a certificate file");
    }
    Certificate cert = parse_certificate(read_text(cfg.input));
    VerificationReport report = verify_obs3(cert);
    switch (cfg.format) {
        case Format::json:
            write_json(out, verification_json(report));
            break;
        case Format::tsv:
            out << "check\tstatus\tdetail\n";
            for (const auto &c : report.checks) {
                out << c.name << "\t" << status_name(c.status) << "\t" << c.detail << "\n";
            }
            break;
        case Format::human:
            human_verification(out, report);
            break;
    }
    return report.all_passed() ? EXIT_OK : EXIT_NOT_CERTIFIED;
}

int cmd_selftest(const RunConfig &cfg, std::ostream &out) {
    std::vector<PropertyReport> reports;
    std::string violation;
    try {
        reports = check_all_lemmas(cfg.trials, cfg.seed);
        size_t cap = std::min<size_t>(dense_cap(), 4096);
        reports.push_back(check_pauli_equivalence(cfg.trials, cfg.seed, cap));
        reports.push_back(check_graph_state_stabilization(cfg.seed, cap));
    } catch (const PropertyViolation &e) {
        violation = e.what();
    }
    switch (cfg.format) {
        case Format::json: {
            Json j;
            j["seed"] = cfg.seed;
            j["trials"] = cfg.trials;
            Json suites = Json::array();
            for (const auto &r : reports) {
                suites.push_back(property_json(r));
            }
            j["suites"] = suites;
            if (!violation.empty()) {
                j["violation"] = violation;
            }
            write_json(out, j);
            break;
        }
        case Format::tsv:
            out << "suite\ttrials\tviolations\tmin_slack\n";
            for (const auto &r : reports) {
                out << r.name << "\t" << r.trials << "\t" << r.violations << "\t" << sig6(r.min_slack) << "\n";
            }
            break;
        case Format::human:
            for (const auto &r : reports) {
                out << r.name << ": " << r.trials << " trials, " << r.violations << " violations, min slack "
                    << sig6(r.min_slack) << "\n";
            }
            if (!violation.empty()) {
                out << "VIOLATION: " << violation << "\n";
            }
            break;
    }
    return violation.empty() ? EXIT_OK : EXIT_NOT_CERTIFIED;
}

}  // namespace

std::vector<int> parse_int_range(const std::string &text) {
    std::vector<int> result;
    auto parse_one = [&](const std::string &s) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (s.empty() || used != s.size()) {
            throw ParseError("bad integer '" + s + "' in range '" + text + "'");
        }
        return v;
    };
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t dots = item.find("..");
        if (dots == std::string::npos) {
            result.push_back(parse_one(item));
            continue;
        }
        int lo = parse_one(item.substr(0, dots));
        int hi = parse_one(item.substr(dots + 2));
        if (hi < lo) {
            throw ParseError("empty range '" + item + "'");
        }
        for (int v = lo; v <= hi; v++) {
            result.push_back(v);
        }
    }
    if (result.empty()) {
        throw ParseError("empty range '" + text + "'");
    }
    return result;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Certifies that qudit graph states cannot come from networks of bipartite sources.", "netcert"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "json";

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "human"}));
        sub->add_option("--output", cfg.output, "Write output to this file instead of stdout");
    };
    auto add_graph_input = [&](CLI::App *sub) {
        sub->add_option("--inline", cfg.inline_graph, "Graph as 'd n; i j m; ...'");
        sub->add_option("input,--input", cfg.input, "Graph file (text or JSON)");
    };
    auto positive = CLI::PositiveNumber;

    CLI::App *certify = app.add_subcommand("certify", "Search for a certificate for one graph");
    add_graph_input(certify);
    certify->add_flag("--verify", cfg.verify, "Also run every certificate check");
    certify->add_option("--budget-orbit", cfg.budget_orbit, "Cap on the local-complementation orbit")->check(positive);
    add_common(certify);

    CLI::App *enumerate = app.add_subcommand("enumerate", "Certify every connected class for (n, d)");
    enumerate->add_option("--n", cfg.n_range, "Vertex counts, e.g. 3..5 or 3,4")->required();
    enumerate->add_option("--d", cfg.d_range, "Local dimensions, e.g. 2..5")->required();
    enumerate->add_option("--budget-graphs", cfg.budget_graphs, "Cap on classes per table")->check(positive);
    enumerate->add_option("--budget-orbit", cfg.budget_orbit, "Cap on each orbit search")->check(positive);
    enumerate->add_option("--budget-time", cfg.budget_time, "Seconds per table")->check(positive);
    enumerate->add_option("--workers", cfg.workers, "Worker threads")->check(positive);
    add_common(enumerate);

    CLI::App *ghz = app.add_subcommand("ghz-bound", "Fidelity bounds for the GHZ state");
    ghz->add_option("--d", cfg.d_range, "Local dimensions, e.g. 2..5")->required();
    add_common(ghz);

    CLI::App *orbit = app.add_subcommand("orbit", "Local-complementation orbit of a graph");
    add_graph_input(orbit);
    orbit->add_option("--budget-orbit", cfg.budget_orbit, "Cap on the orbit size")->check(positive);
    add_common(orbit);

    CLI::App *verify = app.add_subcommand("verify", "Check a certificate file");
    verify->add_option("input,--input", cfg.input, "Certificate JSON")->required();
    add_common(verify);

    CLI::App *selftest = app.add_subcommand("selftest", "Randomized property suites against the dense oracle");
    selftest->add_option("--trials", cfg.trials, "Trials per suite")->check(positive);
    selftest->add_option("--seed", cfg.seed, "Random seed");
    add_common(selftest);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_ERROR;
    }
    cfg.format = format == "tsv" ? Format::tsv : format == "human" ? Format::human : Format::json;

    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot write '" << cfg.output << "'\n";
            return EXIT_ERROR;
        }
    }
    std::ostream &sink = cfg.output.empty() ? out : file;
    try {
        if (certify->parsed()) {
            return cmd_certify(cfg, sink);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(cfg, sink, err);
        }
        if (ghz->parsed()) {
            return cmd_ghz_bound(cfg, sink);
        }
        if (orbit->parsed()) {
            return cmd_orbit(cfg, sink);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, sink);
        }
        return cmd_selftest(cfg, sink);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_ERROR;
    }
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; i++) {
        args.emplace_back(argv[i]);
    }
    return run_cli(args, out, err);
}

}  // namespace netcert
