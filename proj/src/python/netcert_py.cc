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

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netcert/certify.h"
#include "netcert/cli.h"
#include "netcert/ghzbound.h"
#include "netcert/graph_io.h"
#include "netcert/serialize.h"

namespace py = pybind11;
using namespace netcert;

// Results cross the boundary as JSON text; the Python layer decodes them.
PYBIND11_MODULE(_core, m) {
    m.doc() = "Certificates for qudit graph states against bipartite-source networks.";
    m.attr("UNIVERSAL_FIDELITY_CAP") = UNIVERSAL_FIDELITY_CAP;

    m.def(
        "certify",
        [](const std::string &graph, size_t orbit_cap) {
            Multigraph g = parse_graph(graph);
            CertifyResult r;
            {
                py::gil_scoped_release release;
                r = certify_any(g, CertifyOptions{orbit_cap});
            }
            if (is_certified(r)) {
                return certificate_to_string(std::get<Certificate>(r), -1);
            }
            return not_certified_json(g, std::get<NotCertified>(r)).dump();
        },
        py::arg("graph"),
        py::arg("orbit_cap") = 1000000);

    m.def(
        "verify",
        [](const std::string &certificate) {
            Certificate cert = parse_certificate(certificate);
            Json j = verification_json(verify_obs3(cert));
            Json chain = Json::array();
            for (const auto &check : verify_marginal_chain(chain_input(cert))) {
                chain.push_back({{"name", check.name}, {"holds", check.holds}});
            }
            j["marginal_chain"] = chain;
            return j.dump();
        },
        py::arg("certificate"));

    m.def(
        "enumerate_table",
        [](int n, int d, size_t max_graphs) {
            Budget budget;
            budget.max_graphs = max_graphs;
            TableReport t;
            {
                py::gil_scoped_release release;
                t = exhaustive_table(n, d, budget);
            }
            return table_json(t).dump();
        },
        py::arg("n"),
        py::arg("d"),
        py::arg("max_graphs") = static_cast<size_t>(-1));

    m.def(
        "ghz_bound",
        [](int d) {
            return bound_json(ghz_bound_report(d)).dump();
        },
        py::arg("d"));

    m.def(
        "canonical_form",
        [](const std::string &graph) {
            return format_graph_json(canonical_form(parse_graph(graph)));
        },
        py::arg("graph"));

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
