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

#include "netcert/graph_io.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "netcert/errors.h"
#include "netcert/modular.h"

namespace netcert {

namespace {

struct Edge {
    long long i, j, m;
};

Multigraph build(long long d, long long n, const std::vector<Edge> &edges) {
    if (d < 2 || d > 255) {
        throw ParseError("dimension d=" + std::to_string(d) + " outside [2, 255]");
    }
    if (n < 1 || n > 4096) {
        throw ParseError("vertex count n=" + std::to_string(n) + " outside [1, 4096]");
    }
    Multigraph g(static_cast<int>(d), static_cast<int>(n));
    std::set<std::pair<long long, long long>> seen;
    for (const Edge &e : edges) {
        if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n) {
            throw ParseError(
                "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") has a vertex outside [0, " +
                std::to_string(n) + ")");
        }
        if (e.i == e.j) {
            throw ParseError("self loop at vertex " + std::to_string(e.i));
        }
        if (!seen.emplace(std::min(e.i, e.j), std::max(e.i, e.j)).second) {
            throw ParseError("pair (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") listed twice");
        }
        g.set_multiplicity(static_cast<int>(e.i), static_cast<int>(e.j), mod(e.m, static_cast<int>(d)));
    }
    return g;
}

std::vector<long long> read_integers(std::string_view record, size_t line_number) {
    std::vector<long long> values;
    std::istringstream in{std::string(record)};
    std::string token;
    while (in >> token) {
        size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != token.size()) {
            throw ParseError("record " + std::to_string(line_number) + ": '" + token + "' is not an integer");
        }
        values.push_back(v);
    }
    return values;
}

Multigraph parse_text(std::string_view text) {
    std::vector<std::vector<long long>> records;
    size_t record_number = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find_first_of(";\n", start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view record = text.substr(start, end - start);
        if (size_t hash = record.find('#'); hash != std::string_view::npos) {
            record = record.substr(0, hash);
        }
        record_number++;
        auto values = read_integers(record, record_number);
        if (!values.empty()) {
            size_t want = records.empty() ? 2 : 3;
            if (values.size() != want) {
                throw ParseError(
                    "record " + std::to_string(record_number) + ": expected " + std::to_string(want) +
                    " integers, got " + std::to_string(values.size()));
            }
            records.push_back(std::move(values));
        }
        start = end + 1;
    }
    if (records.empty()) {
        throw ParseError("empty graph description");
    }
    std::vector<Edge> edges;
    for (size_t k = 1; k < records.size(); k++) {
        edges.push_back(Edge{records[k][0], records[k][1], records[k][2]});
    }
    return build(records[0][0], records[0][1], edges);
}

Multigraph parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    auto integer = [](const nlohmann::json &v, const char *what) {
        if (!v.is_number_integer()) {
            throw ParseError(std::string(what) + " must be an integer");
        }
        return v.get<long long>();
    };
    if (!j.is_object() || !j.contains("d") || !j.contains("n")) {
        throw ParseError("graph JSON needs fields \"d\" and \"n\"");
    }
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) {
            throw ParseError("\"edges\" must be an array");
        }
        for (const auto &e : j["edges"]) {
            if (!e.is_array() || e.size() != 3) {
                throw ParseError("each edge must be [i, j, m]");
            }
            edges.push_back(Edge{integer(e[0], "i"), integer(e[1], "j"), integer(e[2], "m")});
        }
    }
    return build(integer(j["d"], "d"), integer(j["n"], "n"), edges);
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_json(text);
    }
    return parse_text(text);
}

Multigraph read_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string format_graph(const Multigraph &g) {
    std::stringstream ss;
    ss << g.dimension() << " " << g.size() << "\n";
    for (Vertex i = 0; i < g.size(); i++) {
        for (Vertex j = i + 1; j < g.size(); j++) {
            if (g.adjacent(i, j)) {
                ss << i << " " << j << " " << g.multiplicity(i, j) << "\n";
            }
        }
    }
    return ss.str();
}

std::string format_graph_json(const Multigraph &g) {
    nlohmann::ordered_json j;
    j["d"] = g.dimension();
    j["n"] = g.size();
    j["edges"] = nlohmann::ordered_json::array();
    for (Vertex i = 0; i < g.size(); i++) {
        for (Vertex j2 = i + 1; j2 < g.size(); j2++) {
            if (g.adjacent(i, j2)) {
                j["edges"].push_back({i, j2, g.multiplicity(i, j2)});
            }
        }
    }
    return j.dump();
}

}  // namespace netcert
