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

#ifndef NETCERT_GRAPH_IO_H
#define NETCERT_GRAPH_IO_H

#include <string>
#include <string_view>

#include "netcert/multigraph.h"

namespace netcert {

/// Parses a graph in either accepted form.
///
/// Text: a "d n" header followed by "i j m" records, 0-indexed, whitespace separated.
/// Records are separated by newlines or ';' (the inline form). Multiplicities are
/// taken mod d; zero records are allowed and ignored.
///
/// JSON: {"d": d, "n": n, "edges": [[i, j, m], ...]}, detected by a leading '{'.
///
/// Throws ParseError on malformed input, repeated pairs, or out-of-range vertices.
Multigraph parse_graph(std::string_view text);

Multigraph read_graph_file(const std::string &path);

/// Text form, one record per line. parse_graph(format_graph(g)) == g.
std::string format_graph(const Multigraph &g);

/// {"d":..,"n":..,"edges":[[i,j,m],...]} with edges in (i, j) order.
std::string format_graph_json(const Multigraph &g);

}  // namespace netcert

#endif
