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

#include "netcert/multigraph.h"

#include <algorithm>
#include <deque>
#include <sstream>

#include "netcert/errors.h"
#include "netcert/modular.h"

namespace netcert {

Multigraph::Multigraph(int d, int n) : d_(d), n_(n) {
    if (d < 2 || d > 255) {
        throw RangeError("dimension must be in [2, 255], got " + std::to_string(d));
    }
    if (n < 1) {
        throw RangeError("a multigraph needs at least one vertex");
    }
    mult_.assign(static_cast<size_t>(n) * n, 0);
}

void Multigraph::set_multiplicity(Vertex i, Vertex j, int m) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
        throw RangeError("vertex out of range in edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    if (i == j) {
        throw StructureError("self loop at vertex " + std::to_string(i));
    }
    if (m < 0 || m >= d_) {
        throw RangeError("multiplicity " + std::to_string(m) + " outside [0, " + std::to_string(d_) + ")");
    }
    mult_[static_cast<size_t>(i) * n_ + j] = static_cast<uint8_t>(m);
    mult_[static_cast<size_t>(j) * n_ + i] = static_cast<uint8_t>(m);
}

std::vector<Vertex> Multigraph::neighbors(Vertex i) const {
    std::vector<Vertex> result;
    for (Vertex j = 0; j < n_; j++) {
        if (multiplicity(i, j)) {
            result.push_back(j);
        }
    }
    return result;
}

size_t Multigraph::edge_count() const {
    size_t count = 0;
    for (Vertex i = 0; i < n_; i++) {
        for (Vertex j = i + 1; j < n_; j++) {
            count += adjacent(i, j);
        }
    }
    return count;
}

bool Multigraph::has_constant_multiplicity() const {
    int seen = 0;
    for (uint8_t m : mult_) {
        if (m == 0) {
            continue;
        }
        if (seen && m != seen) {
            return false;
        }
        seen = m;
    }
    return true;
}

std::vector<uint8_t> Multigraph::column_key() const {
    std::vector<uint8_t> key;
    key.reserve(static_cast<size_t>(n_) * (n_ - 1) / 2);
    for (Vertex j = 1; j < n_; j++) {
        for (Vertex i = 0; i < j; i++) {
            key.push_back(static_cast<uint8_t>(multiplicity(i, j)));
        }
    }
    return key;
}

std::strong_ordering Multigraph::operator<=>(const Multigraph &other) const {
    if (auto c = d_ <=> other.d_; c != 0) {
        return c;
    }
    if (auto c = n_ <=> other.n_; c != 0) {
        return c;
    }
    for (Vertex j = 1; j < n_; j++) {
        for (Vertex i = 0; i < j; i++) {
            if (auto c = multiplicity(i, j) <=> other.multiplicity(i, j); c != 0) {
                return c;
            }
        }
    }
    return std::strong_ordering::equal;
}

std::string Multigraph::str() const {
    std::stringstream ss;
    ss << d_ << " " << n_;
    for (Vertex i = 0; i < n_; i++) {
        for (Vertex j = i + 1; j < n_; j++) {
            if (multiplicity(i, j)) {
                ss << "; " << i << " " << j << " " << multiplicity(i, j);
            }
        }
    }
    return ss.str();
}

bool is_connected(const Multigraph &g) {
    int n = g.size();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w = 0; w < n; w++) {
            if (!seen[w] && g.adjacent(v, w)) {
                seen[w] = true;
                reached++;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

const char *kind_name(TripleKind kind) {
    return kind == TripleKind::angle ? "angle" : "triangle";
}

std::vector<Triple> find_angle_or_triangle(const Multigraph &g) {
    if (g.size() < 3) {
        throw StructureError("need at least 3 vertices to find an angle or triangle");
    }
    if (!is_connected(g)) {
        throw StructureError("graph is not connected");
    }
    std::vector<Triple> result;
    for (Vertex a = 0; a < g.size(); a++) {
        for (Vertex b = 0; b < g.size(); b++) {
            if (b == a || !g.adjacent(a, b)) {
                continue;
            }
            for (Vertex c = 0; c < g.size(); c++) {
                if (c == a || c == b || !g.adjacent(a, c)) {
                    continue;
                }
                result.push_back(Triple{a, b, c, g.adjacent(b, c) ? TripleKind::triangle : TripleKind::angle});
            }
        }
    }
    return result;
}

NeighborhoodPartition partition_neighborhoods(const Multigraph &g, Vertex a, Vertex b, Vertex c) {
    int n = g.size();
    auto in_range = [&](Vertex v) {
        return v >= 0 && v < n;
    };
    if (!in_range(a) || !in_range(b) || !in_range(c) || a == b || b == c || a == c) {
        throw StructureError("triple must be three distinct vertices of the graph");
    }
    if (!g.adjacent(a, b) || !g.adjacent(a, c)) {
        throw StructureError("triple needs edges A-B and A-C");
    }
    NeighborhoodPartition p;
    p.triple = Triple{a, b, c, g.adjacent(b, c) ? TripleKind::triangle : TripleKind::angle};
    for (Vertex v = 0; v < n; v++) {
        if (v == a || v == b || v == c) {
            continue;
        }
        bool na = g.adjacent(v, a);
        bool nb = g.adjacent(v, b);
        bool nc = g.adjacent(v, c);
        int count = na + nb + nc;
        if (count == 3) {
            p.t_abc.insert(v);
        } else if (count == 2) {
            (na && nb ? p.j_ab : nb && nc ? p.j_bc : p.j_ca).insert(v);
        } else if (count == 1) {
            (na ? p.e_a : nb ? p.e_b : p.e_c).insert(v);
        } else {
            p.rest.insert(v);
        }
    }
    return p;
}

Multigraph local_complement(const Multigraph &g, Vertex a) {
    if (a < 0 || a >= g.size()) {
        throw RangeError("vertex " + std::to_string(a) + " out of range");
    }
    Multigraph result = g;
    std::vector<Vertex> nbrs = g.neighbors(a);
    int d = g.dimension();
    for (size_t x = 0; x < nbrs.size(); x++) {
        for (size_t y = x + 1; y < nbrs.size(); y++) {
            Vertex i = nbrs[x];
            Vertex j = nbrs[y];
            result.set_multiplicity(i, j, mod(g.multiplicity(i, j) + g.multiplicity(a, i) * g.multiplicity(a, j), d));
        }
    }
    return result;
}

Multigraph permute(const Multigraph &g, const std::vector<Vertex> &perm) {
    if (static_cast<int>(perm.size()) != g.size()) {
        throw StructureError("permutation size does not match the graph");
    }
    Multigraph result(g.dimension(), g.size());
    for (Vertex i = 0; i < g.size(); i++) {
        for (Vertex j = i + 1; j < g.size(); j++) {
            result.set_multiplicity(i, j, g.multiplicity(perm[i], perm[j]));
        }
    }
    return result;
}

namespace {

/// Branch-and-bound over vertex orders, filling column_key one column per level.
///
/// Works on the leading `n` vertices of `g`, which lets the orderly enumeration test
/// prefixes without copying.
class CanonicalSearch {
   public:
    CanonicalSearch(const Multigraph &g, int n) : g_(g), n_(n) {
        perm_.resize(static_cast<size_t>(n));
        used_.assign(static_cast<size_t>(n), false);
        size_t len = static_cast<size_t>(n) * (n - 1) / 2;
        cur_.assign(len, 0);
        best_.reserve(len);
        for (Vertex j = 1; j < n; j++) {
            for (Vertex i = 0; i < j; i++) {
                best_.push_back(static_cast<uint8_t>(g.multiplicity(i, j)));
            }
        }
        best_perm_.resize(static_cast<size_t>(n));
        for (int k = 0; k < n; k++) {
            best_perm_[k] = k;
        }
    }

    /// Least key over all orders; best_perm() then holds a minimizing order.
    void minimize() {
        check_only_ = false;
        found_smaller_ = false;
        dfs(0);
    }

    /// True when no order gives a key smaller than the identity order.
    bool identity_is_minimal() {
        check_only_ = true;
        found_smaller_ = false;
        dfs(0);
        return !found_smaller_;
    }

    const std::vector<Vertex> &best_perm() const {
        return best_perm_;
    }

   private:
    void dfs(int k) {
        if (k == n_) {
            if (cur_ < best_) {
                best_ = cur_;
                best_perm_ = perm_;
                found_smaller_ = true;
            }
            return;
        }
        size_t offset = static_cast<size_t>(k) * (k - 1) / 2;
        size_t end = offset + static_cast<size_t>(k);
        for (Vertex v = 0; v < n_; v++) {
            if (used_[v]) {
                continue;
            }
            perm_[k] = v;
            for (int i = 0; i < k; i++) {
                cur_[offset + i] = static_cast<uint8_t>(g_.multiplicity(perm_[i], v));
            }
            int cmp = 0;
            for (size_t p = 0; p < end && cmp == 0; p++) {
                cmp = (cur_[p] > best_[p]) - (cur_[p] < best_[p]);
            }
            if (cmp > 0) {
                continue;
            }
            if (cmp < 0 && check_only_) {
                found_smaller_ = true;
                return;
            }
            used_[v] = true;
            dfs(k + 1);
            used_[v] = false;
            if (check_only_ && found_smaller_) {
                return;
            }
        }
    }

    const Multigraph &g_;
    int n_;
    bool check_only_ = false;
    bool found_smaller_ = false;
    std::vector<Vertex> perm_;
    std::vector<bool> used_;
    std::vector<uint8_t> cur_;
    std::vector<uint8_t> best_;
    std::vector<Vertex> best_perm_;
};

}  // namespace

Multigraph canonical_form(const Multigraph &g) {
    CanonicalSearch search(g, g.size());
    search.minimize();
    return permute(g, search.best_perm());
}

bool is_canonical(const Multigraph &g) {
    return CanonicalSearch(g, g.size()).identity_is_minimal();
}

LcOrbit lc_orbit(const Multigraph &g, size_t cap) {
    LcOrbit orbit;
    std::set<Multigraph> seen;
    std::deque<Multigraph> frontier;
    Multigraph start = canonical_form(g);
    seen.insert(start);
    frontier.push_back(start);
    while (!frontier.empty()) {
        Multigraph cur = std::move(frontier.front());
        frontier.pop_front();
        for (Vertex a = 0; a < cur.size(); a++) {
            Multigraph next = canonical_form(local_complement(cur, a));
            if (seen.count(next)) {
                continue;
            }
            if (seen.size() >= cap) {
                orbit.truncated = true;
                frontier.clear();
                break;
            }
            seen.insert(next);
            frontier.push_back(std::move(next));
        }
    }
    orbit.members.assign(seen.begin(), seen.end());
    return orbit;
}

namespace {

/// Orderly generation: a graph is emitted only if it is canonical, and every prefix
/// of a canonical graph (the induced subgraph on its first k vertices) is canonical
/// too, so non-canonical prefixes are pruned.
class OrderlyEnumerator {
   public:
    OrderlyEnumerator(int n, int d, const std::function<bool(const Multigraph &)> &visit, size_t max_graphs)
        : n_(n), d_(d), visit_(visit), max_graphs_(max_graphs), g_(d, n) {
    }

    void run() {
        if (n_ == 1) {
            emit();
            return;
        }
        extend(1);
    }

   private:
    /// Returns false once the visitor asks to stop.
    bool extend(int k) {
        std::vector<int> column(static_cast<size_t>(k), 0);
        while (true) {
            for (int i = 0; i < k; i++) {
                g_.set_multiplicity(i, k, column[i]);
            }
            if (prefix_is_canonical(k + 1)) {
                if (k + 1 == n_) {
                    if (is_connected(g_) && !emit()) {
                        return false;
                    }
                } else if (!extend(k + 1)) {
                    return false;
                }
            }
            // Odometer with column[0] most significant keeps emission in key order.
            int pos = k - 1;
            while (pos >= 0 && column[pos] == d_ - 1) {
                column[pos] = 0;
                pos--;
            }
            if (pos < 0) {
                break;
            }
            column[pos]++;
        }
        for (int i = 0; i < k; i++) {
            g_.set_multiplicity(i, k, 0);
        }
        return true;
    }

    bool prefix_is_canonical(int k) {
        return CanonicalSearch(g_, k).identity_is_minimal();
    }

    bool emit() {
        if (emitted_ >= max_graphs_) {
            throw EnumerationOverflow(
                "enumeration of n=" + std::to_string(n_) + ", d=" + std::to_string(d_) + " exceeded " +
                    std::to_string(max_graphs_) + " classes",
                emitted_);
        }
        emitted_++;
        return visit_(g_);
    }

    int n_;
    int d_;
    const std::function<bool(const Multigraph &)> &visit_;
    size_t max_graphs_;
    size_t emitted_ = 0;
    Multigraph g_;
};

}  // namespace

void enumerate_connected_multigraphs(
    int n, int d, const std::function<bool(const Multigraph &)> &visit, size_t max_graphs) {
    if (n < 1 || d < 2) {
        throw RangeError("enumeration needs n >= 1 and d >= 2");
    }
    OrderlyEnumerator(n, d, visit, max_graphs).run();
}

std::vector<Multigraph> connected_multigraph_classes(int n, int d, size_t max_graphs) {
    std::vector<Multigraph> result;
    enumerate_connected_multigraphs(
        n,
        d,
        [&](const Multigraph &g) {
            result.push_back(g);
            return true;
        },
        max_graphs);
    return result;
}

}  // namespace netcert
