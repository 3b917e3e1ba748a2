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

#include "netcert/network.h"

#include <algorithm>
#include <sstream>

#include "netcert/errors.h"

namespace netcert {

Network::Network(std::set<Party> parties, std::vector<Source> sources)
    : parties_(std::move(parties)), sources_(std::move(sources)) {
    for (Source &s : sources_) {
        if (s.empty()) {
            throw StructureError("empty source");
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw StructureError("source lists a party twice");
        }
        for (const Party &p : s) {
            if (!parties_.count(p)) {
                throw StructureError("source mentions unknown party " + p.str());
            }
        }
    }
    std::sort(sources_.begin(), sources_.end());
}

std::string Network::str() const {
    std::stringstream ss;
    ss << "{";
    bool first = true;
    for (const Source &s : sources_) {
        ss << (first ? "" : " ") << "(";
        for (size_t k = 0; k < s.size(); k++) {
            ss << (k ? "," : "") << s[k].str();
        }
        ss << ")";
        first = false;
    }
    ss << "}";
    return ss.str();
}

Network complete_bipartite_network(const std::set<Party> &parties) {
    if (parties.size() < 2) {
        throw StructureError("a bipartite network needs at least two parties");
    }
    std::vector<Source> sources;
    for (auto i = parties.begin(); i != parties.end(); ++i) {
        for (auto j = std::next(i); j != parties.end(); ++j) {
            sources.push_back({*i, *j});
        }
    }
    return Network(parties, std::move(sources));
}

Network reduce(const Network &n, const std::set<Party> &t) {
    std::set<Party> parties;
    for (const Party &p : t) {
        if (n.parties().count(p)) {
            parties.insert(p);
        }
    }
    std::vector<Source> sources;
    for (const Source &s : n.sources()) {
        Source kept;
        for (const Party &p : s) {
            if (t.count(p)) {
                kept.push_back(p);
            }
        }
        if (!kept.empty()) {
            sources.push_back(std::move(kept));
        }
    }
    return Network(std::move(parties), std::move(sources));
}

Network relabel(const Network &n, const std::map<Party, Party> &relabeling) {
    auto rename = [&](const Party &p) {
        auto it = relabeling.find(p);
        return it == relabeling.end() ? p : it->second;
    };
    std::set<Party> parties;
    for (const Party &p : n.parties()) {
        if (!parties.insert(rename(p)).second) {
            throw StructureError("relabeling is not injective at " + p.str());
        }
    }
    std::vector<Source> sources;
    for (const Source &s : n.sources()) {
        Source renamed;
        for (const Party &p : s) {
            renamed.push_back(rename(p));
        }
        sources.push_back(std::move(renamed));
    }
    return Network(std::move(parties), std::move(sources));
}

bool reduced_equal(
    const Network &n1,
    const std::set<Party> &t1,
    const Network &n2,
    const std::set<Party> &t2,
    const std::map<Party, Party> &bijection) {
    std::set<Party> image;
    for (const Party &p : t1) {
        auto it = bijection.find(p);
        if (it == bijection.end()) {
            throw StructureError("bijection does not cover party " + p.str());
        }
        if (!image.insert(it->second).second) {
            throw StructureError("bijection is not injective at " + p.str());
        }
    }
    if (bijection.size() != t1.size() || image != t2) {
        throw StructureError("map is not a bijection between the two party sets");
    }
    return relabel(reduce(n1, t1), bijection) == reduce(n2, t2);
}

void GroupedNetwork::validate() const {
    std::set<Party> seen;
    for (const auto &group : groups) {
        for (const Party &p : group) {
            if (p.copy != 0) {
                throw StructureError("group member " + p.str() + " is already a copy");
            }
            if (!base.parties().count(p)) {
                throw StructureError("group member " + p.str() + " is not a party of the network");
            }
            if (!seen.insert(p).second) {
                throw StructureError("party " + p.str() + " appears in two groups");
            }
        }
    }
    if (seen != base.parties()) {
        throw StructureError("groups do not cover every party");
    }
}

std::map<Party, Party> copy_relabeling(const std::set<Party> &g1) {
    std::map<Party, Party> result;
    for (const Party &p : g1) {
        result[p] = Party{p.vertex, p.copy + 1};
    }
    return result;
}

namespace {

int group_of(const std::array<std::set<Party>, 4> &groups, const Party &p) {
    for (int k = 0; k < 4; k++) {
        if (groups[k].count(p)) {
            return k;
        }
    }
    return -1;
}

std::string source_str(const Source &s) {
    std::string out = "(";
    for (size_t k = 0; k < s.size(); k++) {
        out += (k ? "," : "") + s[k].str();
    }
    return out + ")";
}

}  // namespace

Network build_inflation(const InflationSpec &spec) {
    const GroupedNetwork &gn = spec.grouping;
    gn.validate();
    const auto &groups = gn.groups;
    std::vector<Source> sources;

    if (spec.kind == InflationKind::gamma) {
        for (const Source &s : gn.base.sources()) {
            bool touches1 = false, touches2 = false;
            for (const Party &p : s) {
                int g = group_of(groups, p);
                touches1 |= g == 0;
                touches2 |= g == 1;
            }
            if (!(touches1 && touches2)) {
                sources.push_back(s);
                continue;
            }
            if (s.size() != 2) {
                throw UnsupportedSource("source " + source_str(s) + " spans G1 and G2 with more than two parties");
            }
            sources.push_back({s[0]});
            sources.push_back({s[1]});
        }
        return Network(gn.base.parties(), std::move(sources));
    }

    auto copies = copy_relabeling(groups[0]);
    std::set<Party> parties = gn.base.parties();
    for (const auto &[p, c] : copies) {
        parties.insert(c);
    }
    for (const Source &s : gn.base.sources()) {
        std::vector<int> gs;
        for (const Party &p : s) {
            gs.push_back(group_of(groups, p));
        }
        bool any1 = std::count(gs.begin(), gs.end(), 0) > 0;
        bool all1 = std::count(gs.begin(), gs.end(), 0) == static_cast<long>(gs.size());
        if (!any1) {
            sources.push_back(s);
        } else if (all1) {
            sources.push_back(s);
            Source dup;
            for (const Party &p : s) {
                dup.push_back(copies.at(p));
            }
            sources.push_back(std::move(dup));
        } else {
            if (s.size() != 2) {
                throw UnsupportedSource("source " + source_str(s) + " joins G1 to other groups with more than two parties");
            }
            size_t inner = gs[0] == 0 ? 0 : 1;
            const Party &u = s[inner];
            const Party &w = s[1 - inner];
            int other = gs[1 - inner];
            if (other == 3) {
                sources.push_back(s);
                sources.push_back({copies.at(u)});
            } else {
                sources.push_back({copies.at(u), w});
                sources.push_back({u});
            }
        }
    }
    return Network(std::move(parties), std::move(sources));
}

std::vector<MarginalCheck> verify_marginal_chain(const MarginalChainInput &input) {
    const GroupedNetwork &gn = input.grouping;
    Network rho = gn.base;
    Network gamma = build_inflation(InflationSpec{InflationKind::gamma, gn});
    Network eta = build_inflation(InflationSpec{InflationKind::eta, gn});

    auto identity_on = [](const std::set<Party> &t) {
        std::map<Party, Party> m;
        for (const Party &p : t) {
            m[p] = p;
        }
        return m;
    };
    auto guarded = [](auto &&f) {
        try {
            return f();
        } catch (const StructureError &) {
            return false;
        }
    };

    std::vector<MarginalCheck> checks;
    auto s1 = support(input.s1);
    auto s2 = support(input.s2);
    auto s3 = support(input.s3);
    auto s4 = support(input.s4);
    checks.push_back({"S1 rho=gamma", guarded([&] {
                          return reduced_equal(rho, s1, gamma, s1, identity_on(s1));
                      })});
    checks.push_back({"S2 rho=gamma", guarded([&] {
                          return reduced_equal(rho, s2, gamma, s2, identity_on(s2));
                      })});
    checks.push_back({"S3 gamma=eta", guarded([&] {
                          return reduced_equal(gamma, s3, eta, s3, identity_on(s3));
                      })});
    checks.push_back({"S4 rho=eta'", guarded([&] {
                          auto copies = copy_relabeling(gn.groups[0]);
                          std::map<Party, Party> bij = identity_on(s4);
                          std::set<Party> image;
                          for (auto &[p, q] : bij) {
                              auto it = copies.find(p);
                              if (it != copies.end()) {
                                  q = it->second;
                              }
                              image.insert(q);
                          }
                          return reduced_equal(rho, s4, eta, image, bij);
                      })});
    return checks;
}

}  // namespace netcert
