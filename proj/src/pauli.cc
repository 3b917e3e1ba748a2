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

#include "netcert/pauli.h"

#include <charconv>
#include <sstream>

#include "netcert/errors.h"

namespace netcert {

std::string Party::str() const {
    std::string s = std::to_string(vertex);
    s.append(static_cast<size_t>(copy), '\'');
    return s;
}

Party Party::parse(std::string_view label) {
    size_t primes = 0;
    while (primes < label.size() && label[label.size() - 1 - primes] == '\'') {
        primes++;
    }
    std::string_view digits = label.substr(0, label.size() - primes);
    int v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || v < 0) {
        throw ParseError("bad party label '" + std::string(label) + "'");
    }
    return Party{v, static_cast<int>(primes)};
}

PauliOperator::PauliOperator(int d) : d_(d) {
    if (d < 2) {
        throw RangeError("local dimension must be at least 2, got " + std::to_string(d));
    }
}

PauliOperator PauliOperator::from_sites(int d, const std::map<Party, SiteExponents> &sites, long long phase_exp) {
    PauliOperator result(d);
    result.phase_ = mod(phase_exp, 2 * d);
    for (const auto &[party, e] : sites) {
        SiteExponents r{mod(e.x, d), mod(e.z, d)};
        if (r.x != 0 || r.z != 0) {
            result.sites_.emplace(party, r);
        }
    }
    return result;
}

PauliOperator PauliOperator::x_on(int d, Party p, long long power) {
    return from_sites(d, {{p, SiteExponents{mod(power, d), 0}}});
}

PauliOperator PauliOperator::z_on(int d, Party p, long long power) {
    return from_sites(d, {{p, SiteExponents{0, mod(power, d)}}});
}

SiteExponents PauliOperator::at(Party p) const {
    auto it = sites_.find(p);
    return it == sites_.end() ? SiteExponents{} : it->second;
}

std::string PauliOperator::str() const {
    std::stringstream ss;
    ss << "tau^" << phase_;
    if (sites_.empty()) {
        ss << " I";
    }
    for (const auto &[party, e] : sites_) {
        ss << " ";
        if (e.x) {
            ss << "X" << (e.x == 1 ? "" : "^" + std::to_string(e.x));
        }
        if (e.z) {
            ss << "Z" << (e.z == 1 ? "" : "^" + std::to_string(e.z));
        }
        ss << "@" << party.str();
    }
    return ss.str();
}

static void require_same_dimension(const PauliOperator &p, const PauliOperator &q) {
    if (p.dimension() != q.dimension()) {
        throw DimensionError(
            "operators over d=" + std::to_string(p.dimension()) + " and d=" + std::to_string(q.dimension()));
    }
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    require_same_dimension(p, q);
    int d = p.dimension();
    std::map<Party, SiteExponents> sites = p.sites();
    long long phase = p.phase_exp() + q.phase_exp();
    for (const auto &[party, eq] : q.sites()) {
        SiteExponents &ep = sites[party];
        // X^a Z^b X^c Z^e = omega^{bc} X^{a+c} Z^{b+e}.
        phase += 2LL * ep.z * eq.x;
        ep.x += eq.x;
        ep.z += eq.z;
    }
    return PauliOperator::from_sites(d, sites, phase);
}

int commutation_phase(const PauliOperator &p, const PauliOperator &q) {
    require_same_dimension(p, q);
    long long k = 0;
    for (const auto &[party, ep] : p.sites()) {
        SiteExponents eq = q.at(party);
        k += static_cast<long long>(ep.z) * eq.x - static_cast<long long>(eq.z) * ep.x;
    }
    return mod(k, p.dimension());
}

PauliOperator dagger(const PauliOperator &p) {
    // (X^x Z^z)^dagger = Z^{-z} X^{-x} = omega^{xz} X^{-x} Z^{-z}.
    std::map<Party, SiteExponents> sites;
    long long phase = -static_cast<long long>(p.phase_exp());
    for (const auto &[party, e] : p.sites()) {
        phase += 2LL * e.x * e.z;
        sites.emplace(party, SiteExponents{-e.x, -e.z});
    }
    return PauliOperator::from_sites(p.dimension(), sites, phase);
}

PauliOperator power(const PauliOperator &p, long long t) {
    PauliOperator base = t < 0 ? dagger(p) : p;
    unsigned long long n = t < 0 ? static_cast<unsigned long long>(-(t + 1)) + 1 : static_cast<unsigned long long>(t);
    PauliOperator acc(p.dimension());
    while (n) {
        if (n & 1) {
            acc = multiply(acc, base);
        }
        n >>= 1;
        if (n) {
            base = multiply(base, base);
        }
    }
    return acc;
}

std::set<Party> support(const PauliOperator &p) {
    std::set<Party> result;
    for (const auto &[party, e] : p.sites()) {
        result.insert(party);
    }
    return result;
}

PauliOperator restrict_to(const PauliOperator &p, const std::set<Party> &keep) {
    std::map<Party, SiteExponents> sites;
    for (const auto &[party, e] : p.sites()) {
        if (keep.count(party)) {
            sites.emplace(party, e);
        }
    }
    return PauliOperator::from_sites(p.dimension(), sites, 0);
}

PauliOperator relabel(const PauliOperator &p, const std::map<Party, Party> &relabel) {
    std::map<Party, SiteExponents> sites;
    for (const auto &[party, e] : p.sites()) {
        auto it = relabel.find(party);
        Party target = it == relabel.end() ? party : it->second;
        if (!sites.emplace(target, e).second) {
            throw StructureError("relabeling merges two sites onto " + target.str());
        }
    }
    return PauliOperator::from_sites(p.dimension(), sites, p.phase_exp());
}

}  // namespace netcert
