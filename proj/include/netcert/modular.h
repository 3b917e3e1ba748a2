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

#ifndef NETCERT_MODULAR_H
#define NETCERT_MODULAR_H

#include <numeric>
#include <utility>

namespace netcert {

/// Reduces `a` into [0, m).
inline int mod(long long a, int m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

/// Inverse of `a` modulo `m`, for gcd(a, m) = 1 and m >= 2, in [1, m).
inline int mod_inverse(int a, int m) {
    long long t = 0, new_t = 1;
    long long r = m, new_r = mod(a, m);
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return mod(t, m);
}

}  // namespace netcert

#endif
