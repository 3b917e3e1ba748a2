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

#ifndef NETCERT_ERRORS_H
#define NETCERT_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netcert {

/// Operands live over different local dimensions.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numeric argument is outside its documented domain.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// A graph, network or grouping violates a structural precondition.
struct StructureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The input is outside the family a routine is specialized for.
struct WrongFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An edge multiplicity is 0 mod d where a nonzero one is required.
struct DegenerateMultiplicity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A source touches the copied group in a way the inflation builders cannot rewire.
struct UnsupportedSource : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense computation would exceed the configured Hilbert-space cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed graph or certificate text.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an enumeration hits its graph cap.
struct EnumerationOverflow : std::runtime_error {
    EnumerationOverflow(const std::string &msg, size_t emitted_classes)
        : std::runtime_error(msg), emitted(emitted_classes) {
    }
    size_t emitted;
};

/// A randomized lemma check found a counterexample. Must never fire.
struct PropertyViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace netcert

#endif
