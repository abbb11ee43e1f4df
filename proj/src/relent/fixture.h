// Copyright 2026 The relent Authors
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

#ifndef RELENT_FIXTURE_H
#define RELENT_FIXTURE_H

#include <cstdint>
#include <string>

#include "relent/entropy.h"

namespace relent {

/// A two-qubit (rho, sigma) pair with its stored delta_s, serialized with
/// every matrix entry as a C99 hex float so reloading is bit exact.
struct CounterexampleFixture {
    uint64_t master_seed = 0;
    uint64_t index = 0;
    DensityMatrix rho = DensityMatrix::maximally_mixed(4);
    DensityMatrix sigma = DensityMatrix::maximally_mixed(4);
    double delta_s = 0;

    std::string to_json() const;
    /// Throws DomainError on malformed input.
    static CounterexampleFixture from_json(const std::string &text);
    /// delta_s recomputed from the stored matrices.
    double recompute() const;
};

std::string hex_double(double v);
double parse_hex_double(const std::string &s);

}  // namespace relent

#endif
