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

#ifndef RELENT_RNG_H
#define RELENT_RNG_H

#include <cstdint>
#include <random>

namespace relent {

/// SplitMix64 finalizer.
uint64_t mix64(uint64_t x);

/// Seeds a generator from (master_seed, index, stream). Streams for
/// different indices are independent of how samples are scheduled.
std::mt19937_64 derive_stream(uint64_t master_seed, uint64_t index, uint64_t stream = 0);

/// Keyed pseudo-random priority of a sample index, used for deterministic
/// bottom-k subsampling.
uint64_t sample_priority(uint64_t master_seed, uint64_t index);

}  // namespace relent

#endif
