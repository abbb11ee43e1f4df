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

#include "relent/rng.h"

namespace relent {

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 derive_stream(uint64_t master_seed, uint64_t index, uint64_t stream) {
    uint64_t k = mix64(mix64(mix64(master_seed) ^ index) ^ (stream * 0xd1b54a32d192ed03ULL));
    std::seed_seq seq{static_cast<uint32_t>(k), static_cast<uint32_t>(k >> 32), static_cast<uint32_t>(index),
                      static_cast<uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

uint64_t sample_priority(uint64_t master_seed, uint64_t index) {
    return mix64(mix64(master_seed ^ 0x5851f42d4c957f2dULL) + index);
}

}  // namespace relent
