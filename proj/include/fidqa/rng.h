/*
 * Copyright (c) 2026, the fidqa authors.  All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fidqa {

/// Run RNG: std::mt19937_64 (bit-exact across platforms per the C++
/// standard) with hand-rolled transforms, since the standard library's
/// distributions are implementation-defined. Used for weight init, dropout,
/// target sampling and batch sampling.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1) from the high 53 bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Modulo reduction; the bias is < 2^-53 for
    /// any n this project uses and keeps the draw count at one per call.
    uint64_t uniform_int(uint64_t n) { return gen_() % n; }

    /// Standard normal via Box-Muller (two uniform draws per value).
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        return r * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace fidqa
