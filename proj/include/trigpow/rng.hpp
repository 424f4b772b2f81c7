// Copyright 2026 The trigpow authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace trigpow {

// splitmix64 (Steele, Lea, Flood): tiny, splittable, identical output on
// every platform. All randomized paths in this project go through it so a
// seed pins the run exactly.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double next_unit() {  // uniform in [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_below(std::uint64_t bound) {  // uniform in [0, bound)
    return next() % bound;  // bias < 2^-40 for bound <= 2^24; fine for tests
  }

  // uniform integer in [0, 10^digits) assembled from 64-bit chunks; the
  // modulo bias is below 10^digits / 2^(64*chunks - ...) which is negligible
  // for the chunk count used
  mpz_class next_decimal(int digits) {
    int chunks = digits / 19 + 2;
    mpz_class acc = 0;
    for (int i = 0; i < chunks; ++i) {
      acc <<= 64;
      acc += mpz_class(static_cast<unsigned long>(next()));
    }
    mpz_class mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class out;
    mpz_fdiv_r(out.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
    return out;
  }
};

}  // namespace trigpow
