// Copyright 2026 The lrst Authors
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

#ifndef LRST_INTFACTOR_HPP
#define LRST_INTFACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace lrst {

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n) noexcept;

/// Factorization of n as sorted (prime, multiplicity) pairs.
/// Trial division for small primes, Pollard rho for the rest.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

/// Distinct prime divisors of n, sorted.
std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n);

}  // namespace lrst

#endif
