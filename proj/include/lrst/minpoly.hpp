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

#ifndef LRST_MINPOLY_HPP
#define LRST_MINPOLY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lrst/transform.hpp"

namespace lrst {

/// The minimal polynomial of T(S) restricted to one sigma-equivalence
/// class: product over j of sigma^(j)(rep)^bits[j], with bits of length
/// k(rep). Square-free by construction.
struct ExponentPattern {
    Poly rep;
    std::size_t k = 0;
    std::vector<int> bits;  // each 0 or 1

    Poly expanded(const Tower& tw) const;
};

struct MinPolyReport {
    std::vector<std::pair<Poly, int>> factored;  // monic irreducibles, all exponent 1
    Poly expanded;
    std::vector<ExponentPattern> patterns;  // one per sigma class of h
    std::size_t complexity = 0;             // deg expanded
    std::size_t bound = 0;                  // deg of the minimal polynomial over GF(q)
    std::optional<Poly> oracle;             // Berlekamp-Massey cross-check, when requested
    std::optional<bool> agrees;
};

/// Minimal polynomial of T(S) for S with irreducible minimal polynomial,
/// from the canonical rational form of S.
ExponentPattern minpoly_irreducible(const Tower& tw, const RationalForm& r, const LinearizedMap& T);

/// Same, for S whose minimal polynomial is a product of distinct conjugates
/// sigma^(i_j)(h1) of one irreducible; parts are (offset, rational form of
/// the component with denominator sigma^(offset)(h1)).
ExponentPattern minpoly_one_class(const Tower& tw,
                                  const std::vector<std::pair<std::size_t, RationalForm>>& parts,
                                  const LinearizedMap& T);

/// Full pipeline for square-free minimal polynomials: factor, classify,
/// decompose, per-class pattern, product; optional termwise oracle check.
MinPolyReport minpoly_general(const Sequence& S, const LinearizedMap& T, bool verify,
                              std::uint64_t rng_seed);

/// m-sequence special case: the pattern is the support of T's coefficients.
ExponentPattern minpoly_msequence(const Tower& tw, const Poly& h, const LinearizedMap& T);

/// A transform realizing a requested exponent pattern for a sequence with
/// irreducible minimal polynomial: c_j = bits[j] as 0/1 field elements.
LinearizedMap construct_transform_for_pattern(const Tower& tw, const RationalForm& r,
                                              const std::vector<int>& bits);

/// All 2^k(h) minimal polynomials attainable over every linear transform.
struct AttainableSet {
    std::size_t k = 0;
    std::uint64_t count = 0;
    std::vector<Poly> polynomials;  // in bitmask order; bit j selects sigma^(j)(h)
};
AttainableSet enumerate_attainable(const Tower& tw, const Poly& h);

/// H(x): product over sigma classes of the conjugate products; the minimal
/// polynomial over GF(q) of any S with square-free minimal polynomial h.
/// Returned at the top level with all coefficients in GF(q).
Poly minpoly_over_base(const Tower& tw, const Poly& h);

/// The refuted lcm formula: lcm of sigma^(j)(h) over the support of T's
/// coefficients. Kept only to demonstrate the discrepancy.
Poly yg_lcm_formula(const Tower& tw, const Poly& h, const LinearizedMap& T);

/// (L_top, L_base): linear complexity of T(S) and its upper bound L_q(S).
std::pair<std::size_t, std::size_t> complexity_bound_report(const Sequence& S,
                                                            const LinearizedMap& T);

}  // namespace lrst

#endif
