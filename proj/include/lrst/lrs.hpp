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

#ifndef LRST_LRS_HPP
#define LRST_LRS_HPP

#include <optional>
#include <vector>

#include "lrst/poly.hpp"

namespace lrst {

/// Canonical generating-function form g/h: h monic, deg g < deg h,
/// gcd(g, h) = 1. The zero sequence is (0, 1).
struct RationalForm {
    Poly num;
    Poly den;
};

/// Reduce (g, h) to canonical form.
RationalForm make_rational(Poly g, Poly h);

/// A linear recurring sequence, held as a rational form and/or a pair
/// (monic characteristic polynomial, initial terms s_1..s_d). Terms are
/// 1-based in all external I/O; term lists returned here start at s_1.
class Sequence {
   public:
    static Sequence zero(const FieldPtr& f);
    static Sequence from_rational(RationalForm r);
    static Sequence from_recurrence(Poly charpoly, std::vector<Element> initial);

    const FieldPtr& field() const noexcept { return field_; }
    bool has_rational() const noexcept { return rational_.has_value(); }
    const RationalForm& rational() const { return *rational_; }
    bool has_recurrence() const noexcept { return charpoly_.has_value(); }
    const Poly& charpoly() const { return *charpoly_; }
    const std::vector<Element>& initial() const { return initial_; }

    /// First `count` terms s_1..s_count.
    std::vector<Element> terms(std::size_t count) const;

    /// Copy of this sequence with the given rational form attached.
    Sequence with_rational(RationalForm r) const;

   private:
    FieldPtr field_;
    std::optional<RationalForm> rational_;
    std::optional<Poly> charpoly_;
    std::vector<Element> initial_;
};

/// Laurent expansion of g/h in powers of x^-1, first `count` coefficients.
std::vector<Element> terms_from_rational(const RationalForm& r, std::size_t count);

/// Recover the canonical (g, h) from terms and a characteristic polynomial h
/// of the term stream; verifies by regenerating the given terms.
RationalForm rational_form(const std::vector<Element>& terms, const Poly& h);

/// Monic minimal polynomial of the shortest LFSR generating `terms`.
/// Exact whenever terms.size() >= 2 * (true linear complexity).
Poly berlekamp_massey(const FieldPtr& f, const std::vector<Element>& terms);

/// The sequence f(L)(S) under the left-shift operator L.
Sequence shift_apply(const Poly& f, const Sequence& S);

/// Split S = sum S_j along pairwise coprime monic parts whose product is the
/// minimal polynomial of S; each S_j carries its rational form.
std::vector<Sequence> decompose(const Sequence& S, const std::vector<Poly>& parts);

Sequence sum_sequences(const std::vector<Sequence>& seqs);

Poly min_poly(const Sequence& S);

}  // namespace lrst

#endif
