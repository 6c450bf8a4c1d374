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

#ifndef LRST_TESTS_HELPERS_HPP
#define LRST_TESTS_HELPERS_HPP

#include <optional>
#include <random>

#include "lrst/minpoly.hpp"

namespace lrst::testing {

/// The error code thrown by fn, if any.
template <typename F>
std::optional<Errc> code_of(F&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline FieldPtr gf2() { return Field::prime(2); }

inline FieldPtr gf4() {
    static FieldPtr f = Field::extend(gf2(), Poly::from_ints(gf2(), {1, 1, 1}).coeffs(), "a");
    return f;
}

inline FieldPtr gf8() {
    static FieldPtr f = Field::extend(gf2(), Poly::from_ints(gf2(), {1, 1, 0, 1}).coeffs(), "a");
    return f;
}

inline FieldPtr gf16() {
    static FieldPtr f =
        Field::extend(gf2(), Poly::from_ints(gf2(), {1, 1, 0, 0, 1}).coeffs(), "a");
    return f;
}

inline FieldPtr gf9() {
    static FieldPtr f =
        Field::extend(Field::prime(3), Poly::from_ints(Field::prime(3), {1, 0, 1}).coeffs(), "a");
    return f;
}

/// GF(16) as a degree-2 extension of GF(4), modulus y^2 + y + alpha.
inline FieldPtr gf16_over_gf4() {
    static FieldPtr f = Field::extend(
        gf4(), std::vector<Element>{gf4()->generator(), gf4()->one(), gf4()->one()}, "t");
    return f;
}

inline Element random_element(const FieldPtr& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f->order() - 1);
    return f->from_index(dist(rng));
}

inline Element random_nonzero(const FieldPtr& f, std::mt19937_64& rng) {
    for (;;) {
        Element e = random_element(f, rng);
        if (!e.is_zero()) return e;
    }
}

inline Poly random_monic(const FieldPtr& f, int degree, std::mt19937_64& rng) {
    std::vector<Element> cs;
    cs.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) cs.push_back(random_element(f, rng));
    cs.push_back(f->one());
    return Poly(f, std::move(cs));
}

inline Poly random_irreducible(const FieldPtr& f, int degree, std::mt19937_64& rng) {
    for (;;) {
        Poly p = random_monic(f, degree, rng);
        if (is_irreducible(p)) return p;
    }
}

/// Random sequence whose minimal polynomial is exactly h: numerator coprime
/// to h and nonzero.
inline Sequence random_sequence_with_minpoly(const Poly& h, std::mt19937_64& rng) {
    const FieldPtr& f = h.field();
    for (;;) {
        std::vector<Element> cs;
        for (int i = 0; i < h.degree(); ++i) cs.push_back(random_element(f, rng));
        Poly g(f, std::move(cs));
        if (g.is_zero()) continue;
        if (gcd(g, h).degree() == 0) return Sequence::from_rational(make_rational(g, h));
    }
}

inline LinearizedMap random_transform(const Tower& tw, std::mt19937_64& rng) {
    std::vector<Element> cs;
    for (std::size_t i = 0; i < tw.n(); ++i) cs.push_back(random_element(tw.top(), rng));
    return LinearizedMap(tw, std::move(cs));
}

}  // namespace lrst::testing

#endif
