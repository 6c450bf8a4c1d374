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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"

using namespace lrst;
using namespace lrst::testing;

namespace {

struct Gf16Case {
    Tower tw{gf2(), gf16()};
    Element theta{gf16()->generator()};
    Poly h{Poly::x(gf16()) + Poly::constant(gf16()->generator().pow(10))};
    RationalForm r{make_rational(Poly::constant(gf16()->generator().pow(10)), h)};
    LinearizedMap T{tw, {gf16()->one(), gf16()->one(), gf16()->one()}};
};

}  // namespace

TEST_CASE("irreducible case: the worked exponent pattern") {
    const Gf16Case c;
    const ExponentPattern pat = minpoly_irreducible(c.tw, c.r, c.T);
    CHECK(pat.k == 2);
    CHECK(pat.bits == std::vector<int>{0, 1});
    CHECK(pat.expanded(c.tw) == Poly::x(gf16()) + Poly::constant(c.theta.pow(5)));
    CHECK(code_of([&] {
        minpoly_irreducible(c.tw, {Poly::constant(c.theta), c.h * sigma_poly(c.tw, c.h)}, c.T);
    }) == Errc::NotIrreducible);
}

TEST_CASE("zero and identity transforms behave as fixed points") {
    const Gf16Case c;
    const Sequence S = Sequence::from_rational(c.r);

    const MinPolyReport z = minpoly_general(S, LinearizedMap::zero(c.tw), true, 0);
    CHECK(z.expanded.is_one());
    CHECK(z.complexity == 0);
    CHECK(z.agrees == true);

    const MinPolyReport id = minpoly_general(S, LinearizedMap::identity(c.tw), true, 0);
    CHECK(id.expanded == c.h);
    CHECK(id.agrees == true);
}

TEST_CASE("zero sequence short-circuits") {
    const Gf16Case c;
    const MinPolyReport rep = minpoly_general(Sequence::zero(gf16()), c.T, true, 0);
    CHECK(rep.expanded.is_one());
    CHECK(rep.complexity == 0);
    CHECK(rep.bound == 0);
    CHECK(rep.agrees == true);
}

TEST_CASE("multiple roots are rejected") {
    const FieldPtr f = gf4();
    const Tower tw(gf2(), f);
    const Poly x = Poly::x(f);
    const Poly one = Poly::constant(f->one());
    const Sequence S = Sequence::from_rational(
        RationalForm{one, (x + one) * (x + one)});  // gcd(1, h) = 1, h not square-free
    CHECK(code_of([&] { minpoly_general(S, trace_map(tw), false, 0); }) == Errc::MultipleRoots);
}

TEST_CASE("per-class results divide the conjugate product and are coprime") {
    std::mt19937_64 rng(71);
    const Tower tw(gf2(), gf16());
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Poly> parts;
        Poly h = Poly::constant(gf16()->one());
        while (parts.size() < 1 + rng() % 3) {
            Poly p = random_irreducible(gf16(), 1 + int(rng() % 2), rng);
            bool dup = false;
            for (const auto& q : parts) dup |= (q == p);
            if (dup) continue;
            parts.push_back(p);
            h = h * p;
        }
        if (!is_squarefree(h)) continue;  // conjugate picks can still collide
        const Sequence S = random_sequence_with_minpoly(h, rng);
        const LinearizedMap T = random_transform(tw, rng);
        const MinPolyReport rep = minpoly_general(S, T, false, rng());
        for (std::size_t i = 0; i < rep.patterns.size(); ++i) {
            const Poly pi = rep.patterns[i].expanded(tw);
            CHECK(mod(conjugate_product(tw, rep.patterns[i].rep), pi).is_zero());
            for (std::size_t j = i + 1; j < rep.patterns.size(); ++j) {
                const Poly pj = rep.patterns[j].expanded(tw);
                if (pi.degree() > 0 && pj.degree() > 0) CHECK(gcd(pi, pj).is_one());
            }
        }
        // factored list multiplies back to the expanded polynomial
        Poly prod = Poly::constant(gf16()->one());
        for (const auto& [p, e] : rep.factored) prod = prod * p.pow(unsigned(e));
        CHECK(prod == rep.expanded);
    }
}

TEST_CASE("m-sequence pattern is the support of the coefficients") {
    const Tower tw(gf2(), gf4());
    const FieldPtr f4 = gf4();
    const Element alpha = f4->generator();
    const Poly h = Poly(f4, {alpha, f4->one()});  // x + a, primitive
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        const LinearizedMap T = random_transform(tw, rng);
        const ExponentPattern pat = minpoly_msequence(tw, h, T);
        REQUIRE(pat.bits.size() == 2);
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(pat.bits[j] == (T.coeffs()[j].is_zero() ? 0 : 1));
    }
    CHECK(code_of([&] {
        minpoly_msequence(tw, Poly::from_ints(f4, {1, 1}), trace_map(tw));
    }) == Errc::NotPrimitive);
}

TEST_CASE("m-sequence results are independent of the initial state") {
    const Tower tw(gf2(), gf4());
    const FieldPtr f4 = gf4();
    const Element alpha = f4->generator();
    // degree-2 primitive over GF(4)
    const Poly h = Poly(f4, {alpha, f4->one(), f4->one()});
    REQUIRE(is_primitive(h));
    std::mt19937_64 rng(79);
    for (int t = 0; t < 5; ++t) {
        const LinearizedMap T = random_transform(tw, rng);
        const Poly predicted = minpoly_msequence(tw, h, T).expanded(tw);
        for (int state = 0; state < 10; ++state) {
            std::vector<Element> init = {random_element(f4, rng), random_element(f4, rng)};
            if (init[0].is_zero() && init[1].is_zero()) init[0] = f4->one();
            const Sequence S = Sequence::from_recurrence(h, init);
            const MinPolyReport rep = minpoly_general(S, T, true, rng());
            CHECK(rep.expanded == predicted);
            CHECK(rep.agrees == true);
        }
        // the refuted lcm formula happens to agree on m-sequences
        CHECK(yg_lcm_formula(tw, h, T) == predicted);
    }
}

TEST_CASE("pattern construction realizes every requested pattern") {
    const Gf16Case c;
    const Sequence S = Sequence::from_rational(c.r);
    for (int mask = 0; mask < 4; ++mask) {
        const std::vector<int> bits = {mask & 1, (mask >> 1) & 1};
        const LinearizedMap T = construct_transform_for_pattern(c.tw, c.r, bits);
        const MinPolyReport rep = minpoly_general(S, T, true, 0);
        Poly want = Poly::constant(gf16()->one());
        if (bits[0]) want = want * c.h;
        if (bits[1]) want = want * sigma_poly(c.tw, c.h);
        CHECK(rep.expanded == want);
        CHECK(rep.agrees == true);
    }
    CHECK(code_of([&] {
        construct_transform_for_pattern(c.tw, c.r, {1});
    }) == Errc::PatternLengthMismatch);
    CHECK(code_of([&] {
        construct_transform_for_pattern(c.tw, RationalForm{Poly(gf16()), c.h}, {1, 0});
    }) == Errc::ZeroSequence);
}

TEST_CASE("enumerate_attainable lists the full pattern space") {
    const Gf16Case c;
    const AttainableSet att = enumerate_attainable(c.tw, c.h);
    CHECK(att.k == 2);
    CHECK(att.count == 4);
    REQUIRE(att.polynomials.size() == 4);
    CHECK(att.polynomials[0].is_one());
    CHECK(att.polynomials[1] == c.h);
    CHECK(att.polynomials[2] == sigma_poly(c.tw, c.h));
    CHECK(att.polynomials[3] == c.h * sigma_poly(c.tw, c.h));
}

TEST_CASE("minpoly_over_base is the product of conjugate products") {
    const Gf16Case c;
    const Poly H = minpoly_over_base(c.tw, c.h);
    CHECK(H == c.h * sigma_poly(c.tw, c.h));
    for (const auto& coeff : H.coeffs()) CHECK(c.tw.in_base(coeff));

    // a base-fixed square-free polynomial maps to itself
    const Poly fixed = embed_from_base(c.tw, Poly::from_ints(gf2(), {1, 1, 0, 1}));
    CHECK(minpoly_over_base(c.tw, fixed) == fixed);

    // primitive h: the conjugate product is primitive over the base
    const Poly P = project_to_base(c.tw, minpoly_over_base(c.tw, c.h));
    CHECK(is_primitive(P));

    CHECK(code_of([&] { minpoly_over_base(c.tw, c.h * c.h); }) == Errc::MultipleRoots);
}

TEST_CASE("the refuted lcm formula on the named inputs") {
    const Gf16Case c;
    CHECK(yg_lcm_formula(c.tw, c.h, LinearizedMap::identity(c.tw)) == c.h);
    CHECK(yg_lcm_formula(c.tw, c.h, LinearizedMap::zero(c.tw)).is_one());
    CHECK(yg_lcm_formula(c.tw, c.h, c.T) == c.h * sigma_poly(c.tw, c.h));
    // and it disagrees with the true answer while the oracle agrees
    const MinPolyReport rep = minpoly_general(Sequence::from_rational(c.r), c.T, true, 0);
    CHECK(rep.agrees == true);
    CHECK(yg_lcm_formula(c.tw, c.h, c.T) != rep.expanded);
}

TEST_CASE("complexity_bound_report returns the advertised pair") {
    const FieldPtr f4 = gf4();
    const Tower tw(gf2(), f4);
    const Element alpha = f4->generator();
    const Poly x = Poly::x(f4);
    const Sequence S = Sequence::from_recurrence(
        x.pow(3) + x * alpha + Poly::constant(alpha * alpha), {f4->one(), alpha, alpha});
    const auto [top, base] = complexity_bound_report(S, trace_map(tw));
    CHECK(top == 4);
    CHECK(base == 5);
}

TEST_CASE("randomized oracle spot check") {
    std::mt19937_64 rng(83);
    const Tower tw(gf2(), gf8());
    for (int trial = 0; trial < 50; ++trial) {
        Poly h = random_irreducible(gf8(), 1 + int(rng() % 3), rng);
        const Sequence S = random_sequence_with_minpoly(h, rng);
        const LinearizedMap T = random_transform(tw, rng);
        const MinPolyReport rep = minpoly_general(S, T, true, rng());
        CHECK(rep.agrees == true);
        CHECK(rep.complexity <= rep.bound);
    }
}
