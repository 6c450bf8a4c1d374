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

#include "helpers.hpp"

using namespace lrst;
using namespace lrst::testing;

TEST_CASE("construction trims and reports degree") {
    const FieldPtr f = gf2();
    CHECK(Poly(f).degree() == -1);
    CHECK(Poly::from_ints(f, {0, 0, 0}).is_zero());
    CHECK(Poly::from_ints(f, {1, 1, 0}).degree() == 1);
    CHECK(Poly::x(f).degree() == 1);
    CHECK(Poly::from_literals(gf4(), {"a^2", "a", "0", "1"}).degree() == 3);
    CHECK(Poly::from_ints(f, {1, 1}).str() == "1 + x");
}

TEST_CASE("division identity holds on random inputs") {
    std::mt19937_64 rng(3);
    for (const FieldPtr& f : {gf2(), gf4(), gf9()}) {
        for (int trial = 0; trial < 100; ++trial) {
            const Poly a = random_monic(f, int(rng() % 7), rng) * random_nonzero(f, rng);
            const Poly b = random_monic(f, 1 + int(rng() % 4), rng) * random_nonzero(f, rng);
            const auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
    CHECK(code_of([] { divmod(Poly::x(gf2()), Poly(gf2())); }) == Errc::DivisionByZero);
}

TEST_CASE("gcd and xgcd agree and certify") {
    std::mt19937_64 rng(5);
    for (const FieldPtr& f : {gf2(), gf4()}) {
        for (int trial = 0; trial < 100; ++trial) {
            const Poly a = random_monic(f, int(rng() % 6), rng);
            const Poly b = random_monic(f, int(rng() % 6), rng);
            const Poly g = gcd(a, b);
            CHECK(g.is_monic());
            CHECK(mod(a, g).is_zero());
            CHECK(mod(b, g).is_zero());
            const auto r = xgcd(a, b);
            CHECK(r.g == g);
            CHECK(r.s * a + r.t * b == g);
        }
    }
    CHECK(code_of([] { gcd(Poly(gf2()), Poly(gf2())); }) == Errc::BothZero);
}

TEST_CASE("lcm times gcd equals the product for monic inputs") {
    std::mt19937_64 rng(9);
    const FieldPtr f = gf4();
    for (int trial = 0; trial < 50; ++trial) {
        const Poly a = random_monic(f, 1 + int(rng() % 4), rng);
        const Poly b = random_monic(f, 1 + int(rng() % 4), rng);
        CHECK(lcm(a, b) * gcd(a, b) == a * b);
    }
}

TEST_CASE("multi_bezout returns the certified cofactors") {
    const FieldPtr f = gf4();
    const Element alpha = f->generator();
    const Poly x = Poly::x(f);
    const Poly one = Poly::constant(f->one());
    const Poly h1 = x + one;
    const Poly h2 = x.pow(2) + x + Poly::constant(alpha * alpha);
    const auto cof = multi_bezout({h1, h2});
    CHECK(cof[0] * h2 + cof[1] * h1 == one);
    CHECK(cof[0].degree() < h1.degree());
    CHECK(cof[1].degree() < h2.degree());
    // the cofactors themselves, pinned
    CHECK(cof[0] == Poly::constant(alpha));
    CHECK(cof[1] == x * alpha);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Poly> parts;
        while (parts.size() < 3) {
            Poly p = random_irreducible(f, 1 + int(rng() % 3), rng);
            if (std::find(parts.begin(), parts.end(), p) == parts.end()) parts.push_back(p);
        }
        const auto u = multi_bezout(parts);
        Poly acc(f);
        for (std::size_t j = 0; j < parts.size(); ++j) {
            Poly m = u[j];
            for (std::size_t i = 0; i < parts.size(); ++i)
                if (i != j) m = m * parts[i];
            acc = acc + m;
            CHECK(u[j].degree() < parts[j].degree());
        }
        CHECK(acc.is_one());
    }
    CHECK(code_of([&] { multi_bezout({h1, h1}); }) == Errc::NotCoprime);
}

TEST_CASE("squarefree detection") {
    const FieldPtr f = gf2();
    const Poly x = Poly::x(f);
    const Poly one = Poly::constant(f->one());
    CHECK(is_squarefree((x + one) * (x.pow(2) + x + one)));
    CHECK(!is_squarefree((x + one).pow(2)));
    CHECK(!is_squarefree(x.pow(2)));           // derivative vanishes
    CHECK(!is_squarefree(x.pow(4) + x.pow(2) + one));
    CHECK(is_squarefree(one));
}

TEST_CASE("irreducibility against the known small tables") {
    const FieldPtr f = gf2();
    auto P = [&](std::vector<std::int64_t> cs) { return Poly::from_ints(f, cs); };
    CHECK(is_irreducible(P({1, 1, 1})));        // x^2+x+1
    CHECK(!is_irreducible(P({1, 0, 1})));       // (x+1)^2
    CHECK(is_irreducible(P({1, 1, 0, 1})));     // x^3+x+1
    CHECK(is_irreducible(P({1, 0, 1, 1})));     // x^3+x^2+1
    CHECK(!is_irreducible(P({1, 1, 1, 1})));    // (x+1)(x^2+x+1)
    CHECK(is_irreducible(P({1, 1, 0, 0, 1})));  // x^4+x+1
    CHECK(!is_irreducible(P({1, 0, 1, 0, 1}))); // (x^2+x+1)^2
    CHECK(is_irreducible(P({1, 1})));
    CHECK(!is_irreducible(P({1})));

    // degree-2 over GF(4): y^2+y+a irreducible, y^2+y+1 splits
    const FieldPtr f4 = gf4();
    const Element a = f4->generator();
    CHECK(is_irreducible(Poly(f4, {a, f4->one(), f4->one()})));
    CHECK(!is_irreducible(Poly::from_ints(f4, {1, 1, 1})));
}

TEST_CASE("primitivity separates from plain irreducibility") {
    const FieldPtr f = gf2();
    CHECK(is_primitive(Poly::from_ints(f, {1, 1, 0, 0, 1})));   // x^4+x+1
    CHECK(!is_primitive(Poly::from_ints(f, {1, 1, 1, 1, 1})));  // order 5
    CHECK(is_irreducible(Poly::from_ints(f, {1, 1, 1, 1, 1})));
    CHECK(code_of([&] { is_primitive(Poly::from_ints(f, {1, 0, 1})); }) ==
          Errc::NotIrreducible);  // reducible input is rejected

    const FieldPtr f4 = gf4();
    const Element a = f4->generator();
    CHECK(is_primitive(Poly(f4, {a, f4->one()})));              // x + a, order 3
    CHECK(!is_primitive(Poly::from_ints(f4, {1, 1})));          // x + 1, order 1
    CHECK(is_primitive(Poly(f4, {a, f4->one(), f4->one()})));   // y^2+y+a, order 15
}

TEST_CASE("factor reconstructs its input exactly") {
    std::mt19937_64 rng(17);
    for (const FieldPtr& f : {gf2(), gf4(), gf9()}) {
        for (int trial = 0; trial < 60; ++trial) {
            Poly p = Poly::constant(random_nonzero(f, rng));
            const int parts = 1 + int(rng() % 3);
            for (int i = 0; i < parts; ++i)
                p = p * random_monic(f, 1 + int(rng() % 4), rng);
            const Factorization fact = factor(p, rng());
            CHECK(fact.expand() == p);
            for (const auto& [q, e] : fact.factors) {
                CHECK(q.is_monic());
                CHECK(is_irreducible(q));
                CHECK(e >= 1);
            }
            CHECK(std::is_sorted(
                fact.factors.begin(), fact.factors.end(),
                [](const auto& a, const auto& b) { return poly_less(a.first, b.first); }));
        }
    }
}

TEST_CASE("factor output does not depend on the seed") {
    std::mt19937_64 rng(23);
    for (const FieldPtr& f : {gf2(), gf4()}) {
        for (int trial = 0; trial < 20; ++trial) {
            Poly p = random_monic(f, 6, rng);
            if (p.degree() < 1) continue;
            const Factorization a = factor(p, 0);
            const Factorization b = factor(p, 987654321);
            CHECK(a.unit == b.unit);
            CHECK(a.factors == b.factors);
        }
    }
}

TEST_CASE("factor handles pure p-th powers and multiplicities") {
    const FieldPtr f = gf2();
    const Poly x = Poly::x(f);
    const Poly one = Poly::constant(f->one());
    const Factorization sq = factor(x.pow(2) + one, 0);  // (x+1)^2
    REQUIRE(sq.factors.size() == 1);
    CHECK(sq.factors[0].first == x + one);
    CHECK(sq.factors[0].second == 2);

    const Poly m = (x + one).pow(3) * (x.pow(2) + x + one).pow(2) * x;
    const Factorization fm = factor(m, 1);
    CHECK(fm.expand() == m);
    REQUIRE(fm.factors.size() == 3);
    CHECK(fm.factors[0].first == x);
    CHECK(fm.factors[0].second == 1);
    CHECK(fm.factors[1].second == 3);
    CHECK(fm.factors[2].second == 2);

    CHECK(code_of([&] { factor(Poly(f), 0); }) == Errc::ZeroInput);
}

TEST_CASE("sigma action on polynomials and its period") {
    const Tower tw(gf2(), gf16());
    const FieldPtr f16 = gf16();
    const Element theta = f16->generator();
    const Poly h = Poly::x(f16) + Poly::constant(theta.pow(10));
    CHECK(sigma_poly(tw, h) == Poly::x(f16) + Poly::constant(theta.pow(5)));
    CHECK(sigma_poly(tw, h, 2) == h);
    CHECK(k_of(tw, h) == 2);

    // k divides n on random irreducibles (Frobenius orbit length)
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const Poly p = random_irreducible(f16, 1 + int(rng() % 3), rng);
        const std::size_t k = k_of(tw, p);
        CHECK(tw.n() % k == 0);
        CHECK(sigma_poly(tw, p, k) == p);
        for (std::size_t j = 1; j < k; ++j) CHECK(sigma_poly(tw, p, j) != p);
    }

    // polynomials with base coefficients are fixed
    const Poly fixed = embed_from_base(tw, Poly::from_ints(gf2(), {1, 1, 0, 1}));
    CHECK(k_of(tw, fixed) == 1);
}

TEST_CASE("sigma classes partition the factor list") {
    const Tower tw(gf2(), gf16());
    const FieldPtr f16 = gf16();
    const Element theta = f16->generator();
    const Poly h = Poly::x(f16) + Poly::constant(theta.pow(10));
    const Poly hs = sigma_poly(tw, h);
    // degree 3 is coprime to n = 4, so this stays irreducible over GF(16)
    const Poly other = embed_from_base(tw, Poly::from_ints(gf2(), {1, 1, 0, 1}));

    const auto classes = sigma_classes(tw, {h, hs, other});
    REQUIRE(classes.size() == 2);
    // representative is the canonically smallest member present
    const auto& conj = poly_less(h, hs) ? h : hs;
    bool found_pair = false;
    for (const auto& cls : classes) {
        if (cls.k == 2) {
            found_pair = true;
            CHECK(cls.rep == conj);
            CHECK(cls.offsets == std::vector<std::size_t>{0, 1});
        } else {
            CHECK(cls.rep == other);
            CHECK(cls.k == 1);
            CHECK(cls.offsets == std::vector<std::size_t>{0});
        }
    }
    CHECK(found_pair);
}

TEST_CASE("conjugate product lands in the base field") {
    const Tower tw(gf2(), gf16());
    const FieldPtr f16 = gf16();
    const Element theta = f16->generator();
    const Poly h = Poly::x(f16) + Poly::constant(theta.pow(10));
    const Poly R = conjugate_product(tw, h);
    CHECK(R == h * sigma_poly(tw, h));
    for (const auto& c : R.coeffs()) CHECK(tw.in_base(c));
    CHECK(project_to_base(tw, R).field() == tw.base());
    CHECK(embed_from_base(tw, project_to_base(tw, R)) == R);

    // a base-fixed irreducible is its own conjugate product
    const Poly fixed = embed_from_base(tw, Poly::from_ints(gf2(), {1, 1, 0, 1}));
    CHECK(conjugate_product(tw, fixed) == fixed);
}

TEST_CASE("poly_less is a strict total order") {
    const FieldPtr f = gf4();
    std::mt19937_64 rng(31);
    std::vector<Poly> ps;
    for (int i = 0; i < 20; ++i) ps.push_back(random_monic(f, int(rng() % 4), rng));
    for (const auto& a : ps) {
        CHECK(!poly_less(a, a));
        for (const auto& b : ps) {
            if (a == b) continue;
            CHECK(poly_less(a, b) != poly_less(b, a));
        }
    }
}

TEST_CASE("powmod handles large exponents") {
    const FieldPtr f = gf2();
    const Poly m = Poly::from_ints(f, {1, 1, 0, 0, 1});  // x^4+x+1, primitive
    const Poly x = Poly::x(f);
    CHECK(powmod(x, 15, m).is_one());
    CHECK(powmod(x, (unsigned __int128)15 * (1ull << 40) + 15, m).is_one());
    CHECK(powmod(x, 16, m) == mod(x, m) * Poly::constant(f->one()));
}
