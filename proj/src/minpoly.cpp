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

#include "lrst/minpoly.hpp"

#include <algorithm>

namespace lrst {

Poly ExponentPattern::expanded(const Tower& tw) const {
    Poly r = Poly::constant(tw.top()->one());
    Poly cur = rep;
    for (std::size_t j = 0; j < k; ++j) {
        if (bits[j]) r = r * cur;
        cur = sigma_poly(tw, cur, 1);
    }
    return r;
}

ExponentPattern minpoly_irreducible(const Tower& tw, const RationalForm& r,
                                    const LinearizedMap& T) {
    if (!is_irreducible(r.den)) raise(Errc::NotIrreducible, "denominator must be irreducible");
    return minpoly_one_class(tw, {{0, r}}, T);
}

ExponentPattern minpoly_one_class(const Tower& tw,
                                  const std::vector<std::pair<std::size_t, RationalForm>>& parts,
                                  const LinearizedMap& T) {
    if (parts.empty()) raise(Errc::EmptyInput, "no parts");
    // recover the class representative h1 from the part with the smallest
    // offset: den_j = sigma^(i_j)(h1)
    const std::size_t k = k_of(tw, parts.front().second.den);
    const Poly h1 =
        sigma_poly(tw, parts.front().second.den, (k - parts.front().first % k) % k);
    if (!is_irreducible(h1)) raise(Errc::NotIrreducible, "class members must be irreducible");
    const auto l = static_cast<std::size_t>(h1.degree());

    std::vector<bool> seen(k, false);
    for (const auto& [off, rf] : parts) {
        if (off >= k) raise(Errc::OffsetOutOfRange, "offset must be below k(h1)");
        if (seen[off]) raise(Errc::OffsetCollision, "duplicate conjugate offset");
        seen[off] = true;
        if (rf.den != sigma_poly(tw, h1, off))
            raise(Errc::NotConjugateFamily, "denominator is not the expected conjugate");
    }

    ExponentPattern pat;
    pat.rep = h1;
    pat.k = k;
    pat.bits.resize(k, 0);
    for (std::size_t u = 0; u < k; ++u) {
        std::vector<Element> vals(l, tw.top()->zero());
        for (const auto& [off, rf] : parts) {
            const SubMap tkj = sub_map(T, k, (u + k - off) % k);
            // numerator coefficients zero-padded to length deg(h1)
            for (std::size_t m = 0; m < l; ++m) vals[m] = vals[m] + tkj(rf.num.coeff(m));
        }
        pat.bits[u] = mu(vals);
    }
    return pat;
}

namespace {

MinPolyReport trivial_report(const Tower& tw) {
    MinPolyReport rep;
    rep.expanded = Poly::constant(tw.top()->one());
    return rep;
}

}  // namespace

MinPolyReport minpoly_general(const Sequence& S, const LinearizedMap& T, bool verify,
                              std::uint64_t rng_seed) {
    const Tower& tw = T.tower();
    if (S.field() != tw.top()) raise(Errc::FieldMismatch, "sequence at wrong level");
    const Poly h = min_poly(S);
    if (h.is_one()) {
        MinPolyReport rep = trivial_report(tw);
        if (verify) {
            rep.oracle = rep.expanded;
            rep.agrees = true;
        }
        return rep;
    }
    if (!is_squarefree(h)) raise(Errc::MultipleRoots, "minimal polynomial has multiple roots");

    const Factorization fact = factor(h, rng_seed);
    std::vector<Poly> irreducibles;
    irreducibles.reserve(fact.factors.size());
    for (const auto& [p, e] : fact.factors) irreducibles.push_back(p);

    const std::vector<SigmaClass> classes = sigma_classes(tw, irreducibles);
    // one Bezout pass straight down to the irreducible components, then
    // regroup by class
    const std::vector<Sequence> comps = decompose(S, irreducibles);

    MinPolyReport rep;
    rep.expanded = Poly::constant(tw.top()->one());
    for (const SigmaClass& cls : classes) {
        std::vector<std::pair<std::size_t, RationalForm>> parts;
        for (std::size_t off : cls.offsets) {
            const Poly member = sigma_poly(tw, cls.rep, off);
            auto it = std::find(irreducibles.begin(), irreducibles.end(), member);
            parts.emplace_back(off, comps[static_cast<std::size_t>(it - irreducibles.begin())]
                                        .rational());
        }
        ExponentPattern pat = minpoly_one_class(tw, parts, T);
        Poly cur = pat.rep;
        for (std::size_t j = 0; j < pat.k; ++j) {
            if (pat.bits[j]) rep.factored.emplace_back(cur, 1);
            cur = sigma_poly(tw, cur, 1);
        }
        rep.expanded = rep.expanded * pat.expanded(tw);
        rep.patterns.push_back(std::move(pat));
    }
    std::sort(rep.factored.begin(), rep.factored.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    rep.complexity = static_cast<std::size_t>(rep.expanded.degree());
    rep.bound = static_cast<std::size_t>(minpoly_over_base(tw, h).degree());

    if (verify) {
        const std::size_t budget = 2 * tw.n() * static_cast<std::size_t>(h.degree());
        const std::vector<Element> image = apply_termwise(T, S, budget);
        rep.oracle = berlekamp_massey(tw.top(), image);
        rep.agrees = (*rep.oracle == rep.expanded);
    }
    return rep;
}

ExponentPattern minpoly_msequence(const Tower& tw, const Poly& h, const LinearizedMap& T) {
    if (!is_primitive(h)) raise(Errc::NotPrimitive, "minimal polynomial must be primitive");
    ExponentPattern pat;
    pat.rep = h;
    pat.k = tw.n();  // primitive polynomials have k(h) = n
    pat.bits.reserve(tw.n());
    for (const auto& c : T.coeffs()) pat.bits.push_back(c.is_zero() ? 0 : 1);
    return pat;
}

LinearizedMap construct_transform_for_pattern(const Tower& tw, const RationalForm& r,
                                              const std::vector<int>& bits) {
    if (!is_irreducible(r.den)) raise(Errc::NotIrreducible, "denominator must be irreducible");
    if (r.num.is_zero()) raise(Errc::ZeroSequence, "pattern construction needs a nonzero sequence");
    const std::size_t k = k_of(tw, r.den);
    if (bits.size() != k) raise(Errc::PatternLengthMismatch, "pattern length must equal k(h)");
    std::vector<Element> coeffs;
    coeffs.reserve(k);
    for (int b : bits) coeffs.push_back(b ? tw.top()->one() : tw.top()->zero());
    return LinearizedMap(tw, std::move(coeffs));
}

AttainableSet enumerate_attainable(const Tower& tw, const Poly& h) {
    if (!is_irreducible(h)) raise(Errc::NotIrreducible, "h must be irreducible");
    AttainableSet out;
    out.k = k_of(tw, h);
    if (out.k > 20) raise(Errc::PatternSpaceTooLarge, "k(h) too large to enumerate");
    out.count = std::uint64_t(1) << out.k;
    std::vector<Poly> conj;
    conj.reserve(out.k);
    Poly cur = h;
    for (std::size_t j = 0; j < out.k; ++j) {
        conj.push_back(cur);
        cur = sigma_poly(tw, cur, 1);
    }
    out.polynomials.reserve(out.count);
    for (std::uint64_t mask = 0; mask < out.count; ++mask) {
        Poly p = Poly::constant(tw.top()->one());
        for (std::size_t j = 0; j < out.k; ++j)
            if (mask & (std::uint64_t(1) << j)) p = p * conj[j];
        out.polynomials.push_back(std::move(p));
    }
    return out;
}

Poly minpoly_over_base(const Tower& tw, const Poly& h) {
    if (h.is_zero()) raise(Errc::ZeroInput, "zero polynomial");
    if (h.degree() == 0) return Poly::constant(tw.top()->one());
    if (!is_squarefree(h)) raise(Errc::MultipleRoots, "h must be square-free");
    const Factorization fact = factor(h.monic(), 0);
    std::vector<Poly> irreducibles;
    for (const auto& [p, e] : fact.factors) irreducibles.push_back(p);
    Poly H = Poly::constant(tw.top()->one());
    for (const SigmaClass& cls : sigma_classes(tw, irreducibles))
        H = H * conjugate_product(tw, cls.rep);
    return H;
}

Poly yg_lcm_formula(const Tower& tw, const Poly& h, const LinearizedMap& T) {
    Poly out = Poly::constant(tw.top()->one());
    bool any = false;
    for (std::size_t j = 0; j < T.coeffs().size(); ++j) {
        if (T.coeffs()[j].is_zero()) continue;
        const Poly conj = sigma_poly(tw, h.monic(), j);
        out = any ? lcm(out, conj) : conj;
        any = true;
    }
    return out;  // empty support gives 1
}

std::pair<std::size_t, std::size_t> complexity_bound_report(const Sequence& S,
                                                            const LinearizedMap& T) {
    const MinPolyReport rep = minpoly_general(S, T, false, 0);
    if (rep.complexity > rep.bound)
        raise(Errc::InconsistentField, "complexity exceeded its upper bound");
    return {rep.complexity, rep.bound};
}

}  // namespace lrst
