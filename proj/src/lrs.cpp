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

#include "lrst/lrs.hpp"

#include <algorithm>

namespace lrst {

RationalForm make_rational(Poly g, Poly h) {
    if (h.is_zero()) raise(Errc::DivisionByZero, "rational form with zero denominator");
    if (g.is_zero()) return {Poly(g.field()), Poly::constant(h.field()->one())};
    Poly d = gcd(g, h);
    if (d.degree() > 0) {
        g = divmod(g, d).quot;
        h = divmod(h, d).quot;
    }
    const Element scale = h.leading().inv();
    g = g * scale;
    h = h * scale;
    if (g.degree() >= h.degree())
        raise(Errc::ParseError, "numerator degree must be below denominator degree");
    return {std::move(g), std::move(h)};
}

// ---------------------------------------------------------------------------
// Sequence

Sequence Sequence::zero(const FieldPtr& f) {
    Sequence s;
    s.field_ = f;
    s.rational_ = RationalForm{Poly(f), Poly::constant(f->one())};
    s.charpoly_ = Poly::constant(f->one());
    return s;
}

Sequence Sequence::from_rational(RationalForm r) {
    Sequence s;
    s.field_ = r.den.field();
    s.rational_ = std::move(r);
    return s;
}

Sequence Sequence::from_recurrence(Poly charpoly, std::vector<Element> initial) {
    if (!charpoly.is_monic()) raise(Errc::ParseError, "characteristic polynomial must be monic");
    if (static_cast<int>(initial.size()) != charpoly.degree())
        raise(Errc::TooFewTerms, "initial state length must equal the recurrence degree");
    for (const auto& t : initial)
        if (t.field() != charpoly.field()) raise(Errc::FieldMismatch, "initial term at wrong level");
    Sequence s;
    s.field_ = charpoly.field();
    s.charpoly_ = std::move(charpoly);
    s.initial_ = std::move(initial);
    return s;
}

Sequence Sequence::with_rational(RationalForm r) const {
    Sequence s = *this;
    s.rational_ = std::move(r);
    return s;
}

std::vector<Element> Sequence::terms(std::size_t count) const {
    if (rational_) return terms_from_rational(*rational_, count);
    const auto d = static_cast<std::size_t>(charpoly_->degree());
    std::vector<Element> out = initial_;
    out.resize(std::max(count, d), field_->zero());
    for (std::size_t i = d; i < count; ++i) {
        Element acc = field_->zero();
        for (std::size_t j = 0; j < d; ++j) acc = acc + charpoly_->coeff(j) * out[i - d + j];
        out[i] = -acc;
    }
    out.resize(count);
    return out;
}

// ---------------------------------------------------------------------------
// conversions

std::vector<Element> terms_from_rational(const RationalForm& r, std::size_t count) {
    const FieldPtr& f = r.den.field();
    const int d = r.den.degree();
    std::vector<Element> out;
    out.reserve(count);
    // long division of g by h in descending powers: s_i is the current
    // leading coefficient, then r <- r*x - s_i*h
    Poly rem = r.num;
    for (std::size_t i = 0; i < count; ++i) {
        const Element s = d > 0 ? rem.coeff(static_cast<std::size_t>(d - 1)) : f->zero();
        out.push_back(s);
        if (d > 0) rem = rem.shifted(1) - r.den * s;
    }
    return out;
}

RationalForm rational_form(const std::vector<Element>& terms, const Poly& h) {
    if (!h.is_monic() && !(h.degree() == 0 && h.is_one()))
        raise(Errc::ParseError, "denominator must be monic");
    const auto d = static_cast<std::size_t>(h.degree());
    if (terms.size() < d) raise(Errc::TooFewTerms, "need at least deg(h) terms");
    const FieldPtr& f = h.field();
    // g_m = sum_{i=1}^{d-m} h_{m+i} s_i  (polynomial part of h * S(x))
    std::vector<Element> g(d, f->zero());
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t i = 1; i + m <= d; ++i) g[m] = g[m] + h.coeff(m + i) * terms[i - 1];
    RationalForm r = make_rational(Poly(f, std::move(g)), h);
    const std::vector<Element> check = terms_from_rational(r, terms.size());
    if (check != terms) raise(Errc::NotCharacteristic, "h does not generate the given terms");
    return r;
}

Poly berlekamp_massey(const FieldPtr& f, const std::vector<Element>& terms) {
    // connection polynomial C with C_0 = 1; returned as its reversal
    // x^L * C(1/x), the monic minimal polynomial
    std::vector<Element> C = {f->one()};
    std::vector<Element> B = {f->one()};
    std::size_t L = 0, m = 1;
    Element b = f->one();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        Element d = terms[i];
        for (std::size_t j = 1; j <= L && j <= i; ++j)
            if (j < C.size()) d = d + C[j] * terms[i - j];
        if (d.is_zero()) {
            ++m;
            continue;
        }
        const Element coef = d / b;
        if (2 * L <= i) {
            std::vector<Element> T = C;
            if (C.size() < B.size() + m) C.resize(B.size() + m, f->zero());
            for (std::size_t j = 0; j < B.size(); ++j) C[j + m] = C[j + m] - coef * B[j];
            L = i + 1 - L;
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            if (C.size() < B.size() + m) C.resize(B.size() + m, f->zero());
            for (std::size_t j = 0; j < B.size(); ++j) C[j + m] = C[j + m] - coef * B[j];
            ++m;
        }
    }
    std::vector<Element> h(L + 1, f->zero());
    for (std::size_t j = 0; j <= L; ++j)
        if (j < C.size()) h[L - j] = C[j];
    return Poly(f, std::move(h));
}

// ---------------------------------------------------------------------------
// operators on sequences

Sequence shift_apply(const Poly& f, const Sequence& S) {
    if (f.field() != S.field()) raise(Errc::FieldMismatch, "operator polynomial at wrong level");
    const Poly cp = S.has_recurrence() ? S.charpoly() : S.rational().den;
    const auto d = static_cast<std::size_t>(cp.degree());
    if (f.is_zero() || d == 0) return Sequence::zero(S.field());
    const std::vector<Element> src = S.terms(d + static_cast<std::size_t>(f.degree()));
    std::vector<Element> out(d, S.field()->zero());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= static_cast<std::size_t>(f.degree()); ++j)
            out[i] = out[i] + f.coeff(j) * src[i + j];
    return Sequence::from_recurrence(cp, std::move(out));
}

std::vector<Sequence> decompose(const Sequence& S, const std::vector<Poly>& parts) {
    if (parts.empty()) raise(Errc::EmptyInput, "no parts");
    const Poly h = min_poly(S);
    Poly prod = Poly::constant(S.field()->one());
    for (const auto& p : parts) {
        if (!p.is_monic()) raise(Errc::ParseError, "parts must be monic");
        prod = prod * p;
    }
    if (prod != h)
        raise(Errc::NotMinimalPolynomial, "product of parts is not the minimal polynomial");
    if (h.is_one()) {
        // zero sequence: every component is zero
        return std::vector<Sequence>(parts.size(), Sequence::zero(S.field()));
    }
    const std::vector<Poly> cof = multi_bezout(parts);
    std::vector<Sequence> out;
    out.reserve(parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j) {
        Poly op = cof[j];
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (i != j) op = op * parts[i];
        Sequence sj = shift_apply(op, S);
        const auto dj = static_cast<std::size_t>(parts[j].degree());
        const RationalForm rj = rational_form(sj.terms(dj + static_cast<std::size_t>(h.degree())),
                                              parts[j]);
        out.push_back(sj.with_rational(rj));
    }
    return out;
}

Sequence sum_sequences(const std::vector<Sequence>& seqs) {
    if (seqs.empty()) raise(Errc::EmptyInput, "no sequences to sum");
    const FieldPtr& f = seqs.front().field();
    RationalForm acc{Poly(f), Poly::constant(f->one())};
    for (const auto& s : seqs) {
        if (s.field() != f) raise(Errc::FieldMismatch, "sequences over different fields");
        RationalForm r;
        if (s.has_rational()) {
            r = s.rational();
        } else {
            const Poly h = min_poly(s);
            r = rational_form(s.terms(2 * static_cast<std::size_t>(std::max(h.degree(), 1))), h);
        }
        acc = make_rational(acc.num * r.den + r.num * acc.den, acc.den * r.den);
    }
    return Sequence::from_rational(std::move(acc));
}

Poly min_poly(const Sequence& S) {
    if (S.has_rational()) return S.rational().den;
    const auto d = static_cast<std::size_t>(S.charpoly().degree());
    return berlekamp_massey(S.field(), S.terms(2 * d));
}

}  // namespace lrst
