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

#include "lrst/poly.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "lrst/intfactor.hpp"

namespace lrst {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;

void require_same_field(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) raise(Errc::FieldMismatch, "polynomials over different fields");
}
}  // namespace

// ---------------------------------------------------------------------------
// Poly basics

Poly::Poly(FieldPtr f, std::vector<Element> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.field() != field_) raise(Errc::FieldMismatch, "coefficient at wrong level");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::x(const FieldPtr& f) { return Poly(f, {f->zero(), f->one()}); }

Poly Poly::constant(const Element& c) { return Poly(c.field(), {c}); }

Poly Poly::from_ints(const FieldPtr& f, const std::vector<std::int64_t>& cs) {
    std::vector<Element> v;
    v.reserve(cs.size());
    for (auto c : cs) v.push_back(f->from_int(c));
    return Poly(f, std::move(v));
}

Poly Poly::from_literals(const FieldPtr& f, const std::vector<std::string>& lits) {
    std::vector<Element> v;
    v.reserve(lits.size());
    for (const auto& s : lits) v.push_back(parse_element(f, s));
    return Poly(f, std::move(v));
}

Element Poly::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return field_->zero();
}

Element Poly::leading() const {
    if (is_zero()) raise(Errc::ZeroInput, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Poly Poly::monic() const {
    if (is_zero()) raise(Errc::ZeroInput, "cannot normalize the zero polynomial");
    return *this * leading().inv();
}

Element Poly::eval(const Element& at) const {
    Element acc = field_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Element> v(k, field_->zero());
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(field_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Element> v = coeffs_;
    for (auto& c : v) c = -c;
    return Poly(field_, std::move(v));
}

Poly Poly::operator+(const Poly& rhs) const {
    require_same_field(*this, rhs);
    std::vector<Element> v(std::max(coeffs_.size(), rhs.coeffs_.size()), field_->zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + rhs.coeff(i);
    return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
    require_same_field(*this, rhs);
    if (is_zero() || rhs.is_zero()) return Poly(field_);
    std::vector<Element> v(coeffs_.size() + rhs.coeffs_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * rhs.coeffs_[j];
    return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Element& c) const {
    std::vector<Element> v = coeffs_;
    for (auto& e : v) e = e * c;
    return Poly(field_, std::move(v));
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(field_->one());
    Poly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const bool unit_coeff = coeffs_[i].is_one();
        if (i == 0) {
            out += coeffs_[i].str();
        } else {
            if (!unit_coeff) out += coeffs_[i].str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const u64 ia = a.coeffs()[i].index();
        const u64 ib = b.coeffs()[i].index();
        if (ia != ib) return ia < ib;
    }
    return false;
}

// ---------------------------------------------------------------------------
// division, gcd family

DivModResult divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) raise(Errc::DivisionByZero, "polynomial division by zero");
    const FieldPtr& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    const Element lead_inv = b.leading().inv();
    std::vector<Element> rem = a.coeffs();
    std::vector<Element> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, f->zero());
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t pos = rem.size(); pos-- > db;) {
        const Element c = rem[pos] * lead_inv;
        if (c.is_zero()) continue;
        quot[pos - db] = c;
        for (std::size_t i = 0; i <= db; ++i)
            rem[pos - db + i] = rem[pos - db + i] - c * b.coeffs()[i];
    }
    rem.resize(db);
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).rem; }

Poly gcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) raise(Errc::BothZero, "gcd(0, 0) is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) raise(Errc::BothZero, "xgcd(0, 0) is undefined");
    const FieldPtr& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f->one()), s1 = Poly(f);
    Poly t0 = Poly(f), t1 = Poly::constant(f->one());
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Element scale = r0.leading().inv();
    return {r0 * scale, s0 * scale, t0 * scale};
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) raise(Errc::ZeroInput, "lcm of zero polynomial");
    return divmod(a * b, gcd(a, b)).quot.monic();
}

std::vector<Poly> multi_bezout(const std::vector<Poly>& moduli) {
    if (moduli.empty()) raise(Errc::EmptyInput, "no moduli");
    const FieldPtr& f = moduli.front().field();
    for (const auto& h : moduli) {
        if (h.degree() < 1) raise(Errc::NotCoprime, "modulus of degree < 1");
        if (h.field() != f) raise(Errc::FieldMismatch, "moduli over different fields");
    }
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (gcd(moduli[i], moduli[j]).degree() != 0)
                raise(Errc::NotCoprime, "moduli are not pairwise coprime");

    std::vector<Poly> out;
    out.reserve(moduli.size());
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        Poly cofactor = Poly::constant(f->one());
        for (std::size_t i = 0; i < moduli.size(); ++i)
            if (i != j) cofactor = mod(cofactor * moduli[i], moduli[j]);
        // u_j = cofactor^{-1} mod h_j; the reduced u_j already satisfy the
        // global identity because their weighted sum is 1 mod every modulus
        // and has degree below the sum of the degrees
        auto [g, s, t] = xgcd(cofactor, moduli[j]);
        if (g.degree() != 0) raise(Errc::NotCoprime, "cofactor not invertible");
        out.push_back(mod(s, moduli[j]));
    }
    // re-verify the Bezout identity
    Poly sum = Poly(f);
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        Poly term = out[j];
        for (std::size_t i = 0; i < moduli.size(); ++i)
            if (i != j) term = term * moduli[i];
        sum = sum + term;
    }
    if (!sum.is_one()) raise(Errc::NotCoprime, "Bezout identity failed to verify");
    return out;
}

// ---------------------------------------------------------------------------
// derivative, squarefree, irreducibility, primitivity

Poly derivative(const Poly& f) {
    if (f.degree() < 1) return Poly(f.field());
    std::vector<Element> v;
    v.reserve(static_cast<std::size_t>(f.degree()));
    for (int i = 1; i <= f.degree(); ++i)
        v.push_back(f.coeff(static_cast<std::size_t>(i)) * f.field()->from_int(i));
    return Poly(f.field(), std::move(v));
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) raise(Errc::ZeroInput, "squarefree test on zero polynomial");
    if (f.degree() == 0) return true;
    Poly d = derivative(f);
    if (d.is_zero()) return false;  // p-th power pattern
    return gcd(f, d).degree() == 0;
}

Poly powmod(const Poly& base, u128 e, const Poly& m) {
    Poly r = Poly::constant(base.field()->one());
    Poly b = mod(base, m);
    while (e) {
        if (e & 1) r = mod(r * b, m);
        b = mod(b * b, m);
        e >>= 1;
    }
    return r;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero()) raise(Errc::ZeroInput, "irreducibility test on zero polynomial");
    const int d = f.degree();
    if (d == 0) return false;
    if (d == 1) return true;
    const FieldPtr& fld = f.field();
    const u64 Q = fld->order();
    const Poly fm = f.monic();
    const Poly xp = Poly::x(fld);
    auto frob_pow = [&](int e) {
        Poly r = xp;
        for (int i = 0; i < e; ++i) r = powmod(r, Q, fm);
        return r;
    };
    for (u64 r : prime_divisors_u64(static_cast<u64>(d))) {
        Poly t = frob_pow(d / static_cast<int>(r)) - xp;
        if (t.is_zero() || gcd(t, fm).degree() != 0) return false;
    }
    return (frob_pow(d) - xp).is_zero();
}

bool is_primitive(const Poly& f) {
    if (!f.is_monic() || !is_irreducible(f)) raise(Errc::NotIrreducible, "primitivity needs a monic irreducible");
    const FieldPtr& fld = f.field();
    const u64 Q = fld->order();
    const int m = f.degree();
    u128 big = 1;
    for (int i = 0; i < m; ++i) {
        big *= Q;
        if (big > std::numeric_limits<u64>::max())
            raise(Errc::FactorizationTooLarge, "Q^m - 1 exceeds 64 bits");
    }
    const u64 N = static_cast<u64>(big) - 1;
    const Poly xp = Poly::x(fld);
    if (!powmod(xp, N, f).is_one()) return false;
    for (u64 r : prime_divisors_u64(N))
        if (powmod(xp, N / r, f).is_one()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// factorization (distinct-degree + seeded equal-degree splitting)

namespace {

// p-th root of f = g(x^p): coefficients b_i = a_{pi}^(Q/p)
Poly pth_root(const Poly& f) {
    const FieldPtr& fld = f.field();
    const u64 p = fld->characteristic();
    const u64 Q = fld->order();
    std::vector<Element> v;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); i += p)
        v.push_back(f.coeff(i).pow(static_cast<std::int64_t>(Q / p)));
    return Poly(fld, std::move(v));
}

Poly random_poly_below(const FieldPtr& fld, int deg_bound, std::mt19937_64& rng) {
    std::vector<Element> v;
    v.reserve(static_cast<std::size_t>(deg_bound));
    for (int i = 0; i < deg_bound; ++i)
        v.push_back(fld->from_index(rng() % fld->order()));
    return Poly(fld, std::move(v));
}

// split a monic squarefree product of irreducibles all of degree d
void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const FieldPtr& fld = f.field();
    const u64 Q = fld->order();
    for (;;) {
        Poly u = random_poly_below(fld, f.degree(), rng);
        if (u.degree() < 1) continue;
        Poly t(fld);
        if (fld->characteristic() == 2) {
            // trace polynomial over GF(2): u + u^2 + ... + u^(2^(e*d - 1))
            unsigned e2 = 0;
            for (u64 v = Q; v > 1; v >>= 1) ++e2;
            Poly acc = mod(u, f);
            Poly cur = acc;
            for (unsigned i = 1; i < e2 * static_cast<unsigned>(d); ++i) {
                cur = mod(cur * cur, f);
                acc = acc + cur;
            }
            t = acc;
        } else {
            u128 e = 1;
            for (int i = 0; i < d; ++i) e *= Q;
            t = powmod(u, (e - 1) / 2, f) - Poly::constant(fld->one());
        }
        if (t.is_zero()) continue;
        Poly g = gcd(t, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divmod(f, g).quot.monic(), d, rng, out);
            return;
        }
    }
}

// factor a monic squarefree polynomial into monic irreducibles
std::vector<Poly> split_squarefree(Poly f, std::mt19937_64& rng) {
    std::vector<Poly> out;
    const FieldPtr& fld = f.field();
    const u64 Q = fld->order();
    Poly h = Poly::x(fld);
    int d = 0;
    while (f.degree() > 0 && f.degree() > 2 * d) {
        ++d;
        h = powmod(h, Q, f);
        Poly g = gcd(h - Poly::x(fld), f);
        if (g.degree() > 0) {
            equal_degree_split(g.monic(), d, rng, out);
            f = divmod(f, g).quot.monic();
            h = mod(h, f);
        }
    }
    if (f.degree() > 0) out.push_back(f);
    return out;
}

}  // namespace

Poly Factorization::expand() const {
    Poly r = Poly::constant(unit);
    for (const auto& [p, e] : factors) r = r * p.pow(static_cast<unsigned>(e));
    return r;
}

Factorization factor(const Poly& input, std::uint64_t rng_seed) {
    if (input.is_zero()) raise(Errc::ZeroInput, "factor of zero polynomial");
    std::mt19937_64 rng(rng_seed);
    Factorization out;
    out.unit = input.leading();
    Poly f = input.monic();
    const u64 p = f.field()->characteristic();

    int scale = 1;
    while (f.degree() > 0) {
        Poly fp = derivative(f);
        if (fp.is_zero()) {
            f = pth_root(f);
            scale *= static_cast<int>(p);
            continue;
        }
        // product of the distinct factors whose multiplicity is not
        // divisible by p
        Poly w = divmod(f, gcd(f, fp)).quot.monic();
        for (Poly& P : split_squarefree(std::move(w), rng)) {
            int e = 0;
            for (;;) {
                auto [q, r] = divmod(f, P);
                if (!r.is_zero()) break;
                f = std::move(q);
                ++e;
            }
            out.factors.emplace_back(std::move(P), e * scale);
        }
        f = f.monic();
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    if (out.expand() != input) raise(Errc::ZeroInput, "factorization failed to reconstruct input");
    return out;
}

// ---------------------------------------------------------------------------
// sigma action

Poly sigma_poly(const Tower& tw, const Poly& f, std::size_t iterations) {
    if (f.field() != tw.top()) raise(Errc::FieldMismatch, "sigma expects a top-level polynomial");
    std::vector<Element> v = f.coeffs();
    for (auto& c : v) c = tw.frobenius(c, iterations);
    return Poly(f.field(), std::move(v));
}

std::size_t k_of(const Tower& tw, const Poly& f) {
    if (f.is_zero()) raise(Errc::ZeroInput, "k(f) of zero polynomial");
    // the orbit length divides n, so only divisors need checking
    for (std::size_t l = 1; l <= tw.n(); ++l) {
        if (tw.n() % l != 0) continue;
        if (sigma_poly(tw, f, l) == f) return l;
    }
    return tw.n();  // sigma^(n) is the identity, so this is unreachable
}

std::vector<SigmaClass> sigma_classes(const Tower& tw, const std::vector<Poly>& factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!factors[i].is_monic() || !is_irreducible(factors[i]))
            raise(Errc::NotIrreducible, "sigma classes need monic irreducibles");
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i] == factors[j]) raise(Errc::DuplicateFactor, "duplicate factor");
    }
    std::vector<bool> assigned(factors.size(), false);
    std::vector<SigmaClass> classes;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (assigned[i]) continue;
        const std::size_t k = k_of(tw, factors[i]);
        // full orbit of this factor
        std::vector<Poly> orbit;
        orbit.reserve(k);
        Poly cur = factors[i];
        for (std::size_t s = 0; s < k; ++s) {
            orbit.push_back(cur);
            cur = sigma_poly(tw, cur, 1);
        }
        // members of the input lying on the orbit
        std::vector<std::size_t> member_indices;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (assigned[j]) continue;
            if (std::find(orbit.begin(), orbit.end(), factors[j]) != orbit.end()) {
                member_indices.push_back(j);
                assigned[j] = true;
            }
        }
        // canonically smallest member is the representative
        Poly rep = factors[member_indices.front()];
        for (std::size_t j : member_indices)
            if (poly_less(factors[j], rep)) rep = factors[j];
        SigmaClass cls;
        cls.rep = rep;
        cls.k = k;
        Poly shifted = rep;
        for (std::size_t s = 0; s < k; ++s) {
            for (std::size_t j : member_indices)
                if (factors[j] == shifted) cls.offsets.push_back(s);
            shifted = sigma_poly(tw, shifted, 1);
        }
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const SigmaClass& a, const SigmaClass& b) { return poly_less(a.rep, b.rep); });
    return classes;
}

Poly conjugate_product(const Tower& tw, const Poly& P) {
    if (!P.is_monic() || !is_irreducible(P))
        raise(Errc::NotIrreducible, "conjugate product needs a monic irreducible");
    const std::size_t k = k_of(tw, P);
    Poly r = Poly::constant(tw.top()->one());
    Poly cur = P;
    for (std::size_t i = 0; i < k; ++i) {
        r = r * cur;
        cur = sigma_poly(tw, cur, 1);
    }
    for (const auto& c : r.coeffs())
        if (!tw.in_base(c)) raise(Errc::InconsistentField, "conjugate product left GF(q)");
    return r;
}

Poly project_to_base(const Tower& tw, const Poly& f) {
    if (f.field() != tw.top()) raise(Errc::FieldMismatch, "expected a top-level polynomial");
    std::vector<Element> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(tw.project(c));
    return Poly(tw.base(), std::move(v));
}

Poly embed_from_base(const Tower& tw, const Poly& f) {
    if (f.field() != tw.base()) raise(Errc::FieldMismatch, "expected a base-level polynomial");
    std::vector<Element> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(tw.embed(c));
    return Poly(tw.top(), std::move(v));
}

}  // namespace lrst
