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

#include "lrst/field.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "lrst/intfactor.hpp"

namespace lrst {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) noexcept { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) noexcept {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// --- dense coefficient-vector arithmetic over a lower level, used for the
// --- internal representation of extension-field elements

using Vec = std::vector<Element>;

void vtrim(Vec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

int vdeg(const Vec& v) { return static_cast<int>(v.size()) - 1; }

Vec vadd(const Vec& a, const Vec& b) {
    Vec r = a.size() >= b.size() ? a : b;
    const Vec& s = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
    vtrim(r);
    return r;
}

Vec vscale(const Vec& a, const Element& c) {
    if (c.is_zero()) return {};
    Vec r = a;
    for (auto& x : r) x = x * c;
    vtrim(r);
    return r;
}

Vec vmul(const FieldPtr& f, const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, f->zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    vtrim(r);
    return r;
}

// remainder of a by monic b
Vec vmod(Vec a, const Vec& b) {
    const int db = vdeg(b);
    while (vdeg(a) >= db) {
        const Element lead = a.back();
        const std::size_t shift = a.size() - 1 - static_cast<std::size_t>(db);
        if (!lead.is_zero())
            for (int i = 0; i <= db; ++i) {
                auto& t = a[shift + static_cast<std::size_t>(i)];
                t = t - lead * b[static_cast<std::size_t>(i)];
            }
        a.pop_back();
        vtrim(a);
    }
    return a;
}

Vec vgcd(Vec a, Vec b) {
    vtrim(a);
    vtrim(b);
    while (!b.empty()) {
        Vec bm = vscale(b, b.back().inv());  // vmod needs a monic divisor
        Vec r = vmod(std::move(a), bm);
        a = std::move(bm);
        b = std::move(r);
    }
    return a;
}

// s with s*a = 1 (mod monic m); a must be invertible mod m
Vec vinvmod(const FieldPtr& f, Vec a, const Vec& m) {
    // extended Euclid on (m, a)
    Vec r0 = m, r1 = vmod(std::move(a), m);
    Vec s0 = {}, s1 = {f->one()};
    while (!r1.empty()) {
        // divide r0 by r1
        Vec rem = r0;
        const Element lead_inv = r1.back().inv();
        const int d1 = vdeg(r1);
        Vec qacc(rem.size(), f->zero());
        while (vdeg(rem) >= d1) {
            const Element c = rem.back() * lead_inv;
            const std::size_t shift = rem.size() - 1 - static_cast<std::size_t>(d1);
            qacc[shift] = qacc[shift] + c;
            for (int i = 0; i <= d1; ++i) {
                auto& t = rem[shift + static_cast<std::size_t>(i)];
                t = t - c * r1[static_cast<std::size_t>(i)];
            }
            vtrim(rem);
            if (rem.empty()) break;
        }
        vtrim(qacc);
        Vec s2 = vadd(s0, vscale(vmul(f, qacc, s1), f->from_int(-1)));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd, should be a nonzero constant
    if (vdeg(r0) != 0) raise(Errc::DivisionByZero, "element not invertible modulo modulus");
    return vmod(vscale(s0, r0[0].inv()), m);
}

Vec vpow_qth(const FieldPtr& f, Vec base, u64 e, const Vec& m) {
    Vec r = {f->one()};
    base = vmod(std::move(base), m);
    while (e) {
        if (e & 1) r = vmod(vmul(f, r, base), m);
        base = vmod(vmul(f, base, base), m);
        e >>= 1;
    }
    return r;
}

// Rabin irreducibility test for a monic polynomial over a level of order Q.
bool vec_is_irreducible(const FieldPtr& f, const Vec& mod) {
    const int d = vdeg(mod);
    if (d < 1) return false;
    if (d == 1) return true;
    const u64 Q = f->order();
    const Vec x = {f->zero(), f->one()};
    // x^(Q^e) mod `mod`, by e successive Q-th powerings
    auto frob_pow = [&](int e) {
        Vec r = x;
        for (int i = 0; i < e; ++i) r = vpow_qth(f, std::move(r), Q, mod);
        return r;
    };
    for (u64 r : prime_divisors_u64(static_cast<u64>(d))) {
        Vec t = frob_pow(d / static_cast<int>(r));
        Vec diff = vadd(t, vscale(x, f->from_int(-1)));
        Vec g = vgcd(diff, mod);
        if (vdeg(g) != 0) return false;
    }
    Vec t = frob_pow(d);
    Vec diff = vadd(t, vscale(x, f->from_int(-1)));
    return diff.empty();
}

}  // namespace

// ---------------------------------------------------------------------------
// Element

bool Element::is_zero() const noexcept {
    if (!field_) return false;
    if (field_->is_prime_field()) return residue_ == 0;
    return std::all_of(coords_.begin(), coords_.end(), [](const Element& c) { return c.is_zero(); });
}

bool Element::is_one() const noexcept {
    if (!field_) return false;
    if (field_->is_prime_field()) return residue_ == 1 % field_->characteristic();
    if (!coords_[0].is_one()) return false;
    return std::all_of(coords_.begin() + 1, coords_.end(),
                       [](const Element& c) { return c.is_zero(); });
}

std::uint64_t Element::index() const {
    if (field_->is_prime_field()) return residue_;
    const u64 radix = field_->lower()->order();
    u64 idx = 0;
    for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) idx = idx * radix + it->index();
    return idx;
}

void require_same_field(const Element& a, const Element& b) {
    if (a.field() != b.field()) raise(Errc::FieldMismatch, "operands live at different field levels");
}

Element Element::operator-() const {
    Element r = *this;
    if (field_->is_prime_field()) {
        const u64 p = field_->characteristic();
        r.residue_ = residue_ == 0 ? 0 : p - residue_;
    } else {
        for (auto& c : r.coords_) c = -c;
    }
    return r;
}

Element Element::operator+(const Element& rhs) const {
    require_same_field(*this, rhs);
    Element r = *this;
    if (field_->is_prime_field()) {
        r.residue_ = (residue_ + rhs.residue_) % field_->characteristic();
    } else {
        for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i] + rhs.coords_[i];
    }
    return r;
}

Element Element::operator-(const Element& rhs) const { return *this + (-rhs); }

Element Element::operator*(const Element& rhs) const {
    require_same_field(*this, rhs);
    Element r = *this;
    if (field_->is_prime_field()) {
        r.residue_ = mulmod(residue_, rhs.residue_, field_->characteristic());
        return r;
    }
    Vec a(coords_.begin(), coords_.end());
    Vec b(rhs.coords_.begin(), rhs.coords_.end());
    vtrim(a);
    vtrim(b);
    Vec prod = vmod(vmul(field_->lower(), a, b), field_->modulus());
    prod.resize(field_->ext_degree(), field_->lower()->zero());
    r.coords_ = std::move(prod);
    return r;
}

Element Element::inv() const {
    if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero");
    if (field_->is_prime_field()) {
        Element r = *this;
        r.residue_ = powmod(residue_, field_->characteristic() - 2, field_->characteristic());
        return r;
    }
    Vec a(coords_.begin(), coords_.end());
    vtrim(a);
    Vec s = vinvmod(field_->lower(), std::move(a), field_->modulus());
    s.resize(field_->ext_degree(), field_->lower()->zero());
    Element r = *this;
    r.coords_ = std::move(s);
    return r;
}

Element Element::operator/(const Element& rhs) const { return *this * rhs.inv(); }

Element Element::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    Element base = *this;
    Element r = field_->one();
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool operator==(const Element& a, const Element& b) {
    if (a.field_ != b.field_) return false;
    if (!a.field_) return true;
    if (a.field_->is_prime_field()) return a.residue_ == b.residue_;
    return a.coords_ == b.coords_;
}

const std::vector<Element>& Element::coords() const {
    if (!field_ || field_->is_prime_field())
        raise(Errc::FieldMismatch, "coordinates only exist at extension levels");
    return coords_;
}

std::uint64_t Element::residue() const {
    if (!field_ || !field_->is_prime_field())
        raise(Errc::FieldMismatch, "residue only exists at the prime level");
    return residue_;
}

std::string Element::str() const {
    if (!field_) return "<detached>";
    if (field_->is_prime_field()) return std::to_string(residue_);
    if (is_zero()) return "0";
    if (is_one()) return "1";
    if (auto e = field_->dlog(*this)) {
        if (*e == 1) return field_->symbol();
        return field_->symbol() + "^" + std::to_string(*e);
    }
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += coords_[i].str();
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) raise(Errc::CompositeCharacteristic, std::to_string(p) + " is not prime");
    // canonicalize: field identity is pointer identity, so GF(p) must be
    // the same object across calls
    static std::mutex mtx;
    static std::unordered_map<std::uint64_t, std::weak_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    if (auto it = cache.find(p); it != cache.end())
        if (FieldPtr f = it->second.lock()) return f;
    auto f = std::shared_ptr<Field>(new Field());
    f->characteristic_ = p;
    f->order_ = p;
    cache[p] = f;
    return f;
}

FieldPtr Field::extend(const FieldPtr& base, std::vector<Element> modulus, std::string symbol) {
    vtrim(modulus);
    if (modulus.size() < 3) raise(Errc::ReducibleModulus, "modulus degree must be at least 2");
    for (const auto& c : modulus)
        if (c.field() != base) raise(Errc::FieldMismatch, "modulus coefficient at wrong level");
    if (!modulus.back().is_one()) raise(Errc::NonMonicModulus, "modulus must be monic");
    if (!vec_is_irreducible(base, modulus))
        raise(Errc::ReducibleModulus, "modulus is reducible over its level");

    // canonicalize: the same (base, modulus, symbol) triple must return the
    // same object, since field identity is pointer identity
    std::string key = symbol;
    for (const auto& c : modulus) key += "," + std::to_string(c.index());
    static std::mutex mtx;
    static std::map<std::pair<const Field*, std::string>, std::weak_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    if (auto it = cache.find({base.get(), key}); it != cache.end())
        if (FieldPtr cached = it->second.lock()) return cached;

    auto f = std::shared_ptr<Field>(new Field());
    f->lower_ = base;
    f->modulus_ = std::move(modulus);
    f->characteristic_ = base->characteristic();
    f->degree_ = f->modulus_.size() - 1;
    f->level_ = base->level() + 1;
    f->symbol_ = std::move(symbol);
    u64 ord = 1;
    for (std::size_t i = 0; i < f->degree_; ++i) {
        if (ord > std::numeric_limits<u64>::max() / base->order())
            raise(Errc::OrderOverflow, "field order exceeds 64 bits");
        ord *= base->order();
    }
    f->order_ = ord;
    cache[{base.get(), key}] = f;
    return f;
}

Element Field::zero() const {
    Element e;
    e.field_ = shared_from_this();
    if (!is_prime_field()) e.coords_.assign(degree_, lower_->zero());
    return e;
}

Element Field::one() const { return from_int(1); }

Element Field::from_int(std::int64_t v) const {
    const std::int64_t p = static_cast<std::int64_t>(characteristic_);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    if (is_prime_field()) {
        Element e;
        e.field_ = shared_from_this();
        e.residue_ = static_cast<u64>(r);
        return e;
    }
    Element e = zero();
    e.coords_[0] = lower_->from_int(r);
    return e;
}

Element Field::generator() const {
    if (is_prime_field()) return one();
    Element e = zero();
    e.coords_[1] = lower_->one();
    return e;
}

Element Field::from_index(std::uint64_t idx) const {
    if (idx >= order_) raise(Errc::ParseError, "element index out of range");
    if (is_prime_field()) {
        Element e;
        e.field_ = shared_from_this();
        e.residue_ = idx;
        return e;
    }
    Element e = zero();
    const u64 radix = lower_->order();
    for (std::size_t i = 0; i < degree_; ++i) {
        e.coords_[i] = lower_->from_index(idx % radix);
        idx /= radix;
    }
    return e;
}

Element Field::from_coords(std::vector<Element> coords) const {
    if (is_prime_field()) raise(Errc::FieldMismatch, "prime level has no coordinates");
    if (coords.size() > degree_) raise(Errc::ParseError, "too many coordinates");
    for (const auto& c : coords)
        if (c.field() != lower_) raise(Errc::FieldMismatch, "coordinate at wrong level");
    coords.resize(degree_, lower_->zero());
    Element e = zero();
    e.coords_ = std::move(coords);
    return e;
}

std::uint64_t Field::element_order(const Element& x) const {
    if (x.field().get() != this) raise(Errc::FieldMismatch, "element of another field");
    if (x.is_zero()) raise(Errc::DivisionByZero, "zero has no multiplicative order");
    u64 o = order_ - 1;
    for (u64 r : prime_divisors_u64(order_ - 1)) {
        while (o % r == 0 && x.pow(static_cast<std::int64_t>(o / r)).is_one()) o /= r;
    }
    return o;
}

Element Field::find_primitive() const {
    const u64 target = order_ - 1;
    for (u64 idx = 1; idx < order_; ++idx) {
        Element x = from_index(idx);
        if (element_order(x) == target) return x;
    }
    raise(Errc::FactorizationTooLarge, "no primitive element found");  // unreachable
}

void Field::build_log_table() const {
    if (order_ > 65536) return;
    Element g = generator();
    Element acc = one();
    u64 e = 0;
    do {
        log_table_.emplace(acc.index(), e);
        acc = acc * g;
        ++e;
    } while (!acc.is_one());
    generator_order_ = e;
}

std::optional<std::uint64_t> Field::dlog(const Element& x) const {
    if (order_ > 65536 || is_prime_field() || x.is_zero()) return std::nullopt;
    std::call_once(log_once_, [this] { build_log_table(); });
    auto it = log_table_.find(x.index());
    if (it == log_table_.end()) return std::nullopt;
    return it->second;
}

bool Field::contains_level(const FieldPtr& f) const {
    const Field* cur = this;
    while (cur) {
        if (cur == f.get()) return true;
        cur = cur->lower_.get();
    }
    return false;
}

// ---------------------------------------------------------------------------
// Tower

Tower::Tower(FieldPtr base, FieldPtr top) : base_(std::move(base)), top_(std::move(top)) {
    if (top_ == base_) {
        n_ = 1;
    } else if (!top_->is_prime_field() && top_->lower() == base_) {
        n_ = top_->ext_degree();
    } else {
        raise(Errc::InconsistentField, "top level must be a one-step extension of the base level");
    }
}

Element Tower::frobenius(const Element& x, std::size_t iterations) const {
    if (x.field() != top_) raise(Errc::FieldMismatch, "frobenius expects a top-level element");
    Element r = x;
    const std::int64_t qq = static_cast<std::int64_t>(q());
    for (std::size_t i = 0; i < iterations % n_; ++i) r = r.pow(qq);
    return r;
}

Element Tower::trace(const Element& x) const {
    if (x.field() != top_) raise(Errc::FieldMismatch, "trace expects a top-level element");
    Element acc = x;
    Element cur = x;
    const std::int64_t qq = static_cast<std::int64_t>(q());
    for (std::size_t i = 1; i < n_; ++i) {
        cur = cur.pow(qq);
        acc = acc + cur;
    }
    if (!in_base(acc)) raise(Errc::InconsistentField, "trace left the base level");
    return project(acc);
}

bool Tower::in_base(const Element& x) const {
    if (n_ == 1) return x.field() == top_;
    if (x.field() != top_) return false;
    const auto& c = x.coords();
    return std::all_of(c.begin() + 1, c.end(), [](const Element& e) { return e.is_zero(); });
}

Element Tower::embed(const Element& base_elem) const {
    if (base_elem.field() != base_) raise(Errc::FieldMismatch, "embed expects a base-level element");
    if (n_ == 1) return base_elem;
    return top_->from_coords({base_elem});
}

Element Tower::project(const Element& top_elem) const {
    if (!in_base(top_elem)) raise(Errc::FieldMismatch, "element does not lie in the base level");
    if (n_ == 1) return top_elem;
    return top_elem.coords()[0];
}

// ---------------------------------------------------------------------------
// literals

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// embed an element upward through the chain until it reaches `target`
Element embed_to(const FieldPtr& target, Element e) {
    std::vector<FieldPtr> chain;
    FieldPtr cur = target;
    while (cur && cur != e.field()) {
        chain.push_back(cur);
        cur = cur->is_prime_field() ? nullptr : cur->lower();
    }
    if (!cur) raise(Errc::FieldMismatch, "literal level is not below the requested level");
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) e = (*it)->from_coords({e});
    return e;
}

}  // namespace

Element parse_element(const FieldPtr& f, const std::string& literal) {
    const std::string s = strip(literal);
    if (s.empty()) raise(Errc::ParseError, "empty element literal");

    if (s.front() == '[') {
        if (s.back() != ']') raise(Errc::ParseError, "unterminated coordinate list: " + s);
        if (f->is_prime_field())
            raise(Errc::ParseError, "coordinate list at the prime level: " + s);
        const std::string inner = s.substr(1, s.size() - 2);
        std::vector<Element> coords;
        int depth = 0;
        std::string item;
        for (char c : inner) {
            if (c == '[') ++depth;
            if (c == ']') --depth;
            if (c == ',' && depth == 0) {
                coords.push_back(parse_element(f->lower(), item));
                item.clear();
            } else {
                item += c;
            }
        }
        if (!strip(item).empty()) coords.push_back(parse_element(f->lower(), item));
        return f->from_coords(std::move(coords));
    }

    if (is_integer(s)) return f->from_int(std::stoll(s));

    std::string name = s;
    std::int64_t exp = 1;
    if (auto pos = s.find('^'); pos != std::string::npos) {
        name = strip(s.substr(0, pos));
        const std::string es = strip(s.substr(pos + 1));
        if (!is_integer(es)) raise(Errc::ParseError, "bad exponent in literal: " + s);
        exp = std::stoll(es);
    }
    FieldPtr cur = f;
    while (cur && !cur->is_prime_field()) {
        if (cur->symbol() == name) return embed_to(f, cur->generator().pow(exp));
        cur = cur->lower();
    }
    raise(Errc::ParseError, "unknown generator symbol in literal: " + s);
}

const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::CompositeCharacteristic: return "CompositeCharacteristic";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::NonMonicModulus: return "NonMonicModulus";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::FactorizationTooLarge: return "FactorizationTooLarge";
        case Errc::BothZero: return "BothZero";
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::DuplicateFactor: return "DuplicateFactor";
        case Errc::TooFewTerms: return "TooFewTerms";
        case Errc::NotCharacteristic: return "NotCharacteristic";
        case Errc::NotMinimalPolynomial: return "NotMinimalPolynomial";
        case Errc::TooManyCoefficients: return "TooManyCoefficients";
        case Errc::InvalidStride: return "InvalidStride";
        case Errc::OffsetOutOfRange: return "OffsetOutOfRange";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::MultipleRoots: return "MultipleRoots";
        case Errc::InferenceRequired: return "InferenceRequired";
        case Errc::OffsetCollision: return "OffsetCollision";
        case Errc::NotConjugateFamily: return "NotConjugateFamily";
        case Errc::ZeroSequence: return "ZeroSequence";
        case Errc::PatternLengthMismatch: return "PatternLengthMismatch";
        case Errc::EmptySupport: return "EmptySupport";
        case Errc::PatternSpaceTooLarge: return "PatternSpaceTooLarge";
        case Errc::ParseError: return "ParseError";
        case Errc::InconsistentField: return "InconsistentField";
        case Errc::UnknownExample: return "UnknownExample";
        case Errc::OrderOverflow: return "OrderOverflow";
    }
    return "UnknownError";
}

}  // namespace lrst
