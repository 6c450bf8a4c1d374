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

#ifndef LRST_POLY_HPP
#define LRST_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lrst/field.hpp"

namespace lrst {

/// Dense univariate polynomial over one field level, coefficients stored
/// low-to-high with a nonzero leading coefficient (the zero polynomial has
/// an empty coefficient list and degree -1).
class Poly {
   public:
    Poly() = default;
    explicit Poly(FieldPtr f) : field_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<Element> coeffs);

    static Poly x(const FieldPtr& f);
    static Poly constant(const Element& c);
    static Poly from_ints(const FieldPtr& f, const std::vector<std::int64_t>& cs);
    static Poly from_literals(const FieldPtr& f, const std::vector<std::string>& lits);

    const FieldPtr& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }

    Element coeff(std::size_t i) const;  // zero beyond the degree
    const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
    Element leading() const;
    Poly monic() const;
    Element eval(const Element& at) const;
    /// multiply by x^k
    Poly shifted(std::size_t k) const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Element& c) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;

   private:
    FieldPtr field_;
    std::vector<Element> coeffs_;
};

/// Fixed total order: by degree, then coefficient indices low-to-high.
bool poly_less(const Poly& a, const Poly& b);

struct DivModResult {
    Poly quot;
    Poly rem;
};
DivModResult divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);

Poly gcd(const Poly& a, const Poly& b);  // monic

struct XgcdResult {
    Poly g;  // monic gcd
    Poly s;
    Poly t;  // s*a + t*b = g
};
XgcdResult xgcd(const Poly& a, const Poly& b);

Poly lcm(const Poly& a, const Poly& b);  // monic

/// Cofactors u_j with sum_j u_j * prod_{i != j} moduli_i = 1 and
/// deg u_j < deg moduli_j. Moduli must be pairwise coprime of degree >= 1.
std::vector<Poly> multi_bezout(const std::vector<Poly>& moduli);

Poly derivative(const Poly& f);
bool is_squarefree(const Poly& f);
bool is_irreducible(const Poly& f);
bool is_primitive(const Poly& f);

/// base^e mod m, exponent up to 128 bits.
Poly powmod(const Poly& base, unsigned __int128 e, const Poly& m);

/// Complete factorization: unit times monic irreducibles with
/// multiplicities, canonically sorted (seed only steers the internal
/// equal-degree splitting; the output is seed-independent).
struct Factorization {
    Element unit;
    std::vector<std::pair<Poly, int>> factors;

    Poly expand() const;
};
Factorization factor(const Poly& f, std::uint64_t rng_seed);

// --- the sigma action (coefficientwise Frobenius of the tower)

Poly sigma_poly(const Tower& tw, const Poly& f, std::size_t iterations = 1);

/// least positive l with sigma^(l)(f) = f; always divides n.
std::size_t k_of(const Tower& tw, const Poly& f);

/// One sigma-equivalence class of a set of distinct monic irreducibles:
/// representative, its k value, and the offsets i with sigma^(i)(rep)
/// present in the input.
struct SigmaClass {
    Poly rep;
    std::size_t k = 0;
    std::vector<std::size_t> offsets;  // sorted, in [0, k)
};
std::vector<SigmaClass> sigma_classes(const Tower& tw, const std::vector<Poly>& factors);

/// R(P) = P * sigma(P) * ... * sigma^(k(P)-1)(P); coefficients land in GF(q).
Poly conjugate_product(const Tower& tw, const Poly& P);

/// Rewrite a top-level polynomial whose coefficients lie in GF(q) as a
/// polynomial over the base level, and the reverse embedding.
Poly project_to_base(const Tower& tw, const Poly& f);
Poly embed_from_base(const Tower& tw, const Poly& f);

}  // namespace lrst

#endif
