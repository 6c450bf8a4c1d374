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

#ifndef LRST_FIELD_HPP
#define LRST_FIELD_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lrst/error.hpp"

namespace lrst {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of one level of a field tower. Prime-field elements hold a
/// residue mod p; extension-field elements hold their coordinate list over
/// the immediately lower level. Values are immutable after construction.
class Element {
   public:
    Element() = default;  // detached; only assignment is valid on it

    const FieldPtr& field() const noexcept { return field_; }
    bool valid() const noexcept { return field_ != nullptr; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Position of this element in the fixed enumeration order of its field
    /// (mixed-radix value of the coordinate list).
    std::uint64_t index() const;

    Element operator-() const;
    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element operator*(const Element& rhs) const;
    Element operator/(const Element& rhs) const;
    Element inv() const;
    Element pow(std::int64_t e) const;

    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// Coordinates over the immediately lower level (extension levels only).
    const std::vector<Element>& coords() const;
    /// Residue value (prime level only).
    std::uint64_t residue() const;

    std::string str() const;

   private:
    friend class Field;
    FieldPtr field_;
    std::uint64_t residue_ = 0;
    std::vector<Element> coords_;
};

/// One level of a field tower GF(p) = L0 < L1 < ... A level is either the
/// prime field GF(p) or an extension lower[y]/(modulus) with monic
/// irreducible modulus over the lower level. The residue of y is the level's
/// canonical generator.
class Field : public std::enable_shared_from_this<Field> {
   public:
    static FieldPtr prime(std::uint64_t p);
    /// modulus given low-to-high over `base`, monic, irreducible, degree >= 2.
    /// `symbol` names the canonical generator in element I/O.
    static FieldPtr extend(const FieldPtr& base, std::vector<Element> modulus,
                           std::string symbol = "g");

    bool is_prime_field() const noexcept { return lower_ == nullptr; }
    std::uint64_t characteristic() const noexcept { return characteristic_; }
    std::uint64_t order() const noexcept { return order_; }
    /// Extension degree over the lower level (1 for the prime field).
    std::size_t ext_degree() const noexcept { return degree_; }
    std::size_t level() const noexcept { return level_; }
    const FieldPtr& lower() const { return lower_; }
    const std::vector<Element>& modulus() const { return modulus_; }
    const std::string& symbol() const noexcept { return symbol_; }

    Element zero() const;
    Element one() const;
    Element generator() const;
    /// v mod p times the identity.
    Element from_int(std::int64_t v) const;
    Element from_index(std::uint64_t idx) const;
    Element from_coords(std::vector<Element> coords) const;

    /// First element of full multiplicative order in enumeration order.
    Element find_primitive() const;
    std::uint64_t element_order(const Element& x) const;

    /// Discrete log of x to base generator(); only for fields of order
    /// <= 65536, and only when x is in the cyclic group of the generator.
    std::optional<std::uint64_t> dlog(const Element& x) const;

    /// true when `e` belongs to this level or a lower level of the chain.
    bool contains_level(const FieldPtr& f) const;

   private:
    Field() = default;
    void build_log_table() const;

    FieldPtr lower_;                 // null at the prime level
    std::vector<Element> modulus_;   // empty at the prime level
    std::uint64_t characteristic_ = 0;
    std::uint64_t order_ = 0;
    std::size_t degree_ = 1;
    std::size_t level_ = 0;
    std::string symbol_;

    mutable std::once_flag log_once_;
    mutable std::unordered_map<std::uint64_t, std::uint64_t> log_table_;  // index -> exponent
    mutable std::uint64_t generator_order_ = 0;
};

/// The designated pair GF(q) <= GF(q^n) inside a tower: `top` must be a
/// one-step extension of `base` (or equal to it, giving n = 1). Carries the
/// Frobenius x -> x^q and the trace onto GF(q).
class Tower {
   public:
    Tower() = default;
    Tower(FieldPtr base, FieldPtr top);

    const FieldPtr& base() const noexcept { return base_; }
    const FieldPtr& top() const noexcept { return top_; }
    std::uint64_t q() const noexcept { return base_->order(); }
    std::size_t n() const noexcept { return n_; }

    Element frobenius(const Element& x, std::size_t iterations = 1) const;
    /// sum of x^(q^i) for i < n, returned at the base level.
    Element trace(const Element& x) const;

    bool in_base(const Element& x) const;
    Element embed(const Element& base_elem) const;
    Element project(const Element& top_elem) const;

    friend bool operator==(const Tower& a, const Tower& b) {
        return a.base_ == b.base_ && a.top_ == b.top_;
    }

   private:
    FieldPtr base_;
    FieldPtr top_;
    std::size_t n_ = 1;
};

/// Parse an element literal at level f: "0", "1", integer, "sym"/"sym^k"
/// where sym is the symbol of f or of a lower level (embedded upward), or a
/// coordinate list "[l0,l1,...]" of literals over the lower level.
Element parse_element(const FieldPtr& f, const std::string& literal);

void require_same_field(const Element& a, const Element& b);

}  // namespace lrst

#endif
