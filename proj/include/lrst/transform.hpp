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

#ifndef LRST_TRANSFORM_HPP
#define LRST_TRANSFORM_HPP

#include <vector>

#include "lrst/lrs.hpp"

namespace lrst {

/// A GF(q)-linear transformation of GF(q^n) in linearized-polynomial form
/// T(x) = sum_i c_i x^(q^i), with exactly n coefficients (zero-padded).
class LinearizedMap {
   public:
    LinearizedMap(Tower tower, std::vector<Element> coeffs);

    static LinearizedMap zero(const Tower& tw);
    static LinearizedMap identity(const Tower& tw);

    const Tower& tower() const noexcept { return tower_; }
    const std::vector<Element>& coeffs() const noexcept { return coeffs_; }

    Element operator()(const Element& x) const;

    friend bool operator==(const LinearizedMap& a, const LinearizedMap& b) {
        return a.tower_ == b.tower_ && a.coeffs_ == b.coeffs_;
    }

   private:
    Tower tower_;
    std::vector<Element> coeffs_;
};

/// The sub-map T_{k,j}(x) = sum_u c_{uk+j} x^(q^(uk+j)) of a parent map;
/// a view over the parent's coefficients, not a dense linearized map.
class SubMap {
   public:
    SubMap(const LinearizedMap& parent, std::size_t stride, std::size_t offset);

    std::size_t stride() const noexcept { return stride_; }
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<Element>& coeffs() const noexcept { return coeffs_; }

    Element operator()(const Element& x) const;

   private:
    Tower tower_;
    std::size_t stride_;
    std::size_t offset_;
    std::vector<Element> coeffs_;  // (c_j, c_{k+j}, ...)
};

SubMap sub_map(const LinearizedMap& T, std::size_t stride, std::size_t offset);

/// 0 iff every entry is zero.
int mu(const std::vector<Element>& values);

/// Full-rank test of T's matrix over GF(q) on the power basis of the
/// top-level generator.
bool is_invertible(const LinearizedMap& T);

/// All-ones coefficient tuple: the trace map onto GF(q).
LinearizedMap trace_map(const Tower& tw);

/// First `count` terms of T(S): the termwise ground-truth path.
std::vector<Element> apply_termwise(const LinearizedMap& T, const Sequence& S, std::size_t count);

}  // namespace lrst

#endif
