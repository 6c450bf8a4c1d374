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

#include "lrst/transform.hpp"

#include <algorithm>

namespace lrst {

LinearizedMap::LinearizedMap(Tower tower, std::vector<Element> coeffs) : tower_(std::move(tower)) {
    if (coeffs.size() > tower_.n())
        raise(Errc::TooManyCoefficients, "a linearized map has at most n coefficients");
    for (const auto& c : coeffs)
        if (c.field() != tower_.top()) raise(Errc::FieldMismatch, "coefficient at wrong level");
    coeffs.resize(tower_.n(), tower_.top()->zero());
    coeffs_ = std::move(coeffs);
}

LinearizedMap LinearizedMap::zero(const Tower& tw) { return LinearizedMap(tw, {}); }

LinearizedMap LinearizedMap::identity(const Tower& tw) {
    return LinearizedMap(tw, {tw.top()->one()});
}

Element LinearizedMap::operator()(const Element& x) const {
    if (x.field() != tower_.top()) raise(Errc::FieldMismatch, "argument at wrong level");
    Element acc = tower_.top()->zero();
    Element power = x;  // x^(q^i)
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) power = tower_.frobenius(power);
        acc = acc + coeffs_[i] * power;
    }
    return acc;
}

SubMap::SubMap(const LinearizedMap& parent, std::size_t stride, std::size_t offset)
    : tower_(parent.tower()), stride_(stride), offset_(offset) {
    const std::size_t n = tower_.n();
    if (stride == 0 || n % stride != 0) raise(Errc::InvalidStride, "stride must divide n");
    if (offset >= stride) raise(Errc::OffsetOutOfRange, "offset must be below the stride");
    for (std::size_t i = offset; i < n; i += stride) coeffs_.push_back(parent.coeffs()[i]);
}

Element SubMap::operator()(const Element& x) const {
    if (x.field() != tower_.top()) raise(Errc::FieldMismatch, "argument at wrong level");
    Element acc = tower_.top()->zero();
    Element power = tower_.frobenius(x, offset_);  // x^(q^(uk+j))
    for (std::size_t u = 0; u < coeffs_.size(); ++u) {
        if (u > 0) power = tower_.frobenius(power, stride_);
        acc = acc + coeffs_[u] * power;
    }
    return acc;
}

SubMap sub_map(const LinearizedMap& T, std::size_t stride, std::size_t offset) {
    return SubMap(T, stride, offset);
}

int mu(const std::vector<Element>& values) {
    if (values.empty()) raise(Errc::EmptyInput, "mu of an empty tuple");
    return std::all_of(values.begin(), values.end(), [](const Element& v) { return v.is_zero(); })
               ? 0
               : 1;
}

bool is_invertible(const LinearizedMap& T) {
    const Tower& tw = T.tower();
    const std::size_t n = tw.n();
    if (n == 1) return !T.coeffs()[0].is_zero();
    // columns are the GF(q)-coordinates of T(gamma^i)
    std::vector<std::vector<Element>> m(n, std::vector<Element>(n, tw.base()->zero()));
    Element basis = tw.top()->one();
    const Element gamma = tw.top()->generator();
    for (std::size_t col = 0; col < n; ++col) {
        const Element img = T(basis);
        for (std::size_t row = 0; row < n; ++row) m[row][col] = img.coords()[row];
        basis = basis * gamma;
    }
    // Gaussian elimination over GF(q)
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) continue;
        std::swap(m[pivot], m[rank]);
        const Element inv = m[rank][col].inv();
        for (auto& e : m[rank]) e = e * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const Element factor = m[r][col];
            for (std::size_t c = 0; c < n; ++c) m[r][c] = m[r][c] - factor * m[rank][c];
        }
        ++rank;
    }
    return rank == n;
}

LinearizedMap trace_map(const Tower& tw) {
    std::vector<Element> ones(tw.n(), tw.top()->one());
    return LinearizedMap(tw, std::move(ones));
}

std::vector<Element> apply_termwise(const LinearizedMap& T, const Sequence& S, std::size_t count) {
    if (S.field() != T.tower().top()) raise(Errc::FieldMismatch, "sequence at wrong level");
    std::vector<Element> out = S.terms(count);
    for (auto& t : out) t = T(t);
    return out;
}

}  // namespace lrst
