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

#ifndef LRST_ERROR_HPP
#define LRST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lrst {

enum class Errc {
    CompositeCharacteristic,
    ReducibleModulus,
    NonMonicModulus,
    DivisionByZero,
    FieldMismatch,
    FactorizationTooLarge,
    BothZero,
    ZeroInput,
    NotCoprime,
    NotIrreducible,
    NotPrimitive,
    DuplicateFactor,
    TooFewTerms,
    NotCharacteristic,
    NotMinimalPolynomial,
    TooManyCoefficients,
    InvalidStride,
    OffsetOutOfRange,
    EmptyInput,
    MultipleRoots,
    InferenceRequired,
    OffsetCollision,
    NotConjugateFamily,
    ZeroSequence,
    PatternLengthMismatch,
    EmptySupport,
    PatternSpaceTooLarge,
    ParseError,
    InconsistentField,
    UnknownExample,
    OrderOverflow,
};

const char* errc_name(Errc c) noexcept;

/// Exception carrying a machine-readable error code plus a human message.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lrst

#endif
