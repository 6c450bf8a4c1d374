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

#ifndef LRST_PROBLEM_HPP
#define LRST_PROBLEM_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "lrst/minpoly.hpp"

namespace lrst {

/// One parsed problem: field tower, sequence, transform. The sequence kind
/// records which input form was used so rendering round-trips.
struct ProblemSpec {
    enum class SeqKind { Rational, Recurrence, Terms };

    Tower tower;
    Sequence sequence;
    SeqKind seq_kind = SeqKind::Rational;
    bool seq_inferred = false;           // minimal polynomial came from BM
    std::vector<Element> raw_terms;      // original list for Terms inputs
    std::optional<LinearizedMap> transform;
};

ProblemSpec parse_problem(const nlohmann::json& doc);
ProblemSpec parse_problem_text(const std::string& text);
nlohmann::json render_problem(const ProblemSpec& spec);

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const FieldPtr& f, const nlohmann::json& j);

/// Reproduction fixtures for the four worked examples; `ok` is true when
/// every expected value matched.
struct ExampleResult {
    std::string report;
    bool ok = false;
};
ExampleResult run_example(const std::string& name);

}  // namespace lrst

#endif
