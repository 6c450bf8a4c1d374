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

#include "lrst/problem.hpp"

#include <utility>

namespace lrst {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
    raise(Errc::ParseError, path + ": " + msg);
}

void check_keys(const json& obj, const std::string& path,
                const std::vector<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const auto& k : allowed)
            if (it.key() == k) known = true;
        if (!known) parse_fail(path + "." + it.key(), "unknown key");
    }
}

const json& need(const json& obj, const std::string& path, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) parse_fail(path + "." + key, "missing required key");
    return *it;
}

std::uint64_t get_uint(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<std::int64_t>() <= 0)
        parse_fail(path, "expected a positive integer");
    return j.get<std::uint64_t>();
}

Element element_at(const FieldPtr& f, const json& j, const std::string& path) {
    std::string lit;
    if (j.is_string())
        lit = j.get<std::string>();
    else if (j.is_number_integer())
        lit = j.dump();
    else if (j.is_array())
        lit = j.dump();
    else
        parse_fail(path, "expected an element literal");
    try {
        return parse_element(f, lit);
    } catch (const Error& e) {
        parse_fail(path, e.what());
    }
}

std::vector<Element> element_list(const FieldPtr& f, const json& j, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected an array of element literals");
    std::vector<Element> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(element_at(f, j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Poly poly_at(const FieldPtr& f, const json& j, const std::string& path) {
    return Poly(f, element_list(f, j, path));
}

FieldPtr build_step(const FieldPtr& base, const json& step, const std::string& path,
                    const std::string& symbol) {
    if (!step.is_array() || step.size() != 2)
        parse_fail(path, "expected [degree, [modulus coefficients]]");
    const auto deg = get_uint(step[0], path + "[0]");
    std::vector<Element> mod = element_list(base, step[1], path + "[1]");
    if (mod.size() != deg + 1)
        parse_fail(path, "modulus length must be degree + 1");
    try {
        return Field::extend(base, std::move(mod), symbol);
    } catch (const Error& e) {
        raise(Errc::InconsistentField, path + ": " + e.what());
    }
}

json element_json(const Element& e) { return e.str(); }

json sequence_json(const ProblemSpec& spec) {
    json s = json::object();
    switch (spec.seq_kind) {
        case ProblemSpec::SeqKind::Rational: {
            const RationalForm& r = spec.sequence.rational();
            s["rational"] = {{"num", poly_to_json(r.num)}, {"den", poly_to_json(r.den)}};
            break;
        }
        case ProblemSpec::SeqKind::Recurrence: {
            s["charpoly"] = poly_to_json(spec.sequence.charpoly());
            json init = json::array();
            for (const auto& e : spec.sequence.initial()) init.push_back(element_json(e));
            s["initial"] = std::move(init);
            break;
        }
        case ProblemSpec::SeqKind::Terms: {
            json terms = json::array();
            for (const auto& e : spec.raw_terms) terms.push_back(element_json(e));
            s["terms"] = std::move(terms);
            break;
        }
    }
    return s;
}

}  // namespace

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(element_json(c));
    return out;
}

Poly poly_from_json(const FieldPtr& f, const json& j) { return poly_at(f, j, "$"); }

ProblemSpec parse_problem(const json& doc) {
    if (!doc.is_object()) parse_fail("$", "expected a JSON object");
    check_keys(doc, "$", {"p", "q_steps", "n", "n_modulus", "sequence", "transform"});

    const auto p = get_uint(need(doc, "$", "p"), "$.p");
    FieldPtr level;
    try {
        level = Field::prime(p);
    } catch (const Error& e) {
        raise(Errc::InconsistentField, std::string("$.p: ") + e.what());
    }

    if (auto it = doc.find("q_steps"); it != doc.end()) {
        if (!it->is_array()) parse_fail("$.q_steps", "expected an array of extension steps");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string sym = (i + 1 == it->size()) ? "a" : "b";
            level = build_step(level, (*it)[i], "$.q_steps[" + std::to_string(i) + "]", sym);
        }
    }
    const FieldPtr q_level = level;

    const auto n = get_uint(need(doc, "$", "n"), "$.n");
    FieldPtr top = q_level;
    if (n > 1) {
        const std::string sym = q_level->is_prime_field() ? "a" : "t";
        const json& mod_json = need(doc, "$", "n_modulus");
        std::vector<Element> mod = element_list(q_level, mod_json, "$.n_modulus");
        if (mod.size() != n + 1)
            parse_fail("$.n_modulus", "modulus degree must equal n");
        try {
            top = Field::extend(q_level, std::move(mod), sym);
        } catch (const Error& e) {
            raise(Errc::InconsistentField, std::string("$.n_modulus: ") + e.what());
        }
    } else if (doc.contains("n_modulus")) {
        parse_fail("$.n_modulus", "n = 1 takes no modulus");
    }

    ProblemSpec spec;
    spec.tower = Tower(q_level, top);

    const json& seq = need(doc, "$", "sequence");
    if (!seq.is_object()) parse_fail("$.sequence", "expected an object");
    check_keys(seq, "$.sequence", {"rational", "charpoly", "initial", "terms"});
    const int forms = int(seq.contains("rational")) + int(seq.contains("charpoly")) +
                      int(seq.contains("terms"));
    if (forms != 1)
        parse_fail("$.sequence", "give exactly one of rational, charpoly+initial, terms");
    try {
        if (seq.contains("rational")) {
            const json& r = seq["rational"];
            if (!r.is_object()) parse_fail("$.sequence.rational", "expected an object");
            check_keys(r, "$.sequence.rational", {"num", "den"});
            spec.sequence = Sequence::from_rational(
                make_rational(poly_at(top, need(r, "$.sequence.rational", "num"),
                                      "$.sequence.rational.num"),
                              poly_at(top, need(r, "$.sequence.rational", "den"),
                                      "$.sequence.rational.den")));
            spec.seq_kind = ProblemSpec::SeqKind::Rational;
        } else if (seq.contains("charpoly")) {
            spec.sequence = Sequence::from_recurrence(
                poly_at(top, seq["charpoly"], "$.sequence.charpoly"),
                element_list(top, need(seq, "$.sequence", "initial"), "$.sequence.initial"));
            spec.seq_kind = ProblemSpec::SeqKind::Recurrence;
        } else {
            spec.raw_terms = element_list(top, seq["terms"], "$.sequence.terms");
            const Poly h = berlekamp_massey(top, spec.raw_terms);
            if (spec.raw_terms.size() < 2 * static_cast<std::size_t>(std::max(h.degree(), 0)))
                raise(Errc::InferenceRequired,
                      "$.sequence.terms: too few terms to pin down the minimal polynomial; "
                      "need at least 2 * complexity");
            if (h.is_one()) {
                spec.sequence = Sequence::zero(top);
            } else {
                std::vector<Element> init(spec.raw_terms.begin(),
                                          spec.raw_terms.begin() + h.degree());
                spec.sequence = Sequence::from_recurrence(h, std::move(init));
            }
            spec.seq_kind = ProblemSpec::SeqKind::Terms;
            spec.seq_inferred = true;
        }
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError || e.code() == Errc::InferenceRequired) throw;
        parse_fail("$.sequence", e.what());
    }

    const json& tr = need(doc, "$", "transform");
    if (!tr.is_object()) parse_fail("$.transform", "expected an object");
    check_keys(tr, "$.transform", {"coeffs", "trace"});
    if (tr.contains("trace")) {
        if (tr.contains("coeffs")) parse_fail("$.transform", "give coeffs or trace, not both");
        if (!tr["trace"].is_boolean() || !tr["trace"].get<bool>())
            parse_fail("$.transform.trace", "expected true");
        spec.transform = trace_map(spec.tower);
    } else {
        std::vector<Element> coeffs =
            element_list(top, need(tr, "$.transform", "coeffs"), "$.transform.coeffs");
        try {
            spec.transform = LinearizedMap(spec.tower, std::move(coeffs));
        } catch (const Error& e) {
            parse_fail("$.transform.coeffs", e.what());
        }
    }
    return spec;
}

ProblemSpec parse_problem_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        raise(Errc::ParseError, std::string("$: ") + e.what());
    }
    return parse_problem(doc);
}

json render_problem(const ProblemSpec& spec) {
    json out = json::object();
    const FieldPtr& q_level = spec.tower.base();
    out["p"] = q_level->characteristic();

    // the chain below the q level, bottom-up
    std::vector<FieldPtr> chain;
    for (FieldPtr f = q_level; !f->is_prime_field(); f = f->lower()) chain.push_back(f);
    json steps = json::array();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        json mod = json::array();
        for (const auto& c : (*it)->modulus()) mod.push_back(element_json(c));
        steps.push_back(json::array({(*it)->ext_degree(), std::move(mod)}));
    }
    out["q_steps"] = std::move(steps);

    out["n"] = spec.tower.n();
    if (spec.tower.n() > 1) {
        json mod = json::array();
        for (const auto& c : spec.tower.top()->modulus()) mod.push_back(element_json(c));
        out["n_modulus"] = std::move(mod);
    }
    out["sequence"] = sequence_json(spec);

    json tr = json::object();
    if (spec.transform && *spec.transform == trace_map(spec.tower)) {
        tr["trace"] = true;
    } else if (spec.transform) {
        json cs = json::array();
        for (const auto& c : spec.transform->coeffs()) cs.push_back(element_json(c));
        tr["coeffs"] = std::move(cs);
    }
    out["transform"] = std::move(tr);
    return out;
}

}  // namespace lrst
