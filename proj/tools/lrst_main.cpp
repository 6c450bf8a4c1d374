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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lrst/problem.hpp"

namespace {

using lrst::Errc;
using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) lrst::raise(Errc::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

lrst::ProblemSpec load(const std::string& path) {
    return lrst::parse_problem_text(read_input(path));
}

const lrst::LinearizedMap& transform_of(const lrst::ProblemSpec& spec) {
    if (!spec.transform) lrst::raise(Errc::ParseError, "$.transform: missing");
    return *spec.transform;
}

json report_json(const lrst::MinPolyReport& rep) {
    json out;
    json factored = json::array();
    for (const auto& [p, e] : rep.factored)
        factored.push_back(json::array({lrst::poly_to_json(p), e}));
    out["minpoly_factored"] = std::move(factored);
    out["minpoly_expanded"] = lrst::poly_to_json(rep.expanded);
    out["complexity"] = rep.complexity;
    out["bound"] = rep.bound;
    out["oracle"] = rep.oracle ? json(lrst::poly_to_json(*rep.oracle)) : json(nullptr);
    out["agrees"] = rep.agrees ? json(*rep.agrees) : json(nullptr);
    return out;
}

void print_report_text(const lrst::MinPolyReport& rep) {
    std::cout << "minimal polynomial: " << rep.expanded.str() << "\n";
    std::cout << "factored:";
    if (rep.factored.empty()) std::cout << " 1";
    for (const auto& [p, e] : rep.factored) {
        std::cout << " (" << p.str() << ")";
        if (e != 1) std::cout << "^" << e;
    }
    std::cout << "\n";
    std::cout << "complexity: " << rep.complexity << "\n";
    std::cout << "bound: " << rep.bound << "\n";
    if (rep.oracle) {
        std::cout << "oracle: " << rep.oracle->str() << "\n";
        std::cout << "agrees: " << (*rep.agrees ? "yes" : "NO") << "\n";
    }
}

int cmd_minpoly(const std::string& path, bool no_verify, std::uint64_t seed, bool as_json) {
    const lrst::ProblemSpec spec = load(path);
    const lrst::MinPolyReport rep =
        lrst::minpoly_general(spec.sequence, transform_of(spec), !no_verify, seed);
    if (as_json)
        std::cout << report_json(rep).dump(2) << "\n";
    else
        print_report_text(rep);
    if (rep.agrees && !*rep.agrees) return 2;
    return 0;
}

int cmd_oracle(const std::string& path, std::size_t terms, bool as_json) {
    const lrst::ProblemSpec spec = load(path);
    const auto image = lrst::apply_termwise(transform_of(spec), spec.sequence, terms);
    const lrst::Poly bm = lrst::berlekamp_massey(spec.tower.top(), image);
    if (as_json)
        std::cout << json({{"oracle", lrst::poly_to_json(bm)},
                           {"complexity", static_cast<std::size_t>(bm.degree())}})
                         .dump(2)
                  << "\n";
    else
        std::cout << "oracle: " << bm.str() << "\ncomplexity: " << bm.degree() << "\n";
    return 0;
}

int cmd_bound(const std::string& path, bool as_json) {
    const lrst::ProblemSpec spec = load(path);
    const auto [top, base] = lrst::complexity_bound_report(spec.sequence, transform_of(spec));
    if (as_json)
        std::cout << json({{"complexity", top}, {"bound", base}}).dump(2) << "\n";
    else
        std::cout << "complexity of T(S): " << top << "\nbound over the base field: " << base
                  << "\n";
    return 0;
}

int cmd_classify(const std::string& path, std::uint64_t seed, bool as_json) {
    const lrst::ProblemSpec spec = load(path);
    const lrst::Poly h = lrst::min_poly(spec.sequence);
    const lrst::Factorization fact = lrst::factor(h, seed);
    std::vector<lrst::Poly> irreducibles;
    for (const auto& [p, e] : fact.factors) irreducibles.push_back(p);
    const auto classes = lrst::sigma_classes(spec.tower, irreducibles);
    if (as_json) {
        json out = json::array();
        for (const auto& cls : classes)
            out.push_back({{"representative", lrst::poly_to_json(cls.rep)},
                           {"k", cls.k},
                           {"offsets", cls.offsets}});
        std::cout << json({{"minpoly", lrst::poly_to_json(h)}, {"classes", out}}).dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "minimal polynomial of S: " << h.str() << "\n";
    for (const auto& cls : classes) {
        std::cout << "class rep " << cls.rep.str() << "  k=" << cls.k << "  offsets:";
        for (auto off : cls.offsets) std::cout << " " << off;
        std::cout << "\n";
    }
    return 0;
}

int cmd_decompose(const std::string& path, std::uint64_t seed, bool as_json) {
    const lrst::ProblemSpec spec = load(path);
    const lrst::Poly h = lrst::min_poly(spec.sequence);
    const lrst::Factorization fact = lrst::factor(h, seed);
    std::vector<lrst::Poly> parts;
    for (const auto& [p, e] : fact.factors) parts.push_back(p);
    const auto comps = lrst::decompose(spec.sequence, parts);
    if (as_json) {
        json out = json::array();
        for (const auto& c : comps) {
            json terms = json::array();
            for (const auto& t : c.terms(8)) terms.push_back(t.str());
            out.push_back({{"num", lrst::poly_to_json(c.rational().num)},
                           {"den", lrst::poly_to_json(c.rational().den)},
                           {"terms", std::move(terms)}});
        }
        std::cout << json({{"components", out}}).dump(2) << "\n";
        return 0;
    }
    for (const auto& c : comps) {
        std::cout << "component (" << c.rational().num.str() << ") / ("
                  << c.rational().den.str() << ")  terms:";
        for (const auto& t : c.terms(8)) std::cout << " " << t.str();
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal polynomials of linearly transformed recurring sequences"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized factorization");

    std::string path;
    bool no_verify = false;
    bool json_flag = false;
    std::size_t terms = 0;
    std::string example_name;

    auto* minpoly = app.add_subcommand("minpoly", "symbolic minimal polynomial of T(S)");
    minpoly->add_option("problem", path, "problem file, - for stdin")->required();
    minpoly->add_flag("--no-verify", no_verify, "skip the termwise oracle");
    minpoly->add_flag("--json", json_flag, "shorthand for --format json");

    auto* oracle = app.add_subcommand("oracle", "termwise Berlekamp-Massey oracle");
    oracle->add_option("problem", path, "problem file, - for stdin")->required();
    oracle->add_option("--terms", terms, "number of transformed terms to feed the oracle")
        ->required();

    auto* bound = app.add_subcommand("bound", "complexity and its base-field bound");
    bound->add_option("problem", path, "problem file, - for stdin")->required();

    auto* classify = app.add_subcommand("classify", "sigma-class partition of the factors");
    classify->add_option("problem", path, "problem file, - for stdin")->required();

    auto* decompose = app.add_subcommand("decompose", "per-factor components of S");
    decompose->add_option("problem", path, "problem file, - for stdin")->required();

    auto* examples = app.add_subcommand("examples", "reproduce a worked example");
    examples->add_option("name", example_name, "counter1|counter2|example1|example2")
        ->required();

    CLI11_PARSE(app, argc, argv);
    const bool as_json = json_flag || format == "json";

    try {
        if (minpoly->parsed()) return cmd_minpoly(path, no_verify, seed, as_json);
        if (oracle->parsed()) return cmd_oracle(path, terms, as_json);
        if (bound->parsed()) return cmd_bound(path, as_json);
        if (classify->parsed()) return cmd_classify(path, seed, as_json);
        if (decompose->parsed()) return cmd_decompose(path, seed, as_json);
        if (examples->parsed()) {
            const lrst::ExampleResult res = lrst::run_example(example_name);
            std::cout << res.report;
            return res.ok ? 0 : 2;
        }
    } catch (const lrst::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
