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

#include <algorithm>
#include <sstream>

#include "lrst/problem.hpp"

namespace lrst {

namespace {

/// Collects expected-vs-computed lines; ok stays true while they match.
class Checker {
   public:
    template <typename T>
    void eq(const std::string& label, const T& expected, const T& computed) {
        const bool match = expected == computed;
        ok_ &= match;
        out_ << (match ? "  ok   " : "  FAIL ") << label << ": expected " << show(expected)
             << ", computed " << show(computed) << "\n";
    }
    void truth(const std::string& label, bool computed) { eq(label, true, computed); }
    void note(const std::string& line) { out_ << "  " << line << "\n"; }

    ExampleResult result(const std::string& title) {
        std::ostringstream full;
        full << title << "\n" << out_.str() << (ok_ ? "all checks passed" : "CHECKS FAILED")
             << "\n";
        return {full.str(), ok_};
    }

   private:
    static std::string show(const Poly& p) { return p.str(); }
    static std::string show(const Element& e) { return e.str(); }
    static std::string show(bool b) { return b ? "true" : "false"; }
    static std::string show(std::size_t v) { return std::to_string(v); }
    static std::string show(int v) { return std::to_string(v); }
    static std::string show(const std::string& s) { return s; }
    template <typename T>
    static std::string show(const std::vector<T>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + show(v[i]);
        return s + ")";
    }

    std::ostringstream out_;
    bool ok_ = true;
};

ExampleResult example_counter1() {
    Checker ck;
    const FieldPtr f2 = Field::prime(2);
    const Poly x = Poly::x(f2);
    const Poly one = Poly::constant(f2->one());
    const Poly p1 = x + one;                            // x+1
    const Poly p3 = x.pow(3) + x + one;                 // x^3+x+1
    const Poly p2 = x.pow(2) + x + one;                 // x^2+x+1

    const Sequence S1 = Sequence::from_rational(make_rational(one, p1 * p3));
    const Sequence S2 = Sequence::from_rational(make_rational(one, p1 * p2));
    ck.eq("min poly of S1", p1 * p3, min_poly(S1));
    ck.eq("min poly of S2", p1 * p2, min_poly(S2));

    const Sequence sum = sum_sequences({S1, S2});
    ck.eq("generating function numerator of S1+S2", x.pow(2), sum.rational().num);
    ck.eq("min poly of S1+S2", p3 * p2, min_poly(sum));
    ck.eq("degree of the true min poly", 5, min_poly(sum).degree());

    const Poly via_lcm = lcm(p1 * p3, p1 * p2);
    ck.eq("lcm of the two min polys", p1 * p3 * p2, via_lcm);
    ck.eq("degree of the lcm", 6, via_lcm.degree());
    ck.truth("refuted formula differs from the true min poly", via_lcm != min_poly(sum));

    ck.eq("termwise oracle on 12 terms", min_poly(sum),
          berlekamp_massey(f2, sum.terms(12)));
    return ck.result("counter1: sum of sequences vs the lcm formula");
}

struct Gf16Setup {
    Tower tw;
    Element theta;
    Sequence S;
    LinearizedMap T;
    Poly h;

    Gf16Setup()
        : tw(Field::prime(2),
             Field::extend(Field::prime(2),
                           Poly::from_ints(Field::prime(2), {1, 1, 0, 0, 1}).coeffs(), "a")),
          theta(tw.top()->generator()),
          S(Sequence::zero(tw.top())),
          T(LinearizedMap::zero(tw)),
          h(tw.top()) {
        const FieldPtr f16 = tw.top();
        h = Poly::x(f16) + Poly::constant(theta.pow(10));
        S = Sequence::from_rational(make_rational(Poly::constant(theta.pow(10)), h));
        T = LinearizedMap(tw, {f16->one(), f16->one(), f16->one()});  // x + x^2 + x^4
    }
};

ExampleResult example_counter2() {
    Checker ck;
    const Gf16Setup e;
    const Element theta = e.theta;

    ck.eq("period-3 prefix of S",
          std::vector<Element>{theta.pow(10), theta.pow(5), e.tw.top()->one(), theta.pow(10)},
          e.S.terms(4));
    ck.truth("T is invertible", is_invertible(e.T));

    const MinPolyReport rep = minpoly_general(e.S, e.T, true, 0);
    const Poly expected = Poly::x(e.tw.top()) + Poly::constant(theta.pow(5));
    ck.eq("min poly of T(S)", expected, rep.expanded);
    ck.eq("result equals sigma(h)", sigma_poly(e.tw, e.h), rep.expanded);
    ck.eq("complexity", std::size_t(1), rep.complexity);
    ck.truth("termwise oracle agrees", rep.agrees.value_or(false));
    ck.eq("oracle on 8 terms", expected,
          berlekamp_massey(e.tw.top(), apply_termwise(e.T, e.S, 8)));

    const Poly yg = yg_lcm_formula(e.tw, e.h, e.T);
    ck.eq("lcm formula output", expected * e.h, yg);
    ck.truth("refuted formula differs", yg != rep.expanded);
    return ck.result("counter2: invertible transform vs the conjugate lcm formula");
}

ExampleResult example_example1() {
    Checker ck;
    const Gf16Setup e;
    const Element theta = e.theta;

    ck.eq("k(h)", std::size_t(2), k_of(e.tw, e.h));
    const SubMap t20 = sub_map(e.T, 2, 0);  // x + x^4
    const SubMap t21 = sub_map(e.T, 2, 1);  // x^2
    ck.eq("T_{2,0}(theta^10)", e.tw.top()->zero(), t20(theta.pow(10)));
    ck.eq("T_{2,1}(theta^10)", theta.pow(5), t21(theta.pow(10)));

    const ExponentPattern pat = minpoly_irreducible(e.tw, e.S.rational(), e.T);
    ck.eq("exponent pattern (e_0, e_1)", std::vector<int>{0, 1}, pat.bits);
    const Poly expected = Poly::x(e.tw.top()) + Poly::constant(theta.pow(5));
    ck.eq("min poly of T(S)", expected, pat.expanded(e.tw));
    return ck.result("example1: the exponent-pattern route on the counter2 data");
}

ExampleResult example_example2() {
    Checker ck;
    const FieldPtr f2 = Field::prime(2);
    const FieldPtr f4 = Field::extend(f2, Poly::from_ints(f2, {1, 1, 1}).coeffs(), "a");
    const Tower tw(f2, f4);
    const Element alpha = f4->generator();
    const Element a2 = alpha * alpha;
    const Poly x = Poly::x(f4);
    const Poly one = Poly::constant(f4->one());

    const Poly charpoly = x.pow(3) + x * alpha + Poly::constant(a2);
    const Sequence S = Sequence::from_recurrence(charpoly, {f4->one(), alpha, alpha});
    const LinearizedMap T(tw, {f4->one(), f4->one()});  // x + x^2

    const Poly h = min_poly(S);
    ck.eq("min poly of S", charpoly, h);

    const Poly f1 = x + one;
    const Poly f2x = x.pow(2) + x + Poly::constant(a2);
    Factorization fact = factor(h, 0);
    std::vector<Poly> factors;
    for (const auto& [p, m] : fact.factors) factors.push_back(p);
    ck.eq("irreducible factors of h", std::vector<Poly>{f1, f2x}, factors);

    std::vector<Poly> cof = multi_bezout(factors);
    std::vector<Poly> sorted_cof = cof;
    std::sort(sorted_cof.begin(), sorted_cof.end(), poly_less);
    ck.eq("Bezout cofactor set", std::vector<Poly>{Poly::constant(alpha), x * alpha},
          sorted_cof);

    const std::vector<Sequence> comps = decompose(S, factors);
    ck.eq("S_1 terms (all ones)", std::vector<Element>(4, f4->one()), comps[0].terms(4));
    ck.eq("S_1 min poly", f1, min_poly(comps[0]));
    ck.eq("S_2 min poly", f2x, min_poly(comps[1]));
    ck.eq("S_2 rational numerator", Poly::constant(a2), comps[1].rational().num);

    const MinPolyReport rep = minpoly_general(S, T, true, 0);
    const Poly conj = x.pow(2) + x + Poly::constant(alpha);  // sigma of f2x
    ck.eq("class pattern for x+1", std::vector<int>{0}, rep.patterns[0].bits);
    ck.eq("class pattern for x^2+x+a^2", std::vector<int>{1, 1}, rep.patterns[1].bits);
    ck.eq("min poly of T(S)", f2x * conj, rep.expanded);
    ck.eq("complexity", std::size_t(4), rep.complexity);
    ck.eq("upper bound over GF(2)", std::size_t(5), rep.bound);
    ck.truth("termwise oracle agrees", rep.agrees.value_or(false));
    return ck.result("example2: the full pipeline over GF(4)");
}

}  // namespace

ExampleResult run_example(const std::string& name) {
    if (name == "counter1") return example_counter1();
    if (name == "counter2") return example_counter2();
    if (name == "example1") return example_example1();
    if (name == "example2") return example_example2();
    raise(Errc::UnknownExample, "unknown example: " + name);
}

}  // namespace lrst
