#include "doctest.h"

#include "generators.hpp"
#include "sogu/counting.hpp"

#include <stdexcept>

using namespace sogu;
using testgen::standard_sig;
using testgen::unary_sig;

namespace {

const Term a = Term::app("a");
const Term b = Term::app("b");

Term g(Term l, Term r) { return Term::app("g", {std::move(l), std::move(r)}); }
Term s(Term t) { return Term::app("s", {std::move(t)}); }
Term F(Term arg) { return Term::fvar("F", {std::move(arg)}); }

const FunctionVar F1{"F", 1};

// g(F(g(a,F(s(a)))), g(F(a), F(F(F(b))))): one nested pair, one triple nest.
Term multiplier_showcase() {
    return g(F(g(a, F(s(a)))), g(F(a), F(F(F(b)))));
}

// g(g(a,a), g(F(g(a,F(g(a,a)))), g(F(a), F(F(F(b)))))): counts the a's.
Term counter_showcase() {
    return g(g(a, a), g(F(g(a, F(g(a, a)))), g(F(a), F(F(F(b))))));
}

Problem doubling_problem() {
    return Problem(standard_sig(), F1, {{F(g(a, a)), g(F(a), F(a))}});
}

Problem pipeline_problem() {
    return Problem(standard_sig(), F1,
                   {{g(b, F(g(b, g(a, a)))), g(b, g(b, g(F(a), F(a))))}});
}

}  // namespace

TEST_CASE("multiplier of the showcase term") {
    IntPoly expected = IntPoly::constant(1, 3) + IntPoly::variable(1, 1, 2) +
                       IntPoly::monomial(1, {2}, 1);
    IntPoly m = mul_sym(F1, multiplier_showcase());
    CHECK(m == expected);
    CHECK(m.eval_at({2}) == 11);
}

TEST_CASE("counter of the showcase term") {
    IntPoly expected = IntPoly::constant(1, 2) + IntPoly::variable(1, 1, 2) +
                       IntPoly::monomial(1, {2}, 2);
    IntPoly c = cnt_sym(F1, {"a", 0}, counter_showcase());
    CHECK(c == expected);
    CHECK(c.eval_at({2}) == 14);
}

TEST_CASE("multiplier and counter of simple shapes") {
    CHECK(mul_sym(F1, a) == IntPoly(1));
    CHECK(mul_sym(F1, F(a)) == IntPoly::constant(1, 1));
    // F(F(a)): the outer copy plus h nested copies.
    CHECK(mul_sym(F1, F(F(a))) ==
          IntPoly::constant(1, 1) + IntPoly::variable(1, 1));

    CHECK(cnt_sym(F1, {"a", 0}, g(a, a)) == IntPoly::constant(1, 2));
    CHECK(cnt_sym(F1, {"a", 0}, F(a)) == IntPoly::variable(1, 1));
    CHECK(cnt_sym(F1, {"b", 0}, F(a)).is_zero());

    // Unary base symbols count like constants with a child.
    CHECK(cnt_sym(F1, {"s", 1}, s(s(a))) == IntPoly::constant(1, 2));
}

TEST_CASE("counters reject non-base symbols and foreign nodes") {
    CHECK_THROWS_AS(cnt_sym(F1, {"g", 2}, a), std::invalid_argument);
    CHECK_THROWS_AS(cnt_sym(F1, {"a", 0}, Term::fvar("G", {a})), std::invalid_argument);
    CHECK_THROWS_AS(mul_sym(F1, Term::var(1)), std::invalid_argument);
}

TEST_CASE("counting polynomials have nonnegative coefficients") {
    testgen::Rng rng(37);
    Signature sig = unary_sig();
    for (int i = 0; i < 100; ++i) {
        int n = 1 + static_cast<int>(testgen::pick(rng, 3));
        FunctionVar f{"F", n};
        Term t = testgen::random_term(rng, sig, 0, &f, 12);
        CHECK(mul_sym(f, t).all_coefficients_nonnegative());
        for (const Symbol& c : sig.base_symbols())
            CHECK(cnt_sym(f, c, t).all_coefficients_nonnegative());
    }
}

TEST_CASE("occurrence identity on the showcase instance") {
    Binding sigma(F1, g(a, g(Term::var(1), Term::var(1))));
    auto [lhs, rhs] = occurrence_identity(counter_showcase(), sigma, {"a", 0});
    CHECK(lhs == 25);
    CHECK(rhs == 25);
}

TEST_CASE("occurrence identity holds on random instances") {
    testgen::Rng rng(41);
    Signature sig = unary_sig();
    for (int i = 0; i < 300; ++i) {
        int n = 1 + static_cast<int>(testgen::pick(rng, 3));
        FunctionVar f{"F", n};
        Term t = testgen::random_term(rng, sig, 0, &f, 12);
        Binding sigma = testgen::random_binding(rng, sig, f, 9, 3);
        const auto base = sig.base_symbols();
        const Symbol& c = base[testgen::pick(rng, base.size())];
        auto [lhs, rhs] = occurrence_identity(t, sigma, c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("counting profile of the pipeline example") {
    CountingProfile prof = profile(pipeline_problem());
    CHECK(prof.nvars == 1);
    CHECK(prof.mul_l == IntPoly::constant(1, 1));
    CHECK(prof.mul_r == IntPoly::constant(1, 2));
    CHECK(prof.cnt_l.at("a") == IntPoly::variable(1, 1, 2));
    CHECK(prof.cnt_r.at("a") == IntPoly::variable(1, 1, 2));
    CHECK(prof.cnt_l.at("b") == IntPoly::constant(1, 1) + IntPoly::variable(1, 1));
    CHECK(prof.cnt_r.at("b") == IntPoly::constant(1, 2));
}

TEST_CASE("profile of the doubling example") {
    CountingProfile prof = profile(doubling_problem());
    CHECK(prof.mul_l == IntPoly::constant(1, 1));
    CHECK(prof.mul_r == IntPoly::constant(1, 2));
    CHECK(prof.cnt_l.at("a") == IntPoly::variable(1, 1, 2));
    CHECK(prof.cnt_r.at("a") == IntPoly::variable(1, 1, 2));
    CHECK(prof.cnt_l.at("b").is_zero());
    CHECK(prof.cnt_r.at("b").is_zero());
}

TEST_CASE("unification condition on the worked instances") {
    // occ(a,body)*(1-2) = 0 = 4-4 at h = 2.
    CHECK(unification_condition(doubling_problem(),
                                Binding(F1, g(Term::var(1), Term::var(1)))));
    CHECK(unification_condition(pipeline_problem(),
                                Binding(F1, g(b, g(Term::var(1), Term::var(1))))));
    // A body that is not a unifier and also fails the counting test.
    CHECK_FALSE(unification_condition(pipeline_problem(), Binding(F1, a)));
    CHECK_THROWS_AS(unification_condition(doubling_problem(), Binding({"G", 1}, a)),
                    std::invalid_argument);
}

TEST_CASE("condition_at matches the abstract form of the pipeline example") {
    Problem p = pipeline_problem();
    CHECK(condition_at(p, {BigInt(2)}, {{"a", BigInt(0)}, {"b", BigInt(1)}}));
    CHECK_FALSE(condition_at(p, {BigInt(3)}, {{"a", BigInt(0)}, {"b", BigInt(1)}}));
    // Missing entries count as zero.
    CHECK(condition_at(p, {BigInt(1)}, {}));
}

TEST_CASE("the condition is necessary: every oracle-style unifier passes") {
    testgen::Rng rng(43);
    Signature sig = standard_sig();
    FunctionVar f{"F", 1};
    for (int i = 0; i < 60; ++i) {
        Binding sigma = testgen::random_binding(rng, sig, f, 7, 4);
        Problem p = testgen::unifiable_problem(rng, sig, f, sigma, 7);
        REQUIRE(is_unifier(p, sigma));
        CHECK(unification_condition(p, sigma));
    }
}
