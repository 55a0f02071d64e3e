#include "doctest.h"

#include "generators.hpp"
#include "sogu/counting.hpp"
#include "sogu/oracle.hpp"

#include <vector>

using namespace sogu;
using testgen::standard_sig;

namespace {

const Term a = Term::app("a");
const Term b = Term::app("b");

Term g(Term l, Term r) { return Term::app("g", {std::move(l), std::move(r)}); }
Term F(Term arg) { return Term::fvar("F", {std::move(arg)}); }
Term x() { return Term::var(1); }

Problem pipeline_problem() {
    return Problem(standard_sig(), {"F", 1},
                   {{g(b, F(g(b, g(a, a)))), g(b, g(b, g(F(a), F(a))))}});
}

Problem doubling_problem() {
    return Problem(standard_sig(), {"F", 1}, {{F(g(a, a)), g(F(a), F(a))}});
}

Problem unsat_problem() {
    return Problem(standard_sig(), {"F", 1}, {{g(a, F(a)), g(b, F(a))}});
}

}  // namespace

TEST_CASE("brute force lists the doubling example's small unifiers") {
    OracleResult res = brute_force(doubling_problem(), 3);
    CHECK(res.exhausted);
    REQUIRE(res.unifiers.size() == 2);
    CHECK(res.unifiers[0].body() == x());           // graded order: size 1 first
    CHECK(res.unifiers[1].body() == g(x(), x()));
}

TEST_CASE("brute force on the pipeline example") {
    OracleResult res = brute_force(pipeline_problem(), 9);
    CHECK(res.exhausted);
    REQUIRE(res.unifiers.size() == 2);
    CHECK(res.unifiers[0].body() == x());
    CHECK(res.unifiers[1].body() == g(b, g(x(), x())));
    for (const Binding& u : res.unifiers) CHECK(u.body().size() <= 9);
}

TEST_CASE("brute force respects the size bound") {
    OracleResult res = brute_force(pipeline_problem(), 3);
    REQUIRE(res.unifiers.size() == 1);  // g(b,g(x,x)) needs five nodes
    CHECK(res.unifiers[0].body() == x());
}

TEST_CASE("brute force finds nothing for the constructed refutation") {
    OracleResult res = brute_force(unsat_problem(), 9);
    CHECK(res.exhausted);
    CHECK(res.unifiers.empty());
}

TEST_CASE("differential agreement on the worked examples") {
    DifferentialReport pos = differential_check(pipeline_problem(), 9, 32);
    CHECK_FALSE(pos.disagreement);
    CHECK_FALSE(pos.decider_abstained);
    CHECK(pos.verdict.kind == Verdict::Kind::Unifiable);

    DifferentialReport neg = differential_check(unsat_problem(), 9, 32);
    CHECK_FALSE(neg.disagreement);
    CHECK(neg.verdict.kind == Verdict::Kind::NotUnifiable);
    CHECK(neg.oracle.unifiers.empty());

    DifferentialReport off = differential_check(doubling_problem(), 9, 32);
    CHECK(off.decider_abstained);
    CHECK_FALSE(off.disagreement);
    // Doubling trees of uniform depth 0, 1, 2 all fit in nine nodes.
    REQUIRE(off.oracle.unifiers.size() == 3);
    CHECK(off.oracle.unifiers[2].body() == g(g(x(), x()), g(x(), x())));
}

TEST_CASE("oracle unifiers always satisfy the counting condition") {
    testgen::Rng rng(67);
    Signature sig = standard_sig();
    FunctionVar f{"F", 1};
    for (int i = 0; i < 25; ++i) {
        Binding sigma = testgen::random_binding(rng, sig, f, 5, 3);
        Problem p = testgen::unifiable_problem(rng, sig, f, sigma, 6);
        OracleResult res = brute_force(p, 7);
        for (const Binding& u : res.unifiers) {
            CHECK(is_unifier(p, u));
            CHECK(unification_condition(p, u));
        }
    }
}

TEST_CASE("differential mixing of constructed instances stays consistent") {
    testgen::Rng rng(71);
    Signature sig = standard_sig();
    FunctionVar f{"F", 1};
    for (int i = 0; i < 15; ++i) {
        Problem p = (i % 3 == 0)
                        ? testgen::unsat_problem(rng, sig, f, 6)
                        : testgen::fragment_unifiable_problem(rng, sig, f, 6, 3);
        DifferentialReport rep = differential_check(p, 7, 12);
        CHECK_FALSE(rep.disagreement);
    }
}
