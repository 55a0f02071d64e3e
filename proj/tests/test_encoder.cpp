#include "doctest.h"

#include "generators.hpp"
#include "sogu/counting.hpp"
#include "sogu/encoder.hpp"
#include "sogu/format.hpp"

#include <stdexcept>
#include <vector>

using namespace sogu;

namespace {

IntPoly cnt_diff(const EncodedProblem& e, const std::string& symbol) {
    CountingProfile prof = profile(e.problem);
    return prof.cnt_r.at(symbol) - prof.cnt_l.at(symbol);
}

}  // namespace

TEST_CASE("the encoder signature is fixed") {
    Signature sig = encoder_signature();
    REQUIRE(sig.symbols().size() == 3);
    CHECK(sig.symbols()[0] == Symbol{"g", 2});
    CHECK(sig.symbols()[1] == Symbol{"a", 0});
    CHECK(sig.symbols()[2] == Symbol{"b", 0});
}

TEST_CASE("monomial carrier terms have the advertised multiplier") {
    // Payload of length 1 wrapped 3, 2, 3 times around arguments 1, 2, 3.
    Term t = encode_monomial(3, 1, {3, 2, 3});
    FunctionVar f{"F", 3};
    IntPoly expected =
        IntPoly::constant(3, 1) + IntPoly::monomial(3, {1, 0, 0}, 1) +
        IntPoly::monomial(3, {2, 0, 0}, 1) + IntPoly::monomial(3, {3, 0, 0}, 1) +
        IntPoly::monomial(3, {3, 1, 0}, 1) + IntPoly::monomial(3, {3, 2, 0}, 1) +
        IntPoly::monomial(3, {3, 2, 1}, 1) + IntPoly::monomial(3, {3, 2, 2}, 1);
    CHECK(mul_sym(f, t) == expected);

    // The a-counter carries the monomial itself, scaled by the a-chain length.
    CHECK(cnt_sym(f, {"a", 0}, t) == IntPoly::monomial(3, {3, 2, 3}, 1));
    CHECK(cnt_sym(f, {"a", 0}, encode_monomial(3, 4, {3, 2, 3})) ==
          IntPoly::monomial(3, {3, 2, 3}, 4));
}

TEST_CASE("constant monomials keep a cancelling guard") {
    Term t = encode_monomial(2, 3, {0, 0});
    CHECK(occ_fvar("F", t) == 1);  // the guard F(b,b)
    CHECK(print_term(t) == "g(g(a,g(a,g(a,b))),F(b,b))");
    CHECK(cnt_sym({"F", 2}, {"a", 0}, t) == IntPoly::constant(2, 3));
}

TEST_CASE("payload length zero means no a at all") {
    Term t = encode_monomial(1, 0, {2});
    CHECK(occ_symbol("a", t) == 0);
    CHECK(cnt_sym({"F", 1}, {"a", 0}, t).is_zero());
}

TEST_CASE("encoding a positive, a negative and a mixed polynomial") {
    EncodedProblem pos = encode_poly(parse_poly("2*x1"));
    REQUIRE(pos.problem.equations().size() == 1);
    CHECK(verify_encoding(pos));
    CHECK(cnt_diff(pos, "a") == IntPoly::variable(1, 1, 2));

    EncodedProblem neg = encode_poly(parse_poly("-3"));
    REQUIRE(neg.problem.equations().size() == 1);
    CHECK(verify_encoding(neg));
    CHECK(cnt_diff(neg, "a") == IntPoly::constant(1, -3));

    EncodedProblem mixed = encode_poly(parse_poly("x1^2 + x2^2 - x3^2"));
    CHECK(mixed.problem.equations().size() == 3);
    CHECK(mixed.problem.fvar().arity == 3);
    CHECK(verify_encoding(mixed));
    CHECK(validate_problem(mixed.problem).empty());
    CHECK(cnt_diff(mixed, "a") == mixed.source);
    CHECK(cnt_diff(mixed, "b").is_zero());
}

TEST_CASE("the zero polynomial encodes to an empty equation set") {
    EncodedProblem zero = encode_poly(IntPoly(2));
    CHECK(zero.problem.equations().empty());
    CHECK(verify_encoding(zero));
}

TEST_CASE("a polynomial without variables still gets an arity-1 problem") {
    EncodedProblem c = encode_poly(parse_poly("5"));
    CHECK(c.problem.fvar().arity == 1);
    CHECK(verify_encoding(c));
}

TEST_CASE("coefficients beyond the payload limit are rejected") {
    CHECK_THROWS_AS(encode_poly(IntPoly::constant(1, BigInt(10001))),
                    std::invalid_argument);
    EncodedProblem at_limit = encode_poly(IntPoly::constant(1, BigInt(10000)));
    CHECK(verify_encoding(at_limit));
}

TEST_CASE("encoding identities hold on random polynomials") {
    testgen::Rng rng(47);
    for (int i = 0; i < 60; ++i) {
        int nvars = 1 + static_cast<int>(testgen::pick(rng, 3));
        IntPoly p = testgen::random_poly(rng, nvars, 3, 5, 4);
        EncodedProblem enc = encode_poly(p);
        CHECK(verify_encoding(enc));
        bool well_formed =
            validate_problem(enc.problem).empty() || enc.problem.equations().empty();
        CHECK(well_formed);

        // Point checks tie the polynomial view to the counting view.
        CountingProfile prof = profile(enc.problem);
        IntPoly diff = prof.cnt_r.at("a") - prof.cnt_l.at("a");
        std::vector<unsigned long long> h(static_cast<std::size_t>(prof.nvars));
        for (auto& c : h) c = testgen::pick(rng, 5);
        CHECK(diff.eval_at(h) == enc.source.eval_at(h));
    }
}

TEST_CASE("encoding is deterministic") {
    IntPoly p = parse_poly("x1^2 + x2^2 - x3^2");
    std::string first = print_problem(encode_poly(p).problem);
    std::string second = print_problem(encode_poly(p).problem);
    CHECK(first == second);
}
