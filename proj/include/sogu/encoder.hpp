#pragma once

#include "sogu/polynomial.hpp"
#include "sogu/term.hpp"

#include <vector>

// Compiles an integer polynomial p over x1..xn into a unification problem
// whose counting profile satisfies cnt_r(a) - cnt_l(a) = p, mul_l = mul_r
// and cnt_r(b) = cnt_l(b) as exact polynomial identities. Consequently the
// problem's argument-multiplicity witnesses with all counts zero are exactly
// the nonnegative roots of p.

namespace sogu {

// Every encoded problem lives over this fixed signature.
Signature encoder_signature();  // g/2 a/0 b/0

// The canonical term carrying an a-chain of length m at the innermost
// position of k_i nested F-wrappings per variable: payload(0) = b,
// payload(m) = g(a, payload(m-1)); for i = n down to 1 the payload is
// wrapped k_i times as g(F(b,..,P at argument i,..,b), b). When all k_i are
// zero the result is g(payload(m), F(b,..,b)); the F-guard keeps the
// equation second-order and cancels in every counting identity.
Term encode_monomial(int n, unsigned long long m, const std::vector<unsigned>& k);

struct EncodedProblem {
    Problem problem;
    IntPoly source;
};

// One equation per monomial c * x1^k1 ... xn^kn of p: coefficient c > 0
// yields encode(n,1,k) = encode(n,c+1,k), c < 0 yields
// encode(n,|c|+1,k) = encode(n,1,k). The zero polynomial yields an empty
// equation set. Throws std::invalid_argument when a coefficient magnitude
// exceeds 10^4 (payload chains are unary, so larger coefficients produce
// terms too deep for the recursive traversals).
EncodedProblem encode_poly(const IntPoly& p);

// Checks the three polynomial identities above, exactly.
bool verify_encoding(const EncodedProblem& e);

}  // namespace sogu
