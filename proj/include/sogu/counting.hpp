#pragma once

#include "sogu/polynomial.hpp"
#include "sogu/term.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

// The occurrence-counting calculus: multiplier and counter polynomials in
// h1..hn (the argument multiplicities of a prospective binding body) and the
// identities that make them useful. Counters are only defined for base
// symbols, i.e. symbols of arity <= 1.

namespace sogu {

// Multiplier of t: how many copies of the binding body materialize when a
// binding with argument multiplicities h1..hn is applied to t.
//   f(t1..tk) -> sum of children, F(t1..tn) -> 1 + sum h_i * mul(t_i).
// Throws std::invalid_argument on a foreign function variable or a bound
// variable in t.
IntPoly mul_sym(const FunctionVar& f, const Term& t);

// Counter of the base symbol c in t: occurrences of c contributed by t
// itself after applying a binding with multiplicities h1..hn.
//   non-c node -> sum of children, c-node -> 1 + sum of children,
//   F(t1..tn) -> sum h_i * cnt(t_i).
// Throws std::invalid_argument if arity(c) > 1, on a foreign function
// variable, or on a bound variable in t.
IntPoly cnt_sym(const FunctionVar& f, const Symbol& c, const Term& t);

// Per-problem sums of the polynomials above, one entry per base symbol of
// the signature (zero polynomial if the symbol never occurs). All
// polynomials are in h1..hn with n the function variable's arity.
struct CountingProfile {
    int nvars = 0;
    IntPoly mul_l, mul_r;
    std::map<std::string, IntPoly> cnt_l, cnt_r;
};

CountingProfile profile(const Problem& p);

// Both sides of the occurrence identity
//   occ(c, t sigma) = occ(c, body) * mul(t) + cnt(c, t)
// with the right side evaluated at h_i = occ(x_i, body). Returned as a pair
// so callers can assert equality.
std::pair<BigInt, BigInt> occurrence_identity(const Term& t, const Binding& sigma,
                                              const Symbol& c);

// The necessary unification condition: for every base symbol c,
//   occ(c, body) * (mul_l - mul_r) = cnt_r(c) - cnt_l(c)
// at h_i = occ(x_i, body). Checked per equation and in aggregate; the
// per-equation form is stronger and still necessary.
bool unification_condition(const Problem& p, const Binding& sigma);

// The same condition with abstract occurrence counts instead of a concrete
// binding. Base symbols missing from counts are treated as count 0.
bool condition_at(const CountingProfile& prof, const std::vector<BigInt>& h,
                  const std::map<std::string, BigInt>& counts);
bool condition_at(const Problem& p, const std::vector<BigInt>& h,
                  const std::map<std::string, BigInt>& counts);

}  // namespace sogu
