#pragma once

#include "sogu/counting.hpp"
#include "sogu/term.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

// The decision procedure for arity-1 problems with bounded congruence.
// From the constant terms of the counting profile it derives a bound h_U on
// the bound-variable occurrences of any unifier body, then sweeps candidate
// multiplicities h' below the bound: each h' either contradicts the
// unification condition outright or forces/frees the base-symbol counts of
// a candidate body, which are fed to exhaustive synthesis.

namespace sogu {

struct FragmentReport {
    BigInt hU_literal;             // max(0, M+1, max_c(N_c+1))
    std::optional<BigInt> hU_safe; // stability bound, present iff in_fragment
    std::vector<std::string> witnesses;  // base symbols certifying membership
    bool in_fragment = false;
    BigInt M;                            // constant term of mul_l - mul_r
    std::map<std::string, BigInt> N;     // constant term of cnt_r(c) - cnt_l(c)
};

// Requires arity 1 (throws std::invalid_argument otherwise). A base symbol
// c certifies membership when N_c != 0 and N_c - M != 0; the bound
// hU_safe = 1 + min over such c of max(|N_c - M|, |N_c|) makes both
// congruence tests stable for all h >= hU_safe.
FragmentReport fragment_report(const Problem& p);

// The mod-h stability of counting polynomials: for h >= 1 the evaluation at
// h is congruent to the constant term, for both the multiplier and the
// counter differences. Always true; exposed for property testing.
bool stability_check(const Problem& p, const Symbol& c, unsigned long long h);

struct ForcedCounts {
    enum class Status { Consistent, Contradiction, Underdetermined };

    unsigned long long hprime = 0;
    Status status = Status::Consistent;
    std::map<std::string, BigInt> counts;   // per base symbol, when Consistent
    std::vector<std::string> free_symbols;  // when Underdetermined
    std::string reason;                     // when Contradiction
};

// Evaluates D = mul_l - mul_r and N_c = cnt_r(c) - cnt_l(c) at hprime.
// D != 0 forces occ(c, body) = N_c / D for every base symbol (Contradiction
// unless the quotient is a nonnegative integer); D = 0 requires every
// N_c = 0 (else Contradiction) and leaves all counts free. Requires arity 1.
ForcedCounts forced_counts(const Problem& p, unsigned long long hprime);

struct CandidateSet {
    std::vector<Binding> bindings;
    bool complete = false;  // true iff the set provably contains every candidate
};

// All arity-1 bodies with exactly hprime bound-variable occurrences whose
// base-symbol counts match fc. Counts of symbols of arity >= 2 are not
// constrained by the counting calculus; the leaf identity
//   sum over arity>=2 symbols of (arity-1)*count = #leaves - 1
// pins them when the signature has at most one such symbol, otherwise the
// count solutions are iterated. Bodies larger than `budget` nodes are never
// materialized; dropping any makes the set incomplete, so the enumeration is
// complete only for pinned, in-budget branches. Underdetermined branches
// enumerate all bodies up to size budget and are always incomplete.
// Deterministic order: size, then print form.
CandidateSet enumerate_candidates(const Signature& sig, const FunctionVar& fvar,
                                  unsigned long long hprime, const ForcedCounts& fc,
                                  std::size_t budget);

struct Verdict {
    enum class Kind { Unifiable, NotUnifiable, Unknown, NotInFragment };

    Kind kind = Kind::Unknown;
    std::optional<Binding> witness;  // present iff Unifiable
    std::string reason;              // present iff Unknown
};

struct BranchTrace {
    enum class Outcome {
        Contradicted,
        FoundUnifier,
        ExhaustedComplete,    // no unifier among provably all candidates
        ExhaustedIncomplete,  // no unifier among a truncated candidate set
        NotExplored           // sweep stopped before reaching this branch
    };

    unsigned long long hprime = 0;
    ForcedCounts forced;
    Outcome outcome = Outcome::NotExplored;
    std::size_t candidates_tested = 0;
};

struct DecideTrace {
    FragmentReport fragment;
    std::vector<BranchTrace> branches;  // one per hprime in 0..hU_safe-1, ascending
    Verdict verdict;
};

// Sweeps hprime = hU_safe-1 down to 0, returning the first synthesized
// binding that verifies via is_unifier. NotUnifiable only when every branch
// was contradicted or completely exhausted; any truncated branch degrades
// the negative answer to Unknown. Not-in-fragment problems are classified
// as NotInFragment without branch exploration.
DecideTrace decide_report(const Problem& p, std::size_t budget);
Verdict decide(const Problem& p, std::size_t budget);

}  // namespace sogu
