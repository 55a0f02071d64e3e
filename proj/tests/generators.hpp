#pragma once

#include "sogu/decider.hpp"
#include "sogu/polynomial.hpp"
#include "sogu/term.hpp"

#include <cstddef>
#include <random>
#include <vector>

// Deterministic random generators shared by the property tests and the
// acceptance suite. Every draw goes through an explicit engine, so a failure
// reproduces from the seed alone.

namespace sogu::testgen {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline Signature standard_sig() { return Signature({{"g", 2}, {"a", 0}, {"b", 0}}); }

inline Signature unary_sig() {
    return Signature({{"g", 2}, {"s", 1}, {"a", 0}, {"b", 0}});
}

// Random term over sig, bound variables x1..nvars (if nvars > 0) and the
// function variable (if given). `budget` is an upper bound on the node count.
inline Term random_term(Rng& rng, const Signature& sig, int nvars, const FunctionVar* fvar,
                        std::size_t budget) {
    struct Head {
        int kind;  // 0 symbol, 1 bound variable, 2 function variable
        const Symbol* sym;
    };
    std::vector<Head> heads;
    for (const Symbol& s : sig.symbols())
        if (s.arity == 0 || budget >= 1 + static_cast<std::size_t>(s.arity))
            heads.push_back({0, &s});
    if (nvars > 0) heads.push_back({1, nullptr});
    if (fvar && budget >= 1 + static_cast<std::size_t>(fvar->arity))
        heads.push_back({2, nullptr});

    const Head& head = heads[pick(rng, heads.size())];
    if (head.kind == 1) return Term::var(1 + static_cast<int>(pick(rng, nvars)));

    int arity = head.kind == 2 ? fvar->arity : head.sym->arity;
    if (arity == 0) return Term::app(*head.sym);

    std::vector<Term> args;
    std::size_t rest = budget - 1;
    for (int i = 0; i < arity; ++i) {
        std::size_t reserved = static_cast<std::size_t>(arity - i - 1);
        std::size_t take = 1 + pick(rng, rest - reserved);
        args.push_back(random_term(rng, sig, nvars, fvar, take));
        rest -= take;
    }
    if (head.kind == 2) return Term::fvar(fvar->name, std::move(args));
    return Term::app(*head.sym, std::move(args));
}

inline Term random_ground(Rng& rng, const Signature& sig, std::size_t budget) {
    return random_term(rng, sig, 0, nullptr, budget);
}

// A term guaranteed to contain the function variable at least once.
inline Term random_sog(Rng& rng, const Signature& sig, const FunctionVar& fvar,
                       std::size_t budget) {
    for (;;) {
        Term t = random_term(rng, sig, 0, &fvar, budget);
        if (occ_fvar(fvar.name, t) > 0) return t;
    }
}

// First-order body whose bound-variable multiplicities are all <= hmax.
inline Term random_body(Rng& rng, const Signature& sig, int nvars, std::size_t budget,
                        std::size_t hmax) {
    for (;;) {
        Term t = random_term(rng, sig, nvars, nullptr, budget);
        bool ok = true;
        for (int i = 1; i <= nvars; ++i)
            if (occ_var(i, t) > hmax) {
                ok = false;
                break;
            }
        if (ok) return t;
    }
}

inline Binding random_binding(Rng& rng, const Signature& sig, const FunctionVar& fvar,
                              std::size_t budget, std::size_t hmax) {
    return Binding(fvar, random_body(rng, sig, fvar.arity, budget, hmax));
}

inline IntPoly random_poly(Rng& rng, int nvars, unsigned max_deg, long long max_abs_coeff,
                           std::size_t max_monomials) {
    IntPoly p(nvars);
    std::size_t count = 1 + pick(rng, max_monomials);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<unsigned> exps(static_cast<std::size_t>(nvars), 0);
        std::size_t deg = pick(rng, max_deg + 1);
        for (std::size_t d = 0; d < deg; ++d)
            exps[pick(rng, static_cast<std::size_t>(nvars))] += 1;
        long long coeff =
            static_cast<long long>(pick(rng, 2 * static_cast<std::size_t>(max_abs_coeff) + 1)) -
            max_abs_coeff;
        p += IntPoly::monomial(nvars, std::move(exps), coeff);
    }
    return p;
}

// Unifiable by construction: with sigma applied, both sides become
// g(u sigma, v sigma). Both sides contain the function variable, so the
// problem is well-formed.
inline Problem unifiable_problem(Rng& rng, const Signature& sig, const FunctionVar& fvar,
                                 const Binding& sigma, std::size_t budget) {
    Term u = random_sog(rng, sig, fvar, budget);
    Term v = random_sog(rng, sig, fvar, budget);
    Term lhs = Term::app("g", {u, apply(v, sigma)});
    Term rhs = Term::app("g", {apply(u, sigma), v});
    return Problem(sig, fvar, {{lhs, rhs}});
}

// Unsatisfiable by construction: the first arguments are distinct rigid
// ground terms no binding can touch.
inline Problem unsat_problem(Rng& rng, const Signature& sig, const FunctionVar& fvar,
                             std::size_t budget) {
    Term u = random_sog(rng, sig, fvar, budget);
    Term v = random_sog(rng, sig, fvar, budget);
    Term lhs = Term::app("g", {Term::app("a"), u});
    Term rhs = Term::app("g", {Term::app("b"), v});
    return Problem(sig, fvar, {{lhs, rhs}});
}

// Retries until the constructed unifiable problem is inside the decidable
// fragment. The binding used for construction is returned through `out`.
inline Problem fragment_unifiable_problem(Rng& rng, const Signature& sig,
                                          const FunctionVar& fvar, std::size_t budget,
                                          std::size_t hmax, Binding* out = nullptr) {
    for (;;) {
        Binding sigma = random_binding(rng, sig, fvar, 7, hmax);
        Problem p = unifiable_problem(rng, sig, fvar, sigma, budget);
        if (!fragment_report(p).in_fragment) continue;
        if (out) *out = sigma;
        return p;
    }
}

}  // namespace sogu::testgen
