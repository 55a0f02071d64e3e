#include "sogu/encoder.hpp"

#include "sogu/counting.hpp"

#include <stdexcept>

namespace sogu {

namespace {

// Payload chains are unary, so deep recursion (copy, print, traversal) caps
// the practical coefficient magnitude well below what memory alone would.
constexpr long long kMaxPayload = 10000;

Term payload(unsigned long long m) {
    Term t = Term::app("b");
    for (unsigned long long i = 0; i < m; ++i) {
        std::vector<Term> args;
        args.reserve(2);
        args.push_back(Term::app("a"));
        args.push_back(std::move(t));
        t = Term::app("g", std::move(args));
    }
    return t;
}

Term guard(int n) {
    std::vector<Term> args(static_cast<std::size_t>(n), Term::app("b"));
    return Term::fvar("F", std::move(args));
}

}  // namespace

Signature encoder_signature() {
    return Signature({{"g", 2}, {"a", 0}, {"b", 0}});
}

Term encode_monomial(int n, unsigned long long m, const std::vector<unsigned>& k) {
    if (n < 1) throw std::invalid_argument("encoding needs at least one variable");
    if (static_cast<int>(k.size()) != n)
        throw std::invalid_argument("exponent vector length does not match arity");

    Term t = payload(m);
    bool wrapped = false;
    for (int i = n; i >= 1; --i) {
        for (unsigned rep = 0; rep < k[static_cast<std::size_t>(i - 1)]; ++rep) {
            std::vector<Term> args(static_cast<std::size_t>(n), Term::app("b"));
            args[static_cast<std::size_t>(i - 1)] = std::move(t);
            std::vector<Term> pair;
            pair.reserve(2);
            pair.push_back(Term::fvar("F", std::move(args)));
            pair.push_back(Term::app("b"));
            t = Term::app("g", std::move(pair));
            wrapped = true;
        }
    }
    if (!wrapped) {
        std::vector<Term> pair;
        pair.reserve(2);
        pair.push_back(std::move(t));
        pair.push_back(guard(n));
        t = Term::app("g", std::move(pair));
    }
    return t;
}

EncodedProblem encode_poly(const IntPoly& p) {
    int n = std::max(1, p.nvars());
    IntPoly source = p.with_nvars(n);

    std::vector<Equation> equations;
    for (const auto& [exps, coeff] : source.monomials()) {
        if (coeff > kMaxPayload || coeff < -kMaxPayload)
            throw std::invalid_argument("coefficient magnitude exceeds the encoder limit");
        long long c = coeff.convert_to<long long>();
        unsigned long long mag = static_cast<unsigned long long>(c < 0 ? -c : c);
        Term unit = encode_monomial(n, 1, exps);
        Term carrier = encode_monomial(n, mag + 1, exps);
        if (c > 0)
            equations.push_back({std::move(unit), std::move(carrier)});
        else
            equations.push_back({std::move(carrier), std::move(unit)});
    }
    Problem problem(encoder_signature(), FunctionVar{"F", n}, std::move(equations));
    return {std::move(problem), std::move(source)};
}

bool verify_encoding(const EncodedProblem& e) {
    CountingProfile prof = profile(e.problem);
    IntPoly source = e.source.with_nvars(prof.nvars);
    if (prof.cnt_r.at("a") - prof.cnt_l.at("a") != source) return false;
    if (prof.mul_l != prof.mul_r) return false;
    if (prof.cnt_r.at("b") != prof.cnt_l.at("b")) return false;
    return true;
}

}  // namespace sogu
