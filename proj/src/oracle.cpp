#include "sogu/oracle.hpp"

#include "sogu/enumeration.hpp"

#include <algorithm>

namespace sogu {

OracleResult brute_force(const Problem& p, std::size_t size_bound) {
    OracleResult out;
    out.size_bound = size_bound;
    BodyPool pool(p.signature(), p.fvar().arity);
    for (std::size_t size = 1; size <= size_bound; ++size) {
        const std::vector<Term>* batch = pool.of_size(size);
        if (!batch) {
            out.exhausted = false;
            break;
        }
        for (const Term& body : *batch) {
            Binding sigma(p.fvar(), body);
            if (is_unifier(p, sigma)) out.unifiers.push_back(std::move(sigma));
        }
    }
    return out;
}

DifferentialReport differential_check(const Problem& p, std::size_t size_bound,
                                      std::size_t budget) {
    DifferentialReport rep;
    rep.verdict = decide(p, budget);
    rep.oracle = brute_force(p, size_bound);

    switch (rep.verdict.kind) {
        case Verdict::Kind::Unifiable: {
            const Binding& w = *rep.verdict.witness;
            if (w.body().size() <= size_bound &&
                std::find(rep.oracle.unifiers.begin(), rep.oracle.unifiers.end(), w) ==
                    rep.oracle.unifiers.end()) {
                rep.disagreement = true;
                rep.detail = "oracle did not list the decider's unifier";
            } else {
                rep.detail = "agree: unifiable";
            }
            break;
        }
        case Verdict::Kind::NotUnifiable:
            if (!rep.oracle.unifiers.empty()) {
                rep.disagreement = true;
                rep.detail = "oracle found a unifier the decider refuted";
            } else {
                rep.detail = "agree: no unifier";
            }
            break;
        case Verdict::Kind::Unknown:
        case Verdict::Kind::NotInFragment:
            rep.decider_abstained = true;
            rep.detail = "decider abstained; oracle found " +
                         std::to_string(rep.oracle.unifiers.size()) + " unifier(s) at size <= " +
                         std::to_string(rep.oracle.size_bound);
            break;
    }
    return rep;
}

}  // namespace sogu
