#include "sogu/decider.hpp"

#include "sogu/enumeration.hpp"
#include "sogu/format.hpp"

#include <algorithm>
#include <stdexcept>

namespace sogu {

namespace {

constexpr std::size_t kCandidateCap = 200000;   // per-branch synthesis cap
constexpr unsigned long long kMaxBranches = 4096;
constexpr long long kMaxForcedCount = 1000000;

void require_arity_one(const Problem& p) {
    if (p.fvar().arity != 1)
        throw std::invalid_argument("the decision procedure handles arity 1 only");
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

FragmentReport fragment_report(const Problem& p) {
    require_arity_one(p);
    CountingProfile prof = profile(p);

    FragmentReport rep;
    rep.M = prof.mul_l.constant_term() - prof.mul_r.constant_term();
    rep.hU_literal = 0;
    if (rep.M + 1 > rep.hU_literal) rep.hU_literal = rep.M + 1;
    for (const Symbol& c : p.signature().base_symbols()) {
        BigInt n = prof.cnt_r.at(c.name).constant_term() - prof.cnt_l.at(c.name).constant_term();
        rep.N.emplace(c.name, n);
        if (n + 1 > rep.hU_literal) rep.hU_literal = n + 1;
        if (n != 0 && n - rep.M != 0) rep.witnesses.push_back(c.name);
    }
    rep.in_fragment = !rep.witnesses.empty();
    if (rep.in_fragment) {
        BigInt best = -1;
        for (const std::string& name : rep.witnesses) {
            const BigInt& n = rep.N.at(name);
            BigInt m = std::max(abs_big(n - rep.M), abs_big(n));
            if (best < 0 || m < best) best = m;
        }
        rep.hU_safe = best + 1;
    }
    return rep;
}

bool stability_check(const Problem& p, const Symbol& c, unsigned long long h) {
    if (h == 0) throw std::invalid_argument("stability is a mod-h statement, h >= 1");
    CountingProfile prof = profile(p);
    std::vector<BigInt> point{BigInt(h)};
    BigInt mod(h);

    IntPoly mul_diff = prof.mul_l - prof.mul_r;
    IntPoly cnt_diff = prof.cnt_r.at(c.name) - prof.cnt_l.at(c.name);
    BigInt m_drift = mul_diff.eval(point) - mul_diff.constant_term();
    BigInt c_drift = cnt_diff.eval(point) - cnt_diff.constant_term();
    return m_drift % mod == 0 && c_drift % mod == 0;
}

ForcedCounts forced_counts(const Problem& p, unsigned long long hprime) {
    require_arity_one(p);
    CountingProfile prof = profile(p);
    std::vector<BigInt> point{BigInt(hprime)};
    BigInt d = prof.mul_l.eval(point) - prof.mul_r.eval(point);

    ForcedCounts fc;
    fc.hprime = hprime;
    for (const Symbol& c : p.signature().base_symbols()) {
        BigInt n = prof.cnt_r.at(c.name).eval(point) - prof.cnt_l.at(c.name).eval(point);
        if (d == 0) {
            if (n != 0) {
                fc.status = ForcedCounts::Status::Contradiction;
                fc.counts.clear();
                fc.free_symbols.clear();
                fc.reason = "count of " + c.name + " must satisfy 0 = " + n.str();
                return fc;
            }
            fc.free_symbols.push_back(c.name);
            continue;
        }
        if (n % d != 0) {
            fc.status = ForcedCounts::Status::Contradiction;
            fc.counts.clear();
            fc.reason = "count of " + c.name + " would be " + n.str() + "/" + d.str();
            return fc;
        }
        BigInt q = n / d;
        if (q < 0) {
            fc.status = ForcedCounts::Status::Contradiction;
            fc.counts.clear();
            fc.reason = "count of " + c.name + " would be negative (" + q.str() + ")";
            return fc;
        }
        fc.counts.emplace(c.name, q);
    }
    fc.status = d == 0 ? ForcedCounts::Status::Underdetermined
                       : ForcedCounts::Status::Consistent;
    return fc;
}

namespace {

struct MultisetPlan {
    std::map<std::string, std::size_t> symbol_counts;
    std::size_t total = 0;
};

// Nonnegative solutions of sum (arity_i - 1) * n_i = target over the given
// higher-arity symbols, in declaration order, lexicographically.
void higher_solutions(const std::vector<Symbol>& higher, std::size_t idx, std::size_t target,
                      std::map<std::string, std::size_t>& acc,
                      std::vector<std::map<std::string, std::size_t>>& out) {
    if (idx == higher.size()) {
        if (target == 0) out.push_back(acc);
        return;
    }
    std::size_t weight = static_cast<std::size_t>(higher[idx].arity) - 1;
    for (std::size_t n = 0; n * weight <= target; ++n) {
        acc[higher[idx].name] = n;
        higher_solutions(higher, idx + 1, target - n * weight, acc, out);
        if (weight == 0) break;  // unreachable for arity >= 2, defensive
    }
    acc.erase(higher[idx].name);
}

}  // namespace

CandidateSet enumerate_candidates(const Signature& sig, const FunctionVar& fvar,
                                  unsigned long long hprime, const ForcedCounts& fc,
                                  std::size_t budget) {
    if (fvar.arity != 1)
        throw std::invalid_argument("candidate synthesis handles arity 1 only");
    if (fc.status == ForcedCounts::Status::Contradiction)
        throw std::invalid_argument("no candidates for a contradicted branch");

    CandidateSet out;

    if (fc.status == ForcedCounts::Status::Underdetermined) {
        BodyPool pool(sig, 1, kCandidateCap);
        for (std::size_t size = 1; size <= budget; ++size) {
            const std::vector<Term>* batch = pool.of_size(size);
            if (!batch) break;
            for (const Term& t : *batch)
                if (occ_var(1, t) == hprime) out.bindings.emplace_back(fvar, t);
        }
        out.complete = false;
        return out;
    }

    std::map<std::string, std::size_t> base_counts;
    std::size_t leaves = static_cast<std::size_t>(hprime);
    std::size_t base_total = 0;
    for (const auto& [name, count] : fc.counts) {
        if (count > kMaxForcedCount) {
            out.complete = false;  // too large to materialize, treat as truncated
            return out;
        }
        std::size_t c = count.convert_to<std::size_t>();
        base_counts[name] = c;
        base_total += c;
        if (sig.find(name)->arity == 0) leaves += c;
    }
    if (leaves == 0) {
        out.complete = true;  // every term has at least one leaf
        return out;
    }
    std::size_t target = leaves - 1;

    std::vector<Symbol> higher;
    for (const Symbol& sym : sig.symbols())
        if (sym.arity >= 2) higher.push_back(sym);

    std::vector<std::map<std::string, std::size_t>> solutions;
    bool pinned = higher.size() <= 1;
    if (higher.empty()) {
        if (target == 0) solutions.push_back({});
    } else if (higher.size() == 1) {
        std::size_t weight = static_cast<std::size_t>(higher[0].arity) - 1;
        if (target % weight == 0) solutions.push_back({{higher[0].name, target / weight}});
    } else {
        std::map<std::string, std::size_t> acc;
        higher_solutions(higher, 0, target, acc, solutions);
    }

    bool truncated = false;
    for (const auto& sol : solutions) {
        MultisetPlan plan;
        plan.symbol_counts = base_counts;
        plan.total = base_total + static_cast<std::size_t>(hprime);
        for (const auto& [name, count] : sol) {
            plan.symbol_counts[name] += count;
            plan.total += count;
        }
        if (plan.total > budget) {
            truncated = true;
            continue;
        }
        MultisetEnumeration e = bodies_from_multiset(
            sig, plan.symbol_counts, {static_cast<std::size_t>(hprime)}, kCandidateCap);
        if (!e.complete) truncated = true;
        for (Term& t : e.bodies) out.bindings.emplace_back(fvar, std::move(t));
    }

    if (solutions.size() > 1) {
        std::vector<std::string> params = canonical_params(sig, 1);
        std::sort(out.bindings.begin(), out.bindings.end(),
                  [&](const Binding& x, const Binding& y) {
                      if (x.body().size() != y.body().size())
                          return x.body().size() < y.body().size();
                      return print_term(x.body(), params) < print_term(y.body(), params);
                  });
    }
    out.complete = pinned && !truncated;
    return out;
}

DecideTrace decide_report(const Problem& p, std::size_t budget) {
    DecideTrace trace;
    trace.fragment = fragment_report(p);
    if (!trace.fragment.in_fragment) {
        trace.verdict.kind = Verdict::Kind::NotInFragment;
        return trace;
    }

    BigInt hU = *trace.fragment.hU_safe;
    if (hU > kMaxBranches) {
        trace.verdict.kind = Verdict::Kind::Unknown;
        trace.verdict.reason =
            "max-arg-multiplicity bound " + hU.str() + " exceeds the sweep limit";
        return trace;
    }
    unsigned long long branches = hU.convert_to<unsigned long long>();
    trace.branches.resize(branches);
    for (unsigned long long i = 0; i < branches; ++i) trace.branches[i].hprime = i;

    bool any_incomplete = false;
    for (unsigned long long step = branches; step-- > 0;) {
        BranchTrace& branch = trace.branches[step];
        branch.forced = forced_counts(p, step);
        if (branch.forced.status == ForcedCounts::Status::Contradiction) {
            branch.outcome = BranchTrace::Outcome::Contradicted;
            continue;
        }
        CandidateSet candidates =
            enumerate_candidates(p.signature(), p.fvar(), step, branch.forced, budget);
        for (const Binding& sigma : candidates.bindings) {
            ++branch.candidates_tested;
            if (is_unifier(p, sigma)) {
                branch.outcome = BranchTrace::Outcome::FoundUnifier;
                trace.verdict.kind = Verdict::Kind::Unifiable;
                trace.verdict.witness = sigma;
                return trace;
            }
        }
        branch.outcome = candidates.complete ? BranchTrace::Outcome::ExhaustedComplete
                                             : BranchTrace::Outcome::ExhaustedIncomplete;
        if (!candidates.complete) any_incomplete = true;
    }

    if (any_incomplete) {
        trace.verdict.kind = Verdict::Kind::Unknown;
        trace.verdict.reason = "candidate budget exhausted in at least one branch";
    } else {
        trace.verdict.kind = Verdict::Kind::NotUnifiable;
    }
    return trace;
}

Verdict decide(const Problem& p, std::size_t budget) {
    return decide_report(p, budget).verdict;
}

}  // namespace sogu
