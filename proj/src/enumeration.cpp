#include "sogu/enumeration.hpp"

#include "sogu/format.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace sogu {

namespace {

void sort_by_print(std::vector<Term>& terms, const std::vector<std::string>& params) {
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
        keys.emplace_back(print_term(terms[i], params), i);
    std::sort(keys.begin(), keys.end());
    std::vector<Term> sorted;
    sorted.reserve(terms.size());
    for (const auto& [key, i] : keys) sorted.push_back(std::move(terms[i]));
    terms = std::move(sorted);
}

}  // namespace

std::vector<std::vector<std::size_t>> positive_compositions(std::size_t total, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    std::vector<std::size_t> current(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx,
                                                            std::size_t remaining) {
        if (idx + 1 == k) {
            if (remaining >= 1) {
                current[idx] = remaining;
                out.push_back(current);
            }
            return;
        }
        for (std::size_t v = 1; v + (k - idx - 1) <= remaining; ++v) {
            current[idx] = v;
            rec(idx + 1, remaining - v);
        }
    };
    rec(0, total);
    return out;
}

BodyPool::BodyPool(Signature sig, int nvars, std::size_t term_cap)
    : sig_(std::move(sig)),
      nvars_(nvars),
      term_cap_(term_cap),
      params_(canonical_params(sig_, nvars)) {
    pools_.resize(1);  // index 0 stays empty
}

const std::vector<Term>* BodyPool::of_size(std::size_t size) {
    if (size == 0) {
        static const std::vector<Term> empty;
        return &empty;
    }
    while (!overflowed_ && pools_.size() <= size) {
        std::size_t s = pools_.size();
        std::vector<Term> batch;
        auto note = [&]() {
            if (++terms_built_ > term_cap_) overflowed_ = true;
            return !overflowed_;
        };
        if (s == 1) {
            for (const Symbol& sym : sig_.symbols()) {
                if (sym.arity != 0) continue;
                batch.push_back(Term::app(sym));
                if (!note()) return nullptr;
            }
            for (int i = 1; i <= nvars_; ++i) {
                batch.push_back(Term::var(i));
                if (!note()) return nullptr;
            }
        } else {
            for (const Symbol& sym : sig_.symbols()) {
                if (sym.arity < 1) continue;
                for (const auto& split :
                     positive_compositions(s - 1, static_cast<std::size_t>(sym.arity))) {
                    bool any_empty = false;
                    for (std::size_t part : split)
                        if (pools_[part].empty()) any_empty = true;
                    if (any_empty) continue;
                    std::vector<std::size_t> index(split.size(), 0);
                    bool done = false;
                    while (!done) {
                        std::vector<Term> args;
                        args.reserve(split.size());
                        for (std::size_t j = 0; j < split.size(); ++j)
                            args.push_back(pools_[split[j]][index[j]]);
                        batch.push_back(Term::app(sym, std::move(args)));
                        if (!note()) return nullptr;
                        done = true;
                        for (std::size_t j = split.size(); j-- > 0;) {
                            if (++index[j] < pools_[split[j]].size()) {
                                done = false;
                                break;
                            }
                            index[j] = 0;
                        }
                    }
                }
            }
        }
        sort_by_print(batch, params_);
        pools_.push_back(std::move(batch));
    }
    return pools_.size() > size ? &pools_[size] : nullptr;
}

namespace {

// Labels: signature symbols in declaration order, then variables 1..n.
// A state maps each label to its remaining occurrence count.
struct MultisetContext {
    std::vector<Symbol> symbols;  // variables appear as arity-0 placeholders
    std::vector<bool> is_var;
    std::vector<int> var_index;
    std::size_t term_cap = 0;
    std::size_t built = 0;
    bool truncated = false;
    std::map<std::vector<std::size_t>, std::vector<Term>> memo;
};

std::size_t state_total(const std::vector<std::size_t>& state) {
    std::size_t t = 0;
    for (std::size_t c : state) t += c;
    return t;
}

// A state forms a tree iff its arities account for exactly total-1 edges.
bool feasible(const MultisetContext& ctx, const std::vector<std::size_t>& state) {
    std::size_t total = state_total(state);
    if (total == 0) return false;
    std::size_t edges = 0;
    for (std::size_t i = 0; i < state.size(); ++i)
        edges += static_cast<std::size_t>(ctx.symbols[i].arity) * state[i];
    return edges == total - 1;
}

bool note_term(MultisetContext& ctx) {
    if (++ctx.built > ctx.term_cap) ctx.truncated = true;
    return !ctx.truncated;
}

const std::vector<Term>& enumerate_state(MultisetContext& ctx,
                                         const std::vector<std::size_t>& state);

// Distributes `state` over the root's children and collects every resulting
// application. parts[j] is the accumulator for child j.
void split_children(MultisetContext& ctx, const Symbol& root,
                    const std::vector<std::size_t>& state, std::size_t label_idx,
                    std::vector<std::vector<std::size_t>>& parts, std::vector<Term>& out) {
    if (ctx.truncated) return;
    std::size_t k = parts.size();
    if (label_idx == state.size()) {
        std::vector<const std::vector<Term>*> child_terms(k);
        for (std::size_t j = 0; j < k; ++j) {
            if (!feasible(ctx, parts[j])) return;
            child_terms[j] = &enumerate_state(ctx, parts[j]);
            if (child_terms[j]->empty()) return;
        }
        std::vector<std::size_t> index(k, 0);
        bool done = false;
        while (!done) {
            std::vector<Term> args;
            args.reserve(k);
            for (std::size_t j = 0; j < k; ++j) args.push_back((*child_terms[j])[index[j]]);
            out.push_back(Term::app(root, std::move(args)));
            if (!note_term(ctx)) return;
            done = true;
            for (std::size_t j = k; j-- > 0;) {
                if (++index[j] < child_terms[j]->size()) {
                    done = false;
                    break;
                }
                index[j] = 0;
            }
        }
        return;
    }
    std::function<void(std::size_t, std::size_t)> distribute = [&](std::size_t child,
                                                                   std::size_t remaining) {
        if (ctx.truncated) return;
        if (child + 1 == k) {
            parts[child][label_idx] = remaining;
            split_children(ctx, root, state, label_idx + 1, parts, out);
            parts[child][label_idx] = 0;
            return;
        }
        for (std::size_t v = 0; v <= remaining; ++v) {
            parts[child][label_idx] = v;
            distribute(child + 1, remaining - v);
            parts[child][label_idx] = 0;
        }
    };
    distribute(0, state[label_idx]);
}

const std::vector<Term>& enumerate_state(MultisetContext& ctx,
                                         const std::vector<std::size_t>& state) {
    auto it = ctx.memo.find(state);
    if (it != ctx.memo.end()) return it->second;
    std::vector<Term> result;
    if (!ctx.truncated && feasible(ctx, state)) {
        if (state_total(state) == 1) {
            for (std::size_t i = 0; i < state.size(); ++i) {
                if (state[i] != 1) continue;
                result.push_back(ctx.is_var[i] ? Term::var(ctx.var_index[i])
                                               : Term::app(ctx.symbols[i]));
                note_term(ctx);
            }
        } else {
            for (std::size_t i = 0; i < state.size(); ++i) {
                if (state[i] == 0 || ctx.symbols[i].arity < 1) continue;
                std::vector<std::size_t> rest = state;
                --rest[i];
                std::vector<std::vector<std::size_t>> parts(
                    static_cast<std::size_t>(ctx.symbols[i].arity),
                    std::vector<std::size_t>(state.size(), 0));
                split_children(ctx, ctx.symbols[i], rest, 0, parts, result);
                if (ctx.truncated) break;
            }
        }
    }
    return ctx.memo.emplace(state, std::move(result)).first->second;
}

}  // namespace

MultisetEnumeration bodies_from_multiset(const Signature& sig,
                                         const std::map<std::string, std::size_t>& symbol_counts,
                                         const std::vector<std::size_t>& var_counts,
                                         std::size_t term_cap) {
    for (const auto& [name, count] : symbol_counts)
        if (!sig.contains(name))
            throw std::invalid_argument("unknown symbol in multiset: " + name);

    MultisetContext ctx;
    ctx.term_cap = term_cap;
    std::vector<std::size_t> state;
    for (const Symbol& sym : sig.symbols()) {
        ctx.symbols.push_back(sym);
        ctx.is_var.push_back(false);
        ctx.var_index.push_back(0);
        auto it = symbol_counts.find(sym.name);
        state.push_back(it == symbol_counts.end() ? 0 : it->second);
    }
    for (std::size_t i = 0; i < var_counts.size(); ++i) {
        ctx.symbols.push_back(Symbol{"", 0});
        ctx.is_var.push_back(true);
        ctx.var_index.push_back(static_cast<int>(i) + 1);
        state.push_back(var_counts[i]);
    }

    MultisetEnumeration out;
    out.bodies = enumerate_state(ctx, state);
    out.complete = !ctx.truncated;
    sort_by_print(out.bodies, canonical_params(sig, static_cast<int>(var_counts.size())));
    return out;
}

}  // namespace sogu
