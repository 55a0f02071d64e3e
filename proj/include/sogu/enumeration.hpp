#pragma once

#include "sogu/term.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

// Deterministic exhaustive term enumeration. Two flavors: graded pools of
// all first-order bodies over a signature plus bound variables, and the set
// of bodies realizing an exact symbol multiset. Both sort each batch by
// canonical print form, so enumeration order is reproducible.

namespace sogu {

class BodyPool {
public:
    static constexpr std::size_t kDefaultTermCap = 2'000'000;

    BodyPool(Signature sig, int nvars, std::size_t term_cap = kDefaultTermCap);

    // All bodies with exactly `size` nodes, sorted by canonical print form.
    // Returns nullptr once materializing pools would exceed the term cap;
    // overflow is sticky.
    const std::vector<Term>* of_size(std::size_t size);

private:
    Signature sig_;
    int nvars_;
    std::size_t term_cap_;
    std::size_t terms_built_ = 0;
    bool overflowed_ = false;
    std::vector<std::string> params_;
    std::vector<std::vector<Term>> pools_;  // pools_[size], index 0 unused
};

struct MultisetEnumeration {
    std::vector<Term> bodies;  // sorted by canonical print form
    bool complete = true;      // false iff the cap interrupted generation
};

// All bodies whose symbol occurrence counts equal symbol_counts exactly and
// whose bound-variable occurrence counts equal var_counts (index i for
// variable i+1). Symbols absent from the map have count 0.
MultisetEnumeration bodies_from_multiset(const Signature& sig,
                                         const std::map<std::string, std::size_t>& symbol_counts,
                                         const std::vector<std::size_t>& var_counts,
                                         std::size_t term_cap = BodyPool::kDefaultTermCap);

// All k-tuples of positive integers summing to total, lexicographically.
std::vector<std::vector<std::size_t>> positive_compositions(std::size_t total, std::size_t k);

}  // namespace sogu
