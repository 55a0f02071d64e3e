#pragma once

#include "sogu/counting.hpp"
#include "sogu/term.hpp"

#include <map>
#include <string>
#include <vector>

// Bounded search for argument multiplicities satisfying the necessary
// unification condition: h with, for every base symbol c, some k_c >= 0
// solving k_c * (mul_l(h) - mul_r(h)) = cnt_r(c,h) - cnt_l(c,h). The
// unbounded problem is undecidable, so the search is bounded and an empty
// result only ever means the bounded search was exhausted.

namespace sogu {

struct EqualizerWitness {
    std::vector<unsigned long long> h;
    std::map<std::string, BigInt> counts;  // one valid k_c per base symbol
};

// All witnesses with every component of h at most `bound`, ascending by
// component sum and lexicographically within a sum. The reported counts are
// the smallest valid ones (k_c is unique when the multiplier difference is
// nonzero, and 0 is reported when both sides vanish).
std::vector<EqualizerWitness> equalize(const Problem& p, unsigned long long bound);

bool is_witness(const Problem& p, const std::vector<unsigned long long>& h,
                const std::map<std::string, BigInt>& counts);

}  // namespace sogu
