#include "sogu/equalizer.hpp"

#include <functional>
#include <optional>

namespace sogu {

namespace {

// The smallest k >= 0 with k * d = n, if any.
std::optional<BigInt> solve_count(const BigInt& d, const BigInt& n) {
    if (d == 0) {
        if (n == 0) return BigInt(0);
        return std::nullopt;
    }
    if (n % d != 0) return std::nullopt;
    BigInt k = n / d;
    if (k < 0) return std::nullopt;
    return k;
}

std::optional<EqualizerWitness> witness_at(const CountingProfile& prof,
                                           const std::vector<unsigned long long>& h) {
    std::vector<BigInt> point(h.begin(), h.end());
    BigInt d = prof.mul_l.eval(point) - prof.mul_r.eval(point);
    EqualizerWitness w;
    w.h = h;
    for (const auto& [name, cl] : prof.cnt_l) {
        BigInt n = prof.cnt_r.at(name).eval(point) - cl.eval(point);
        auto k = solve_count(d, n);
        if (!k) return std::nullopt;
        w.counts.emplace(name, *k);
    }
    return w;
}

}  // namespace

std::vector<EqualizerWitness> equalize(const Problem& p, unsigned long long bound) {
    CountingProfile prof = profile(p);
    int n = prof.nvars;
    std::vector<EqualizerWitness> out;

    std::vector<unsigned long long> h(static_cast<std::size_t>(n), 0);
    std::function<void(int, unsigned long long)> walk = [&](int idx,
                                                            unsigned long long remaining) {
        if (idx == n) {
            if (remaining == 0)
                if (auto w = witness_at(prof, h)) out.push_back(std::move(*w));
            return;
        }
        unsigned long long limit = std::min(bound, remaining);
        for (unsigned long long v = 0; v <= limit; ++v) {
            h[static_cast<std::size_t>(idx)] = v;
            walk(idx + 1, remaining - v);
        }
        h[static_cast<std::size_t>(idx)] = 0;
    };
    for (unsigned long long sum = 0; sum <= bound * static_cast<unsigned long long>(n); ++sum)
        walk(0, sum);
    return out;
}

bool is_witness(const Problem& p, const std::vector<unsigned long long>& h,
                const std::map<std::string, BigInt>& counts) {
    std::vector<BigInt> point(h.begin(), h.end());
    return condition_at(profile(p), point, counts);
}

}  // namespace sogu
