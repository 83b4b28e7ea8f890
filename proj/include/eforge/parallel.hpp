#pragma once

// Enumeration-level parallelism: the colored permutation stream is
// partitioned by the first letter's value, each worker folds its slice
// into a private accumulator and the results are merged once.

#include "eforge/perm.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace eforge {

inline void enumerate_colored_with_first(int n, int l, int firstval,
                                         const std::function<void(const ColoredPermutation&)>& f) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (v != firstval) rest.push_back(v);
    ColoredPermutation p;
    p.l = l;
    p.w.resize(n);
    do {
        std::vector<int> colors(n, 0);
        bool more = true;
        while (more) {
            p.w[0] = ColoredLetter{firstval, colors[0]};
            for (int i = 1; i < n; ++i) p.w[i] = ColoredLetter{rest[i - 1], colors[i]};
            f(p);
            more = false;
            for (int i = n - 1; i >= 0; --i) {
                if (++colors[i] < l) { more = true; break; }
                colors[i] = 0;
            }
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
}

// fold `visit` over C_l wr S_n with `jobs` workers; `make` builds a private
// accumulator per worker and `merge` folds them left to right (determinism
// of the merged value is the accumulator's business; polynomial sums are
// order-independent)
template <class Acc>
Acc parallel_colored_fold(int n, int l, int jobs, const std::function<Acc()>& make,
                          const std::function<void(Acc&, const ColoredPermutation&)>& visit,
                          const std::function<void(Acc&, Acc&&)>& merge) {
    if (jobs <= 1 || n <= 1) {
        Acc acc = make();
        enumerate_colored(n, l, [&](const ColoredPermutation& p) { visit(acc, p); });
        return acc;
    }
    int workers = std::min(jobs, n);
    std::vector<Acc> accs;
    accs.reserve(workers);
    for (int t = 0; t < workers; ++t) accs.push_back(make());
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t)
        threads.emplace_back([&, t]() {
            for (int first = t + 1; first <= n; first += workers)
                enumerate_colored_with_first(n, l, first,
                                             [&](const ColoredPermutation& p) { visit(accs[t], p); });
        });
    for (auto& th : threads) th.join();
    Acc out = std::move(accs[0]);
    for (int t = 1; t < workers; ++t) merge(out, std::move(accs[t]));
    return out;
}

}  // namespace eforge
