#pragma once

// Colored necklaces (primitive circular words over the banner alphabet,
// subject to the circular versions of the banner conditions), ornaments,
// and the value-swap involution psi exchanging occurrences of k and k+1.

#include "eforge/banner.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace eforge {

inline bool circular_conditions_hold(const std::vector<BLetter>& w, int l) {
    int n = static_cast<int>(w.size());
    if (n == 0) return false;
    if (n == 1 && w[0].bar) return false;
    for (int i = 0; i < n; ++i) {
        const BLetter& a = w[i];
        const BLetter& b = w[(i + 1) % n];
        if (a.value < 1 || a.color < 0 || a.color >= l || (a.bar && a.color != 0)) return false;
        if (a.bar && a.value < b.value) return false;
        if (!a.bar && a.color == 0 && a.value > b.value) return false;
    }
    return true;
}

inline bool is_primitive(const std::vector<BLetter>& w) {
    int n = static_cast<int>(w.size());
    for (int p = 1; p < n; ++p) {
        if (n % p) continue;
        bool periodic = true;
        for (int i = 0; i < n && periodic; ++i)
            if (!(w[i] == w[(i + p) % n])) periodic = false;
        if (periodic) return false;
    }
    return true;
}

// canonical representative: the lexicographically largest rotation under the
// original alphabet order (unique for primitive words)
inline std::vector<BLetter> canonical_rotation(const std::vector<BLetter>& w, int l) {
    int n = static_cast<int>(w.size());
    auto less_rot = [&](int r1, int r2) {
        for (int i = 0; i < n; ++i) {
            const BLetter& a = w[(r1 + i) % n];
            const BLetter& b = w[(r2 + i) % n];
            if (original_order_less(a, b, l)) return true;
            if (original_order_less(b, a, l)) return false;
        }
        return false;
    };
    int best = 0;
    for (int r = 1; r < n; ++r)
        if (less_rot(best, r)) best = r;
    std::vector<BLetter> out(n);
    for (int i = 0; i < n; ++i) out[i] = w[(best + i) % n];
    return out;
}

struct Necklace {
    std::vector<BLetter> w;  // canonical rotation
    bool operator==(const Necklace&) const = default;
    bool operator<(const Necklace& o) const {
        auto key = [](const BLetter& a) { return std::tuple(a.value, a.color, a.bar); };
        return std::lexicographical_compare(
            w.begin(), w.end(), o.w.begin(), o.w.end(),
            [&](const BLetter& a, const BLetter& b) { return key(a) < key(b); });
    }
};

inline Necklace make_necklace(const std::vector<BLetter>& w, int l) {
    if (!circular_conditions_hold(w, l)) throw std::invalid_argument("not a colored necklace");
    if (!is_primitive(w)) throw std::invalid_argument("necklace word is not primitive");
    return Necklace{canonical_rotation(w, l)};
}

// ---- psi: exchange the number of occurrences of values k and k+1 ----------

namespace detail {

// exchange full decorations (bar and color) between positions p and q
inline void swap_decorations(std::vector<BLetter>& w, int p, int q) {
    if (p == q) return;
    std::swap(w[p].color, w[q].color);
    std::swap(w[p].bar, w[q].bar);
}

// segment handed in as indices into the circle, in clockwise order
inline void psi_fix_segment(std::vector<BLetter>& circle, const std::vector<int>& seg, int k) {
    int m = static_cast<int>(seg.size());
    auto val = [&](int i) { return circle[seg[i]].value; };
    int switches = 0;
    for (int i = 0; i + 1 < m; ++i)
        if (val(i) != val(i + 1)) ++switches;

    if (switches % 2 == 0) {
        // swap values, then pair i-th rising k with i-th falling k+1
        for (int i = 0; i < m; ++i) circle[seg[i]].value = val(i) == k ? k + 1 : k;
        std::vector<int> rising, falling;
        for (int i = 0; i + 1 < m; ++i) {
            if (val(i) == k && val(i + 1) == k + 1) rising.push_back(i);
            if (val(i) == k + 1 && val(i + 1) == k) falling.push_back(i);
        }
        if (rising.size() != falling.size())
            throw std::logic_error("psi: unbalanced even segment");
        for (std::size_t i = 0; i < rising.size(); ++i)
            swap_decorations(circle, seg[rising[i]], seg[falling[i]]);
        return;
    }

    // odd segment: block lengths alternate; swap lengths pairwise and fix
    // the designated position pair in each block pair
    std::vector<int> blocks;   // run lengths
    std::vector<int> blockval; // value of each run
    for (int i = 0; i < m;) {
        int j = i;
        while (j < m && val(j) == val(i)) ++j;
        blocks.push_back(j - i);
        blockval.push_back(val(i));
        i = j;
    }
    if (blocks.size() % 2 != 0) throw std::logic_error("psi: odd segment has odd block count");
    int r = static_cast<int>(blocks.size()) / 2;
    // new values: each (first, second) block pair has its lengths exchanged
    int pos = 0;
    std::vector<int> newval(m);
    for (int i = 0; i < r; ++i) {
        int first = blocks[2 * i], second = blocks[2 * i + 1];
        int v1 = blockval[2 * i], v2 = blockval[2 * i + 1];
        for (int t = 0; t < second; ++t) newval[pos + t] = v1;
        for (int t = 0; t < first; ++t) newval[pos + second + t] = v2;
        pos += first + second;
    }
    for (int i = 0; i < m; ++i) circle[seg[i]].value = newval[i];
    // in each pair, exchange decorations at offsets second-1 and first-1
    pos = 0;
    for (int i = 0; i < r; ++i) {
        int first = blocks[2 * i], second = blocks[2 * i + 1];
        swap_decorations(circle, seg[pos + second - 1], seg[pos + first - 1]);
        pos += first + second;
    }
}

}  // namespace detail

inline Necklace psi_necklace(const Necklace& R, int k, int l) {
    std::vector<BLetter> w = R.w;
    int n = static_cast<int>(w.size());
    std::vector<int> hits;  // positions with value k or k+1
    for (int i = 0; i < n; ++i)
        if (w[i].value == k || w[i].value == k + 1) hits.push_back(i);
    if (hits.empty()) return R;

    if (static_cast<int>(hits.size()) == n) {
        // Case 1: only values k and k+1. Swap values, then pair each rising k
        // with an adjacent falling k+1: the one after it when k was the
        // majority value, the one before it otherwise. The direction flip is
        // what makes the map self-inverse across the count exchange.
        int count_k = 0, count_k1 = 0;
        for (const auto& a : w) (a.value == k ? count_k : count_k1) += 1;
        bool forward = count_k >= count_k1;
        for (auto& a : w) a.value = a.value == k ? k + 1 : k;
        if (n == 1) return make_necklace(w, l);
        std::vector<int> rising, falling;
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            if (w[i].value == k && w[j].value == k + 1) rising.push_back(i);
            if (w[i].value == k + 1 && w[j].value == k) falling.push_back(i);
        }
        for (int rpos : rising) {
            int best = -1, bestd = n + 1;
            for (int fpos : falling) {
                int d = forward ? (fpos - rpos + n) % n : (rpos - fpos + n) % n;
                if (d > 0 && d < bestd) { bestd = d; best = fpos; }
            }
            if (best < 0) throw std::logic_error("psi: rising letter without falling partner");
            detail::swap_decorations(w, rpos, best);
        }
        return make_necklace(w, l);
    }

    // Case 2: intruders present; process each maximal segment of k/(k+1)
    std::vector<bool> is_hit(n, false);
    for (int i : hits) is_hit[i] = true;
    std::vector<std::vector<int>> segments;
    for (int start = 0; start < n; ++start) {
        if (!is_hit[start] || is_hit[(start + n - 1) % n]) continue;
        std::vector<int> seg;
        for (int i = start; is_hit[i % n]; ++i) seg.push_back(i % n);
        segments.push_back(std::move(seg));
    }
    for (const auto& seg : segments) detail::psi_fix_segment(w, seg, k);
    return make_necklace(w, l);
}

}  // namespace eforge
