#pragma once

// Colored banners: words over the barred/colored alphabet subject to the
// three banner conditions. Provides the two alphabet orders in play, Lyndon
// factorization (max-rotation convention, factors weakly increasing),
// the increasing factorization refining it, and the map f from plain words
// over N to banners.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace eforge {

struct BLetter {
    int value = 1;      // absolute value, >= 1
    int color = 0;      // 0..l-1; barred implies color 0
    bool bar = false;

    bool operator==(const BLetter&) const = default;
};

using Banner = std::vector<BLetter>;

// order of the banner alphabet: u^0 < u^1 < ... < u^{l-1} < barred u^0 < (u+1)^0 < ...
inline bool original_order_less(const BLetter& a, const BLetter& b, int l) {
    auto rank = [l](const BLetter& x) { return x.bar ? l : x.color; };
    if (a.value != b.value) return a.value < b.value;
    return rank(a) < rank(b);
}

// Hyatt's order <_B: positively colored letters (by value, then color) below
// all 0-colored ones (by value, then bar)
inline bool hyatt_order_less(const BLetter& a, const BLetter& b, int /*l*/) {
    bool pa = a.color > 0, pb = b.color > 0;
    if (pa != pb) return pa;
    if (pa) {
        if (a.value != b.value) return a.value < b.value;
        return a.color < b.color;
    }
    if (a.value != b.value) return a.value < b.value;
    return !a.bar && b.bar;
}

inline bool banner_valid(const Banner& b, int l) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        const BLetter& x = b[i];
        if (x.value < 1 || x.color < 0 || x.color >= l || (x.bar && x.color != 0)) return false;
        if (x.bar && i + 1 < b.size() && b[i].value < b[i + 1].value) return false;
        if (!x.bar && x.color == 0 && i + 1 < b.size() && b[i].value > b[i + 1].value)
            return false;
    }
    if (!b.empty() && b.back().bar) return false;
    return true;
}

// ---- Lyndon factorization ---------------------------------------------------

// Duval's algorithm for the standard (min-rotation) convention; callers pass
// a comparator and we flip it to get max-rotation factors whose
// sequence is weakly increasing.
template <class T, class Less>
std::vector<std::pair<int, int>> duval_factorize(const std::vector<T>& w, Less less) {
    std::vector<std::pair<int, int>> factors;  // [from, to)
    int n = static_cast<int>(w.size());
    int k = 0;
    while (k < n) {
        int i = k, j = k + 1;
        while (j < n && !less(w[j], w[i])) {
            if (less(w[i], w[j]))
                i = k;
            else
                ++i;
            ++j;
        }
        int len = j - i;
        while (k <= i) {
            factors.emplace_back(k, k + len);
            k += len;
        }
    }
    return factors;
}

// factors are Lyndon in the "strictly larger than its rotations" sense and
// weakly increase left to right
template <class T, class Less>
std::vector<std::pair<int, int>> lyndon_factorize(const std::vector<T>& w, Less less) {
    return duval_factorize(w, [&](const T& a, const T& b) { return less(b, a); });
}

// a word strictly larger than all of its nontrivial rotations
template <class T, class Less>
bool is_lyndon_max(const std::vector<T>& w, Less less) {
    int n = static_cast<int>(w.size());
    for (int r = 1; r < n; ++r) {
        // compare rotation starting at r with w
        for (int i = 0; i < n; ++i) {
            const T& a = w[(r + i) % n];
            const T& b = w[i];
            if (less(a, b)) break;
            if (less(b, a)) return false;
            if (i == n - 1) return false;  // equal rotation: not primitive
        }
    }
    return true;
}

// ---- increasing factorization (with respect to <_B) ------------------------

// factors a^p u with all letters of u strictly below a, heads weakly
// increasing; a factor with empty u is a single letter, and once a head
// value repeats as a singleton every later equal head stays a singleton
inline std::vector<std::pair<int, int>> increasing_factorize(const Banner& b, int l) {
    std::vector<std::pair<int, int>> factors;
    int n = static_cast<int>(b.size());
    int s = 0;
    while (s < n) {
        const BLetter a = b[s];
        int p = s;
        while (p < n && b[p] == a) ++p;
        int e = p;
        while (e < n && hyatt_order_less(b[e], a, l)) ++e;
        if (e == p) {
            for (int i = s; i < p; ++i) factors.emplace_back(i, i + 1);
        } else {
            factors.emplace_back(s, e);
        }
        s = std::max(p, e);
    }
    return factors;
}

// ---- the map f from words over N to banners --------------------------------

// position classes of a word over N (convention w_{n+1} = infinity)
inline std::vector<bool> word_decrease_positions(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    std::vector<bool> dec(n, false);
    // scan right to left: i is a decrease if w_i = ... = w_j > w_{j+1}
    for (int i = n - 2; i >= 0; --i) {
        if (w[i] > w[i + 1])
            dec[i] = true;
        else if (w[i] == w[i + 1] && dec[i + 1])
            dec[i] = true;
    }
    return dec;
}

inline Banner word_to_banner_f(const std::vector<int>& w, int l) {
    std::vector<bool> dec = word_decrease_positions(w);
    Banner b;
    b.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        int u = w[i] / l, m = w[i] % l;
        if (dec[i] && m == 0) {
            if (u == 0) throw std::logic_error("word_to_banner_f: decrease value 0");
            b.push_back(BLetter{u, 0, true});
        } else {
            b.push_back(BLetter{u + 1, m, false});
        }
    }
    return b;
}

// letterwise inverse of f: barred u -> ul, unbarred v^m -> (v-1)l + m
inline std::vector<int> banner_to_word(const Banner& b, int l) {
    std::vector<int> w;
    w.reserve(b.size());
    for (const auto& a : b) w.push_back(a.bar ? a.value * l : (a.value - 1) * l + a.color);
    return w;
}

// ---- enumeration ------------------------------------------------------------

// all banners of length n with values <= maxval and colors < l
inline void enumerate_banners(int n, int maxval, int l,
                              const std::function<void(const Banner&)>& visit) {
    std::vector<BLetter> alphabet;
    for (int v = 1; v <= maxval; ++v) {
        for (int c = 0; c < l; ++c) alphabet.push_back(BLetter{v, c, false});
        alphabet.push_back(BLetter{v, 0, true});
    }
    Banner b(n);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            if (banner_valid(b, l)) visit(b);
            return;
        }
        for (const auto& a : alphabet) {
            // prune on the local banner conditions
            if (pos > 0) {
                const BLetter& prev = b[pos - 1];
                if (prev.bar && prev.value < a.value) continue;
                if (!prev.bar && prev.color == 0 && prev.value > a.value) continue;
            }
            b[pos] = a;
            rec(pos + 1);
        }
    };
    rec(0);
}

}  // namespace eforge
