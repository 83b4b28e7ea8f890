#pragma once

// Colored permutations (wreath product C_l wr S_n) in one-line notation:
// a word of (value, color) letters whose values form a permutation of [n].

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eforge {

struct ColoredLetter {
    int value = 0;
    int color = 0;
    bool operator==(const ColoredLetter&) const = default;
};

// color order: higher colors come first, values ascend within a color class
inline bool color_order_less(const ColoredLetter& a, const ColoredLetter& b) {
    if (a.color != b.color) return a.color > b.color;
    return a.value < b.value;
}

struct ColoredPermutation {
    int l = 1;
    std::vector<ColoredLetter> w;

    int n() const { return static_cast<int>(w.size()); }

    void validate() const {
        if (l < 1) throw std::invalid_argument("colored permutation: l < 1");
        std::vector<bool> seen(w.size() + 1, false);
        for (const auto& a : w) {
            if (a.value < 1 || a.value > n() || seen[a.value])
                throw std::invalid_argument("colored permutation: values are not a permutation");
            if (a.color < 0 || a.color >= l)
                throw std::invalid_argument("colored permutation: color out of range");
            seen[a.value] = true;
        }
    }

    bool operator==(const ColoredPermutation&) const = default;

    // standard wreath-product inverse: the letter at position |pi_i| is i^((l - eps_i) mod l)
    ColoredPermutation inverse() const {
        ColoredPermutation r;
        r.l = l;
        r.w.resize(w.size());
        for (int i = 0; i < n(); ++i)
            r.w[w[i].value - 1] = ColoredLetter{i + 1, (l - w[i].color) % l};
        return r;
    }

    std::string to_string() const {
        std::ostringstream out;
        for (int i = 0; i < n(); ++i) {
            if (i) out << " ";
            out << w[i].value << "^" << w[i].color;
        }
        return out.str();
    }

    static ColoredPermutation parse(const std::string& text, int l) {
        ColoredPermutation p;
        p.l = l;
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            auto caret = tok.find('^');
            int value, color = 0;
            if (caret == std::string::npos) {
                value = std::stoi(tok);
            } else {
                value = std::stoi(tok.substr(0, caret));
                color = std::stoi(tok.substr(caret + 1));
            }
            p.w.push_back(ColoredLetter{value, color});
        }
        p.validate();
        return p;
    }
};

// visit all l^n * n! elements, lexicographic on (values, colors)
inline void enumerate_colored(int n, int l,
                              const std::function<void(const ColoredPermutation&)>& visit) {
    if (n < 0 || l < 1) throw std::invalid_argument("enumerate_colored: bad parameters");
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    ColoredPermutation p;
    p.l = l;
    p.w.resize(n);
    do {
        std::vector<int> colors(n, 0);
        bool more = true;
        while (more) {
            for (int i = 0; i < n; ++i) p.w[i] = ColoredLetter{values[i], colors[i]};
            visit(p);
            more = false;
            for (int i = n - 1; i >= 0; --i) {
                if (++colors[i] < l) { more = true; break; }
                colors[i] = 0;
            }
        }
    } while (std::next_permutation(values.begin(), values.end()));
}

inline std::vector<ColoredPermutation> all_colored(int n, int l) {
    std::vector<ColoredPermutation> out;
    enumerate_colored(n, l, [&](const ColoredPermutation& p) { out.push_back(p); });
    return out;
}

// Cycle form with the image's color attached to each value: value j carries
// the color of the letter whose absolute value is j. Cycles are rotated to
// start at their minimum value and sorted by that minimum.
inline std::vector<std::vector<ColoredLetter>> cycle_decomposition(const ColoredPermutation& p) {
    int n = p.n();
    std::vector<int> image(n + 1), color_of(n + 1);
    for (int i = 0; i < n; ++i) {
        image[i + 1] = p.w[i].value;
        color_of[p.w[i].value] = p.w[i].color;
    }
    std::vector<bool> used(n + 1, false);
    std::vector<std::vector<ColoredLetter>> cycles;
    for (int s = 1; s <= n; ++s) {
        if (used[s]) continue;
        std::vector<ColoredLetter> cyc;
        int v = s;
        do {
            used[v] = true;
            cyc.push_back(ColoredLetter{v, color_of[v]});
            v = image[v];
        } while (v != s);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

// cv-cycle type: multiset of (length, color vector in N^{l-1}) pairs,
// ordered by length descending then color vector lexicographic
using CvCycleType = std::vector<std::pair<int, std::vector<int>>>;

inline CvCycleType cv_type_from_cycles(const std::vector<std::vector<ColoredLetter>>& cycles,
                                       int l) {
    CvCycleType t;
    for (const auto& cyc : cycles) {
        std::vector<int> cv(l - 1, 0);
        for (const auto& a : cyc)
            if (a.color > 0) ++cv[a.color - 1];
        t.emplace_back(static_cast<int>(cyc.size()), std::move(cv));
    }
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    return t;
}

inline CvCycleType cv_cycle_type(const ColoredPermutation& p) {
    return cv_type_from_cycles(cycle_decomposition(p), p.l);
}

}  // namespace eforge
