#pragma once

// The involution theta on banners (flag-statistic complement), marked
// sequences, two-fix-banners with the involution Phi behind the second
// symmetrical identity, and the positive-color cases of the banner
// decomposition Upsilon.

#include "eforge/banner.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace eforge {

// ---- theta -----------------------------------------------------------------

// bar/unbar every 0-colored letter except the last, send color m to l-m
// except the last letter whose color a becomes l-1-a, then reverse the role
// of the i-th smallest and i-th largest values
inline Banner theta_banner(const Banner& b, int l) {
    if (b.empty()) throw std::invalid_argument("theta: empty banner");
    Banner r = b;
    int n = static_cast<int>(r.size());
    for (int i = 0; i < n; ++i) {
        if (i + 1 == n) {
            r[i].color = l - 1 - r[i].color;
            if (r[i].color < 0 || r[i].bar) throw std::logic_error("theta: bad last letter");
        } else if (r[i].bar) {
            r[i].bar = false;
        } else if (r[i].color == 0) {
            r[i].bar = true;
        } else {
            r[i].color = l - r[i].color;
        }
    }
    std::vector<int> values;
    for (const auto& a : b) values.push_back(a.value);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (auto& a : r) {
        int idx = static_cast<int>(std::lower_bound(values.begin(), values.end(), a.value) -
                                   values.begin());
        a.value = values[values.size() - 1 - idx];
    }
    return r;
}

inline int banner_flag_stat(const Banner& b, int l) {
    int bars = 0, colors = 0;
    for (const auto& a : b) {
        if (a.bar) ++bars;
        colors += a.color;
    }
    return l * bars + colors;
}

// ---- marked sequences and two-fix-banners -----------------------------------

struct MarkedSeq {
    std::vector<int> w;  // weakly increasing positive integers
    int b = 0;           // mark
    int m = 0;           // color

    int len() const { return static_cast<int>(w.size()); }
    bool operator==(const MarkedSeq&) const = default;

    bool valid(int l) const {
        if (w.empty()) return false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) return false;
        for (int x : w)
            if (x < 1) return false;
        if (m < 0 || m >= l) return false;
        if (m == 0) return 1 <= b && b < len();
        return 0 <= b && b < len();
    }
};

struct TwoFixBanner {
    std::vector<int> w0;          // leading weakly increasing word
    std::vector<MarkedSeq> seqs;  // marked sequences
    std::vector<int> w0p;         // trailing weakly increasing word

    bool operator==(const TwoFixBanner&) const = default;

    int n() const {
        int total = static_cast<int>(w0.size() + w0p.size());
        for (const auto& s : seqs) total += s.len();
        return total;
    }
    int fexc(int l) const {
        int f = 0;
        for (const auto& s : seqs) f += l * s.b + s.m;
        return f;
    }
    bool valid(int l) const {
        auto weakly_increasing = [](const std::vector<int>& w) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) return false;
            for (int x : w)
                if (x < 1) return false;
            return true;
        };
        if (!weakly_increasing(w0) || !weakly_increasing(w0p)) return false;
        for (const auto& s : seqs)
            if (!s.valid(l)) return false;
        return true;
    }
    // single plain sequences are stored in w0; this is the compact-form
    // normalization the involution works with
    bool canonical() const { return !(seqs.empty() && w0.empty() && !w0p.empty()); }
};

namespace detail {

inline MarkedSeq d_map(const MarkedSeq& s, int l) {
    int k = s.len();
    if (s.m == 0) return MarkedSeq{s.w, k - s.b, 0};
    return MarkedSeq{s.w, k - 1 - s.b, l - s.m};
}

// d' sends a plain word to a marked sequence and back
struct EndSeq {
    std::vector<int> plain;            // used when marked is empty
    std::optional<MarkedSeq> marked;
};

inline EndSeq dprime_map(const EndSeq& e, int l) {
    if (!e.marked) {
        int k = static_cast<int>(e.plain.size());
        return EndSeq{{}, MarkedSeq{e.plain, k - 1, l - 1}};
    }
    const MarkedSeq& s = *e.marked;
    int k = s.len();
    if (s.b == k - 1 && s.m == l - 1) return EndSeq{s.w, std::nullopt};
    return EndSeq{{}, MarkedSeq{s.w, k - 1 - s.b, l - 1 - s.m}};
}

}  // namespace detail

// Phi: involution on two-fix-banners with fexc(v) + fexc(Phi v) = ln - 2.
// Defined on the compact form; rejects n <= 1 and the single marked sequence
// with (b, m) = (n-1, l-1), whose flag excedance ln-1 sits outside the
// complemented range.
inline TwoFixBanner phi_twofix(const TwoFixBanner& v, int l) {
    if (!v.valid(l)) throw std::invalid_argument("phi: invalid two-fix-banner");
    if (!v.canonical()) throw std::invalid_argument("phi: not in canonical compact form");
    int n = v.n();
    if (n <= 1) throw std::invalid_argument("phi: length must be at least 2");

    bool w0_nonempty = !v.w0.empty();
    bool w0p_nonempty = !v.w0p.empty();
    int pieces = static_cast<int>(v.seqs.size()) + (w0_nonempty ? 1 : 0) + (w0p_nonempty ? 1 : 0);
    if (pieces == 0) throw std::invalid_argument("phi: empty input");

    if (pieces == 1) {
        if (w0_nonempty) {
            // plain word -> single marked sequence
            return TwoFixBanner{{}, {MarkedSeq{v.w0, n - 1, l - 2}}, {}};
        }
        const MarkedSeq& s = v.seqs[0];
        if (s.b == n - 1 && s.m == l - 2) return TwoFixBanner{s.w, {}, {}};
        if (s.m == l - 1) {
            if (s.b == n - 1)
                throw std::invalid_argument("phi: single (n-1, l-1) marked sequence is outside the domain");
            return TwoFixBanner{{}, {MarkedSeq{s.w, n - 2 - s.b, l - 1}}, {}};
        }
        return TwoFixBanner{{}, {MarkedSeq{s.w, n - 1 - s.b, l - 2 - s.m}}, {}};
    }

    // at least two sequences: d' at both ends, d inside
    std::vector<detail::EndSeq> pieces_list;
    if (w0_nonempty) pieces_list.push_back(detail::EndSeq{v.w0, std::nullopt});
    for (const auto& s : v.seqs) pieces_list.push_back(detail::EndSeq{{}, s});
    if (w0p_nonempty) pieces_list.push_back(detail::EndSeq{v.w0p, std::nullopt});

    TwoFixBanner out;
    int last = static_cast<int>(pieces_list.size()) - 1;
    for (int i = 0; i <= last; ++i) {
        if (i == 0 || i == last) {
            detail::EndSeq img = detail::dprime_map(pieces_list[i], l);
            if (!img.marked) {
                if (i == 0)
                    out.w0 = img.plain;
                else
                    out.w0p = img.plain;
            } else {
                out.seqs.push_back(*img.marked);
            }
        } else {
            if (!pieces_list[i].marked) throw std::logic_error("phi: interior plain word");
            out.seqs.push_back(detail::d_map(*pieces_list[i].marked, l));
        }
    }
    if (!out.canonical()) {
        // a lone trailing plain word normalizes to the leading slot
        out.w0 = out.w0p;
        out.w0p.clear();
    }
    return out;
}

// ---- Upsilon (positive-color cases) -----------------------------------------

// Applies to banners whose increasing factorization has a positively colored
// final head; such banners consist entirely of positively colored letters.
// Returns (B', one-letter marked sequence).
inline std::pair<Banner, MarkedSeq> upsilon(const Banner& b, int l) {
    if (b.empty()) throw std::invalid_argument("upsilon: empty banner");
    auto factors = increasing_factorize(b, l);
    auto [fs, fe] = factors.back();
    const BLetter head = b[fs];
    if (head.color == 0)
        throw std::invalid_argument("upsilon: 0-colored final head is the delegated case");
    int p = fs;
    while (p < fe && b[p] == head) ++p;
    if (p == fe) {
        // Case 3: the final factor is the singleton head
        Banner rest(b.begin(), b.end() - 1);
        return {rest, MarkedSeq{{head.value}, 0, head.color}};
    }
    const BLetter first_tail = b[p];
    if (first_tail.color == 0) throw std::logic_error("upsilon: 0-colored letter under positive head");
    Banner rest = b;
    rest.erase(rest.begin() + p);  // cases 2.1 and 2.2 both drop the first tail letter
    return {rest, MarkedSeq{{first_tail.value}, 0, first_tail.color}};
}

inline Banner upsilon_inverse(const Banner& b, const MarkedSeq& ms, int l) {
    if (ms.len() != 1 || ms.m == 0 || ms.b != 0)
        throw std::invalid_argument("upsilon_inverse: expected a one-letter positive marked sequence");
    BLetter j0{ms.w[0], ms.m, false};
    if (b.empty()) return Banner{j0};
    auto factors = increasing_factorize(b, l);
    auto [fs, fe] = factors.back();
    const BLetter head = b[fs];
    if (head.color == 0)
        throw std::invalid_argument("upsilon_inverse: 0-colored final head is the delegated case");
    if (!hyatt_order_less(j0, head, l)) {
        // append as a new singleton factor
        Banner out = b;
        out.push_back(j0);
        return out;
    }
    if (fe - fs >= 2) {
        // nonempty tail: insert right after the head run (inverse of 2.1)
        int p = fs;
        while (p < fe && b[p] == head) ++p;
        Banner out = b;
        out.insert(out.begin() + p, j0);
        return out;
    }
    // final factor is a singleton run: merge the maximal run with j0 (inverse of 2.2)
    Banner out = b;
    out.push_back(j0);
    return out;
}

}  // namespace eforge
