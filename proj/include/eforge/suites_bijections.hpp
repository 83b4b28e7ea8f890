#pragma once

// Exhaustive property harnesses for the bijections: psi on necklaces and
// ornaments, theta on banners, Phi on two-fix-banners, the positive-color
// cases of Upsilon, and the word-to-banner map f.

#include "eforge/bijections.hpp"
#include "eforge/necklace.hpp"
#include "eforge/polynomial.hpp"
#include "eforge/report.hpp"

#include <functional>
#include <map>
#include <set>
#include <vector>

namespace eforge {

inline std::vector<Necklace> all_necklaces(int nmax, int vmax, int l) {
    std::vector<Necklace> out;
    std::vector<BLetter> alphabet;
    for (int v = 1; v <= vmax; ++v) {
        for (int c = 0; c < l; ++c) alphabet.push_back(BLetter{v, c, false});
        alphabet.push_back(BLetter{v, 0, true});
    }
    std::vector<BLetter> w;
    std::function<void()> rec = [&]() {
        if (!w.empty() && circular_conditions_hold(w, l) && is_primitive(w) &&
            w == canonical_rotation(w, l))
            out.push_back(Necklace{w});
        if (static_cast<int>(w.size()) == nmax) return;
        for (const auto& a : alphabet) {
            w.push_back(a);
            rec();
            w.pop_back();
        }
    };
    rec();
    return out;
}

struct NecklaceCensus {
    std::map<int, int> value_counts;
    int bars = 0;
    std::vector<int> colvec;
};

inline NecklaceCensus necklace_census(const Necklace& R, int l) {
    NecklaceCensus c;
    c.colvec.assign(l - 1, 0);
    for (const auto& a : R.w) {
        ++c.value_counts[a.value];
        if (a.bar) ++c.bars;
        if (a.color > 0) ++c.colvec[a.color - 1];
    }
    return c;
}

inline VerificationReport suite_psi(int nmax, int vmax, int l) {
    VerificationReport rep;
    rep.suite = "psi";
    rep.param("nmax", nmax);
    rep.param("vmax", vmax);
    rep.param("l", l);
    Stopwatch sw;
    std::vector<Necklace> necklaces = all_necklaces(nmax, vmax, l);
    rep.param("necklaces", static_cast<long long>(necklaces.size()));
    bool involution = true, exchange = true;
    std::string bad;
    for (const auto& R : necklaces)
        for (int k = 1; k < vmax; ++k) {
            Necklace image = psi_necklace(R, k, l);
            if (!(psi_necklace(image, k, l) == R)) {
                involution = false;
                bad = "k=" + std::to_string(k);
            }
            NecklaceCensus a = necklace_census(R, l), b = necklace_census(image, l);
            std::map<int, int> want = a.value_counts;
            int ck = want.count(k) ? want[k] : 0;
            int ck1 = want.count(k + 1) ? want[k + 1] : 0;
            want[k] = ck1;
            want[k + 1] = ck;
            if (want[k] == 0) want.erase(k);
            if (want[k + 1] == 0) want.erase(k + 1);
            if (b.value_counts != want || b.bars != a.bars || b.colvec != a.colvec)
                exchange = false;
        }
    rep.check("involution", involution, bad);
    rep.check("statistic_exchange", exchange);

    // ornament generating polynomial is invariant under swapping the
    // multiplicities of k and k+1
    std::vector<std::string> names{"b"};
    for (int m = 1; m < l; ++m) names.push_back("s" + std::to_string(m));
    for (int v = 1; v <= vmax; ++v) names.push_back("x" + std::to_string(v));
    VarTablePtr T = make_table(names);
    for (int n = 1; n <= nmax; ++n) {
        Polynomial gen(T);
        std::function<void(std::size_t, int, Monomial&)> build =
            [&](std::size_t from, int remaining, Monomial& mono) {
                if (remaining == 0) {
                    gen.add_term(mono, BigInt(1));
                    return;
                }
                for (std::size_t i = from; i < necklaces.size(); ++i) {
                    int sz = static_cast<int>(necklaces[i].w.size());
                    if (sz > remaining) continue;
                    Monomial next = mono;
                    for (const auto& a : necklaces[i].w) {
                        if (a.bar) ++next[0];
                        if (a.color > 0) ++next[a.color];
                        ++next[l + a.value - 1];
                    }
                    build(i, remaining - sz, next);
                }
            };
        Monomial mono(T->size(), 0);
        build(0, n, mono);
        bool invariant = true;
        for (int k = 1; k < vmax; ++k) {
            Polynomial xk = Polynomial::var(T, l + k - 1);
            Polynomial xk1 = Polynomial::var(T, l + k);
            std::map<int, Polynomial> subs{{l + k - 1, xk1}, {l + k, xk}};
            if (gen.substituted(T, subs) != gen) invariant = false;
        }
        rep.check("ornament_gen_invariance[n=" + std::to_string(n) + "]", invariant);
    }
    rep.wall_ms = sw.ms();
    return rep;
}

inline VerificationReport suite_theta(int nmax, int vmax, int l) {
    VerificationReport rep;
    rep.suite = "theta";
    rep.param("nmax", nmax);
    rep.param("vmax", vmax);
    rep.param("l", l);
    Stopwatch sw;
    bool involution = true, complement = true, valid = true, values_reversed = true;
    long long count = 0;
    for (int n = 1; n <= nmax; ++n)
        enumerate_banners(n, vmax, l, [&](const Banner& b) {
            ++count;
            Banner img = theta_banner(b, l);
            if (!banner_valid(img, l)) valid = false;
            if (!(theta_banner(img, l) == b)) involution = false;
            if (banner_flag_stat(b, l) + banner_flag_stat(img, l) != l * n - 1)
                complement = false;
            std::vector<int> vals, imgvals;
            for (const auto& a : b) vals.push_back(a.value);
            for (const auto& a : img) imgvals.push_back(a.value);
            std::vector<int> distinct = vals;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (std::size_t i = 0; i < vals.size(); ++i) {
                int idx = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(),
                                                            vals[i]) -
                                           distinct.begin());
                if (imgvals[i] != distinct[distinct.size() - 1 - idx]) values_reversed = false;
            }
        });
    rep.param("banners", count);
    rep.check("image_valid", valid);
    rep.check("involution", involution);
    rep.check("flag_complement", complement);
    rep.check("value_reversal", values_reversed);
    rep.wall_ms = sw.ms();
    return rep;
}

// all canonical two-fix-banners of length n over values <= V
inline std::vector<TwoFixBanner> all_two_fix_banners(int n, int V, int l) {
    std::vector<std::vector<std::vector<int>>> words(n + 1);  // by length
    for (int len = 0; len <= n; ++len) {
        std::vector<int> w(len, 1);
        std::function<void(int, int)> gen = [&](int pos, int lo) {
            if (pos == len) {
                words[len].push_back(w);
                return;
            }
            for (int v = lo; v <= V; ++v) {
                w[pos] = v;
                gen(pos + 1, v);
            }
        };
        gen(0, 1);
    }
    std::vector<TwoFixBanner> out;
    std::function<void(TwoFixBanner&, int)> extend = [&](TwoFixBanner& v, int rem) {
        // close with w0p taking the whole remainder
        for (const auto& w : words[rem]) {
            TwoFixBanner done = v;
            done.w0p = w;
            if (done.canonical() && done.valid(l)) out.push_back(done);
        }
        for (int len = 1; len <= rem; ++len)
            for (const auto& w : words[len])
                for (int m = 0; m < l; ++m) {
                    int blo = m == 0 ? 1 : 0;
                    for (int b = blo; b <= len - 1; ++b) {
                        v.seqs.push_back(MarkedSeq{w, b, m});
                        extend(v, rem - len);
                        v.seqs.pop_back();
                    }
                }
    };
    for (int a = 0; a <= n; ++a)
        for (const auto& w : words[a]) {
            TwoFixBanner v;
            v.w0 = w;
            extend(v, n - a);
        }
    return out;
}

inline std::multiset<int> twofix_letters(const TwoFixBanner& v) {
    std::multiset<int> m(v.w0.begin(), v.w0.end());
    m.insert(v.w0p.begin(), v.w0p.end());
    for (const auto& s : v.seqs) m.insert(s.w.begin(), s.w.end());
    return m;
}

inline VerificationReport suite_phi(int nmax, int vmax, int lmax) {
    VerificationReport rep;
    rep.suite = "phi";
    rep.param("nmax", nmax);
    rep.param("vmax", vmax);
    rep.param("lmax", lmax);
    Stopwatch sw;
    for (int l = 2; l <= lmax; ++l) {
        bool involution = true, complement = true, weight = true, domain_ok = true;
        long long count = 0;
        for (int n = 2; n <= nmax; ++n) {
            auto all = all_two_fix_banners(n, vmax, l);
            for (const auto& v : all) {
                bool excluded = v.seqs.size() == 1 && v.w0.empty() && v.w0p.empty() &&
                                v.seqs[0].b == n - 1 && v.seqs[0].m == l - 1;
                if (excluded) {
                    // the fexc = ln-1 stratum has no complement partner
                    if (v.fexc(l) != l * n - 1) domain_ok = false;
                    bool threw = false;
                    try {
                        phi_twofix(v, l);
                    } catch (const std::invalid_argument&) {
                        threw = true;
                    }
                    if (!threw) domain_ok = false;
                    continue;
                }
                ++count;
                TwoFixBanner img = phi_twofix(v, l);
                if (!img.valid(l)) involution = false;
                if (!(phi_twofix(img, l) == v)) involution = false;
                if (v.fexc(l) + img.fexc(l) != l * n - 2) complement = false;
                if (twofix_letters(v) != twofix_letters(img)) weight = false;
            }
        }
        std::string tag = "l=" + std::to_string(l);
        rep.param("count_" + tag, count);
        rep.check("involution[" + tag + "]", involution);
        rep.check("fexc_complement[" + tag + "]", complement);
        rep.check("weight_preserved[" + tag + "]", weight);
        rep.check("excluded_stratum[" + tag + "]", domain_ok);
    }
    rep.wall_ms = sw.ms();
    return rep;
}

// words over positively colored letters are exactly the banners Upsilon acts on
inline void enumerate_positive_banners(int n, int vmax, int l,
                                       const std::function<void(const Banner&)>& visit) {
    Banner b(n);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            visit(b);
            return;
        }
        for (int v = 1; v <= vmax; ++v)
            for (int c = 1; c < l; ++c) {
                b[pos] = BLetter{v, c, false};
                rec(pos + 1);
            }
    };
    rec(0);
}

inline VerificationReport suite_upsilon(int nmax, int vmax, int lmax) {
    VerificationReport rep;
    rep.suite = "upsilon";
    rep.param("nmax", nmax);
    rep.param("vmax", vmax);
    rep.param("lmax", lmax);
    Stopwatch sw;
    for (int l = 2; l <= lmax; ++l) {
        bool roundtrip = true, weight = true, colors = true, back = true, rejects = true;
        for (int n = 1; n <= nmax; ++n) {
            enumerate_positive_banners(n, vmax, l, [&](const Banner& b) {
                auto [rest, ms] = upsilon(b, l);
                if (!(upsilon_inverse(rest, ms, l) == b)) roundtrip = false;
                std::multiset<std::pair<int, int>> lhs, rhs;
                for (const auto& a : b) lhs.insert({a.value, a.color});
                for (const auto& a : rest) rhs.insert({a.value, a.color});
                rhs.insert({ms.w[0], ms.m});
                if (lhs != rhs) { weight = false; colors = false; }
            });
            // the other direction: every (banner, one-letter marked sequence) pair
            enumerate_positive_banners(n, vmax, l, [&](const Banner& rest) {
                for (int v = 1; v <= vmax; ++v)
                    for (int m = 1; m < l; ++m) {
                        MarkedSeq ms{{v}, 0, m};
                        Banner full = upsilon_inverse(rest, ms, l);
                        auto [rest2, ms2] = upsilon(full, l);
                        if (!(rest2 == rest) || !(ms2 == ms)) back = false;
                    }
            });
        }
        // a 0-colored final head is delegated, not silently mishandled
        Banner zero_head{BLetter{1, 0, false}};
        try {
            upsilon(zero_head, l);
            rejects = false;
        } catch (const std::invalid_argument&) {
        }
        std::string tag = "l=" + std::to_string(l);
        rep.check("roundtrip[" + tag + "]", roundtrip);
        rep.check("inverse_roundtrip[" + tag + "]", back);
        rep.check("weight_bookkeeping[" + tag + "]", weight && colors);
        rep.check("rejects_delegated_case[" + tag + "]", rejects);
    }
    rep.wall_ms = sw.ms();
    return rep;
}

inline VerificationReport suite_f_map(int Lmax, int lmax) {
    VerificationReport rep;
    rep.suite = "word_to_banner_f";
    rep.param("Lmax", Lmax);
    rep.param("lmax", lmax);
    Stopwatch sw;
    for (int l = 1; l <= lmax; ++l) {
        bool valid = true, inverse = true, lyndon = true, transport = true, onto = true;
        std::function<void(std::vector<int>&)> visit = [&](std::vector<int>& w) {
            Banner b = word_to_banner_f(w, l);
            if (!banner_valid(b, l)) valid = false;
            if (banner_to_word(b, l) != w) inverse = false;
            auto wf = lyndon_factorize(w, [](int x, int y) { return x < y; });
            auto bf = lyndon_factorize(b, [&](const BLetter& x, const BLetter& y) {
                return original_order_less(x, y, l);
            });
            if (wf != bf) lyndon = false;
            int bars = 0, dec0 = 0;
            std::vector<bool> dec = word_decrease_positions(w);
            for (std::size_t i = 0; i < w.size(); ++i)
                if (dec[i] && w[i] % l == 0) ++dec0;
            std::vector<int> colw(l - 1, 0), colb(l - 1, 0);
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i] % l) ++colw[w[i] % l - 1];
            for (const auto& a : b) {
                if (a.bar) ++bars;
                if (a.color > 0) ++colb[a.color - 1];
            }
            if (bars != dec0 || colw != colb) transport = false;
        };
        std::vector<int> w;
        std::function<void()> rec = [&]() {
            if (!w.empty()) visit(w);
            if (static_cast<int>(w.size()) == Lmax) return;
            for (int v = 0; v <= 2 * l; ++v) {
                w.push_back(v);
                rec();
                w.pop_back();
            }
        };
        rec();
        // banners with small values round-trip through the word side
        for (int n = 1; n <= std::min(Lmax, 4); ++n)
            enumerate_banners(n, 2, l, [&](const Banner& b) {
                if (!(word_to_banner_f(banner_to_word(b, l), l) == b)) onto = false;
            });
        std::string tag = "l=" + std::to_string(l);
        rep.check("image_is_banner[" + tag + "]", valid);
        rep.check("letterwise_inverse[" + tag + "]", inverse);
        rep.check("lyndon_type_preserved[" + tag + "]", lyndon);
        rep.check("statistic_transport[" + tag + "]", transport);
        rep.check("onto_bounded_banners[" + tag + "]", onto);
    }
    rep.wall_ms = sw.ms();
    return rep;
}

inline VerificationReport suite_bijections_all(int budget_n = 4) {
    VerificationReport rep;
    rep.suite = "bijections";
    Stopwatch sw;
    std::vector<VerificationReport> parts;
    parts.push_back(suite_psi(budget_n, 3, 2));
    parts.push_back(suite_theta(budget_n, 3, 2));
    parts.push_back(suite_phi(budget_n, 2, 3));
    parts.push_back(suite_upsilon(budget_n, 3, 3));
    parts.push_back(suite_f_map(5, 3));
    for (const auto& p : parts)
        for (const auto& c : p.checks) rep.check(p.suite + "." + c.name, c.pass, c.detail);
    rep.wall_ms = sw.ms();
    return rep;
}

}  // namespace eforge
