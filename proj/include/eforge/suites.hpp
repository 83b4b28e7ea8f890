#pragma once

// Verification suites shared by the CLI `verify` subcommand and the
// acceptance runner. Each suite returns a VerificationReport with one entry
// per identity checked; counterexamples carry the minimal offending object.

#include "eforge/bijections.hpp"
#include "eforge/chromatic.hpp"
#include "eforge/decval.hpp"
#include "eforge/eulerqsym.hpp"
#include "eforge/necklace.hpp"
#include "eforge/parallel.hpp"
#include "eforge/qeuler.hpp"
#include "eforge/report.hpp"
#include "eforge/stats.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace eforge {

// ---- worked examples (acceptance criterion 1) ---------------------------------

inline VerificationReport suite_worked_examples() {
    VerificationReport rep;
    rep.suite = "worked_examples";
    Stopwatch sw;

    {
        ColoredPermutation p = ColoredPermutation::parse("5^2 2^1 4^0 3^2 1^2 6^0", 3);
        StatRecord s = colored_stats(p);
        rep.check("stats.des_maj", s.DES == std::set<int>{3, 4} && s.des == 2 && s.maj == 7,
                  p.to_string());
        rep.check("stats.exc", s.exc == 1, p.to_string());
        rep.check("stats.fixvec", s.fixvec == std::vector<int>{1, 1, 0}, p.to_string());
        rep.check("stats.colvec", s.colvec == std::vector<int>{1, 3}, p.to_string());
        auto cycles = cycle_decomposition(p);
        CvCycleType t = cv_cycle_type(p);
        CvCycleType want{{2, {0, 2}}, {2, {0, 1}}, {1, {1, 0}}, {1, {0, 0}}};
        std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        rep.check("stats.cv_cycle_type", t == want, p.to_string());
    }
    {
        ColoredPermutation p =
            ColoredPermutation::parse("2^0 4^0 5^1 8^0 3^0 7^0 10^1 1^0 9^0 6^1", 2);
        HookStats h = hook_stats(p);
        rep.check("hook.inv", h.inv == 16, p.to_string());
        rep.check("hook.lec", h.lec == 4, p.to_string());
        rep.check("hook.flec", h.flec == 11, p.to_string());
        rep.check("hook.pix", h.pix == 2, p.to_string());
        HookFactorization f = hook_factorize(p);
        rep.check("hook.shape", f.prefix.size() == 2 && f.hooks.size() == 4 &&
                                    f.hooks[0].size() == 1 && f.hooks[1].size() == 3 &&
                                    f.hooks[2].size() == 3 && f.hooks[3].size() == 1,
                  p.to_string());
    }
    {
        ColoredPermutation p = ColoredPermutation::parse("4^0 1^0 2^1 5^0 3^1", 2);
        rep.check("ai.example", admissible_inversions(p) == 3, p.to_string());
    }
    {
        ColoredPermutation p = ColoredPermutation::parse("1^0 6^1 2^0 5^1 3^0 4^1 7^0", 2);
        rep.check("rix.example", rix(p) == 2, p.to_string());
    }
    {
        ColoredPermutation p = ColoredPermutation::parse("2^0 6^1 1^0 5^1 4^0 3^1 7^0", 2);
        RawlingsStats r = rawlings_stats(p, 2);
        rep.check("rawlings.DES_ge2", r.DES_ge == std::set<int>{2, 4}, p.to_string());
        rep.check("rawlings.inv_lt2", r.inv_lt == 2, p.to_string());
        rep.check("rawlings.maj_ge2", r.maj_ge == 6, p.to_string());
        rep.check("rawlings.rmaj2", r.rmaj == 8, p.to_string());
        rep.note("rawlings example: on 2^0 6^1 1^0 5^1 4^0 3^1 7^0 the definitions give "
                 "DES={2,4}, inv=2, rmaj=8; the variant with the colors of 5 and 4 "
                 "transposed gives DES={2,5}, rmaj=9 instead and breaks no identity, "
                 "so the two words are easy to conflate");
    }
    rep.wall_ms = sw.ms();
    return rep;
}

// ---- oracle triangle for A (criterion 2) ---------------------------------------

inline VerificationReport suite_qeuler_triangle(int nmax, int lmax, int jobs = 1) {
    VerificationReport rep;
    rep.suite = "qeuler_triangle";
    rep.param("nmax", nmax);
    rep.param("lmax", lmax);
    Stopwatch sw;
    for (int l = 1; l <= lmax; ++l) {
        QEulerContext c = QEulerContext::make(l);
        std::vector<Polynomial> rec = a_recurrence(c, nmax);
        std::vector<Polynomial> gf = a_from_gf(c, nmax);
        for (int n = 0; n <= nmax; ++n) {
            Polynomial brute = parallel_colored_fold<Polynomial>(
                n, l, jobs, [&] { return Polynomial::zero(c.table); },
                [&](Polynomial& acc, const ColoredPermutation& p) {
                    StatRecord s = colored_stats(p);
                    Monomial mono(c.table->size(), 0);
                    mono[c.qvar] = static_cast<std::uint32_t>(s.maj - s.exc);
                    mono[c.tvar] = static_cast<std::uint32_t>(s.fexc);
                    mono[c.rvar] = static_cast<std::uint32_t>(s.fix);
                    acc.add_term(mono, BigInt(1));
                },
                [](Polynomial& a, Polynomial&& b) { a += b; });
            std::string tag = "l=" + std::to_string(l) + ",n=" + std::to_string(n);
            rep.check("brute_eq_recurrence[" + tag + "]", brute == rec[n], rec[n].to_string());
            rep.check("brute_eq_gf[" + tag + "]", brute == gf[n], gf[n].to_string());
        }
        // sanity: counting specialization
        Polynomial count = rec[nmax].eval_at(c.qvar, BigInt(1))
                               .eval_at(c.tvar, BigInt(1))
                               .eval_at(c.rvar, BigInt(1));
        BigInt expect(1);
        for (int i = 1; i <= nmax; ++i) expect *= BigInt(l) * BigInt(i);
        rep.check("group_order[l=" + std::to_string(l) + "]",
                  count.constant_term() == expect, count.to_string());
    }
    rep.wall_ms = sw.ms();
    return rep;
}

// ---- oracle square for Q (criterion 3) ------------------------------------------

inline bool flag_tables_equal(const FlagContext& fc, const std::vector<SymFuncH>& Q, int n,
                              const std::map<std::pair<int, int>, SymFuncH>& table,
                              std::string& bad) {
    std::set<std::pair<int, int>> keys;
    for (int k = 0; k <= fc.l * n; ++k)
        for (int j = 0; j <= n; ++j) keys.insert({k, j});
    for (const auto& [key, val] : table) keys.insert(key);
    for (const auto& key : keys) {
        SymFuncH lhs = flagq_entry(fc, Q[n], key.first, key.second);
        SymFuncH rhs = table.count(key) ? table.at(key) : SymFuncH::zero(fc.table);
        if (lhs != rhs) {
            bad = "n=" + std::to_string(n) + ",k=" + std::to_string(key.first) +
                  ",j=" + std::to_string(key.second) + ": " + lhs.to_string() +
                  " vs " + rhs.to_string();
            return false;
        }
    }
    return true;
}

inline VerificationReport suite_q_oracle_square(int nmax_h, int lmax_h, int nmax_m, int lmax_m,
                                                int N) {
    VerificationReport rep;
    rep.suite = "q_oracle_square";
    rep.param("nmax_h", nmax_h);
    rep.param("lmax_h", lmax_h);
    rep.param("nmax_monomial", nmax_m);
    rep.param("lmax_monomial", lmax_m);
    rep.param("N", N);
    Stopwatch sw;

    for (int l = 1; l <= lmax_h; ++l) {
        FlagContext fc = FlagContext::make(l);
        std::vector<SymFuncH> Q = flagq_recurrence(fc, nmax_h);
        RefinedContext rc = RefinedContext::make(l);
        SymSeries refined = refinedq_series(rc, nmax_h);
        for (int n = 0; n <= nmax_h; ++n) {
            std::string tag = "l=" + std::to_string(l) + ",n=" + std::to_string(n);
            rep.check("recurrence_eq_closed[" + tag + "]", Q[n] == flagq_closed(fc, n));
            std::string bad;
            auto flat = refined_to_flag(rc, fc, refined_table(rc, refined.c[n]));
            rep.check("recurrence_eq_gf[" + tag + "]", flag_tables_equal(fc, Q, n, flat, bad),
                      bad);
        }
    }

    // monomial-expansion square: flag table vs banners vs compositions
    for (int l = 1; l <= lmax_m; ++l) {
        FlagContext fc = FlagContext::make(l);
        std::vector<SymFuncH> Q = flagq_recurrence(fc, nmax_m);
        std::vector<std::string> names{"t"};
        for (int i = 1; i <= N; ++i) names.push_back("x" + std::to_string(i));
        VarTablePtr xt = make_table(names);
        std::vector<int> xvars;
        for (int i = 1; i <= N; ++i) xvars.push_back(i);
        for (int n = 0; n <= nmax_m; ++n) {
            auto banners = q_from_banners(n, l, N, xt, xvars);
            auto coms = com_flag_table(n, l, N, xt, xvars);
            bool ok_b = true, ok_c = true;
            std::string bad_b, bad_c;
            for (int k = 0; k <= l * n; ++k)
                for (int j = 0; j <= n; ++j) {
                    Polynomial expect =
                        flagq_entry(fc, Q[n], k, j).monomial_expand(xt, xvars);
                    Polynomial from_b = banners.count({k, j}) ? banners.at({k, j})
                                                              : Polynomial::zero(xt);
                    Polynomial from_c = coms.count({k, j}) ? coms.at({k, j})
                                                           : Polynomial::zero(xt);
                    std::string where = "k=" + std::to_string(k) + ",j=" + std::to_string(j);
                    if (ok_b && expect != from_b) { ok_b = false; bad_b = where; }
                    if (ok_c && expect != from_c) { ok_c = false; bad_c = where; }
                }
            std::string tag = "l=" + std::to_string(l) + ",n=" + std::to_string(n);
            rep.check("flag_eq_banners[" + tag + "]", ok_b, bad_b);
            rep.check("flag_eq_compositions[" + tag + "]", ok_c, bad_c);
        }
    }
    rep.wall_ms = sw.ms();
    return rep;
}

// ---- specialization bridges (criterion 4) ----------------------------------------

inline VerificationReport suite_specialization_bridge(int nmax, int lmax, int nmax_refined,
                                                      int lmax_refined) {
    VerificationReport rep;
    rep.suite = "specialization_bridge";
    rep.param("nmax", nmax);
    rep.param("lmax", lmax);
    rep.param("nmax_refined", nmax_refined);
    rep.param("lmax_refined", lmax_refined);
    Stopwatch sw;

    for (int l = 1; l <= lmax; ++l) {
        FlagContext fc = FlagContext::make(l);
        QEulerContext qc = QEulerContext::make(l);
        std::vector<SymFuncH> Q = flagq_recurrence(fc, nmax);
        for (int n = 0; n <= nmax; ++n) {
            Polynomial lhs = Q[n].nps(n, qc.table, qc.qvar);
            Polynomial rhs = a_brute(qc, n);
            rep.check("nps_flag[l=" + std::to_string(l) + ",n=" + std::to_string(n) + "]",
                      lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
        }
    }

    for (int l = 1; l <= lmax_refined; ++l) {
        RefinedContext rc = RefinedContext::make(l);
        SymSeries refined = refinedq_series(rc, nmax_refined);
        VarTablePtr qt = make_table({"q"});
        for (int n = 0; n <= nmax_refined; ++n) {
            auto table = refined_table(rc, refined.c[n]);
            std::map<RefinedKey, Polynomial> brute;
            enumerate_colored(n, l, [&](const ColoredPermutation& p) {
                StatRecord s = colored_stats(p);
                RefinedKey key{s.exc, s.fixvec, s.colvec};
                auto [it, ins] = brute.emplace(key, Polynomial::zero(qt));
                it->second += Polynomial::var(qt, 0, static_cast<std::uint32_t>(s.maj - s.exc));
            });
            bool ok = true;
            std::string bad;
            std::set<RefinedKey> keys;
            for (const auto& [k, v] : table) keys.insert(k);
            for (const auto& [k, v] : brute) keys.insert(k);
            for (const auto& key : keys) {
                Polynomial lhs = table.count(key) ? table.at(key).nps(n, qt, 0)
                                                  : Polynomial::zero(qt);
                Polynomial rhs = brute.count(key) ? brute.at(key) : Polynomial::zero(qt);
                if (lhs != rhs) {
                    ok = false;
                    bad = "k=" + std::to_string(key.k) + ": " + lhs.to_string() + " vs " +
                          rhs.to_string();
                    break;
                }
            }
            rep.check("nps_refined[l=" + std::to_string(l) + ",n=" + std::to_string(n) + "]",
                      ok, bad);
        }
    }
    rep.wall_ms = sw.ms();
    return rep;
}

// ---- symmetrical identities (criterion 5) ------------------------------------------

inline VerificationReport suite_symmetrical_identities(int nmax_h, int lmax_h, int nmax_q,
                                                       int lmax_q) {
    VerificationReport rep;
    rep.suite = "symmetrical_identities";
    rep.param("nmax_h", nmax_h);
    rep.param("lmax_h", lmax_h);
    rep.param("nmax_q", nmax_q);
    rep.param("lmax_q", lmax_q);
    Stopwatch sw;
    for (int l = 1; l <= lmax_h; ++l) {
        FlagContext fc = FlagContext::make(l);
        std::vector<SymFuncH> Q = flagq_recurrence(fc, nmax_h);
        for (int n = 1; n <= nmax_h; ++n) {
            std::string tag = "l=" + std::to_string(l) + ",n=" + std::to_string(n);
            bool t12 = true;
            for (int j = 0; j < n; ++j) t12 = t12 && verify_thm_1_2(fc, Q, n, j);
            rep.check("thm_1_2[" + tag + "]", t12);
            rep.check("thm_1_3[" + tag + "]", verify_thm_1_3(fc, Q, n));
        }
    }
    for (int l = 1; l <= lmax_q; ++l) {
        QEulerContext qc = QEulerContext::make(l);
        std::vector<Polynomial> A = a_recurrence(qc, nmax_q);
        for (int n = 1; n <= nmax_q; ++n) {
            std::string tag = "l=" + std::to_string(l) + ",n=" + std::to_string(n);
            rep.check("sym_col2[" + tag + "]", verify_sym_col2(qc, A, n));
            rep.check("sym_col1[" + tag + "]", verify_sym_col1(qc, A, n));
        }
    }
    rep.wall_ms = sw.ms();
    return rep;
}

// ---- symmetry, h-positivity, unimodality (criterion 6) ------------------------------

inline VerificationReport suite_symmetry_unimodality(int nmax, int lmax) {
    VerificationReport rep;
    rep.suite = "symmetry_unimodality";
    rep.param("nmax", nmax);
    rep.param("lmax", lmax);
    Stopwatch sw;
    for (int l = 1; l <= lmax; ++l) {
        FlagContext fc = FlagContext::make(l);
        std::vector<SymFuncH> Q = flagq_recurrence(fc, nmax);
        QEulerContext qc = QEulerContext::make(l);
        for (int n = 1; n <= nmax; ++n) {
            std::string tag = "l=" + std::to_string(l) + ",n=" + std::to_string(n);
            rep.check("flag_symmetry[" + tag + "]", verify_symmetry(fc, Q[n], n));
            HposReport h = verify_hpos_unimodal(fc, Q, n);
            rep.check("h_positive[" + tag + "]", h.h_positive);
            rep.check("unimodal_fixed_j[" + tag + "]", h.unimodal_fixed);
            rep.check("unimodal_row[" + tag + "]", h.unimodal_row);
            rep.check("property_gr[" + tag + "]", h.property_gr);
            Polynomial An = a_brute(qc, n);
            ColoredEulerianReport ce = colored_eulerian_checks(qc, An, n);
            rep.check("csp_product[" + tag + "]", ce.csp_product);
            rep.check("t_shape[" + tag + "]", ce.shape);
            if (l == 2) rep.check("mongelli_dnB[" + tag + "]", ce.mongelli);
        }
    }
    rep.wall_ms = sw.ms();
    return rep;
}

// ---- equidistribution (criterion 8) --------------------------------------------------

inline VerificationReport suite_equidistribution(int nmax, int lmax) {
    VerificationReport rep;
    rep.suite = "equidistribution";
    rep.param("nmax", nmax);
    rep.param("lmax", lmax);
    Stopwatch sw;
    for (int l = 1; l <= lmax; ++l) {
        QEulerContext qc = QEulerContext::make(l);
        for (int n = 1; n <= nmax; ++n) {
            std::string tag = "l=" + std::to_string(l) + ",n=" + std::to_string(n);
            rep.check("hook_and_admissible[" + tag + "]", verify_equidistribution(qc, n));
        }
        // Rawlings bridge: (exc, maj, col) vs (inv_{<2}, rmaj_2, col), with colors
        std::vector<std::string> names{"q", "t"};
        for (int m = 1; m < l; ++m) names.push_back("s" + std::to_string(m));
        VarTablePtr st = make_table(names);
        for (int n = 1; n <= nmax; ++n) {
            Polynomial lhs(st), rhs(st), lhs2(st), rhs2(st);
            Monomial mono(st->size(), 0);
            enumerate_colored(n, l, [&](const ColoredPermutation& p) {
                StatRecord s = colored_stats(p);
                RawlingsStats r = rawlings_stats(p, 2);
                std::fill(mono.begin(), mono.end(), 0);
                for (int m = 1; m < l; ++m)
                    mono[1 + m] = static_cast<std::uint32_t>(s.colvec[m - 1]);
                mono[0] = static_cast<std::uint32_t>(s.maj);
                mono[1] = static_cast<std::uint32_t>(s.exc);
                lhs.add_term(mono, BigInt(1));
                mono[0] = static_cast<std::uint32_t>(r.rmaj);
                mono[1] = static_cast<std::uint32_t>(r.inv_lt);
                rhs.add_term(mono, BigInt(1));
                // A_n(t,q) = sum t^{l inv_{<2} + colsum} q^{maj_{>=2}}
                std::fill(mono.begin(), mono.end(), 0);
                mono[0] = static_cast<std::uint32_t>(s.maj - s.exc);
                mono[1] = static_cast<std::uint32_t>(s.fexc);
                lhs2.add_term(mono, BigInt(1));
                mono[0] = static_cast<std::uint32_t>(r.maj_ge);
                mono[1] = static_cast<std::uint32_t>(l * r.inv_lt + s.col_sum);
                rhs2.add_term(mono, BigInt(1));
            });
            std::string tag = "l=" + std::to_string(l) + ",n=" + std::to_string(n);
            rep.check("three_stats_refined[" + tag + "]", lhs == rhs,
                      lhs.to_string() + " vs " + rhs.to_string());
            rep.check("three_stats_atq[" + tag + "]", lhs2 == rhs2,
                      lhs2.to_string() + " vs " + rhs2.to_string());
        }
        // flag major index is Mahonian over the whole range
        VarTablePtr qt = make_table({"q"});
        for (int n = 1; n <= nmax; ++n) {
            Polynomial sum(qt);
            Monomial mono(1, 0);
            enumerate_colored(n, l, [&](const ColoredPermutation& p) {
                mono[0] = static_cast<std::uint32_t>(colored_stats(p).fmaj);
                sum.add_term(mono, BigInt(1));
            });
            Polynomial expect = Polynomial::constant(qt, BigInt(1));
            for (int i = 1; i <= n; ++i) expect *= q_int_in(qt, 0, i * l);
            rep.check("fmaj_mahonian[l=" + std::to_string(l) + ",n=" + std::to_string(n) + "]",
                      sum == expect);
        }
    }
    rep.wall_ms = sw.ms();
    return rep;
}

// ---- chromatic suite (criterion 9) -----------------------------------------------------

inline VerificationReport suite_chromatic(int nmax_x, int lmax_x, int nmax_g, int lmax_g,
                                          int kmax_g, int nmax_m, int lmax_m) {
    VerificationReport rep;
    rep.suite = "chromatic";
    rep.param("nmax_x", nmax_x);
    rep.param("lmax_x", lmax_x);
    rep.param("nmax_gra", nmax_g);
    rep.param("lmax_gra", lmax_g);
    rep.param("kmax_gra", kmax_g);
    rep.param("nmax_mahonian", nmax_m);
    rep.param("lmax_mahonian", lmax_m);
    Stopwatch sw;
    VarTablePtr qt = make_table({"q"});

    // reciprocity and the F-expansion over every color word, k = 2 posets
    for (int l = 1; l <= lmax_x; ++l)
        for (int n = 1; n <= nmax_x; ++n) {
            ChromaticContext cc = ChromaticContext::make(n);
            bool recip = true, main2 = true, nuio = true, calib = true;
            std::string bad;
            std::vector<int> c(n, 0);
            auto cword = [&]() {
                std::string s = "c=";
                for (int x : c) s += static_cast<char>('0' + x);
                return s;
            };
            bool more = true;
            while (more) {
                auto P = NaturalUnitIntervalPoset::from_colorword(c, 2);
                if (!P.is_natural_unit_interval()) { nuio = false; }
                Graph g = Graph::incomparability(P);
                if (!calibrate_asc(cc, g)) calib = false;
                if (recip && !verify_reciprocity(cc, P, n)) {
                    recip = false;
                    bad = cword();
                }
                if (main2 && !verify_main2(cc, P, n)) {
                    main2 = false;
                    if (bad.empty()) bad = cword();
                }
                more = false;
                for (int i = n - 1; i >= 0; --i) {
                    if (++c[i] < l) { more = true; break; }
                    c[i] = 0;
                }
            }
            std::string tag = "l=" + std::to_string(l) + ",n=" + std::to_string(n);
            rep.check("natural_unit_interval[" + tag + "]", nuio);
            rep.check("asc_calibration[" + tag + "]", calib);
            rep.check("reciprocity[" + tag + "]", recip, bad);
            rep.check("shareshian_wachs_main2[" + tag + "]", main2, bad);
        }

    // the graph/poset bridge and the Mahonian statements
    for (int l = 1; l <= lmax_g; ++l)
        for (int n = 1; n <= nmax_g; ++n)
            for (int k = 1; k <= kmax_g; ++k) {
                std::string tag =
                    "l=" + std::to_string(l) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k);
                std::string witness;
                rep.check("gra_rawl[" + tag + "]", verify_gra_rawl(n, l, k, &witness), witness);
            }
    bool saw_large_gap_failure = false;
    for (int l = 1; l <= lmax_m; ++l)
        for (int n = 1; n <= nmax_m; ++n)
            for (int k = 1; k <= n; ++k) {
                std::string tag =
                    "l=" + std::to_string(l) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k);
                bool mah = verify_mahonian_fmajk(n, l, k, qt, 0);
                rep.check("fmajk_mahonian[" + tag + "]", mah);
                bool kas = true, nuio = true;
                std::vector<int> c(n, 0);
                bool more = true;
                while (more) {
                    auto P = NaturalUnitIntervalPoset::from_colorword(c, k);
                    if (!P.is_natural_unit_interval()) nuio = false;
                    if (!verify_kasraoui(P, qt, 0)) kas = false;
                    more = false;
                    for (int i = n - 1; i >= 0; --i) {
                        if (++c[i] < l) { more = true; break; }
                        c[i] = 0;
                    }
                }
                rep.check("kasraoui[" + tag + "]", kas);
                rep.check("kasraoui_nuio[" + tag + "]", nuio);
                if ((!mah || !kas || !nuio) && l >= 2 && k >= 3) saw_large_gap_failure = true;
            }
    if (saw_large_gap_failure)
        rep.note("the flag Rawlings major index stops being Mahonian once l >= 2 meets "
                 "k >= 3: the bridge posets with a colored letter within gap k are not "
                 "natural unit interval orders (smallest witness: n=3, k=3, colors 0 1 0, "
                 "where the induced poset is a relation plus an isolated middle vertex), "
                 "so the product identity behind the proof does not apply; the statement "
                 "holds for every l at k <= 2 and for l = 1 at every k");
    rep.wall_ms = sw.ms();
    return rep;
}

// the interpretation of Q_{n,k,beta} through DES_{>=2} (Theorem inter:des2),
// compared by monomial expansion
inline VerificationReport suite_inter_des2(int nmax, int lmax, int N) {
    VerificationReport rep;
    rep.suite = "inter_des2";
    rep.param("nmax", nmax);
    rep.param("lmax", lmax);
    rep.param("N", N);
    Stopwatch sw;
    for (int l = 1; l <= lmax; ++l) {
        RefinedContext rc = RefinedContext::make(l);
        SymSeries refined = refinedq_series(rc, nmax);
        std::vector<std::string> names;
        for (int i = 1; i <= N; ++i) names.push_back("x" + std::to_string(i));
        VarTablePtr xt = make_table(names);
        std::vector<int> xvars;
        for (int i = 0; i < N; ++i) xvars.push_back(i);
        for (int n = 1; n <= nmax; ++n) {
            auto table = refined_table(rc, refined.c[n]);
            // aggregate over alpha: key (k, beta)
            std::map<std::pair<int, std::vector<int>>, SymFuncH> qkb;
            for (const auto& [key, val] : table) {
                auto [it, ins] = qkb.emplace(std::pair{key.k, key.beta}, SymFuncH::zero(rc.table));
                it->second += val;
            }
            // permutation side: F expansion by (inv_{<2}, colvec)
            std::map<std::pair<int, std::vector<int>>, QSymF> perm_side;
            enumerate_colored(n, l, [&](const ColoredPermutation& p) {
                RawlingsStats r = rawlings_stats(p, 2);
                StatRecord s = colored_stats(p);
                std::uint32_t mask = 0;
                for (int i : r.DES_ge) mask |= 1u << (i - 1);
                auto [it, ins] = perm_side.emplace(std::pair{r.inv_lt, s.colvec},
                                                   QSymF::zero(n, xt));
                it->second.add(mask, Polynomial::constant(xt, BigInt(1)));
            });
            bool ok = true;
            std::string bad;
            std::set<std::pair<int, std::vector<int>>> keys;
            for (const auto& [k, v] : qkb) keys.insert(k);
            for (const auto& [k, v] : perm_side) keys.insert(k);
            for (const auto& key : keys) {
                Polynomial lhs = qkb.count(key)
                                     ? qkb.at(key).monomial_expand(xt, xvars)
                                     : Polynomial::zero(xt);
                Polynomial rhs = perm_side.count(key)
                                     ? qsym_monomial_expand(perm_side.at(key), xt, xvars)
                                     : Polynomial::zero(xt);
                if (lhs != rhs) {
                    ok = false;
                    bad = "k=" + std::to_string(key.first);
                    break;
                }
            }
            rep.check("inter_des2[l=" + std::to_string(l) + ",n=" + std::to_string(n) + "]", ok,
                      bad);
        }
    }
    rep.wall_ms = sw.ms();
    return rep;
}

// ---- decrease value suite (criterion 10) -------------------------------------------------

inline VerificationReport suite_decval(int rmax, int L, int le2_rmax, int maineq_L,
                                       int maineq_lmax, int maineq_M) {
    VerificationReport rep;
    rep.suite = "decval";
    rep.param("rmax", rmax);
    rep.param("L", L);
    rep.param("le2_rmax", le2_rmax);
    rep.param("maineq_L", maineq_L);
    rep.param("maineq_lmax", maineq_lmax);
    rep.param("maineq_M", maineq_M);
    Stopwatch sw;
    for (int r = 0; r <= rmax; ++r) {
        std::string tag = "r=" + std::to_string(r) + ",L=" + std::to_string(L);
        rep.check("decrease_theorem[" + tag + "]", verify_decrease_theorem(r, L));
        rep.check("decrease2[" + tag + "]", verify_decrease2(r, L));
        rep.check("decrease_spec[" + tag + "]", verify_decrease_spec(r, L));
    }
    for (int r = 0; r <= le2_rmax; ++r)
        rep.check("le2[r=" + std::to_string(r) + "]", verify_le2(r));
    for (int l = 1; l <= maineq_lmax; ++l)
        rep.check("maineq[l=" + std::to_string(l) + "]", verify_maineq(l, maineq_M, maineq_L));
    rep.wall_ms = sw.ms();
    return rep;
}

// the eta-substituted word sum of fixed length n reproduces the monomial
// expansion of the refined generating row of Q
inline VerificationReport suite_decval_bridge(int nmax, int lmax, int M, int Lcap) {
    VerificationReport rep;
    rep.suite = "decval_bridge";
    rep.param("nmax", nmax);
    rep.param("lmax", lmax);
    rep.param("M", M);
    Stopwatch sw;
    for (int l = 1; l <= lmax; ++l) {
        EtaContext ec = EtaContext::make(l, M);
        RefinedContext rc = RefinedContext::make(l);
        SymSeries refined = refinedq_series(rc, nmax);
        std::vector<int> yvars;
        for (int i = 0; i <= M; ++i) yvars.push_back(ec.Y(i));
        for (int n = 1; n <= nmax; ++n) {
            Polynomial words = eta_word_sum(ec, std::min(Lcap, n), n);
            Polynomial expect(ec.table);
            for (const auto& [key, f] : refined_table(rc, refined.c[n])) {
                Monomial mono(ec.table->size(), 0);
                mono[ec.tvar()] = static_cast<std::uint32_t>(key.k);
                for (int m = 0; m < l; ++m)
                    mono[ec.rvar(m)] = static_cast<std::uint32_t>(key.alpha[m]);
                for (int m = 1; m < l; ++m)
                    mono[ec.svar(m)] = static_cast<std::uint32_t>(key.beta[m - 1]);
                expect += Polynomial::monomial(ec.table, mono, BigInt(1)) *
                          f.monomial_expand(ec.table, yvars);
            }
            rep.check("word_sum_eq_Q[l=" + std::to_string(l) + ",n=" + std::to_string(n) + "]",
                      words == expect);
        }
    }
    rep.wall_ms = sw.ms();
    return rep;
}

// ---- criterion 11: the A_1 discrepancy --------------------------------------------------

inline VerificationReport suite_a1_discrepancy(int lmax) {
    VerificationReport rep;
    rep.suite = "a1_discrepancy";
    rep.param("lmax", lmax);
    Stopwatch sw;
    for (int l = 1; l <= lmax; ++l) {
        QEulerContext c = QEulerContext::make(l);
        Polynomial brute = a_brute(c, 1);
        Polynomial rec = a_recurrence(c, 1)[1];
        Polynomial gf = a_from_gf(c, 1)[1];
        Polynomial consistent = Polynomial::var(c.table, c.rvar) +
                                Polynomial::var(c.table, c.tvar) *
                                    q_int_in(c.table, c.tvar, l - 1);
        Polynomial stated = Polynomial::var(c.table, c.rvar);  // the commonly stated initial condition
        std::string tag = "l=" + std::to_string(l);
        rep.check("a1_triple_agreement[" + tag + "]",
                  brute == rec && brute == gf && brute == consistent, brute.to_string());
        if (l == 1)
            rep.check("a1_stated_holds_at_l1[" + tag + "]", brute == stated);
        else
            rep.check("a1_stated_differs[" + tag + "]", !(brute == stated),
                      brute.to_string());
    }
    rep.note("A_1^{(l)}(t,r,q) = r + t[l-1]_t by brute force, the recurrence and the "
             "generating function; the simpler initial condition A_1 = r that the "
             "recurrence is sometimes quoted with holds only at l = 1");
    rep.wall_ms = sw.ms();
    return rep;
}

}  // namespace eforge
