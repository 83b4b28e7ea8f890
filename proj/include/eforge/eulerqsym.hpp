#pragma once

// Flag and fixed-point colored Eulerian quasisymmetric functions: the
// recurrence and closed-form computations of Q_n(t,r), coefficient
// extraction of the refined Q_{n,k,alpha,beta} from the generating function,
// the banner and marked-sequence-composition weight sums, and the
// symmetry / h-positivity / symmetrical-identity verifiers.

#include "eforge/banner.hpp"
#include "eforge/qanalog.hpp"
#include "eforge/series.hpp"
#include "eforge/symfunc.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace eforge {

// ---- Q_n(t,r) in the h basis -------------------------------------------------

struct FlagContext {
    int l = 1;
    VarTablePtr table;  // contains "t" and "r"
    int tvar = 0, rvar = 1;

    static FlagContext make(int l) {
        FlagContext c;
        c.l = l;
        c.table = make_table({"t", "r"});
        c.tvar = 0;
        c.rvar = 1;
        return c;
    }
};

// Q_n(t,r) = r^n h_n + sum_{k=0}^{n-1} Q_k(t,r) h_{n-k} t [l(n-k)-1]_t
inline std::vector<SymFuncH> flagq_recurrence(const FlagContext& c, int nmax) {
    std::vector<SymFuncH> Q;
    Q.push_back(SymFuncH::unit(c.table));
    for (int n = 1; n <= nmax; ++n) {
        SymFuncH qn = SymFuncH::h(c.table, n) * Polynomial::var(c.table, c.rvar, n);
        for (int k = 0; k < n; ++k) {
            Polynomial tfac = Polynomial::var(c.table, c.tvar) *
                              q_int_in(c.table, c.tvar, c.l * (n - k) - 1);
            qn += Q[k] * SymFuncH::h(c.table, n - k) * tfac;
        }
        Q.push_back(qn);
    }
    return Q;
}

// sum over k_0 >= 0 and ordered parts k_1..k_m with l k_i >= 2 summing to n
inline SymFuncH flagq_closed(const FlagContext& c, int n) {
    SymFuncH total = SymFuncH::zero(c.table);
    std::function<void(int, SymFuncH)> rec = [&](int rem, SymFuncH acc) {
        if (rem == 0) {
            total += acc;
            return;
        }
        for (int ki = 1; ki <= rem; ++ki) {
            if (c.l * ki < 2) continue;
            Polynomial tfac = Polynomial::var(c.table, c.tvar) *
                              q_int_in(c.table, c.tvar, c.l * ki - 1);
            rec(rem - ki, acc * SymFuncH::h(c.table, ki) * tfac);
        }
    };
    for (int k0 = 0; k0 <= n; ++k0) {
        SymFuncH head = SymFuncH::h(c.table, k0) * Polynomial::var(c.table, c.rvar, k0);
        rec(n - k0, head);
    }
    return total;
}

// coefficient of t^k r^j as a symmetric function (constant coefficients)
inline SymFuncH flagq_entry(const FlagContext& c, const SymFuncH& Qn, int k, int j) {
    return Qn.coeff_of(c.tvar, static_cast<std::uint32_t>(k))
        .coeff_of(c.rvar, static_cast<std::uint32_t>(j));
}

// Q_{n,k} = sum_j Q_{n,k,j}
inline SymFuncH flagq_row(const FlagContext& c, const SymFuncH& Qn, int k) {
    SymFuncH acc = Qn.coeff_of(c.tvar, static_cast<std::uint32_t>(k));
    SymFuncH out = SymFuncH::zero(c.table);
    for (std::uint32_t j = 0; j <= acc.degree_in(c.rvar); ++j)
        out += acc.coeff_of(c.rvar, j);
    return out;
}

// ---- refined generating function (Hyatt) -------------------------------------

struct RefinedKey {
    int k = 0;                 // excedances (bars)
    std::vector<int> alpha;    // fixed-point vector, length l
    std::vector<int> beta;     // color vector, length l-1
    bool operator<(const RefinedKey& o) const {
        if (k != o.k) return k < o.k;
        if (alpha != o.alpha) return alpha < o.alpha;
        return beta < o.beta;
    }
    bool operator==(const RefinedKey&) const = default;
};

struct RefinedContext {
    int l = 1;
    VarTablePtr table;  // t, r_0..r_{l-1}, s_1..s_{l-1}
    int tvar = 0;
    std::vector<int> rvars, svars;

    static RefinedContext make(int l) {
        RefinedContext c;
        c.l = l;
        std::vector<std::string> names{"t"};
        for (int m = 0; m < l; ++m) names.push_back("r" + std::to_string(m));
        for (int m = 1; m < l; ++m) names.push_back("s" + std::to_string(m));
        c.table = make_table(names);
        c.tvar = 0;
        for (int m = 0; m < l; ++m) c.rvars.push_back(1 + m);
        for (int m = 1; m < l; ++m) c.svars.push_back(l + m);
        return c;
    }
};

using SymSeries = TruncatedSeries<SymFuncH>;

// H(cz): z^n coefficient h_n c^n; E(cz): z^n coefficient e_n c^n
inline SymSeries sym_series_H(const VarTablePtr& table, int cap, const Polynomial& c) {
    SymSeries s(cap, SymFuncH::zero(table));
    Polynomial p = Polynomial::constant(table, BigInt(1));
    for (int n = 0; n <= cap; ++n) {
        s.c[n] = SymFuncH::h(table, n) * p;
        p *= c;
    }
    return s;
}
inline SymSeries sym_series_E(const VarTablePtr& table, int cap, const Polynomial& c) {
    SymSeries s(cap, SymFuncH::zero(table));
    Polynomial p = Polynomial::constant(table, BigInt(1));
    for (int n = 0; n <= cap; ++n) {
        s.c[n] = e_in_h(table, n) * p;
        p *= c;
    }
    return s;
}

// the full fixed-point colored generating function, expanded through z^nmax
inline SymSeries refinedq_series(const RefinedContext& c, int nmax) {
    const VarTablePtr& T = c.table;
    Polynomial one = Polynomial::constant(T, BigInt(1));
    Polynomial t = Polynomial::var(T, c.tvar);
    SymSeries num = sym_series_H(T, nmax, Polynomial::var(T, c.rvars[0]));
    SymSeries unitser = SymSeries::one(nmax, SymFuncH::zero(T), SymFuncH::unit(T) * (one - t));
    num = num * unitser;
    for (int m = 1; m < c.l; ++m) {
        Polynomial sm = Polynomial::var(T, c.svars[m - 1]);
        Polynomial rm = Polynomial::var(T, c.rvars[m]);
        num = num * sym_series_E(T, nmax, -sm);
        num = num * sym_series_H(T, nmax, rm * sm);
    }
    Polynomial ssum(T);
    for (int m = 1; m < c.l; ++m) ssum += Polynomial::var(T, c.svars[m - 1]);
    SymSeries HT = sym_series_H(T, nmax, t);
    SymSeries H1 = sym_series_H(T, nmax, one);
    SymSeries den(nmax, SymFuncH::zero(T));
    for (int n = 0; n <= nmax; ++n)
        den.c[n] = HT.c[n] * (one + ssum) - H1.c[n] * (t + ssum);
    Polynomial d0 = one - t;
    return SymSeries::divide(num, den,
                             [&](const SymFuncH& f) { return f.coeff_exact_div(d0); });
}

// split a z^n coefficient into the refined table keyed by (k, alpha, beta)
inline std::map<RefinedKey, SymFuncH> refined_table(const RefinedContext& c,
                                                    const SymFuncH& layer) {
    std::map<RefinedKey, SymFuncH> out;
    for (const auto& [part, coeff] : layer.terms())
        for (const auto& [mono, coef] : coeff.terms()) {
            RefinedKey key;
            key.k = static_cast<int>(mono[c.tvar]);
            for (int m = 0; m < c.l; ++m) key.alpha.push_back(static_cast<int>(mono[c.rvars[m]]));
            for (int m = 1; m < c.l; ++m)
                key.beta.push_back(static_cast<int>(mono[c.svars[m - 1]]));
            auto [it, ins] = out.emplace(key, SymFuncH::zero(c.table));
            it->second.add_term(part, Polynomial::constant(c.table, coef));
        }
    return out;
}

inline int csum(const std::vector<int>& beta) {
    int s = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) s += static_cast<int>(i + 1) * beta[i];
    return s;
}

// aggregate the refined table into the flag table on (l*k + csum(beta), alpha_0),
// emitting coefficients over the flag (t, r) table
inline std::map<std::pair<int, int>, SymFuncH> refined_to_flag(
    const RefinedContext& rc, const FlagContext& fc,
    const std::map<RefinedKey, SymFuncH>& refined) {
    std::map<std::pair<int, int>, SymFuncH> out;
    for (const auto& [key, f] : refined) {
        int kflag = rc.l * key.k + csum(key.beta);
        int j = key.alpha[0];
        auto [it, ins] = out.emplace(std::pair{kflag, j}, SymFuncH::zero(fc.table));
        for (const auto& [part, coeff] : f.terms())
            it->second.add_term(part,
                                Polynomial::constant(fc.table, coeff.constant_term()));
    }
    return out;
}

// ---- banner and composition weight sums --------------------------------------

// buckets (flag index, j) -> polynomial in x_1..x_N, summing banner weights;
// j counts singleton Lyndon factors made of an unbarred 0-colored letter
inline std::map<std::pair<int, int>, Polynomial> q_from_banners(
    int n, int l, int N, const VarTablePtr& target, const std::vector<int>& xvars) {
    std::map<std::pair<int, int>, Polynomial> out;
    enumerate_banners(n, N, l, [&](const Banner& b) {
        auto factors = lyndon_factorize(
            b, [&](const BLetter& x, const BLetter& y) { return original_order_less(x, y, l); });
        int j = 0, bars = 0, colors = 0;
        for (auto [fs, fe] : factors)
            if (fe - fs == 1 && !b[fs].bar && b[fs].color == 0) ++j;
        Monomial mono(target->size(), 0);
        for (const auto& a : b) {
            if (a.bar) ++bars;
            colors += a.color;
            ++mono[xvars[a.value - 1]];
        }
        int kflag = l * bars + colors;
        auto [it, ins] = out.emplace(std::pair{kflag, j}, Polynomial::zero(target));
        it->second.add_term(mono, BigInt(1));
    });
    return out;
}

// weight sum over Com_j(n, i, beta) with letter values <= N
inline Polynomial com_weight_sum(int n, int i, const std::vector<int>& beta, int j, int l, int N,
                                 const VarTablePtr& target, const std::vector<int>& xvars) {
    if (static_cast<int>(xvars.size()) != N)
        throw std::invalid_argument("com_weight_sum: xvars must list the N letter variables");
    Polynomial head = SymFuncH::h_expand(target, xvars, j);
    Polynomial total(target);
    std::function<void(int, int, std::vector<int>&, const Polynomial&)> rec =
        [&](int rem, int bars, std::vector<int>& need, const Polynomial& acc) {
            if (rem == 0) {
                bool done = bars == 0;
                for (int x : need) done = done && x == 0;
                if (done) total += acc;
                return;
            }
            for (int len = 1; len <= rem; ++len) {
                Polynomial w = SymFuncH::h_expand(target, xvars, len);
                for (int m = 0; m < l; ++m) {
                    if (m > 0 && need[m - 1] == 0) continue;
                    int blo = m == 0 ? 1 : 0;
                    int bhi = len - 1;
                    if (m == 0 && len < 2) continue;
                    for (int b = blo; b <= std::min(bhi, bars); ++b) {
                        if (m > 0) --need[m - 1];
                        rec(rem - len, bars - b, need, acc * w);
                        if (m > 0) ++need[m - 1];
                    }
                }
            }
        };
    std::vector<int> need = beta;
    rec(n - j, i, need, head);
    return total;
}

// aggregated over li + csum(beta) = kflag, for comparison against banners
inline std::map<std::pair<int, int>, Polynomial> com_flag_table(
    int n, int l, int N, const VarTablePtr& target, const std::vector<int>& xvars) {
    std::map<std::pair<int, int>, Polynomial> out;
    std::vector<std::vector<int>> betas;
    std::vector<int> beta(l - 1, 0);
    std::function<void(int)> gen = [&](int pos) {
        if (pos == l - 1) {
            betas.push_back(beta);
            return;
        }
        for (int v = 0; v <= n; ++v) {
            beta[pos] = v;
            gen(pos + 1);
        }
        beta[pos] = 0;
    };
    gen(0);
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i * l <= l * n; ++i)
            for (const auto& bt : betas) {
                int total = 0;
                for (int x : bt) total += x;
                if (i + total > n - j && (i > 0 || total > 0)) continue;
                int kflag = l * i + csum(bt);
                if (kflag > l * n) continue;
                Polynomial w = com_weight_sum(n, i, bt, j, l, N, target, xvars);
                if (w.is_zero()) continue;
                auto [it, ins] = out.emplace(std::pair{kflag, j}, Polynomial::zero(target));
                it->second += w;
            }
    return out;
}

// ---- identity verifiers -------------------------------------------------------

// sum_i h_i Q_{n-i,a,j} with Q tables from the recurrence
inline SymFuncH hshift_sum_fixed(const FlagContext& c, const std::vector<SymFuncH>& Q, int n,
                                 int a, int j) {
    SymFuncH acc = SymFuncH::zero(c.table);
    for (int i = 0; i <= n - j; ++i)
        acc += SymFuncH::h(c.table, i) * flagq_entry(c, Q[n - i], a, j);
    return acc;
}

inline bool verify_thm_1_2(const FlagContext& c, const std::vector<SymFuncH>& Q, int n, int j) {
    if (j >= n) return true;
    int target = c.l * (n - j);
    for (int a = 1; a + 2 <= target; ++a) {
        int b = target - 1 - a;
        if (b < 1) continue;
        if (hshift_sum_fixed(c, Q, n, a, j) != hshift_sum_fixed(c, Q, n, b, j)) return false;
    }
    return true;
}

inline SymFuncH hshift_sum_row(const FlagContext& c, const std::vector<SymFuncH>& Q, int n,
                               int k) {
    SymFuncH acc = SymFuncH::zero(c.table);
    for (int i = 0; i <= n - 1; ++i)
        acc += SymFuncH::h(c.table, i) * flagq_row(c, Q[n - i], k);
    return acc;
}

inline bool verify_thm_1_3(const FlagContext& c, const std::vector<SymFuncH>& Q, int n) {
    for (int a = 1; a < c.l * n; ++a) {
        int b = c.l * n - a;
        if (b < 1) continue;
        if (hshift_sum_row(c, Q, n, a - 1) != hshift_sum_row(c, Q, n, b - 1)) return false;
    }
    return true;
}

// Q_{n,k,j} = Q_{n,l(n-j)-k,j} and Q_{n,k} = Q_{n,ln-k-1}
inline bool verify_symmetry(const FlagContext& c, const SymFuncH& Qn, int n) {
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= c.l * n; ++k) {
            int mirror = c.l * (n - j) - k;
            SymFuncH lhs = flagq_entry(c, Qn, k, j);
            SymFuncH rhs = mirror >= 0 ? flagq_entry(c, Qn, mirror, j) : SymFuncH::zero(c.table);
            if (lhs != rhs) return false;
        }
    for (int k = 0; k <= c.l * n - 1; ++k)
        if (flagq_row(c, Qn, k) != flagq_row(c, Qn, c.l * n - k - 1)) return false;
    return true;
}

struct HposReport {
    bool h_positive = true;
    bool unimodal_fixed = true;   // per-j centered differences h-positive
    bool unimodal_row = true;     // Q_{n,k} sequence
    bool property_gr = true;      // Q_{n,k,j} = h_j Q_{n-j,k,0}
};

inline HposReport verify_hpos_unimodal(const FlagContext& c, const std::vector<SymFuncH>& Q,
                                       int n) {
    HposReport rep;
    const SymFuncH& Qn = Q[n];
    for (int j = 0; j <= n; ++j) {
        std::vector<SymFuncH> seq;
        for (int k = 0; k <= c.l * n; ++k) seq.push_back(flagq_entry(c, Qn, k, j));
        for (const auto& f : seq)
            if (!f.coefficients_nonnegative()) rep.h_positive = false;
        // center l(n-j)/2; ascending differences up to the floor of the center
        int twice_center = c.l * (n - j);
        for (int k = 0; 2 * (k + 1) <= twice_center; ++k)
            if (!(seq[k + 1] - seq[k]).coefficients_nonnegative()) rep.unimodal_fixed = false;
        for (int k = 0; k <= c.l * n; ++k) {
            SymFuncH expect = j <= n
                ? SymFuncH::h(c.table, j) * flagq_entry(c, Q[n - j], k, 0)
                : SymFuncH::zero(c.table);
            if (flagq_entry(c, Qn, k, j) != expect) rep.property_gr = false;
        }
    }
    std::vector<SymFuncH> row;
    for (int k = 0; k <= c.l * n - 1; ++k) row.push_back(flagq_row(c, Qn, k));
    int twice_center = c.l * n - 1;
    for (int k = 0; 2 * (k + 1) <= twice_center; ++k)
        if (!(row[k + 1] - row[k]).coefficients_nonnegative()) rep.unimodal_row = false;
    return rep;
}

}  // namespace eforge
