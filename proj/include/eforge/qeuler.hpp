#pragma once

// Colored (q,r)-Eulerian polynomials A_n^{(l)}(t,r,q): exhaustive sum,
// recurrence, q-exponential generating function, equidistribution checks,
// the symmetrical q-identities, and the t-coefficient shape checks
// (symmetry, unimodality, log-concavity, the type B derangement polynomial).

#include "eforge/perm.hpp"
#include "eforge/qanalog.hpp"
#include "eforge/series.hpp"
#include "eforge/stats.hpp"

#include <vector>

namespace eforge {

struct QEulerContext {
    int l = 1;
    VarTablePtr table;  // q, t, r
    int qvar = 0, tvar = 1, rvar = 2;

    static QEulerContext make(int l) {
        QEulerContext c;
        c.l = l;
        c.table = make_table({"q", "t", "r"});
        return c;
    }
};

// sum over C_l wr S_n of t^fexc r^fix q^{maj-exc}
inline Polynomial a_brute(const QEulerContext& c, int n) {
    Polynomial out(c.table);
    Monomial mono(c.table->size(), 0);
    enumerate_colored(n, c.l, [&](const ColoredPermutation& p) {
        StatRecord s = colored_stats(p);
        mono[c.qvar] = static_cast<std::uint32_t>(s.maj - s.exc);
        mono[c.tvar] = static_cast<std::uint32_t>(s.fexc);
        mono[c.rvar] = static_cast<std::uint32_t>(s.fix);
        out.add_term(mono, BigInt(1));
    });
    return out;
}

// A_{n+1} = (r + t[l-1]_t q^n) A_n + t[l]_t sum_k [n k]_q q^k A_k A_{n-k}(t,q)
inline std::vector<Polynomial> a_recurrence(const QEulerContext& c, int nmax) {
    std::vector<Polynomial> A{Polynomial::constant(c.table, BigInt(1))};
    std::vector<Polynomial> A_r1{A[0]};
    Polynomial t = Polynomial::var(c.table, c.tvar);
    Polynomial r = Polynomial::var(c.table, c.rvar);
    Polynomial tl = t * q_int_in(c.table, c.tvar, c.l);
    Polynomial tl1 = t * q_int_in(c.table, c.tvar, c.l - 1);
    for (int n = 0; n < nmax; ++n) {
        Polynomial qe = Polynomial::var(c.table, c.qvar, static_cast<std::uint32_t>(n));
        Polynomial next = (r + tl1 * qe) * A[n];
        for (int k = 0; k < n; ++k) {
            Polynomial qk = Polynomial::var(c.table, c.qvar, static_cast<std::uint32_t>(k));
            next += tl * q_binomial(c.table, c.qvar, n, k) * qk * A[k] * A_r1[n - k];
        }
        A.push_back(next);
        A_r1.push_back(next.eval_at(c.rvar, BigInt(1)));
    }
    return A;
}

// generating-function route: coefficients of (1-t)e(rz;q) / (e(t^l z;q) - t e(z;q))
inline std::vector<Polynomial> a_from_gf(const QEulerContext& c, int nmax) {
    Polynomial one = Polynomial::constant(c.table, BigInt(1));
    Polynomial t = Polynomial::var(c.table, c.tvar);
    Polynomial r = Polynomial::var(c.table, c.rvar);
    QExpSeries num = q_exponential(c.table, c.qvar, nmax, r);
    for (auto& a : num.a) a *= one - t;
    QExpSeries etl = q_exponential(c.table, c.qvar, nmax, t.pow(static_cast<std::uint32_t>(c.l)));
    QExpSeries e1 = q_exponential(c.table, c.qvar, nmax, one);
    QExpSeries den = etl;
    for (int n = 0; n <= nmax; ++n) den.a[n] -= t * e1.a[n];
    QExpSeries quot = QExpSeries::divide(num, den);
    return quot.a;
}

// ---- equidistribution ----------------------------------------------------------

// (fexc, fix, maj-exc) == (flec, pix, inv-lec) == (fdes^Abs, rix, ai)
inline bool verify_equidistribution(const QEulerContext& c, int n) {
    Polynomial hook_side(c.table), admiss_side(c.table);
    Monomial mono(c.table->size(), 0);
    enumerate_colored(n, c.l, [&](const ColoredPermutation& p) {
        HookStats h = hook_stats(p);
        mono[c.qvar] = static_cast<std::uint32_t>(h.inv - h.lec);
        mono[c.tvar] = static_cast<std::uint32_t>(h.flec);
        mono[c.rvar] = static_cast<std::uint32_t>(h.pix);
        hook_side.add_term(mono, BigInt(1));
        AbsDesc d = fdes_abs(p);
        mono[c.qvar] = static_cast<std::uint32_t>(admissible_inversions(p));
        mono[c.tvar] = static_cast<std::uint32_t>(d.fdes_abs);
        mono[c.rvar] = static_cast<std::uint32_t>(rix(p));
        admiss_side.add_term(mono, BigInt(1));
    });
    Polynomial direct = a_brute(c, n);
    return direct == hook_side && direct == admiss_side;
}

// ---- symmetrical q-identities ----------------------------------------------------

// coefficient of t^a r^j in A_k, as a polynomial in q
inline Polynomial a_coeff(const QEulerContext& c, const Polynomial& Ak, int a, int j) {
    return Ak.coeff_of(c.tvar, static_cast<std::uint32_t>(a))
        .coeff_of(c.rvar, static_cast<std::uint32_t>(j));
}
inline Polynomial a_coeff_row(const QEulerContext& c, const Polynomial& Ak, int a) {
    Polynomial at_r1 = Ak.eval_at(c.rvar, BigInt(1));
    return at_r1.coeff_of(c.tvar, static_cast<std::uint32_t>(a));
}

// sum_k [n k]_q A_{k,a,j}(q) is symmetric in a <-> b when a+b+1 = l(n-j)
inline bool verify_sym_col2(const QEulerContext& c, const std::vector<Polynomial>& A, int n) {
    for (int j = 0; j < n; ++j) {
        int target = c.l * (n - j);
        for (int a = 1; a + 2 <= target; ++a) {
            int b = target - 1 - a;
            if (b < 1) continue;
            Polynomial lhs(c.table), rhs(c.table);
            for (int k = 0; k <= n; ++k) {
                Polynomial binom = q_binomial(c.table, c.qvar, n, k);
                lhs += binom * a_coeff(c, A[k], a, j);
                rhs += binom * a_coeff(c, A[k], b, j);
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

inline bool verify_sym_col1(const QEulerContext& c, const std::vector<Polynomial>& A, int n) {
    for (int a = 1; a < c.l * n; ++a) {
        int b = c.l * n - a;
        if (b < 1) continue;
        Polynomial lhs(c.table), rhs(c.table);
        for (int k = 1; k <= n; ++k) {
            Polynomial binom = q_binomial(c.table, c.qvar, n, k);
            lhs += binom * a_coeff_row(c, A[k], a - 1);
            rhs += binom * a_coeff_row(c, A[k], b - 1);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

// ---- coefficient shape ------------------------------------------------------------

inline std::vector<BigInt> t_coefficients(const QEulerContext& c, const Polynomial& p) {
    std::vector<BigInt> coeffs;
    std::uint32_t d = p.degree_in(c.tvar);
    for (std::uint32_t k = 0; k <= d; ++k)
        coeffs.push_back(p.coeff_of(c.tvar, k).constant_term());
    return coeffs;
}

inline bool symmetric_about(const std::vector<BigInt>& a, int lo, int hi) {
    for (int i = 0; lo + i <= hi - i; ++i) {
        BigInt x = lo + i < static_cast<int>(a.size()) && lo + i >= 0 ? a[lo + i] : BigInt(0);
        BigInt y = hi - i < static_cast<int>(a.size()) && hi - i >= 0 ? a[hi - i] : BigInt(0);
        if (!(x == y)) return false;
    }
    return true;
}
inline bool unimodal_seq(const std::vector<BigInt>& a) {
    int peak = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] > a[peak]) peak = static_cast<int>(i);
    for (int i = 0; i < peak; ++i)
        if (a[i] > a[i + 1]) return false;
    for (std::size_t i = peak; i + 1 < a.size(); ++i)
        if (a[i] < a[i + 1]) return false;
    return true;
}
inline bool log_concave_seq(const std::vector<BigInt>& a) {
    for (std::size_t i = 1; i + 1 < a.size(); ++i)
        if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
    return true;
}

struct ColoredEulerianReport {
    bool csp_product = true;     // A_n^{(l)}(t) = A_n(t) [l]_t^n
    bool shape = true;           // symmetric about (ln-1)/2, unimodal, log-concave
    bool mongelli = true;        // d_n^B(t) symmetric about n and unimodal
};

inline ColoredEulerianReport colored_eulerian_checks(const QEulerContext& c,
                                                     const Polynomial& An, int n) {
    ColoredEulerianReport rep;
    Polynomial at = An.eval_at(c.rvar, BigInt(1)).eval_at(c.qvar, BigInt(1));
    // classical A_n(t): l = 1 brute force
    QEulerContext c1 = QEulerContext::make(1);
    Polynomial cls = a_brute(c1, n).eval_at(c1.rvar, BigInt(1)).eval_at(c1.qvar, BigInt(1));
    Polynomial expect = cls.mapped_to(c.table) * q_int_in(c.table, c.tvar, c.l).pow(
                            static_cast<std::uint32_t>(n));
    rep.csp_product = at == expect;
    std::vector<BigInt> coeffs = t_coefficients(c, at);
    rep.shape = symmetric_about(coeffs, 0, c.l * n - 1) && unimodal_seq(coeffs) &&
                log_concave_seq(coeffs);
    if (c.l == 2) {
        Polynomial dn = An.eval_at(c.rvar, BigInt(0)).eval_at(c.qvar, BigInt(1));
        std::vector<BigInt> d = t_coefficients(c, dn);
        rep.mongelli = unimodal_seq(d);
        // symmetric about n: coefficient of t^{n-i} equals that of t^{n+i}
        for (int i = 0; i <= n; ++i) {
            int lo = n - i, hi = n + i;
            BigInt x = lo >= 0 && lo < static_cast<int>(d.size()) ? d[lo] : BigInt(0);
            BigInt y = hi >= 0 && hi < static_cast<int>(d.size()) ? d[hi] : BigInt(0);
            if (!(x == y)) rep.mongelli = false;
        }
    }
    return rep;
}

}  // namespace eforge
