#pragma once

// The decrease value theorem on words over [0,r]: the six-class position
// weight, its specializations, and truncated-series verification of the
// closed forms, including the eta substitution that recovers the colored
// Eulerian generating function.

#include "eforge/polynomial.hpp"
#include "eforge/symfunc.hpp"

#include <functional>
#include <string>
#include <vector>

namespace eforge {

enum class PosClass { Des, DecNotDes, RiseRec, RiseNotRec, PlateauRec, PlateauNotRec };

struct WordProfile {
    std::vector<int> w;
    std::vector<PosClass> cls;
    std::vector<bool> dec, rise, rec;
};

// classes per the set definitions with w_{n+1} = infinity
inline WordProfile classify_word(const std::vector<int>& w) {
    WordProfile p;
    p.w = w;
    int n = static_cast<int>(w.size());
    p.dec.assign(n, false);
    p.rise.assign(n, false);
    p.rec.assign(n, false);
    for (int i = n - 1; i >= 0; --i) {
        if (i == n - 1) continue;  // the last position is never a decrease
        if (w[i] > w[i + 1])
            p.dec[i] = true;
        else if (w[i] == w[i + 1] && p.dec[i + 1])
            p.dec[i] = true;
    }
    for (int i = 0; i < n; ++i) {
        p.rise[i] = i == n - 1 || w[i] < w[i + 1];
        bool record = true;
        for (int j = 0; j < i; ++j)
            if (w[j] > w[i]) record = false;
        p.rec[i] = record;
    }
    p.cls.resize(n);
    for (int i = 0; i < n; ++i) {
        bool des = i + 1 < n && w[i] > w[i + 1];
        if (p.dec[i]) {
            p.cls[i] = des ? PosClass::Des : PosClass::DecNotDes;
        } else if (p.rise[i]) {
            p.cls[i] = p.rec[i] ? PosClass::RiseRec : PosClass::RiseNotRec;
        } else {
            p.cls[i] = p.rec[i] ? PosClass::PlateauRec : PosClass::PlateauNotRec;
        }
    }
    return p;
}

// variable table X_0..X_r, Y_0.., Z_0.., T_0.., Yp_0.., Tp_0..
struct DecvalContext {
    int r = 0;
    VarTablePtr table;
    int X(int j) const { return j; }
    int Y(int j) const { return (r + 1) + j; }
    int Z(int j) const { return 2 * (r + 1) + j; }
    int T(int j) const { return 3 * (r + 1) + j; }
    int Yp(int j) const { return 4 * (r + 1) + j; }
    int Tp(int j) const { return 5 * (r + 1) + j; }

    static DecvalContext make(int r) {
        DecvalContext c;
        c.r = r;
        std::vector<std::string> names;
        for (const char* base : {"X", "Y", "Z", "T", "Yp", "Tp"})
            for (int j = 0; j <= r; ++j) names.push_back(std::string(base) + std::to_string(j));
        c.table = make_table(names);
        return c;
    }
};

inline Polynomial word_weight(const DecvalContext& c, const std::vector<int>& w) {
    WordProfile p = classify_word(w);
    Monomial mono(c.table->size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        int v = w[i];
        switch (p.cls[i]) {
            case PosClass::Des: ++mono[c.X(v)]; break;
            case PosClass::DecNotDes: ++mono[c.Z(v)]; break;
            case PosClass::RiseRec: ++mono[c.Yp(v)]; break;
            case PosClass::RiseNotRec: ++mono[c.Y(v)]; break;
            case PosClass::PlateauRec: ++mono[c.Tp(v)]; break;
            case PosClass::PlateauNotRec: ++mono[c.T(v)]; break;
        }
    }
    return Polynomial::monomial(c.table, mono, BigInt(1));
}

inline void enumerate_words(int r, int L, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> w;
    std::function<void()> rec = [&]() {
        f(w);
        if (static_cast<int>(w.size()) == L) return;
        for (int v = 0; v <= r; ++v) {
            w.push_back(v);
            rec();
            w.pop_back();
        }
    };
    rec();
}

// sum of psi(w) over all words of length <= L
inline Polynomial word_weight_sum(const DecvalContext& c, int L) {
    Polynomial sum(c.table);
    enumerate_words(c.r, L, [&](const std::vector<int>& w) { sum += word_weight(c, w); });
    return sum;
}

// the displayed right side of the decrease value theorem, truncated to total
// degree <= L
inline Polynomial decrease_rhs(const DecvalContext& c, int L) {
    const VarTablePtr& T = c.table;
    std::vector<std::uint32_t> mask(T->size(), 1);
    Polynomial one = Polynomial::constant(T, BigInt(1));
    auto inv = [&](const Polynomial& p) { return Polynomial::inverse_trunc(p, mask, L); };
    auto mul = [&](const Polynomial& a, const Polynomial& b) {
        return Polynomial::mul_trunc(a, b, mask, L);
    };
    auto v = [&](int idx) { return Polynomial::var(T, idx); };

    // prod_{1<=j<=r} (1-Z_j)/(1-Z_j+X_j) divided by prod_{0<=j<=r} (1-Tp_j)/(1-Tp_j+Yp_j)
    Polynomial num = one;
    for (int j = 1; j <= c.r; ++j)
        num = mul(num, mul(one - v(c.Z(j)), inv(one - v(c.Z(j)) + v(c.X(j)))));
    for (int j = 0; j <= c.r; ++j)
        num = mul(num, mul(one - v(c.Tp(j)) + v(c.Yp(j)), inv(one - v(c.Tp(j)))));

    Polynomial den = one;
    for (int k = 1; k <= c.r; ++k) {
        Polynomial term = one;
        for (int j = 1; j <= k - 1; ++j)
            term = mul(term, mul(one - v(c.Z(j)), inv(one - v(c.Z(j)) + v(c.X(j)))));
        for (int j = 0; j <= k - 1; ++j)
            term = mul(term, mul(one - v(c.T(j)) + v(c.Y(j)), inv(one - v(c.T(j)))));
        term = mul(term, mul(v(c.X(k)), inv(one - v(c.Z(k)) + v(c.X(k)))));
        den = den - term;
    }
    return mul(num, inv(den));
}

inline bool verify_decrease_theorem(int r, int L) {
    DecvalContext c = DecvalContext::make(r);
    std::vector<std::uint32_t> mask(c.table->size(), 1);
    Polynomial lhs = word_weight_sum(c, L);
    return lhs == decrease_rhs(c, L).truncated(mask, L);
}

// ---- specializations ---------------------------------------------------------

// substitution X=Z=xi, Y=T=eta, Yp=Tp=zeta; verified against the substituted
// closed form (the k-indexed products of the unsubstituted theorem)
struct Decval2Context {
    int r = 0;
    VarTablePtr table;  // xi_0.., eta_0.., zeta_0..
    int xi(int j) const { return j; }
    int eta(int j) const { return (r + 1) + j; }
    int zeta(int j) const { return 2 * (r + 1) + j; }

    static Decval2Context make(int r) {
        Decval2Context c;
        c.r = r;
        std::vector<std::string> names;
        for (const char* base : {"xi", "eta", "zeta"})
            for (int j = 0; j <= r; ++j) names.push_back(std::string(base) + std::to_string(j));
        c.table = make_table(names);
        return c;
    }
};

inline Polynomial word_weight2(const Decval2Context& c, const std::vector<int>& w) {
    WordProfile p = classify_word(w);
    Monomial mono(c.table->size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        int v = w[i];
        if (p.dec[i])
            ++mono[c.xi(v)];
        else if (p.rec[i])
            ++mono[c.zeta(v)];
        else
            ++mono[c.eta(v)];
    }
    return Polynomial::monomial(c.table, mono, BigInt(1));
}

inline bool verify_decrease2(int r, int L) {
    Decval2Context c = Decval2Context::make(r);
    const VarTablePtr& T = c.table;
    std::vector<std::uint32_t> mask(T->size(), 1);
    Polynomial one = Polynomial::constant(T, BigInt(1));
    auto inv = [&](const Polynomial& p) { return Polynomial::inverse_trunc(p, mask, L); };
    auto mul = [&](const Polynomial& a, const Polynomial& b) {
        return Polynomial::mul_trunc(a, b, mask, L);
    };
    auto v = [&](int idx) { return Polynomial::var(T, idx); };

    Polynomial lhs(T);
    enumerate_words(r, L, [&](const std::vector<int>& w) { lhs += word_weight2(c, w); });

    Polynomial num = one;
    for (int j = 1; j <= r; ++j) num = mul(num, one - v(c.xi(j)));
    for (int j = 0; j <= r; ++j) num = mul(num, inv(one - v(c.zeta(j))));
    Polynomial den = one;
    for (int k = 1; k <= r; ++k) {
        Polynomial term = one;
        for (int j = 1; j <= k - 1; ++j) term = mul(term, one - v(c.xi(j)));
        for (int j = 0; j <= k - 1; ++j) term = mul(term, inv(one - v(c.eta(j))));
        den = den - mul(term, v(c.xi(k)));
    }
    Polynomial rhs = mul(num, inv(den));
    return lhs == rhs.truncated(mask, L);
}

// horizontal derangements without riserec values, against the specialized closed form
inline bool verify_decrease_spec(int r, int L) {
    DecvalContext c = DecvalContext::make(r);
    const VarTablePtr& T = c.table;
    std::vector<std::uint32_t> mask(T->size(), 1);
    Polynomial one = Polynomial::constant(T, BigInt(1));
    auto inv = [&](const Polynomial& p) { return Polynomial::inverse_trunc(p, mask, L); };
    auto mul = [&](const Polynomial& a, const Polynomial& b) {
        return Polynomial::mul_trunc(a, b, mask, L);
    };
    auto v = [&](int idx) { return Polynomial::var(T, idx); };

    Polynomial lhs(T);
    enumerate_words(r, L, [&](const std::vector<int>& w) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] == w[i + 1]) return;
        WordProfile p = classify_word(w);
        for (std::size_t i = 0; i < w.size(); ++i)
            if (p.rise[i] && p.rec[i]) return;
        lhs += word_weight(c, w);
    });

    Polynomial den = one;
    for (int i = 1; i <= r; ++i) {
        Polynomial pref = one;
        for (int j = 0; j <= i - 1; ++j) pref = mul(pref, one + v(c.Y(j)));
        pref = pref - one;
        for (int j = i + 1; j <= r; ++j) pref = mul(pref, one + v(c.X(j)));
        den = den - mul(pref, v(c.X(i)));
    }
    return lhs == mul(one, inv(den)).truncated(mask, L);
}

// the finite-r identity behind the eta substitution lemma, exact in s and Y
inline bool verify_le2(int r) {
    std::vector<std::string> names{"s"};
    for (int j = 0; j <= r; ++j) names.push_back("Y" + std::to_string(j));
    VarTablePtr T = make_table(names);
    Polynomial one = Polynomial::constant(T, BigInt(1));
    Polynomial s = Polynomial::var(T, 0);
    auto Y = [&](int j) { return Polynomial::var(T, 1 + j); };
    Polynomial lhs = one, lhs2 = one;
    for (int j = 0; j <= r; ++j) {
        lhs *= one - s * Y(j);
        lhs2 *= one - Y(j);
    }
    Polynomial rhs(T);
    for (int i = 0; i <= r; ++i) {
        Polynomial term = Y(i);
        for (int j = 0; j <= i - 1; ++j) term *= one - s * Y(j);
        for (int j = i + 1; j <= r; ++j) term *= one - Y(j);
        rhs += term;
    }
    return lhs - lhs2 == (one - s) * rhs;
}

// ---- the eta substitution and the main equation --------------------------------

// table: Y_0..Y_{M+1}, t, r_0..r_{l-1}, s_1..s_{l-1}
struct EtaContext {
    int l = 1, M = 0;
    VarTablePtr table;
    int Y(int i) const { return i; }
    int tvar() const { return M + 2; }
    int rvar(int m) const { return M + 3 + m; }
    int svar(int m) const { return M + 3 + l + (m - 1); }

    static EtaContext make(int l, int M) {
        EtaContext c;
        c.l = l;
        c.M = M;
        std::vector<std::string> names;
        for (int i = 0; i <= M + 1; ++i) names.push_back("Y" + std::to_string(i));
        names.push_back("t");
        for (int m = 0; m < l; ++m) names.push_back("r" + std::to_string(m));
        for (int m = 1; m < l; ++m) names.push_back("s" + std::to_string(m));
        c.table = make_table(names);
        return c;
    }

    std::vector<std::uint32_t> ymask() const {
        std::vector<std::uint32_t> mask(table->size(), 0);
        for (int i = 0; i <= M + 1; ++i) mask[Y(i)] = 1;
        return mask;
    }
};

// eta-substituted weight of a word over [0, l(M+1)]; monomials touching
// Y_{M+1} are dropped by the caller's truncation
inline Polynomial eta_word_weight(const EtaContext& c, const std::vector<int>& w) {
    WordProfile p = classify_word(w);
    Polynomial out = Polynomial::constant(c.table, BigInt(1));
    Monomial mono(c.table->size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        int u = w[i] / c.l, m = w[i] % c.l;
        std::fill(mono.begin(), mono.end(), 0);
        if (p.dec[i]) {
            if (m == 0) {
                ++mono[c.tvar()];
                ++mono[c.Y(u - 1)];
            } else {
                ++mono[c.svar(m)];
                ++mono[c.Y(u)];
            }
        } else if (p.rec[i]) {
            ++mono[c.rvar(m)];
            if (m != 0) ++mono[c.svar(m)];
            ++mono[c.Y(u)];
        } else {
            if (m != 0) ++mono[c.svar(m)];
            ++mono[c.Y(u)];
        }
        out *= Polynomial::monomial(c.table, mono, BigInt(1));
    }
    return out;
}

// drop terms containing Y_{M+1}
inline Polynomial eta_drop_overflow(const EtaContext& c, const Polynomial& p) {
    return p.coeff_of(c.Y(c.M + 1), 0);
}

// word sum of eta psi'(w) over lengths <= L, Y_{M+1} monomials dropped;
// letters above l(M+1) only produce dropped monomials, so the alphabet stops there
inline Polynomial eta_word_sum(const EtaContext& c, int L, int exact_length = -1) {
    Polynomial sum(c.table);
    enumerate_words(c.l * (c.M + 1), L, [&](const std::vector<int>& w) {
        if (exact_length >= 0 && static_cast<int>(w.size()) != exact_length) return;
        sum += eta_word_weight(c, w);
    });
    return eta_drop_overflow(c, sum);
}

// H(aY) = prod_{0<=i<=M} (1-aY_i)^{-1} and E(aY) = prod (1+aY_i), truncated
// in total Y degree
inline Polynomial eta_H(const EtaContext& c, const Polynomial& a, int L) {
    std::vector<std::uint32_t> mask = c.ymask();
    Polynomial out = Polynomial::constant(c.table, BigInt(1));
    for (int i = 0; i <= c.M; ++i) {
        Polynomial f = Polynomial::constant(c.table, BigInt(1)) -
                       Polynomial::mul_trunc(a, Polynomial::var(c.table, c.Y(i)), mask, L);
        out = Polynomial::mul_trunc(out, Polynomial::inverse_trunc(f, mask, L), mask, L);
    }
    return out;
}
inline Polynomial eta_E(const EtaContext& c, const Polynomial& a, int L) {
    std::vector<std::uint32_t> mask = c.ymask();
    Polynomial out = Polynomial::constant(c.table, BigInt(1));
    for (int i = 0; i <= c.M; ++i) {
        Polynomial f = Polynomial::constant(c.table, BigInt(1)) +
                       Polynomial::mul_trunc(a, Polynomial::var(c.table, c.Y(i)), mask, L);
        out = Polynomial::mul_trunc(out, f, mask, L);
    }
    return out;
}

// cross-multiplied main equation: W * D == N through total Y degree L
inline bool verify_maineq(int l, int M, int L) {
    EtaContext c = EtaContext::make(l, M);
    std::vector<std::uint32_t> mask = c.ymask();
    Polynomial one = Polynomial::constant(c.table, BigInt(1));
    Polynomial t = Polynomial::var(c.table, c.tvar());
    Polynomial W = eta_word_sum(c, L);
    Polynomial N = Polynomial::mul_trunc(eta_H(c, Polynomial::var(c.table, c.rvar(0)), L),
                                         one - t, mask, L);
    for (int m = 1; m < l; ++m) {
        Polynomial sm = Polynomial::var(c.table, c.svar(m));
        Polynomial rm = Polynomial::var(c.table, c.rvar(m));
        N = Polynomial::mul_trunc(N, eta_E(c, -sm, L), mask, L);
        N = Polynomial::mul_trunc(N, eta_H(c, rm * sm, L), mask, L);
    }
    Polynomial ssum(c.table);
    for (int m = 1; m < l; ++m) ssum += Polynomial::var(c.table, c.svar(m));
    Polynomial D = Polynomial::mul_trunc(one + ssum, eta_H(c, t, L), mask, L) -
                   Polynomial::mul_trunc(t + ssum, eta_H(c, one, L), mask, L);
    Polynomial WD = Polynomial::mul_trunc(W, D, mask, L);
    return WD == N.truncated(mask, L);
}

}  // namespace eforge
