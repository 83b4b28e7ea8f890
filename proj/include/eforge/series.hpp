#pragma once

// Truncated formal power series in one distinguished variable z, with
// coefficients in any exact ring (Polynomial, SymFuncH, ...). Arithmetic
// never looks above the cap.

#include "eforge/polynomial.hpp"
#include "eforge/qanalog.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace eforge {

template <class Coeff>
struct TruncatedSeries {
    int cap = 0;
    std::vector<Coeff> c;  // c[i] is the z^i coefficient, size cap+1

    TruncatedSeries() = default;
    TruncatedSeries(int cap_, Coeff zero) : cap(cap_), c(cap_ + 1, zero) {}

    static TruncatedSeries one(int cap, Coeff zero, Coeff unit) {
        TruncatedSeries s(cap, zero);
        s.c[0] = unit;
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check(a, b);
        TruncatedSeries r = a;
        for (int i = 0; i <= r.cap; ++i) r.c[i] = r.c[i] + b.c[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        check(a, b);
        TruncatedSeries r = a;
        for (int i = 0; i <= r.cap; ++i) r.c[i] = r.c[i] - b.c[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check(a, b);
        TruncatedSeries r(a.cap, zero_like(a.c[0]));
        for (int i = 0; i <= a.cap; ++i)
            for (int j = 0; i + j <= a.cap; ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        return r;
    }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        check(a, b);
        return a.c == b.c;
    }

    // q = n / d, layer by layer, dividing by d.c[0] through `div0`
    static TruncatedSeries divide(const TruncatedSeries& n, const TruncatedSeries& d,
                                  std::function<Coeff(const Coeff&)> div0) {
        check(n, d);
        TruncatedSeries q(n.cap, zero_like(n.c[0]));
        for (int k = 0; k <= n.cap; ++k) {
            Coeff acc = n.c[k];
            for (int i = 0; i < k; ++i) acc = acc - q.c[i] * d.c[k - i];
            q.c[k] = div0(acc);
        }
        return q;
    }

private:
    static void check(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.cap != b.cap) throw std::invalid_argument("series caps differ");
    }
    static Coeff zero_like(const Coeff& v) { return v - v; }
};

using PolySeries = TruncatedSeries<Polynomial>;

inline PolySeries poly_series_zero(const VarTablePtr& table, int cap) {
    return PolySeries(cap, Polynomial::zero(table));
}

// inverse of a series with unit (+-1) constant term
inline PolySeries series_invert(const PolySeries& s) {
    BigInt c0 = s.c[0].constant_term();
    if (!s.c[0].is_constant() || !(c0 == BigInt(1) || c0 == BigInt(-1)))
        throw std::domain_error("series_invert: constant term is not a unit");
    PolySeries num = PolySeries::one(s.cap, s.c[0] - s.c[0], Polynomial::constant(s.c[0].table(), BigInt(1)));
    return PolySeries::divide(num, s, [&](const Polynomial& p) { return p * c0; });
}

// (f(z) - f(qz)) / z: degree-n coefficient scaled by (1 - q^n) shifts to n-1
inline PolySeries euler_diff(const PolySeries& s, int qvar) {
    const VarTablePtr& table = s.c[0].table();
    PolySeries r = poly_series_zero(table, s.cap);
    for (int n = 1; n <= s.cap; ++n) {
        Polynomial scale = Polynomial::constant(table, BigInt(1)) -
                           Polynomial::var(table, qvar, static_cast<std::uint32_t>(n));
        r.c[n - 1] = s.c[n] * scale;
    }
    r.c[s.cap] = Polynomial::zero(table);
    return r;
}

// Series in the q-exponential normalization: value = sum a_n z^n / (q;q)_n.
// Products convolve with q-binomial weights, keeping everything integral.
struct QExpSeries {
    int cap = 0;
    int qvar = 0;
    std::vector<Polynomial> a;

    QExpSeries() = default;
    QExpSeries(const VarTablePtr& table, int qvar_, int cap_)
        : cap(cap_), qvar(qvar_), a(cap_ + 1, Polynomial::zero(table)) {}

    const VarTablePtr& table() const { return a[0].table(); }

    friend QExpSeries operator+(const QExpSeries& x, const QExpSeries& y) {
        QExpSeries r = x;
        for (int i = 0; i <= r.cap; ++i) r.a[i] += y.a[i];
        return r;
    }
    friend QExpSeries operator-(const QExpSeries& x, const QExpSeries& y) {
        QExpSeries r = x;
        for (int i = 0; i <= r.cap; ++i) r.a[i] -= y.a[i];
        return r;
    }
    friend QExpSeries operator*(const QExpSeries& x, const QExpSeries& y) {
        QExpSeries r(x.table(), x.qvar, x.cap);
        for (int n = 0; n <= x.cap; ++n)
            for (int k = 0; k <= n; ++k)
                r.a[n] += q_binomial(x.table(), x.qvar, n, k) * x.a[k] * y.a[n - k];
        return r;
    }
    friend bool operator==(const QExpSeries& x, const QExpSeries& y) { return x.a == y.a; }

    // solve x = q * d for q, dividing each layer exactly by d.a[0]
    static QExpSeries divide(const QExpSeries& n, const QExpSeries& d) {
        QExpSeries q(n.table(), n.qvar, n.cap);
        for (int m = 0; m <= n.cap; ++m) {
            Polynomial acc = n.a[m];
            for (int k = 1; k <= m; ++k)
                acc -= q_binomial(n.table(), n.qvar, m, k) * d.a[k] * q.a[m - k];
            q.a[m] = Polynomial::exact_div(acc, d.a[0]);
        }
        return q;
    }
};

// e(yz;q) with y a monomial factor: a_n = y^n
inline QExpSeries q_exponential(const VarTablePtr& table, int qvar, int cap,
                                const Polynomial& y) {
    QExpSeries s(table, qvar, cap);
    Polynomial p = Polynomial::constant(table, BigInt(1));
    for (int n = 0; n <= cap; ++n) {
        s.a[n] = p;
        p *= y;
    }
    return s;
}

}  // namespace eforge
