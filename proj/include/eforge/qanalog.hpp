#pragma once

// q-integers, q-factorials, q-binomial and q-multinomial coefficients,
// and the q-shifted factorial (a;q)_n, all as exact polynomials.

#include "eforge/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace eforge {

// [n]_x = 1 + x + ... + x^{n-1}, with [0]_x = 0
inline Polynomial q_int_in(const VarTablePtr& table, int xvar, int n) {
    if (n < 0) throw std::invalid_argument("q_int: negative n");
    Polynomial r(table);
    Monomial m(table->size(), 0);
    for (int i = 0; i < n; ++i) {
        m[xvar] = static_cast<std::uint32_t>(i);
        r.add_term(m, BigInt(1));
    }
    return r;
}

inline Polynomial q_int(const VarTablePtr& table, int qvar, int n) {
    return q_int_in(table, qvar, n);
}

// [n]_q! = [1]_q [2]_q ... [n]_q
inline Polynomial q_factorial(const VarTablePtr& table, int qvar, int n) {
    Polynomial r = Polynomial::constant(table, BigInt(1));
    for (int i = 1; i <= n; ++i) r *= q_int_in(table, qvar, i);
    return r;
}

// (q;q)_n = prod_{i=1}^{n} (1 - q^i)
inline Polynomial qq_pochhammer(const VarTablePtr& table, int qvar, int n) {
    Polynomial r = Polynomial::constant(table, BigInt(1));
    for (int i = 1; i <= n; ++i) {
        Polynomial f = Polynomial::constant(table, BigInt(1)) -
                       Polynomial::var(table, qvar, static_cast<std::uint32_t>(i));
        r *= f;
    }
    return r;
}

// q-binomial via exact division of q-factorials
inline Polynomial q_binomial(const VarTablePtr& table, int qvar, int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("q_binomial: k out of range");
    Polynomial num = qq_pochhammer(table, qvar, n);
    Polynomial den = qq_pochhammer(table, qvar, k) * qq_pochhammer(table, qvar, n - k);
    return Polynomial::exact_div(num, den);
}

// q-multinomial coefficient [n; k_0,...,k_m]_q
inline Polynomial q_multinomial(const VarTablePtr& table, int qvar, int n,
                                const std::vector<int>& parts) {
    long long sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
        sum += p;
    }
    if (sum != n) throw std::invalid_argument("q_multinomial: parts do not sum to n");
    Polynomial num = qq_pochhammer(table, qvar, n);
    Polynomial den = Polynomial::constant(table, BigInt(1));
    for (int p : parts) den *= qq_pochhammer(table, qvar, p);
    return Polynomial::exact_div(num, den);
}

}  // namespace eforge
