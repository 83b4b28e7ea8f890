#pragma once

// Symmetric functions expanded in the complete homogeneous basis h_lambda,
// with polynomial coefficients (t, r, s_m, ...), plus fundamental
// quasisymmetric functions F_{n,S}, the omega involution, the normalized
// stable principal specialization and monomial expansions.

#include "eforge/polynomial.hpp"
#include "eforge/qanalog.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace eforge {

using Partition = std::vector<int>;  // weakly decreasing, positive parts

inline Partition partition_union(const Partition& a, const Partition& b) {
    Partition r = a;
    r.insert(r.end(), b.begin(), b.end());
    std::sort(r.begin(), r.end(), std::greater<int>());
    return r;
}

inline int partition_sum(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

class SymFuncH {
public:
    SymFuncH() = default;
    explicit SymFuncH(VarTablePtr coeff_table) : table_(std::move(coeff_table)) {}

    static SymFuncH zero(VarTablePtr table) { return SymFuncH(std::move(table)); }
    static SymFuncH unit(VarTablePtr table) {
        SymFuncH f(table);
        f.terms_.emplace(Partition{}, Polynomial::constant(table, BigInt(1)));
        return f;
    }
    // h_n (n = 0 gives the unit)
    static SymFuncH h(VarTablePtr table, int n) {
        if (n < 0) throw std::invalid_argument("h: negative degree");
        SymFuncH f(table);
        Partition p;
        if (n > 0) p.push_back(n);
        f.terms_.emplace(std::move(p), Polynomial::constant(table, BigInt(1)));
        return f;
    }
    static SymFuncH h_lambda(VarTablePtr table, Partition lambda, Polynomial coeff) {
        SymFuncH f(table);
        std::sort(lambda.begin(), lambda.end(), std::greater<int>());
        if (!coeff.is_zero()) f.terms_.emplace(std::move(lambda), std::move(coeff));
        return f;
    }

    const VarTablePtr& table() const { return table_; }
    const std::map<Partition, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& p, const Polynomial& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const SymFuncH& a, const SymFuncH& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SymFuncH& a, const SymFuncH& b) { return !(a == b); }

    friend SymFuncH operator+(const SymFuncH& a, const SymFuncH& b) {
        SymFuncH r = a;
        if (!r.table_) r.table_ = b.table_;
        for (const auto& [p, c] : b.terms_) r.add_term(p, c);
        return r;
    }
    friend SymFuncH operator-(const SymFuncH& a, const SymFuncH& b) {
        SymFuncH r = a;
        if (!r.table_) r.table_ = b.table_;
        for (const auto& [p, c] : b.terms_) r.add_term(p, -c);
        return r;
    }
    friend SymFuncH operator*(const SymFuncH& a, const SymFuncH& b) {
        SymFuncH r(a.table_ ? a.table_ : b.table_);
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_)
                r.add_term(partition_union(pa, pb), ca * cb);
        return r;
    }
    friend SymFuncH operator*(const SymFuncH& a, const Polynomial& c) {
        SymFuncH r(a.table_);
        for (const auto& [p, co] : a.terms_) r.add_term(p, co * c);
        return r;
    }
    friend SymFuncH operator*(const Polynomial& c, const SymFuncH& a) { return a * c; }

    SymFuncH& operator+=(const SymFuncH& b) { *this = *this + b; return *this; }
    SymFuncH& operator-=(const SymFuncH& b) { *this = *this - b; return *this; }

    // divide every coefficient exactly by d
    SymFuncH coeff_exact_div(const Polynomial& d) const {
        SymFuncH r(table_);
        for (const auto& [p, c] : terms_) r.add_term(p, Polynomial::exact_div(c, d));
        return r;
    }

    // extract the SymFuncH coefficient of var^k across all h-terms
    SymFuncH coeff_of(int var, std::uint32_t k) const {
        SymFuncH r(table_);
        for (const auto& [p, c] : terms_) r.add_term(p, c.coeff_of(var, k));
        return r;
    }

    std::uint32_t degree_in(int var) const {
        std::uint32_t d = 0;
        for (const auto& [p, c] : terms_) d = std::max(d, c.degree_in(var));
        return d;
    }

    bool homogeneous_of_degree(int n) const {
        for (const auto& [p, c] : terms_)
            if (partition_sum(p) != n) return false;
        return true;
    }

    // every stored coefficient has nonnegative integer coefficients
    bool coefficients_nonnegative() const {
        for (const auto& [p, c] : terms_)
            for (const auto& [m, co] : c.terms())
                if (co.is_negative()) return false;
        return true;
    }

    // normalized stable principal specialization of a degree-n function:
    // h_lambda -> (q;q)_n / prod (q;q)_{lambda_i}, an exact q-multinomial
    Polynomial nps(int n, const VarTablePtr& target, int qvar) const {
        Polynomial out(target);
        for (const auto& [p, c] : terms_) {
            if (partition_sum(p) != n)
                throw std::invalid_argument("nps: input not homogeneous of the stated degree");
            std::vector<int> parts(p.begin(), p.end());
            if (parts.empty()) parts.push_back(0);
            out += c.mapped_to(target) * q_multinomial(target, qvar, n, parts);
        }
        return out;
    }

    // exact expansion in x variables (faithful for degree-n input when N >= n)
    Polynomial monomial_expand(const VarTablePtr& target, const std::vector<int>& xvars) const {
        Polynomial out(target);
        for (const auto& [p, c] : terms_) {
            Polynomial term = c.mapped_to(target);
            for (int part : p) term *= h_expand(target, xvars, part);
            out += term;
        }
        return out;
    }

    static Polynomial h_expand(const VarTablePtr& target, const std::vector<int>& xvars, int m) {
        Polynomial out(target);
        Monomial mono(target->size(), 0);
        // all monomials of total degree m in the x variables, coefficient 1
        std::function<void(int, int)> rec = [&](int pos, int rem) {
            if (pos == static_cast<int>(xvars.size()) - 1) {
                mono[xvars[pos]] = static_cast<std::uint32_t>(rem);
                out.add_term(mono, BigInt(1));
                mono[xvars[pos]] = 0;
                return;
            }
            for (int take = 0; take <= rem; ++take) {
                mono[xvars[pos]] = static_cast<std::uint32_t>(take);
                rec(pos + 1, rem - take);
            }
            mono[xvars[pos]] = 0;
        };
        if (xvars.empty()) throw std::invalid_argument("h_expand: no x variables");
        rec(0, m);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << "(" << c.to_string() << ")*h[";
            for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
            out << "]";
        }
        return out.str();
    }

private:
    VarTablePtr table_;
    std::map<Partition, Polynomial> terms_;
};

// e_n in the h basis via sum_{i=0}^n (-1)^i e_i h_{n-i} = 0
inline SymFuncH e_in_h(const VarTablePtr& table, int n) {
    std::vector<SymFuncH> e{SymFuncH::unit(table)};
    for (int m = 1; m <= n; ++m) {
        SymFuncH acc = SymFuncH::zero(table);
        for (int i = 0; i < m; ++i) {
            SymFuncH term = e[i] * SymFuncH::h(table, m - i);
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        // e_m = (-1)^{m+1} * acc
        e.push_back(m % 2 == 1 ? acc : SymFuncH::zero(table) - acc);
    }
    return e[n];
}

// ---- fundamental quasisymmetric functions ----------------------------------

struct QSymF {
    int n = 0;
    VarTablePtr coeff_table;
    std::map<std::uint32_t, Polynomial> f;  // subset of [n-1] as bitmask -> coefficient

    static QSymF zero(int n, VarTablePtr table) { return QSymF{n, std::move(table), {}}; }
    static QSymF fundamental(int n, VarTablePtr table, std::uint32_t mask) {
        QSymF q{n, table, {}};
        q.f.emplace(mask, Polynomial::constant(table, BigInt(1)));
        return q;
    }

    void add(std::uint32_t mask, const Polynomial& c) {
        if (c.is_zero()) return;
        if (n > 1 && mask >= (1u << (n - 1)))
            throw std::invalid_argument("QSymF: subset not within [n-1]");
        if (n <= 1 && mask != 0) throw std::invalid_argument("QSymF: subset not within [n-1]");
        auto [it, ins] = f.emplace(mask, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) f.erase(it);
        }
    }

    friend bool operator==(const QSymF& a, const QSymF& b) { return a.n == b.n && a.f == b.f; }

    friend QSymF operator+(const QSymF& a, const QSymF& b) {
        QSymF r = a;
        for (const auto& [m, c] : b.f) r.add(m, c);
        return r;
    }
    friend QSymF operator-(const QSymF& a, const QSymF& b) {
        QSymF r = a;
        for (const auto& [m, c] : b.f) r.add(m, -c);
        return r;
    }
};

// omega maps F_{n,S} to F_{n,[n-1] minus S}
inline QSymF omega_F(const QSymF& q) {
    QSymF r = QSymF::zero(q.n, q.coeff_table);
    std::uint32_t full = q.n > 1 ? (1u << (q.n - 1)) - 1 : 0;
    for (const auto& [m, c] : q.f) r.add(full ^ m, c);
    return r;
}

// nps(F_{n,S}) = q^{sum S} after clearing (q;q)_n
inline Polynomial qsym_nps(const QSymF& q, const VarTablePtr& target, int qvar) {
    Polynomial out(target);
    for (const auto& [mask, c] : q.f) {
        int s = 0;
        for (int i = 1; i < q.n; ++i)
            if (mask & (1u << (i - 1))) s += i;
        out += c.mapped_to(target) * Polynomial::var(target, qvar, static_cast<std::uint32_t>(s));
    }
    return out;
}

// sum over chains i_1 >= ... >= i_n >= 1 (values <= N) strict at S
inline Polynomial qsym_monomial_expand(const QSymF& q, const VarTablePtr& target,
                                       const std::vector<int>& xvars) {
    int N = static_cast<int>(xvars.size());
    Polynomial out(target);
    Monomial mono(target->size(), 0);
    for (const auto& [mask, c] : q.f) {
        Polynomial sum(target);
        // positions are 0-based; strictness between pos and pos+1 keyed by bit pos
        std::function<void(int, int)> rec2 = [&](int pos, int hi) {
            if (hi < 1) return;
            if (pos == q.n) {
                sum.add_term(mono, BigInt(1));
                return;
            }
            for (int v = 1; v <= hi; ++v) {
                ++mono[xvars[v - 1]];
                int next_hi = (pos + 1 < q.n && (mask & (1u << pos))) ? v - 1 : v;
                if (pos + 1 == q.n)
                    rec2(pos + 1, 1);
                else
                    rec2(pos + 1, next_hi);
                --mono[xvars[v - 1]];
            }
        };
        if (q.n == 0) {
            sum.add_term(mono, BigInt(1));
        } else {
            rec2(0, N);
        }
        out += c.mapped_to(target) * sum;
    }
    return out;
}

// the x-monomial whose descent set is exactly T, used as a signature
inline Monomial qsym_signature_monomial(int n, std::uint32_t tmask, const VarTablePtr& target,
                                        const std::vector<int>& xvars) {
    std::vector<int> blocks;
    int prev = 0;
    for (int i = 1; i < n; ++i)
        if (tmask & (1u << (i - 1))) {
            blocks.push_back(i - prev);
            prev = i;
        }
    blocks.push_back(n - prev);
    int k = static_cast<int>(blocks.size());
    Monomial mono(target->size(), 0);
    for (int j = 0; j < k; ++j)  // block j (0-based) takes value k-j
        mono[xvars[k - j - 1]] = static_cast<std::uint32_t>(blocks[j]);
    return mono;
}

// invert monomial_expand on a quasisymmetric polynomial of degree n (N >= n);
// coefficients may involve non-x variables; throws if p is not quasisymmetric
inline QSymF qsym_from_polynomial(const Polynomial& p, int n, const VarTablePtr& target,
                                  const std::vector<int>& xvars) {
    if (static_cast<int>(xvars.size()) < n)
        throw std::invalid_argument("qsym_from_polynomial: need at least n variables");
    QSymF out = QSymF::zero(n, target);
    std::uint32_t full = n > 1 ? (1u << (n - 1)) - 1 : 0;
    // p_T = coefficient of the signature monomial of T; c_S by Moebius inversion
    std::map<std::uint32_t, Polynomial> pT;
    for (std::uint32_t T = 0; T <= full; ++T) {
        Monomial sig = qsym_signature_monomial(n, T, target, xvars);
        Polynomial coeff(target);
        for (const auto& [m, c] : p.terms()) {
            bool match = true;
            for (int xv : xvars)
                if (m[xv] != sig[xv]) { match = false; break; }
            if (!match) continue;
            Monomial rest = m;
            for (int xv : xvars) rest[xv] = 0;
            coeff.add_term(rest, c);
        }
        pT.emplace(T, std::move(coeff));
        if (full == 0) break;
    }
    for (std::uint32_t S = 0; S <= full; ++S) {
        Polynomial c(target);
        for (std::uint32_t T = S;; T = (T - 1) & S) {
            int sign = std::popcount(S ^ T) % 2 ? -1 : 1;
            c += pT.at(T) * BigInt(sign);
            if (T == 0) break;
        }
        out.add(S, c);
        if (full == 0) break;
    }
    if (qsym_monomial_expand(out, target, xvars) != p)
        throw std::domain_error("qsym_from_polynomial: input is not quasisymmetric");
    return out;
}

}  // namespace eforge
