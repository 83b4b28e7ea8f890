#pragma once

// Sparse multivariate polynomials over BigInt with an explicit variable table.
// Terms live in a map ordered by graded-lex on exponent vectors; no zero
// coefficient is ever stored, so equality is structural.

#include "eforge/bigint.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eforge {

struct VarTable {
    std::vector<std::string> names;

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }
    std::size_t size() const { return names.size(); }
    bool operator==(const VarTable& o) const { return names == o.names; }
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_table(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw std::invalid_argument("duplicate variable name");
    return std::make_shared<VarTable>(VarTable{std::move(names)});
}

using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t mono_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint64_t da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, BigInt, GradedLexLess>;

    Polynomial() = default;
    explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {}

    static Polynomial zero(VarTablePtr table) { return Polynomial(std::move(table)); }
    static Polynomial constant(VarTablePtr table, BigInt c) {
        Polynomial p(std::move(table));
        if (!c.is_zero()) p.terms_.emplace(Monomial(p.table_->size(), 0), std::move(c));
        return p;
    }
    static Polynomial monomial(VarTablePtr table, const Monomial& m, BigInt c) {
        Polynomial p(std::move(table));
        if (m.size() != p.table_->size()) throw std::invalid_argument("monomial arity mismatch");
        if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
        return p;
    }
    static Polynomial var(VarTablePtr table, int idx, std::uint32_t exp = 1, BigInt c = BigInt(1)) {
        Monomial m(table->size(), 0);
        if (idx < 0 || idx >= static_cast<int>(m.size()))
            throw std::out_of_range("variable index");
        m[idx] = exp;
        return monomial(std::move(table), m, std::move(c));
    }
    static Polynomial var(VarTablePtr table, const std::string& name, std::uint32_t exp = 1) {
        int idx = table->index_of(name);
        if (idx < 0) throw std::invalid_argument("unknown variable " + name);
        return var(std::move(table), idx, exp);
    }

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
    }
    BigInt constant_term() const {
        if (terms_.empty()) return BigInt(0);
        auto it = terms_.find(Monomial(table_->size(), 0));
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    std::uint64_t total_degree() const {
        return terms_.empty() ? 0 : mono_degree(terms_.rbegin()->first);
    }
    std::uint32_t degree_in(int idx) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[idx]);
        return d;
    }

    void add_term(const Monomial& m, const BigInt& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        a.compatible(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        Polynomial r(table_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.compatible(b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.compatible(b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.compatible(b);
        Polynomial r(a.table_ ? a.table_ : b.table_);
        Monomial prod;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                prod = ma;
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += mb[i];
                r.add_term(prod, ca * cb);
            }
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const BigInt& c) {
        Polynomial r(a.table_);
        if (c.is_zero()) return r;
        for (const auto& [m, co] : a.terms_) r.terms_.emplace(m, co * c);
        return r;
    }
    friend Polynomial operator*(const BigInt& c, const Polynomial& a) { return a * c; }

    Polynomial& operator+=(const Polynomial& b) { *this = *this + b; return *this; }
    Polynomial& operator-=(const Polynomial& b) { *this = *this - b; return *this; }
    Polynomial& operator*=(const Polynomial& b) { *this = *this * b; return *this; }

    Polynomial pow(std::uint32_t e) const {
        Polynomial r = constant(table_, BigInt(1));
        Polynomial base = *this;
        while (e) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    // product with every term whose mask-weighted degree exceeds cap dropped
    static Polynomial mul_trunc(const Polynomial& a, const Polynomial& b,
                                const std::vector<std::uint32_t>& mask, std::uint64_t cap) {
        a.compatible(b);
        Polynomial r(a.table_ ? a.table_ : b.table_);
        Monomial prod;
        for (const auto& [ma, ca] : a.terms_) {
            std::uint64_t wa = masked_degree(ma, mask);
            if (wa > cap) continue;
            for (const auto& [mb, cb] : b.terms_) {
                if (wa + masked_degree(mb, mask) > cap) continue;
                prod = ma;
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += mb[i];
                r.add_term(prod, ca * cb);
            }
        }
        return r;
    }

    // drop all terms whose masked degree exceeds cap
    Polynomial truncated(const std::vector<std::uint32_t>& mask, std::uint64_t cap) const {
        Polynomial r(table_);
        for (const auto& [m, c] : terms_)
            if (masked_degree(m, mask) <= cap) r.terms_.emplace(m, c);
        return r;
    }

    // multiplicative inverse up to masked degree cap; requires constant term
    // +-1 and all other terms of masked degree >= 1
    static Polynomial inverse_trunc(const Polynomial& s, const std::vector<std::uint32_t>& mask,
                                    std::uint64_t cap) {
        BigInt c0 = s.constant_term();
        if (!(c0 == BigInt(1) || c0 == BigInt(-1)))
            throw std::domain_error("inverse_trunc: constant term is not a unit");
        Polynomial rest = s - constant(s.table_, c0);
        for (const auto& [m, c] : rest.terms_)
            if (masked_degree(m, mask) == 0)
                throw std::domain_error("inverse_trunc: non-constant term of masked degree 0");
        // 1/(c0 + p) = c0 * sum_i (-c0 p)^i since c0^2 = 1
        Polynomial u = rest * (-c0);
        Polynomial acc = constant(s.table_, BigInt(1));
        Polynomial power = constant(s.table_, BigInt(1));
        for (std::uint64_t i = 1; i <= cap; ++i) {
            power = mul_trunc(power, u, mask, cap);
            if (power.is_zero()) break;
            acc += power;
        }
        return acc * c0;
    }

    static std::uint64_t masked_degree(const Monomial& m, const std::vector<std::uint32_t>& mask) {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<std::uint64_t>(m[i]) * mask[i];
        return d;
    }

    // exact multivariate division; throws on nonzero remainder
    static Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
        a.compatible(b);
        if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
        Polynomial rem = a;
        Polynomial q(a.table_ ? a.table_ : b.table_);
        const auto& [mb, cb] = *b.terms_.rbegin();
        Monomial qm(mb.size());
        while (!rem.is_zero()) {
            const auto& [ma, ca] = *rem.terms_.rbegin();
            for (std::size_t i = 0; i < ma.size(); ++i) {
                if (ma[i] < mb[i]) throw std::domain_error("exact_div: nonzero remainder");
                qm[i] = ma[i] - mb[i];
            }
            BigInt qc = BigInt::exact_div(ca, cb);
            Polynomial t = monomial(rem.table_, qm, qc);
            q += t;
            rem -= t * b;
        }
        return q;
    }

    // substitute variables (by index) with polynomials over `target`;
    // unlisted variables must have a same-named slot in target
    Polynomial substituted(const VarTablePtr& target,
                           const std::map<int, Polynomial>& subs) const {
        Polynomial r(target);
        for (const auto& [m, c] : terms_) {
            Polynomial term = constant(target, c);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (!m[i]) continue;
                auto it = subs.find(static_cast<int>(i));
                if (it != subs.end()) {
                    term *= it->second.pow(m[i]);
                } else {
                    int idx = target->index_of(table_->names[i]);
                    if (idx < 0)
                        throw std::invalid_argument("substituted: variable " + table_->names[i] +
                                                    " missing from target table");
                    term *= var(target, idx, m[i]);
                }
            }
            r += term;
        }
        return r;
    }

    // re-express over a table that contains (by name) every variable the
    // polynomial actually uses
    Polynomial mapped_to(const VarTablePtr& target) const {
        if (table_ && target && *table_ == *target) {
            Polynomial r = *this;
            return r;
        }
        std::vector<int> where(table_->size());
        for (std::size_t i = 0; i < table_->size(); ++i)
            where[i] = target->index_of(table_->names[i]);
        Polynomial r(target);
        Monomial mm(target->size());
        for (const auto& [m, c] : terms_) {
            std::fill(mm.begin(), mm.end(), 0);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (!m[i]) continue;
                if (where[i] < 0)
                    throw std::invalid_argument("mapped_to: variable " + table_->names[i] +
                                                " missing from target table");
                mm[where[i]] = m[i];
            }
            r.add_term(mm, c);
        }
        return r;
    }

    // coefficient of var^k, with that variable's exponent slot zeroed out
    Polynomial coeff_of(int idx, std::uint32_t k) const {
        Polynomial r(table_);
        for (const auto& [m, c] : terms_)
            if (m[idx] == k) {
                Monomial mm = m;
                mm[idx] = 0;
                r.terms_.emplace(std::move(mm), c);
            }
        return r;
    }

    // evaluate one variable at an integer
    Polynomial eval_at(int idx, const BigInt& v) const {
        Polynomial r(table_);
        for (const auto& [m, c] : terms_) {
            BigInt scale = c;
            for (std::uint32_t i = 0; i < m[idx]; ++i) scale *= v;
            Monomial mm = m;
            mm[idx] = 0;
            r.add_term(mm, scale);
        }
        return r;
    }

    // human-readable form, leading term first: "r^2+2*t*q-1"
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            BigInt a = c;
            if (first) {
                if (a.is_negative()) { out << "-"; a = -a; }
            } else {
                out << (a.is_negative() ? "-" : "+");
                if (a.is_negative()) a = -a;
            }
            first = false;
            bool printed = false;
            if (!(a == BigInt(1)) || mono_degree(m) == 0) {
                out << a.to_string();
                printed = true;
            }
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (!m[i]) continue;
                if (printed) out << "*";
                out << table_->names[i];
                if (m[i] > 1) out << "^" << m[i];
                printed = true;
            }
        }
        return out.str();
    }

private:
    VarTablePtr table_;
    TermMap terms_;

    void compatible(const Polynomial& o) const {
        if (!table_ || !o.table_) return;  // zero polynomial from default ctor
        if (table_ != o.table_ && !(*table_ == *o.table_))
            throw std::invalid_argument("polynomial variable tables differ");
    }
};

}  // namespace eforge
