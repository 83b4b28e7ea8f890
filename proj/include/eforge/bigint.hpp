#pragma once

// Arbitrary-precision signed integers, sign-magnitude over 32-bit limbs.
// Only what exact polynomial arithmetic needs: ring ops, truncated divrem,
// comparisons and decimal I/O.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace eforge {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        neg_ = v < 0;
        // avoid overflow on LLONG_MIN
        unsigned long long m = neg_ ? ~static_cast<unsigned long long>(v) + 1ULL
                                    : static_cast<unsigned long long>(v);
        while (m) {
            mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') { neg = s[0] == '-'; i = 1; }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
        }
        r.neg_ = neg && !r.mag_.empty();
        return r;
    }

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return neg_; }
    int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    bool fits_longlong() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = abs_u64();
        return neg_ ? m <= 0x8000000000000000ULL : m < 0x8000000000000000ULL;
    }
    long long to_longlong() const {
        if (!fits_longlong()) throw std::overflow_error("BigInt: does not fit long long");
        unsigned long long m = abs_u64();
        return neg_ ? -static_cast<long long>(m - 1) - 1 : static_cast<long long>(m);
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.mag_.empty()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.neg_ == b.neg_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_ && !r.mag_.empty();
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return r;
            if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.neg_ = a.neg_; }
            else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.neg_ = b.neg_; }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.mag_[i + b.mag_.size()] = static_cast<std::uint32_t>(carry);
        }
        trim(r.mag_);
        r.neg_ = a.neg_ != b.neg_;
        return r;
    }

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    // truncated division: a = q*b + r, |r| < |b|, sign(r) = sign(a)
    static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); r = a; return; }
        q = BigInt(); r = BigInt();
        if (b.mag_.size() == 1) {
            std::uint32_t rem = 0;
            q.mag_ = divmod_small_mag(a.mag_, b.mag_[0], rem);
            if (rem) r.mag_.push_back(rem);
        } else {
            divmod_knuth(a.mag_, b.mag_, q.mag_, r.mag_);
        }
        trim(q.mag_); trim(r.mag_);
        q.neg_ = !q.mag_.empty() && (a.neg_ != b.neg_);
        r.neg_ = !r.mag_.empty() && a.neg_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r; divrem(a, b, q, r); return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r; divrem(a, b, q, r); return r;
    }

    // exact division; throws if the remainder is nonzero
    static BigInt exact_div(const BigInt& a, const BigInt& b) {
        BigInt q, r; divrem(a, b, q, r);
        if (!r.is_zero()) throw std::domain_error("BigInt: inexact division");
        return q;
    }

    std::string to_string() const {
        if (mag_.empty()) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string out;
        while (!m.empty()) {
            std::uint32_t rem = 0;
            m = divmod_small_mag(m, 1000000000u, rem);
            trim(m);
            std::string chunk = std::to_string(rem);
            if (!m.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        if (neg_) out.insert(0, 1, '-');
        return out;
    }

private:
    bool neg_ = false;
    std::vector<std::uint32_t> mag_;  // little-endian, no trailing zeros

    unsigned long long abs_u64() const {
        unsigned long long m = 0;
        if (mag_.size() > 1) m = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) m |= mag_[0];
        return m;
    }

    void mul_small(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }
    void add_small(std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < mag_.size(); ++i) {
            std::uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < small.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + small[i] + carry;
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        for (std::size_t i = small.size(); carry && i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry;
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? b[i] : 0);
            borrow = cur < 0;
            if (cur < 0) cur += (1LL << 32);
            r[i] = static_cast<std::uint32_t>(cur);
        }
        trim(r);
        return r;
    }
    static std::vector<std::uint32_t> divmod_small_mag(const std::vector<std::uint32_t>& a,
                                                       std::uint32_t d, std::uint32_t& rem) {
        std::vector<std::uint32_t> q(a.size());
        std::uint64_t r = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            r = cur % d;
        }
        rem = static_cast<std::uint32_t>(r);
        trim(q);
        return q;
    }

    // Knuth algorithm D, |a| >= |b|, b has >= 2 limbs
    static void divmod_knuth(std::vector<std::uint32_t> u, std::vector<std::uint32_t> v,
                             std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        int shift = 0;
        for (std::uint32_t top = v.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        shl_bits(u, shift);
        shl_bits(v, shift);
        const std::size_t n = v.size();
        const std::size_t m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);
        const std::uint64_t base = 1ULL << 32;
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t top2 = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = top2 / v[n - 1];
            std::uint64_t rhat = top2 % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
                borrow = t < 0;
                if (t < 0) t += base;
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            bool over = t < 0;
            if (t < 0) t += base;
            u[j + n] = static_cast<std::uint32_t>(t);
            if (over) {
                // add back, qhat was one too large
                --qhat;
                std::uint64_t c = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(u[i + j]) + v[i] + c;
                    u[i + j] = static_cast<std::uint32_t>(cur);
                    c = cur >> 32;
                }
                u[j + n] = static_cast<std::uint32_t>(u[j + n] + c);
            }
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        r.assign(u.begin(), u.begin() + n);
        shr_bits(r, shift);
        trim(q);
        trim(r);
    }
    static void shl_bits(std::vector<std::uint32_t>& m, int s) {
        if (!s) return;
        std::uint32_t carry = 0;
        for (auto& limb : m) {
            std::uint32_t next = limb >> (32 - s);
            limb = (limb << s) | carry;
            carry = next;
        }
        if (carry) m.push_back(carry);
    }
    static void shr_bits(std::vector<std::uint32_t>& m, int s) {
        if (!s) return;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint32_t next = i + 1 < m.size() ? m[i + 1] << (32 - s) : 0;
            m[i] = (m[i] >> s) | next;
        }
        trim(m);
    }
};

}  // namespace eforge
