#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eforge/bigint.hpp"

#include <cstdint>
#include <random>

using eforge::BigInt;

TEST_CASE("small arithmetic agrees with native") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 2000; ++i) {
        long long a = d(rng), b = d(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("divrem reconstruction on wide operands") {
    std::mt19937_64 rng(777);
    auto random_big = [&](int limbs) {
        BigInt x(0);
        for (int i = 0; i < limbs; ++i)
            x = x * BigInt(1LL << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffULL));
        return rng() & 1 ? x : -x;
    };
    for (int i = 0; i < 500; ++i) {
        BigInt a = random_big(1 + static_cast<int>(rng() % 6));
        BigInt b = random_big(1 + static_cast<int>(rng() % 4));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divrem(a, b, q, r);
        CHECK(q * b + r == a);
        BigInt abs_r = r.is_negative() ? -r : r;
        BigInt abs_b = b.is_negative() ? -b : b;
        CHECK(abs_r < abs_b);
        if (!r.is_zero()) CHECK(r.is_negative() == a.is_negative());
    }
}

TEST_CASE("decimal round trip") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    std::string big = "123456789012345678901234567890123456789";
    CHECK(BigInt::from_string(big).to_string() == big);
    CHECK(BigInt::from_string("-" + big).to_string() == "-" + big);
    // factorial of 30 has a known value
    BigInt f(1);
    for (int i = 2; i <= 30; ++i) f *= BigInt(i);
    CHECK(f.to_string() == "265252859812191058636308480000000");
}

TEST_CASE("exact division") {
    BigInt a = BigInt::from_string("123456789123456789123456789");
    BigInt b = BigInt::from_string("987654321987654321");
    CHECK(BigInt::exact_div(a * b, b) == a);
    CHECK_THROWS(BigInt::exact_div(BigInt(7), BigInt(2)));
}

namespace {

// reference division by binary shift-subtract, magnitudes only
void reference_divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    BigInt absa = a.is_negative() ? -a : a;
    BigInt absb = b.is_negative() ? -b : b;
    std::vector<BigInt> shifted{absb};
    BigInt two(2);
    while (shifted.back() <= absa) shifted.push_back(shifted.back() * two);
    q = BigInt(0);
    r = absa;
    for (std::size_t i = shifted.size(); i-- > 0;) {
        q = q * two;
        if (!(r < shifted[i])) {
            r = r - shifted[i];
            q = q + BigInt(1);
        }
    }
    if (a.is_negative() != b.is_negative() && !q.is_zero()) q = -q;
    if (a.is_negative() && !r.is_zero()) r = -r;
}

BigInt from_limbs(const std::vector<unsigned long long>& limbs) {
    BigInt x(0);
    BigInt base = BigInt(1LL << 32);
    for (std::size_t i = limbs.size(); i-- > 0;)
        x = x * base + BigInt(static_cast<long long>(limbs[i]));
    return x;
}

}  // namespace

TEST_CASE("division matches a reference on adversarial near-boundary operands") {
    std::vector<unsigned long long> specials{0u,         1u,          0x7fffffffu,
                                             0x80000000u, 0x80000001u, 0xffffffffu,
                                             0xfffffffeu, 0x55555555u};
    std::vector<BigInt> pool;
    for (auto hi : specials)
        for (auto lo : specials) {
            pool.push_back(from_limbs({lo, hi}));
            pool.push_back(from_limbs({lo, hi, 1u}));
            pool.push_back(from_limbs({0u, lo, hi}));
        }
    for (const auto& a : pool)
        for (const auto& b : pool) {
            if (b.is_zero()) continue;
            BigInt q, r, qr, rr;
            BigInt::divrem(a, b, q, r);
            reference_divrem(a, b, qr, rr);
            CHECK(q == qr);
            CHECK(r == rr);
        }
    // the classic estimate-too-large pattern that forces the correction step
    BigInt u = from_limbs({0u, 0u, 0x80000000u, 0x7fffffffu});
    BigInt v = from_limbs({1u, 0u, 0x80000000u});
    BigInt q, r, qr, rr;
    BigInt::divrem(u, v, q, r);
    reference_divrem(u, v, qr, rr);
    CHECK(q == qr);
    CHECK(r == rr);
    CHECK(q * v + r == u);
}
