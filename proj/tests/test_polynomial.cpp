#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eforge/polynomial.hpp"
#include "eforge/qanalog.hpp"
#include "eforge/series.hpp"

#include <random>

using namespace eforge;

namespace {

VarTablePtr qt() {
    static VarTablePtr t = make_table({"q"});
    return t;
}

Polynomial q(std::uint32_t e = 1) { return Polynomial::var(qt(), 0, e); }
Polynomial one() { return Polynomial::constant(qt(), BigInt(1)); }

Polynomial random_poly(std::mt19937& rng, const VarTablePtr& table, int maxdeg, int terms) {
    Polynomial p(table);
    std::uniform_int_distribution<int> dcoef(-4, 4), dexp(0, maxdeg);
    for (int i = 0; i < terms; ++i) {
        Monomial m(table->size());
        for (auto& e : m) e = static_cast<std::uint32_t>(dexp(rng));
        p.add_term(m, BigInt(dcoef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("basic products") {
    CHECK(q() * q() == q(2));
    CHECK((one() - q()) * (one() + q()) == one() - q(2));
    // (1+q)(1+q+q^2) = 1+2q+2q^2+q^3 = [2]_q [3]_q
    Polynomial lhs = (one() + q()) * (one() + q() + q(2));
    Polynomial rhs = one() + BigInt(2) * q() + BigInt(2) * q(2) + q(3);
    CHECK(lhs == rhs);
    CHECK(lhs == q_int(qt(), 0, 2) * q_int(qt(), 0, 3));
}

TEST_CASE("ring axioms on random polynomials") {
    VarTablePtr t = make_table({"x", "y", "z"});
    std::mt19937 rng(99);
    for (int i = 0; i < 60; ++i) {
        Polynomial a = random_poly(rng, t, 3, 4);
        Polynomial b = random_poly(rng, t, 3, 4);
        Polynomial c = random_poly(rng, t, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Polynomial::zero(t));
    }
}

TEST_CASE("mismatched tables are rejected") {
    VarTablePtr t1 = make_table({"x"});
    VarTablePtr t2 = make_table({"y"});
    Polynomial a = Polynomial::var(t1, 0);
    Polynomial b = Polynomial::var(t2, 0);
    CHECK_THROWS(a + b);
    CHECK_THROWS(a * b);
}

TEST_CASE("q-integers and q-binomials") {
    CHECK(q_int(qt(), 0, 0) == Polynomial::zero(qt()));
    CHECK(q_int(qt(), 0, 1) == one());
    CHECK(q_int(qt(), 0, 3) == one() + q() + q(2));
    CHECK(q_binomial(qt(), 0, 5, 0) == one());
    CHECK(q_binomial(qt(), 0, 2, 1) == one() + q());
    // [4; 2,2]_q = 1 + q + 2q^2 + q^3 + q^4, checked against exact division
    Polynomial m = q_multinomial(qt(), 0, 4, {2, 2});
    CHECK(m == one() + q() + BigInt(2) * q(2) + q(3) + q(4));
    CHECK(m * qq_pochhammer(qt(), 0, 2) * qq_pochhammer(qt(), 0, 2) ==
          qq_pochhammer(qt(), 0, 4));
    CHECK_THROWS(q_binomial(qt(), 0, 2, 3));
    CHECK_THROWS(q_multinomial(qt(), 0, 4, {2, 1}));
}

TEST_CASE("q-binomial symmetry and counting specialization") {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            Polynomial b = q_binomial(qt(), 0, n, k);
            CHECK(b == q_binomial(qt(), 0, n, n - k));
            long long binom = 1;
            for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
            CHECK(b.eval_at(0, BigInt(1)).constant_term() == BigInt(binom));
        }
}

TEST_CASE("exact division errors on nonzero remainder") {
    CHECK_THROWS(Polynomial::exact_div(q(2) + one(), q() + one()));
    Polynomial seven = Polynomial::constant(qt(), BigInt(7));
    Polynomial a = (q(3) - one()) * (q(2) + q() + seven);
    CHECK(Polynomial::exact_div(a, q(3) - one()) == q(2) + q() + seven);
}

TEST_CASE("series inversion and euler differential") {
    PolySeries s = poly_series_zero(qt(), 6);
    s.c[0] = one();
    s.c[1] = -one();  // 1 - z
    PolySeries inv = series_invert(s);
    for (int i = 0; i <= 6; ++i) CHECK(inv.c[i] == one());  // geometric series
    CHECK(series_invert(inv) == s);
    PolySeries unit = PolySeries::one(6, Polynomial::zero(qt()), one());
    CHECK(series_invert(unit) == unit);

    // delta_z(E_N(z)) = E_N(z) one degree lower, in cleared form
    int N = 6;
    PolySeries e = poly_series_zero(qt(), N);
    for (int n = 0; n <= N; ++n)
        e.c[n] = Polynomial::exact_div(qq_pochhammer(qt(), 0, N), qq_pochhammer(qt(), 0, n));
    PolySeries d = euler_diff(e, 0);
    for (int n = 0; n < N; ++n) CHECK(d.c[n] == e.c[n]);

    PolySeries c = PolySeries::one(4, Polynomial::zero(qt()), BigInt(5) * one());
    PolySeries dc = euler_diff(c, 0);
    for (int n = 0; n <= 4; ++n) CHECK(dc.c[n].is_zero());
    CHECK_THROWS(series_invert(poly_series_zero(qt(), 2)));
}

TEST_CASE("euler differential fixes q-exponentials with symbolic scale") {
    // delta_z(e(yz;q)) = y e(yz;q) for y in {1, t, r}, cleared of denominators
    VarTablePtr t = make_table({"q", "t", "r"});
    int N = 5;
    for (int which = 0; which < 3; ++which) {
        Polynomial y = which == 0 ? Polynomial::constant(t, BigInt(1))
                                  : Polynomial::var(t, which);
        TruncatedSeries<Polynomial> e(N, Polynomial::zero(t));
        Polynomial p = Polynomial::constant(t, BigInt(1));
        for (int n = 0; n <= N; ++n) {
            e.c[n] = p * Polynomial::exact_div(qq_pochhammer(t, 0, N), qq_pochhammer(t, 0, n));
            p *= y;
        }
        PolySeries d = euler_diff(e, 0);
        for (int n = 0; n < N; ++n) CHECK(d.c[n] == y * e.c[n]);
    }
}

TEST_CASE("series inverse times the series is one, randomized") {
    VarTablePtr t = make_table({"q", "t"});
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        PolySeries s = poly_series_zero(t, 5);
        s.c[0] = Polynomial::constant(t, BigInt(rng() & 1 ? 1 : -1));
        for (int i = 1; i <= 5; ++i) s.c[i] = random_poly(rng, t, 2, 3);
        PolySeries inv = series_invert(s);
        PolySeries unit = PolySeries::one(5, Polynomial::zero(t),
                                          Polynomial::constant(t, BigInt(1)));
        CHECK(s * inv == unit);
    }
}

TEST_CASE("truncated inverse multiplies back to one") {
    VarTablePtr t = make_table({"a", "b"});
    std::vector<std::uint32_t> mask{1, 1};
    Polynomial one2 = Polynomial::constant(t, BigInt(1));
    Polynomial s = one2 - Polynomial::var(t, 0) + BigInt(3) * Polynomial::var(t, 1) *
                                                      Polynomial::var(t, 0);
    Polynomial inv = Polynomial::inverse_trunc(s, mask, 6);
    CHECK(Polynomial::mul_trunc(s, inv, mask, 6) == one2);
    CHECK_THROWS(Polynomial::inverse_trunc(Polynomial::var(t, 0), mask, 3));
}

TEST_CASE("q-exponential series division reproduces known products") {
    // e(z;q) * 1/e(z;q) = 1 in the q-binomial convolution algebra
    VarTablePtr t = make_table({"q"});
    QExpSeries e = q_exponential(t, 0, 6, Polynomial::constant(t, BigInt(1)));
    QExpSeries unit(t, 0, 6);
    unit.a[0] = Polynomial::constant(t, BigInt(1));
    QExpSeries inv = QExpSeries::divide(unit, e);
    CHECK(e * inv == unit);
}

TEST_CASE("canonical string form") {
    VarTablePtr t = make_table({"t", "r"});
    Polynomial p = Polynomial::var(t, 1) + Polynomial::var(t, 0);
    CHECK(p.to_string() == "t+r");
    Polynomial z = Polynomial::zero(t);
    CHECK(z.to_string() == "0");
    Polynomial c = Polynomial::constant(t, BigInt(-3)) + Polynomial::var(t, 0, 2) * BigInt(2);
    CHECK(c.to_string() == "2*t^2-3");
}
