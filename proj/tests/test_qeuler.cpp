#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eforge/parallel.hpp"
#include "eforge/qeuler.hpp"

using namespace eforge;

namespace {

Polynomial qv(const QEulerContext& c, std::uint32_t e = 1) {
    return Polynomial::var(c.table, c.qvar, e);
}
Polynomial tv(const QEulerContext& c, std::uint32_t e = 1) {
    return Polynomial::var(c.table, c.tvar, e);
}
Polynomial rv(const QEulerContext& c, std::uint32_t e = 1) {
    return Polynomial::var(c.table, c.rvar, e);
}

}  // namespace

TEST_CASE("A_0 and A_1") {
    for (int l = 1; l <= 3; ++l) {
        QEulerContext c = QEulerContext::make(l);
        CHECK(a_brute(c, 0) == Polynomial::constant(c.table, BigInt(1)));
        Polynomial a1 = a_brute(c, 1);
        CHECK(a1 == rv(c) + tv(c) * q_int_in(c.table, c.tvar, l - 1));
        CHECK(a_recurrence(c, 1)[1] == a1);
        CHECK(a_from_gf(c, 1)[1] == a1);
    }
}

TEST_CASE("A_2 at l = 2 frozen from the definition") {
    QEulerContext c = QEulerContext::make(2);
    Polynomial expect = rv(c, 2) + rv(c) * tv(c) * (Polynomial::constant(c.table, BigInt(1)) + qv(c)) +
                        tv(c) + BigInt(2) * tv(c, 2) + qv(c) * tv(c, 2) + tv(c, 3);
    CHECK(a_brute(c, 2) == expect);
    CHECK(a_recurrence(c, 2)[2] == expect);
    CHECK(a_from_gf(c, 2)[2] == expect);
}

TEST_CASE("A_2 at l = 1 is the classical polynomial") {
    QEulerContext c = QEulerContext::make(1);
    CHECK(a_brute(c, 2) == rv(c, 2) + tv(c));
}

TEST_CASE("oracle triangle at small sizes") {
    for (int l = 1; l <= 3; ++l) {
        QEulerContext c = QEulerContext::make(l);
        int nmax = l == 3 ? 3 : 4;
        std::vector<Polynomial> rec = a_recurrence(c, nmax);
        std::vector<Polynomial> gf = a_from_gf(c, nmax);
        for (int n = 0; n <= nmax; ++n) {
            Polynomial brute = a_brute(c, n);
            CHECK(brute == rec[n]);
            CHECK(brute == gf[n]);
        }
    }
}

TEST_CASE("equidistribution of the three triples") {
    for (int l = 1; l <= 3; ++l) {
        QEulerContext c = QEulerContext::make(l);
        for (int n = 1; n <= (l == 3 ? 3 : 4); ++n) CHECK(verify_equidistribution(c, n));
    }
}

TEST_CASE("symmetrical q-identities at small sizes") {
    for (int l = 1; l <= 3; ++l) {
        QEulerContext c = QEulerContext::make(l);
        std::vector<Polynomial> A = a_recurrence(c, 4);
        for (int n = 1; n <= 4; ++n) {
            CHECK(verify_sym_col2(c, A, n));
            CHECK(verify_sym_col1(c, A, n));
        }
    }
}

TEST_CASE("colored eulerian coefficient shape") {
    QEulerContext c2 = QEulerContext::make(2);
    Polynomial a2 = a_brute(c2, 2);
    ColoredEulerianReport rep = colored_eulerian_checks(c2, a2, 2);
    CHECK(rep.csp_product);
    CHECK(rep.shape);
    CHECK(rep.mongelli);
    // A_2^{(2)}(t) = (1+t)^3
    Polynomial at = a2.eval_at(c2.rvar, BigInt(1)).eval_at(c2.qvar, BigInt(1));
    Polynomial expect = (Polynomial::constant(c2.table, BigInt(1)) + tv(c2)).pow(3);
    CHECK(at == expect);
    // d_1^B = t, d_2^B = t + 3t^2 + t^3
    Polynomial d1 = a_brute(c2, 1).eval_at(c2.rvar, BigInt(0)).eval_at(c2.qvar, BigInt(1));
    CHECK(d1 == tv(c2));
    Polynomial d2 = a_brute(c2, 2).eval_at(c2.rvar, BigInt(0)).eval_at(c2.qvar, BigInt(1));
    CHECK(d2 == tv(c2) + BigInt(3) * tv(c2, 2) + tv(c2, 3));
}

TEST_CASE("counting specialization") {
    for (int l = 1; l <= 3; ++l) {
        QEulerContext c = QEulerContext::make(l);
        for (int n = 0; n <= 3; ++n) {
            Polynomial a = a_brute(c, n);
            BigInt count = a.eval_at(c.qvar, BigInt(1))
                               .eval_at(c.tvar, BigInt(1))
                               .eval_at(c.rvar, BigInt(1))
                               .constant_term();
            BigInt expect(1);
            for (int i = 1; i <= n; ++i) expect *= BigInt(l) * BigInt(i);
            CHECK(count == expect);
        }
    }
}

TEST_CASE("parallel fold agrees with sequential") {
    QEulerContext c = QEulerContext::make(2);
    for (int jobs : {1, 2, 4}) {
        Polynomial p = parallel_colored_fold<Polynomial>(
            4, 2, jobs, [&] { return Polynomial::zero(c.table); },
            [&](Polynomial& acc, const ColoredPermutation& perm) {
                StatRecord s = colored_stats(perm);
                Monomial mono(c.table->size(), 0);
                mono[c.qvar] = static_cast<std::uint32_t>(s.maj - s.exc);
                mono[c.tvar] = static_cast<std::uint32_t>(s.fexc);
                mono[c.rvar] = static_cast<std::uint32_t>(s.fix);
                acc.add_term(mono, BigInt(1));
            },
            [](Polynomial& a, Polynomial&& b) { a += b; });
        CHECK(p == a_brute(c, 4));
    }
}
