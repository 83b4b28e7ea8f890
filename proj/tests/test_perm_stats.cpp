#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eforge/perm.hpp"
#include "eforge/qanalog.hpp"
#include "eforge/stats.hpp"

#include <functional>
#include <set>

using namespace eforge;

TEST_CASE("enumeration counts l^n n!") {
    for (int n = 0; n <= 5; ++n)
        for (int l = 1; l <= 3; ++l) {
            if (n > 4 && l > 2) continue;
            long long count = 0;
            std::set<std::string> seen;
            enumerate_colored(n, l, [&](const ColoredPermutation& p) {
                ++count;
                seen.insert(p.to_string());
                p.validate();
            });
            long long expect = 1;
            for (int i = 1; i <= n; ++i) expect *= static_cast<long long>(l) * i;
            CHECK(count == expect);
            CHECK(static_cast<long long>(seen.size()) == expect);
        }
    // count-only at the top of the range
    for (int l = 1; l <= 3; ++l) {
        long long count = 0;
        enumerate_colored(6, l, [&](const ColoredPermutation&) { ++count; });
        long long expect = 720;
        for (int i = 0; i < 6; ++i) expect *= l;
        CHECK(count == expect);
    }
}

TEST_CASE("color order is a strict total order") {
    int n = 4, l = 3;
    std::vector<ColoredLetter> letters;
    for (int c = 0; c < l; ++c)
        for (int v = 1; v <= n; ++v) letters.push_back({v, c});
    for (const auto& a : letters)
        for (const auto& b : letters) {
            bool ab = color_order_less(a, b), ba = color_order_less(b, a);
            if (a == b) {
                CHECK(!ab);
                CHECK(!ba);
            } else {
                CHECK(ab != ba);
            }
            for (const auto& c : letters)
                if (ab && color_order_less(b, c)) CHECK(color_order_less(a, c));
        }
    // the displayed chain: 1^{l-1} < ... < n^{l-1} < ... < 1^0 < ... < n^0
    CHECK(color_order_less({1, l - 1}, {n, 0}));
    CHECK(color_order_less({3, 1}, {5, 1}));
    CHECK(!color_order_less({4, 0}, {3, 0}));
}

TEST_CASE("cycle decomposition of the worked example") {
    ColoredPermutation p = ColoredPermutation::parse("5^2 2^1 4^0 3^2 1^2 6^0", 3);
    auto cycles = cycle_decomposition(p);
    REQUIRE(cycles.size() == 4);
    CHECK(cycles[0] == std::vector<ColoredLetter>{{1, 2}, {5, 2}});
    CHECK(cycles[1] == std::vector<ColoredLetter>{{2, 1}});
    CHECK(cycles[2] == std::vector<ColoredLetter>{{3, 2}, {4, 0}});
    CHECK(cycles[3] == std::vector<ColoredLetter>{{6, 0}});
    CvCycleType t = cv_cycle_type(p);
    CvCycleType want{{2, {0, 1}}, {2, {0, 2}}, {1, {0, 0}}, {1, {1, 0}}};
    CHECK(t == want);
}

TEST_CASE("cv-cycle type invariants") {
    for (int l = 1; l <= 3; ++l)
        enumerate_colored(4, l, [&](const ColoredPermutation& p) {
            CvCycleType t = cv_cycle_type(p);
            int total = 0;
            std::vector<int> colsum(l - 1, 0);
            for (const auto& [len, cv] : t) {
                total += len;
                CHECK(static_cast<int>(cv.size()) == l - 1);
                int cvsum = 0;
                for (std::size_t i = 0; i < cv.size(); ++i) {
                    colsum[i] += cv[i];
                    cvsum += cv[i];
                }
                CHECK(cvsum <= len);
            }
            CHECK(total == 4);
            CHECK(colsum == colored_stats(p).colvec);
        });
}

TEST_CASE("statistics of the six letter worked example") {
    ColoredPermutation p = ColoredPermutation::parse("5^2 2^1 4^0 3^2 1^2 6^0", 3);
    StatRecord s = colored_stats(p);
    CHECK(s.DES == std::set<int>{3, 4});
    CHECK(s.des == 2);
    CHECK(s.exc == 1);
    CHECK(s.maj == 7);
    CHECK(s.fixvec == std::vector<int>{1, 1, 0});
    CHECK(s.colvec == std::vector<int>{1, 3});
    CHECK(s.fexc == 3 * 1 + 7);
    CHECK(s.fmaj == 3 * 7 + 7);
}

TEST_CASE("excedance test matches the color order definition") {
    for (int l = 1; l <= 3; ++l)
        enumerate_colored(4, l, [&](const ColoredPermutation& p) {
            int direct = 0;
            for (int j = 1; j <= p.n(); ++j)
                if (color_order_less(ColoredLetter{j, 0}, p.w[j - 1])) ++direct;
            CHECK(direct == colored_stats(p).exc);
        });
}

TEST_CASE("trivial statistics") {
    ColoredPermutation id = ColoredPermutation::parse("1^0 2^0 3^0", 1);
    StatRecord s = colored_stats(id);
    CHECK(s.des == 0);
    CHECK(s.maj == 0);
    CHECK(s.exc == 0);
    CHECK(s.fix == 3);
    ColoredPermutation sw = ColoredPermutation::parse("2^0 1^0", 1);
    StatRecord s2 = colored_stats(sw);
    CHECK(s2.exc == 1);
    CHECK(s2.maj == 1);
}

TEST_CASE("hook factorization worked example") {
    ColoredPermutation p =
        ColoredPermutation::parse("2^0 4^0 5^1 8^0 3^0 7^0 10^1 1^0 9^0 6^1", 2);
    HookFactorization f = hook_factorize(p);
    CHECK(f.prefix == std::vector<ColoredLetter>{{2, 0}, {4, 0}});
    REQUIRE(f.hooks.size() == 4);
    CHECK(f.hooks[0] == std::vector<ColoredLetter>{{5, 1}});
    CHECK(f.hooks[1] == std::vector<ColoredLetter>{{8, 0}, {3, 0}, {7, 0}});
    CHECK(f.hooks[2] == std::vector<ColoredLetter>{{10, 1}, {1, 0}, {9, 0}});
    CHECK(f.hooks[3] == std::vector<ColoredLetter>{{6, 1}});
    HookStats h = hook_stats(p);
    CHECK(h.inv == 16);
    CHECK(h.lec == 4);
    CHECK(h.flec == 11);
    CHECK(h.pix == 2);
}

TEST_CASE("hook factorization trivial cases") {
    ColoredPermutation inc = ColoredPermutation::parse("1^0 2^0 3^0 4^0", 2);
    HookFactorization f = hook_factorize(inc);
    CHECK(f.hooks.empty());
    CHECK(f.prefix.size() == 4);
    CHECK(hook_stats(inc).pix == 4);
    CHECK(hook_stats(inc).lec == 0);
    ColoredPermutation sw = ColoredPermutation::parse("2^0 1^0", 1);
    HookFactorization g = hook_factorize(sw);
    CHECK(g.prefix.empty());
    CHECK(g.hooks.size() == 1);
    CHECK(hook_stats(sw).lec == 1);
}

namespace {

// brute enumeration of all ways to write the word as prefix + colored hooks
int count_factorizations(const std::vector<ColoredLetter>& w, int from) {
    int n = static_cast<int>(w.size());
    if (from == n) return 1;
    int total = 0;
    for (int to = from + 1; to <= n; ++to)
        if (is_colored_hook(w, from, to)) total += count_factorizations(w, to);
    return total;
}

int count_with_prefix(const ColoredPermutation& p) {
    int total = 0;
    int n = p.n();
    for (int plen = 0; plen <= n; ++plen) {
        bool okp = true;
        for (int i = 0; i < plen; ++i) {
            if (p.w[i].color != 0) okp = false;
            if (i + 1 < plen && p.w[i].value >= p.w[i + 1].value) okp = false;
        }
        if (!okp) continue;
        total += count_factorizations(p.w, plen);
    }
    return total;
}

}  // namespace

TEST_CASE("hook factorization is unique") {
    for (int l = 1; l <= 2; ++l)
        enumerate_colored(5, l, [&](const ColoredPermutation& p) {
            CHECK(count_with_prefix(p) == 1);
            HookFactorization f = hook_factorize(p);
            std::vector<ColoredLetter> rebuilt = f.prefix;
            for (const auto& h : f.hooks) rebuilt.insert(rebuilt.end(), h.begin(), h.end());
            CHECK(rebuilt == p.w);
        });
}

TEST_CASE("admissible inversions") {
    CHECK(admissible_inversions(ColoredPermutation::parse("4^0 1^0 2^1 5^0 3^1", 2)) == 3);
    CHECK(admissible_inversions(ColoredPermutation::parse("1^0 2^0 3^0", 1)) == 0);
    // hand scan: neither pair of 3 1 2 satisfies any of the three conditions
    CHECK(admissible_inversions(ColoredPermutation::parse("3^0 1^0 2^0", 1)) == 0);
    // 2 3 1: (2,3) fires condition 1 and (1,3) fires condition 2
    CHECK(admissible_inversions(ColoredPermutation::parse("2^0 3^0 1^0", 1)) == 2);
}

TEST_CASE("rix") {
    CHECK(rix(ColoredPermutation::parse("1^0 6^1 2^0 5^1 3^0 4^1 7^0", 2)) == 2);
    CHECK(rix(ColoredPermutation::parse("1^0", 2)) == 1);
    CHECK(rix(ColoredPermutation::parse("1^1", 2)) == 0);
    CHECK(rix(ColoredPermutation::parse("1^0 2^0 3^0", 1)) == 3);
    CHECK(rix(ColoredPermutation::parse("2^0 1^0", 1)) == 0);
}

TEST_CASE("absolute descents") {
    AbsDesc d = fdes_abs(ColoredPermutation::parse("2^0 1^0", 2));
    CHECK(d.des_abs == 1);
    CHECK(d.fdes_abs == 2);
    AbsDesc d2 = fdes_abs(ColoredPermutation::parse("2^1 1^1", 2));
    CHECK(d2.des_abs == 0);
    CHECK(d2.fdes_abs == 2);
    AbsDesc d3 = fdes_abs(ColoredPermutation::parse("4^0 1^0 2^1 5^0 3^1", 2));
    CHECK(d3.des_abs == 2);  // positions 1 and 4
    CHECK(d3.fdes_abs == 2 * 2 + 2);
}

TEST_CASE("rawlings statistics") {
    // two words differing only in the colors of 5 and 4
    ColoredPermutation swapped = ColoredPermutation::parse("2^0 6^1 1^0 5^0 4^1 3^1 7^0", 2);
    RawlingsStats r1 = rawlings_stats(swapped, 2);
    CHECK(r1.DES_ge == std::set<int>{2, 5});
    CHECK(r1.inv_lt == 2);
    CHECK(r1.rmaj == 9);
    ColoredPermutation word = ColoredPermutation::parse("2^0 6^1 1^0 5^1 4^0 3^1 7^0", 2);
    RawlingsStats r2 = rawlings_stats(word, 2);
    CHECK(r2.DES_ge == std::set<int>{2, 4});
    CHECK(r2.inv_lt == 2);
    CHECK(r2.maj_ge == 6);
    CHECK(r2.rmaj == 8);
    // identity contributes nothing
    RawlingsStats r3 = rawlings_stats(ColoredPermutation::parse("1^0 2^0 3^0", 1), 2);
    CHECK(r3.rmaj == 0);
    CHECK_THROWS(rawlings_stats(word, 0));
}

TEST_CASE("rmaj_n equals inv on S_3") {
    enumerate_colored(3, 1, [&](const ColoredPermutation& p) {
        RawlingsStats r = rawlings_stats(p, 3);
        CHECK(r.maj_ge == 0);
        CHECK(r.rmaj == inv_abs(p.w));
    });
}

TEST_CASE("flag major index is Mahonian") {
    VarTablePtr qt = make_table({"q"});
    for (int l = 1; l <= 3; ++l)
        for (int n = 1; n <= 4; ++n) {
            Polynomial sum(qt);
            enumerate_colored(n, l, [&](const ColoredPermutation& p) {
                sum += Polynomial::var(qt, 0,
                                       static_cast<std::uint32_t>(colored_stats(p).fmaj));
            });
            Polynomial expect = Polynomial::constant(qt, BigInt(1));
            for (int i = 1; i <= n; ++i) expect *= q_int_in(qt, 0, i * l);
            CHECK(sum == expect);
        }
}

TEST_CASE("flag identities hold elementwise") {
    for (int l = 1; l <= 3; ++l)
        enumerate_colored(4, l, [&](const ColoredPermutation& p) {
            StatRecord s = colored_stats(p);
            CHECK(s.fexc == l * s.exc + s.col_sum);
            CHECK(s.fmaj == l * s.maj + s.col_sum);
        });
}

TEST_CASE("wreath inverse is an involution") {
    for (int l = 1; l <= 3; ++l)
        enumerate_colored(4, l, [&](const ColoredPermutation& p) {
            ColoredPermutation inv = p.inverse();
            inv.validate();
            CHECK(inv.inverse() == p);
        });
}

TEST_CASE("parse and format round trip") {
    ColoredPermutation p = ColoredPermutation::parse("5^2 2^1 4^0 3^2 1^2 6^0", 3);
    CHECK(ColoredPermutation::parse(p.to_string(), 3) == p);
    CHECK_THROWS(ColoredPermutation::parse("1^0 1^0", 2));
    CHECK_THROWS(ColoredPermutation::parse("1^5", 2));
}
