#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eforge/bijections.hpp"
#include "eforge/suites_bijections.hpp"

using namespace eforge;

namespace {
BLetter L(int v, int c) { return BLetter{v, c, false}; }
BLetter B(int v) { return BLetter{v, 0, true}; }
}  // namespace

TEST_CASE("theta on a single letter") {
    int l = 2;
    Banner b{L(1, 0)};
    Banner img = theta_banner(b, l);
    CHECK(img == Banner{L(1, 1)});
    CHECK(banner_flag_stat(b, l) + banner_flag_stat(img, l) == l * 1 - 1);
    CHECK(theta_banner(img, l) == b);
}

TEST_CASE("theta on a two letter banner") {
    int l = 2;
    Banner b{B(1), L(1, 0)};
    Banner img = theta_banner(b, l);
    // the bar comes off, the last letter color flips to l-1
    CHECK(img == Banner{L(1, 0), L(1, 1)});
    CHECK(banner_valid(img, l));
    CHECK(banner_flag_stat(b, l) + banner_flag_stat(img, l) == 2 * l - 1);
    CHECK(theta_banner(img, l) == b);
}

TEST_CASE("theta exhaustive on a small domain") {
    VerificationReport rep = suite_theta(3, 2, 2);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
}

TEST_CASE("phi single sequence cases") {
    int l = 2;
    // plain word of length n maps to the distinguished marked sequence
    TwoFixBanner v;
    v.w0 = {1, 1, 2};
    TwoFixBanner img = phi_twofix(v, l);
    CHECK(img.w0.empty());
    REQUIRE(img.seqs.size() == 1);
    CHECK(img.seqs[0] == MarkedSeq{{1, 1, 2}, 2, 0});
    CHECK(v.fexc(l) == 0);
    CHECK(img.fexc(l) == l * 3 - 2);
    CHECK(phi_twofix(img, l) == v);
}

TEST_CASE("phi rejects the degenerate inputs") {
    int l = 2;
    TwoFixBanner tiny;
    tiny.w0 = {1};
    CHECK_THROWS(phi_twofix(tiny, l));
    TwoFixBanner outside;
    outside.seqs = {MarkedSeq{{1, 2}, 1, 1}};  // (b, m) = (n-1, l-1)
    CHECK_THROWS(phi_twofix(outside, l));
}

TEST_CASE("d and d_prime act as displayed") {
    int l = 3;
    MarkedSeq zero{{1, 2, 2}, 1, 0};
    CHECK(detail::d_map(zero, l) == MarkedSeq{{1, 2, 2}, 2, 0});
    MarkedSeq pos{{1, 2}, 0, 1};
    CHECK(detail::d_map(pos, l) == MarkedSeq{{1, 2}, 1, 2});
    CHECK(detail::d_map(detail::d_map(pos, l), l) == pos);
}

TEST_CASE("phi exhaustive on a small domain") {
    VerificationReport rep = suite_phi(3, 2, 3);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
}

TEST_CASE("upsilon case 3 on a singleton tail") {
    int l = 3;
    Banner b{L(1, 2), L(2, 1)};  // increasing factorization: (1^2)(2^1)? heads must ascend
    // heads: 1^2 then 2^1: 1^2 <_B 2^1, so factors are (1^2)(2^1); final head positive,
    // u empty -> case 3 removes the last letter
    auto [rest, ms] = upsilon(b, l);
    CHECK(rest == Banner{L(1, 2)});
    CHECK(ms == MarkedSeq{{2}, 0, 1});
    CHECK(upsilon_inverse(rest, ms, l) == b);
}

TEST_CASE("upsilon case 2 drops the first tail letter") {
    int l = 3;
    Banner b{L(2, 1), L(1, 1), L(1, 2)};  // factor 2^1 . (1^1 1^2)
    auto [rest, ms] = upsilon(b, l);
    CHECK(ms == MarkedSeq{{1}, 0, 1});
    CHECK(rest == Banner{L(2, 1), L(1, 2)});
    CHECK(upsilon_inverse(rest, ms, l) == b);
}

TEST_CASE("upsilon case 2.2 splits a run into singletons") {
    int l = 2;
    Banner b{L(2, 1), L(2, 1), L(1, 1)};  // factor 2^1 2^1 . (1^1)
    auto [rest, ms] = upsilon(b, l);
    CHECK(rest == Banner{L(2, 1), L(2, 1)});
    CHECK(ms == MarkedSeq{{1}, 0, 1});
    CHECK(upsilon_inverse(rest, ms, l) == b);
}

TEST_CASE("upsilon rejects the delegated case") {
    CHECK_THROWS(upsilon(Banner{L(1, 0)}, 2));
    CHECK_THROWS(upsilon(Banner{B(2), L(1, 1), L(2, 0)}, 2));
}

TEST_CASE("upsilon exhaustive on a small domain") {
    VerificationReport rep = suite_upsilon(3, 2, 3);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
}

TEST_CASE("psi exhaustive on a small domain") {
    VerificationReport rep = suite_psi(3, 3, 2);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
}

TEST_CASE("f-map suite on a small domain") {
    VerificationReport rep = suite_f_map(4, 2);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
}
