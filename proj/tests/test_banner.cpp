#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eforge/banner.hpp"
#include "eforge/necklace.hpp"

#include <string>

using namespace eforge;

namespace {

// compact literals: value, color, optional bar flag
BLetter L(int v, int c) { return BLetter{v, c, false}; }
BLetter B(int v) { return BLetter{v, 0, true}; }

}  // namespace

TEST_CASE("alphabet orders") {
    int l = 3;
    // original order: 1^0 < 1^1 < 1^2 < barred 1 < 2^0 < ...
    CHECK(original_order_less(L(1, 0), L(1, 1), l));
    CHECK(original_order_less(L(1, 2), B(1), l));
    CHECK(original_order_less(B(1), L(2, 0), l));
    CHECK(!original_order_less(L(2, 0), B(1), l));
    // Hyatt order: positive colors (by value then color) below all 0-colored
    CHECK(hyatt_order_less(L(1, 1), L(1, 2), l));
    CHECK(hyatt_order_less(L(1, 2), L(2, 1), l));
    CHECK(hyatt_order_less(L(9, 2), L(1, 0), l));
    CHECK(hyatt_order_less(L(1, 0), B(1), l));
    CHECK(hyatt_order_less(B(1), L(2, 0), l));
}

TEST_CASE("banner conditions") {
    int l = 2;
    CHECK(banner_valid({L(1, 0), L(2, 0)}, l));
    CHECK(!banner_valid({L(2, 0), L(1, 0)}, l));       // 0-colored unbarred must ascend
    CHECK(banner_valid({B(2), L(1, 0)}, l));
    CHECK(!banner_valid({B(1), L(2, 0)}, l));          // barred must dominate
    CHECK(!banner_valid({L(1, 0), B(1)}, l));          // last letter barred
    CHECK(banner_valid({L(2, 1), L(1, 1)}, l));        // positive colors are free
    CHECK(!banner_valid({BLetter{1, 1, true}}, l));    // bar forces color 0
}

TEST_CASE("lyndon factorization of a thirteen letter banner") {
    int l = 3;
    Banner banner{L(6, 1), L(1, 2), L(5, 1), L(6, 1), L(6, 1), B(4),   B(4),
                  L(4, 1), L(4, 0), B(4),    L(3, 2), L(5, 0), L(7, 1)};
    auto less = [&](const BLetter& a, const BLetter& b) { return hyatt_order_less(a, b, l); };
    auto factors = lyndon_factorize(banner, less);
    std::vector<std::pair<int, int>> expect{{0, 3}, {3, 4}, {4, 5}, {5, 11}, {11, 13}};
    CHECK(factors == expect);
    for (auto [s, e] : factors) {
        Banner f(banner.begin() + s, banner.begin() + e);
        CHECK(is_lyndon_max(f, less));
    }
    auto inc = increasing_factorize(banner, l);
    std::vector<std::pair<int, int>> expect_inc{{0, 3}, {3, 4}, {4, 5}, {5, 9}, {9, 11}, {11, 13}};
    CHECK(inc == expect_inc);
}

TEST_CASE("lyndon basics") {
    auto less = [](int a, int b) { return a < b; };
    std::vector<int> single{7};
    CHECK(lyndon_factorize(single, less) ==
          std::vector<std::pair<int, int>>{{0, 1}});
    std::vector<int> twice{2, 1, 2, 1};
    CHECK(lyndon_factorize(twice, less) ==
          std::vector<std::pair<int, int>>{{0, 2}, {2, 4}});
    // factorization concatenates back and factors are Lyndon
    std::vector<int> w{1, 3, 2, 3, 3, 1, 2};
    auto f = lyndon_factorize(w, less);
    int at = 0;
    for (auto [s, e] : f) {
        CHECK(s == at);
        at = e;
        std::vector<int> factor(w.begin() + s, w.begin() + e);
        CHECK(is_lyndon_max(factor, less));
    }
    CHECK(at == static_cast<int>(w.size()));
}

TEST_CASE("increasing factorization refines the lyndon factorization") {
    int l = 2;
    auto less = [&](const BLetter& a, const BLetter& b) { return hyatt_order_less(a, b, l); };
    for (int n = 1; n <= 5; ++n)
        enumerate_banners(n, 3, l, [&](const Banner& b) {
            auto lyn = lyndon_factorize(b, less);
            auto inc = increasing_factorize(b, l);
            // every lyndon boundary is an increasing-factor boundary
            std::set<int> cuts;
            for (auto [s, e] : inc) cuts.insert(s);
            for (auto [s, e] : lyn) CHECK(cuts.count(s) == 1);
            int at = 0;
            for (auto [s, e] : inc) {
                CHECK(s == at);
                at = e;
            }
            CHECK(at == n);
            // factor structure: a^p u with u strictly below a, heads weakly increasing
            for (std::size_t i = 0; i < inc.size(); ++i) {
                auto [s, e] = inc[i];
                const BLetter& head = b[s];
                int p = s;
                while (p < e && b[p] == head) ++p;
                for (int j = p; j < e; ++j) CHECK(hyatt_order_less(b[j], head, l));
                if (i)
                    CHECK(!hyatt_order_less(head, b[inc[i - 1].first], l));
            }
        });
}

TEST_CASE("the map f on a ten letter word") {
    std::vector<int> w{12, 10, 9, 12, 8, 12, 16, 2, 13, 19};
    Banner b = word_to_banner_f(w, 3);
    Banner expect{B(4), L(4, 1), L(4, 0), B(4), L(3, 2),
                  L(5, 0), L(6, 1), L(1, 2), L(5, 1), L(7, 1)};
    CHECK(b == expect);
    CHECK(banner_valid(b, 3));
    CHECK(banner_to_word(b, 3) == w);
}

TEST_CASE("f has no decreases on strictly increasing words") {
    std::vector<int> w{3, 6, 9, 12};
    Banner b = word_to_banner_f(w, 3);
    for (const auto& a : b) CHECK(!a.bar);
    CHECK(b == Banner{L(2, 0), L(3, 0), L(4, 0), L(5, 0)});
}

TEST_CASE("necklace conditions and canonical form") {
    int l = 2;
    CHECK(circular_conditions_hold({L(1, 0)}, l));
    CHECK(!circular_conditions_hold({B(1)}, l));  // no singleton barred letters
    // (1^0, 2^1, 1^0, 2^1) is not primitive
    CHECK(!is_primitive({L(1, 0), L(2, 1), L(1, 0), L(2, 1)}));
    CHECK(is_primitive({B(1), L(2, 1), L(1, 0), L(2, 1)}));
    std::vector<BLetter> w{L(1, 0), L(2, 0), B(2)};
    CHECK(circular_conditions_hold(w, l));  // barred 2 wraps to 1
    std::vector<BLetter> canon = canonical_rotation(w, l);
    CHECK(canon == std::vector<BLetter>{B(2), L(1, 0), L(2, 0)});
}

TEST_CASE("psi case 1 worked example") {
    int l = 4;
    std::vector<BLetter> r{L(2, 2), B(2), L(1, 1), B(1), L(1, 0), B(2), L(2, 3), B(2),
                           L(2, 1), L(1, 0), L(1, 0), B(2), L(1, 2), B(1), L(1, 0)};
    std::vector<BLetter> expect{L(1, 2), L(1, 0), L(2, 1), B(2), B(2), B(1), L(1, 3), B(1),
                                L(1, 0), L(2, 0), L(2, 1), L(1, 0), L(2, 2), B(2), B(2)};
    REQUIRE(circular_conditions_hold(r, l));
    REQUIRE(circular_conditions_hold(expect, l));
    Necklace R = make_necklace(r, l);
    Necklace img = psi_necklace(R, 1, l);
    CHECK(img == make_necklace(expect, l));
    CHECK(psi_necklace(img, 1, l) == R);
}

TEST_CASE("psi case 2 worked example") {
    int l = 4;
    std::vector<BLetter> r{B(5),    L(3, 1), L(3, 0), L(4, 2), B(4),    B(3),
                           L(3, 1), B(3),    L(3, 2), L(6, 2), B(6),    B(3),
                           L(3, 0), L(3, 1), B(4),    L(2, 0), L(4, 3), L(4, 0)};
    std::vector<BLetter> expect{B(5),    L(4, 1), B(4),    L(3, 2), L(3, 0), B(4),
                                L(4, 1), B(4),    L(4, 2), L(6, 2), B(6),    L(3, 1),
                                L(4, 0), B(4),    B(4),    L(2, 0), L(3, 3), L(3, 0)};
    REQUIRE(circular_conditions_hold(r, l));
    REQUIRE(circular_conditions_hold(expect, l));
    Necklace R = make_necklace(r, l);
    Necklace img = psi_necklace(R, 3, l);
    CHECK(img == make_necklace(expect, l));
    CHECK(psi_necklace(img, 3, l) == R);
}

TEST_CASE("psi without the swapped values is the identity") {
    int l = 2;
    std::vector<BLetter> r{L(1, 0), L(3, 1)};
    Necklace R = make_necklace(r, l);
    CHECK(psi_necklace(R, 4, l) == R);
    // single letter of value k flips to k+1
    Necklace one = make_necklace({L(2, 1)}, l);
    CHECK(psi_necklace(one, 2, l) == make_necklace({L(3, 1)}, l));
}
