#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eforge/json_io.hpp"
#include "eforge/report.hpp"

using namespace eforge;

TEST_CASE("canonical polynomial json") {
    VarTablePtr t = make_table({"t", "r"});
    Polynomial p = Polynomial::var(t, 0) + Polynomial::var(t, 1, 2) * BigInt(-3);
    std::string j = poly_to_json(p);
    CHECK(j ==
          "{\"vars\":[\"t\",\"r\"],\"terms\":[{\"exp\":[0,2],\"coef\":\"-3\"},"
          "{\"exp\":[1,0],\"coef\":\"1\"}]}");
    // byte-identical across reconstructions
    Polynomial q = Polynomial::var(t, 1, 2) * BigInt(-3) + Polynomial::var(t, 0);
    CHECK(poly_to_json(q) == j);
}

TEST_CASE("symfunc json") {
    VarTablePtr t = make_table({"t"});
    SymFuncH f = SymFuncH::h_lambda(t, {2, 1}, Polynomial::var(t, 0)) + SymFuncH::h(t, 3);
    std::string j = symfunc_to_json(f);
    CHECK(j.find("\"partition\":[2,1]") != std::string::npos);
    CHECK(j.find("\"partition\":[3]") != std::string::npos);
}

TEST_CASE("report json carries verdicts and notes") {
    VerificationReport rep;
    rep.suite = "demo";
    rep.param("n", 3);
    rep.check("alpha", true);
    rep.check("beta", false, "witness");
    rep.note("a note");
    std::string j = rep.to_json();
    CHECK(j.find("\"suite\":\"demo\"") != std::string::npos);
    CHECK(j.find("\"pass\":false") != std::string::npos);
    CHECK(j.find("counterexample") != std::string::npos);
    CHECK(!rep.all_pass());
}

TEST_CASE("banner and marked sequence json") {
    Banner b{BLetter{4, 0, true}, BLetter{3, 2, false}};
    CHECK(banner_to_json(b) == "[[4,0,true],[3,2,false]]");
    MarkedSeq ms{{1, 2}, 1, 0};
    CHECK(marked_seq_to_json(ms) == "{\"w\":[1,2],\"b\":1,\"m\":0}");
}
