// Acceptance suite: runs every verification criterion at its stated caps,
// prints one PASS/FAIL line per criterion with timing, and exits nonzero if
// anything fails. All arithmetic is exact; every comparison is bit-exact.

#include "eforge/suites.hpp"
#include "eforge/suites_bijections.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

using namespace eforge;

namespace {

int failures = 0;
int only = 0;  // run a single criterion when nonzero

void criterion(int number, const std::string& label, const VerificationReport& rep) {
    bool pass = rep.all_pass();
    if (!pass) ++failures;
    std::printf("%s criterion %2d: %-38s [%zu checks, %.0f ms]\n", pass ? "PASS" : "FAIL",
                number, label.c_str(), rep.checks.size(), rep.wall_ms);
    if (!pass) {
        for (const auto& c : rep.checks)
            if (!c.pass)
                std::printf("       failed: %s%s%s\n", c.name.c_str(),
                            c.detail.empty() ? "" : " -- ", c.detail.c_str());
    }
    for (const auto& note : rep.notes) std::printf("       note: %s\n", note.c_str());
    std::fflush(stdout);
}

VerificationReport merge(const std::string& name, std::vector<VerificationReport> parts) {
    VerificationReport rep;
    rep.suite = name;
    for (const auto& p : parts) {
        for (const auto& c : p.checks) rep.check(p.suite + "." + c.name, c.pass, c.detail);
        for (const auto& n : p.notes) rep.note(n);
        rep.wall_ms += p.wall_ms;
    }
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) only = std::atoi(argv[1]);
    if (!only) std::printf("acceptance suite: exact verification at the stated caps\n");

    auto want = [&](int number) { return only == 0 || only == number; };

    if (want(1)) criterion(1, "worked examples", suite_worked_examples());
    if (want(2)) criterion(2, "oracle triangle for A (n<=5, l<=3)", suite_qeuler_triangle(5, 3));
    if (want(3))
        criterion(3, "oracle square for Q (n<=7 h / n<=4 monomial)",
                  suite_q_oracle_square(7, 3, 4, 2, 4));
    if (want(4))
        criterion(4, "specialization bridges (n<=5 / refined n<=4)",
                  suite_specialization_bridge(5, 3, 4, 3));
    if (want(5))
        criterion(5, "symmetrical identities (n<=7 h / n<=5 q)",
                  suite_symmetrical_identities(7, 3, 5, 3));
    if (want(6))
        criterion(6, "symmetry and unimodality (n<=6, l<=3)", suite_symmetry_unimodality(6, 3));
    if (want(7)) criterion(7, "bijection property suites (n<=4)", suite_bijections_all(4));
    if (want(8)) criterion(8, "equidistribution (n<=5, l<=3)", suite_equidistribution(5, 3));
    if (want(9))
        criterion(9, "chromatic suite",
                  merge("chromatic_full",
                        {suite_chromatic(4, 3, 5, 3, 3, 5, 3), suite_inter_des2(4, 2, 4)}));
    if (want(10))
        criterion(10, "decrease value theorem",
                  merge("decval_full",
                        {suite_decval(2, 5, 3, 4, 2, 2), suite_decval_bridge(3, 2, 2, 5)}));
    if (want(11)) criterion(11, "A_1 discrepancy ledger", suite_a1_discrepancy(3));

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
