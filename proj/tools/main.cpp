// Command-line front end: statistic records, colored Eulerian polynomials,
// flag tables, bijection evaluation, chromatic and decrease-value checks,
// and the verification suites. Machine-readable output only.

#include "eforge/json_io.hpp"
#include "eforge/necklace.hpp"
#include "eforge/suites.hpp"
#include "eforge/suites_bijections.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

using namespace eforge;
using nlohmann::json;

namespace {

int default_jobs() {
    if (const char* env = std::getenv("EULERIAN_FORGE_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

Banner banner_from_json(const json& arr) {
    Banner b;
    for (const auto& item : arr)
        b.push_back(BLetter{item.at(0).get<int>(), item.at(1).get<int>(),
                            item.size() > 2 && item.at(2).get<bool>()});
    return b;
}

int run_stats(int l, const std::string& perm) {
    ColoredPermutation p = ColoredPermutation::parse(perm, l);
    StatRecord s = colored_stats(p);
    HookStats h = hook_stats(p);
    std::ostringstream o;
    o << "{\"n\":" << p.n() << ",\"l\":" << l << ",\"DES\":[";
    bool first = true;
    for (int i : s.DES) {
        o << (first ? "" : ",") << i;
        first = false;
    }
    o << "],\"des\":" << s.des << ",\"maj\":" << s.maj << ",\"exc\":" << s.exc
      << ",\"fexc\":" << s.fexc << ",\"fmaj\":" << s.fmaj << ",\"fix\":" << s.fix
      << ",\"fixvec\":[";
    for (std::size_t i = 0; i < s.fixvec.size(); ++i) o << (i ? "," : "") << s.fixvec[i];
    o << "],\"colvec\":[";
    for (std::size_t i = 0; i < s.colvec.size(); ++i) o << (i ? "," : "") << s.colvec[i];
    o << "],\"inv\":" << h.inv << ",\"lec\":" << h.lec << ",\"flec\":" << h.flec
      << ",\"pix\":" << h.pix << ",\"ai\":" << admissible_inversions(p) << ",\"rix\":" << rix(p)
      << "}";
    std::cout << o.str() << "\n";
    return 0;
}

int run_apoly(int n, int l, bool r0) {
    QEulerContext c = QEulerContext::make(l);
    Polynomial a = a_brute(c, n);
    if (r0) a = a.eval_at(c.rvar, BigInt(0));
    std::cout << "{\"n\":" << n << ",\"l\":" << l << ",\"poly\":\"" << a.to_string()
              << "\",\"json\":" << poly_to_json(a) << "}\n";
    return 0;
}

int run_qtable_csv(int n, int l) {
    FlagContext fc = FlagContext::make(l);
    std::vector<SymFuncH> Q = flagq_recurrence(fc, n);
    std::cout << "k,j,sym\n";
    for (int k = 0; k <= l * n; ++k)
        for (int j = 0; j <= n; ++j) {
            SymFuncH e = flagq_entry(fc, Q[n], k, j);
            if (e.is_zero()) continue;
            std::cout << k << "," << j << ",\"" << e.to_string() << "\"\n";
        }
    return 0;
}

int run_qtable(int n, int l, bool refined) {
    if (refined) {
        RefinedContext rc = RefinedContext::make(l);
        SymSeries series = refinedq_series(rc, n);
        auto table = refined_table(rc, series.c[n]);
        std::cout << "{\"n\":" << n << ",\"l\":" << l << ",\"refined\":true,\"entries\":[";
        bool first = true;
        for (const auto& [key, f] : table) {
            std::cout << (first ? "" : ",") << "{\"k\":" << key.k << ",\"alpha\":[";
            for (std::size_t i = 0; i < key.alpha.size(); ++i)
                std::cout << (i ? "," : "") << key.alpha[i];
            std::cout << "],\"beta\":[";
            for (std::size_t i = 0; i < key.beta.size(); ++i)
                std::cout << (i ? "," : "") << key.beta[i];
            std::cout << "],\"sym\":" << symfunc_to_json(f) << "}";
            first = false;
        }
        std::cout << "]}\n";
        return 0;
    }
    FlagContext fc = FlagContext::make(l);
    std::vector<SymFuncH> Q = flagq_recurrence(fc, n);
    std::cout << "{\"n\":" << n << ",\"l\":" << l << ",\"entries\":[";
    bool first = true;
    for (int k = 0; k <= l * n; ++k)
        for (int j = 0; j <= n; ++j) {
            SymFuncH e = flagq_entry(fc, Q[n], k, j);
            if (e.is_zero()) continue;
            std::cout << (first ? "" : ",") << "{\"k\":" << k << ",\"j\":" << j
                      << ",\"sym\":" << symfunc_to_json(e) << "}";
            first = false;
        }
    std::cout << "]}\n";
    return 0;
}

int run_bijection(const std::string& name, const std::string& input) {
    json in = json::parse(input);
    int l = in.value("l", 1);
    std::ostringstream o;
    if (name == "psi") {
        Necklace R = make_necklace(banner_from_json(in.at("necklace")), l);
        int k = in.at("k").get<int>();
        Necklace img = psi_necklace(R, k, l);
        bool inv = psi_necklace(img, k, l) == R;
        o << "{\"image\":" << banner_to_json(img.w)
          << ",\"checks\":{\"involution\":" << (inv ? "true" : "false") << "}}";
    } else if (name == "theta") {
        Banner b = banner_from_json(in.at("banner"));
        Banner img = theta_banner(b, l);
        int n = static_cast<int>(b.size());
        bool inv = theta_banner(img, l) == b;
        bool comp = banner_flag_stat(b, l) + banner_flag_stat(img, l) == l * n - 1;
        o << "{\"image\":" << banner_to_json(img)
          << ",\"checks\":{\"involution\":" << (inv ? "true" : "false")
          << ",\"flag_complement\":" << (comp ? "true" : "false") << "}}";
    } else if (name == "phi") {
        TwoFixBanner v;
        v.w0 = in.at("w0").get<std::vector<int>>();
        v.w0p = in.at("w0p").get<std::vector<int>>();
        for (const auto& s : in.at("seqs"))
            v.seqs.push_back(MarkedSeq{s.at("w").get<std::vector<int>>(), s.at("b").get<int>(),
                                       s.at("m").get<int>()});
        TwoFixBanner img = phi_twofix(v, l);
        bool inv = phi_twofix(img, l) == v;
        bool comp = v.fexc(l) + img.fexc(l) == l * v.n() - 2;
        o << "{\"image\":" << twofix_to_json(img)
          << ",\"checks\":{\"involution\":" << (inv ? "true" : "false")
          << ",\"fexc_complement\":" << (comp ? "true" : "false") << "}}";
    } else if (name == "upsilon") {
        Banner b = banner_from_json(in.at("banner"));
        auto [rest, ms] = upsilon(b, l);
        bool round = upsilon_inverse(rest, ms, l) == b;
        o << "{\"image\":{\"banner\":" << banner_to_json(rest)
          << ",\"marked\":" << marked_seq_to_json(ms)
          << "},\"checks\":{\"roundtrip\":" << (round ? "true" : "false") << "}}";
    } else if (name == "f") {
        std::vector<int> w = in.at("word").get<std::vector<int>>();
        Banner b = word_to_banner_f(w, l);
        bool inverse = banner_to_word(b, l) == w;
        o << "{\"image\":" << banner_to_json(b) << ",\"checks\":{\"is_banner\":"
          << (banner_valid(b, l) ? "true" : "false")
          << ",\"letterwise_inverse\":" << (inverse ? "true" : "false") << "}}";
    } else {
        std::cerr << "unknown bijection: " << name << "\n";
        return 2;
    }
    std::cout << o.str() << "\n";
    return 0;
}

int run_chromatic(int n, int l, int k, const std::string& cw) {
    std::vector<int> c;
    for (char ch : cw) {
        if (ch == ' ' || ch == ',') continue;
        c.push_back(ch - '0');
    }
    if (static_cast<int>(c.size()) != n) {
        std::cerr << "color word length must equal n\n";
        return 2;
    }
    for (int x : c)
        if (x < 0 || x >= l) {
            std::cerr << "color out of range\n";
            return 2;
        }
    auto P = NaturalUnitIntervalPoset::from_colorword(c, k);
    Graph g = Graph::incomparability(P);
    ChromaticContext cc = ChromaticContext::make(n);
    Polynomial xg = chromatic_qsym(cc, g);
    bool nuio = P.is_natural_unit_interval();
    bool recip = verify_reciprocity(cc, P, n);
    bool main2 = verify_main2(cc, P, n);
    VarTablePtr qt = make_table({"q"});
    bool kas = verify_kasraoui(P, qt, 0);
    std::cout << "{\"n\":" << n << ",\"l\":" << l << ",\"k\":" << k << ",\"X_G\":\""
              << xg.to_string() << "\",\"checks\":{\"natural_unit_interval\":"
              << (nuio ? "true" : "false") << ",\"reciprocity\":" << (recip ? "true" : "false")
              << ",\"main2\":" << (main2 ? "true" : "false")
              << ",\"kasraoui\":" << (kas ? "true" : "false") << "}}\n";
    return (nuio && recip && main2 && kas) ? 0 : 1;
}

int emit(const VerificationReport& rep, bool& all_ok) {
    std::cout << rep.to_json() << "\n";
    all_ok = all_ok && rep.all_pass();
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eulerian-forge: exact verification of colored Eulerian quasisymmetric identities"};
    app.require_subcommand(1);

    auto* stats = app.add_subcommand("stats", "statistics of one colored permutation");
    int s_n = 0, s_l = 1;
    std::string s_perm;
    stats->add_option("--n", s_n, "length (optional, inferred)");
    stats->add_option("--l", s_l, "number of colors")->required();
    stats->add_option("--perm", s_perm, "one-line form, e.g. \"5^2 2^1 4^0\"")->required();

    auto* apoly = app.add_subcommand("apoly", "colored (q,r)-Eulerian polynomial");
    int a_n = 0, a_l = 1;
    bool a_r0 = false;
    apoly->add_option("--n", a_n)->required();
    apoly->add_option("--l", a_l)->required();
    apoly->add_flag("--r0", a_r0, "evaluate at r = 0 (derangements)");

    auto* qtable = app.add_subcommand("qtable", "flag Eulerian quasisymmetric table");
    int q_n = 0, q_l = 1;
    bool q_refined = false, q_csv = false;
    qtable->add_option("--n", q_n)->required();
    qtable->add_option("--l", q_l)->required();
    qtable->add_flag("--refined", q_refined, "emit the fixed-point colored table");
    qtable->add_flag("--csv", q_csv, "coefficient table as CSV rows (k, j, sym)");

    auto* bij = app.add_subcommand("bijection", "apply a bijection to a JSON-encoded object");
    std::string b_name, b_input;
    bij->add_option("--name", b_name, "psi|theta|phi|upsilon|f")->required();
    bij->add_option("--input", b_input, "JSON input")->required();

    auto* chrom = app.add_subcommand("chromatic", "chromatic quasisymmetric checks for one poset");
    int c_n = 0, c_l = 1, c_k = 2;
    std::string c_cw;
    chrom->add_option("--n", c_n)->required();
    chrom->add_option("--l", c_l)->required();
    chrom->add_option("--k", c_k)->required();
    chrom->add_option("--colorword", c_cw, "digits, e.g. 0102")->required();

    auto* dec = app.add_subcommand("decval", "decrease value theorem checks");
    int d_r = 2, d_L = 5, d_l = 2;
    dec->add_option("--r", d_r)->required();
    dec->add_option("--L", d_L)->required();
    dec->add_option("--l", d_l, "colors for the eta substitution");

    auto* ver = app.add_subcommand("verify", "run verification suites");
    std::string v_suite = "all";
    int v_n = -1, v_l = -1, v_k = 3, v_jobs = default_jobs();
    std::string v_budget = "small";
    bool v_all = false;
    ver->add_option("--suite", v_suite,
                    "worked|qeuler|eulerqsym|bijections|chromatic|decval|all");
    ver->add_flag("--all", v_all, "run every suite");
    ver->add_option("--n", v_n, "override n cap");
    ver->add_option("--l", v_l, "override l cap");
    ver->add_option("--k", v_k, "override k cap");
    ver->add_option("--budget", v_budget, "small|medium");
    ver->add_option("--jobs", v_jobs, "worker threads for enumeration suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (stats->parsed()) return run_stats(s_l, s_perm);
        if (apoly->parsed()) return run_apoly(a_n, a_l, a_r0);
        if (qtable->parsed()) return q_csv ? run_qtable_csv(q_n, q_l) : run_qtable(q_n, q_l, q_refined);
        if (bij->parsed()) return run_bijection(b_name, b_input);
        if (chrom->parsed()) return run_chromatic(c_n, c_l, c_k, c_cw);
        if (dec->parsed()) {
            bool ok = true;
            emit(suite_decval(d_r, d_L, d_r + 1, 3, d_l, 2), ok);
            return ok ? 0 : 1;
        }
        if (ver->parsed()) {
            bool medium = v_budget == "medium";
            int qn = v_n > 0 ? v_n : (medium ? 5 : 4);
            int ql = v_l > 0 ? v_l : (medium ? 3 : 2);
            int hn = v_n > 0 ? v_n : (medium ? 7 : 5);
            bool ok = true;
            bool all = v_all || v_suite == "all";
            if (all || v_suite == "worked") emit(suite_worked_examples(), ok);
            if (all || v_suite == "qeuler") {
                emit(suite_qeuler_triangle(qn, ql, v_jobs), ok);
                emit(suite_equidistribution(qn, ql), ok);
                emit(suite_a1_discrepancy(3), ok);
            }
            if (all || v_suite == "eulerqsym") {
                emit(suite_q_oracle_square(hn, ql, std::min(qn, 4), std::min(ql, 2), 4), ok);
                emit(suite_specialization_bridge(qn, ql, std::min(qn, 4), ql), ok);
                emit(suite_symmetrical_identities(hn, ql, qn, ql), ok);
                emit(suite_symmetry_unimodality(medium ? 6 : 4, ql), ok);
            }
            if (all || v_suite == "bijections") emit(suite_bijections_all(medium ? 4 : 3), ok);
            if (all || v_suite == "chromatic") {
                emit(suite_chromatic(std::min(qn, 4), ql, qn, ql, v_k, qn, ql), ok);
                emit(suite_inter_des2(std::min(qn, 4), std::min(ql, 2), 4), ok);
            }
            if (all || v_suite == "decval") {
                emit(suite_decval(2, medium ? 5 : 4, 3, medium ? 4 : 3, 2, medium ? 3 : 2), ok);
                emit(suite_decval_bridge(medium ? 3 : 2, 2, 2, 5), ok);
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
