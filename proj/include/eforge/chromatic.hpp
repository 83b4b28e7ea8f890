#pragma once

// Chromatic quasisymmetric functions of the incomparability graphs behind
// the colored Rawlings major index: proper-coloring and acyclic-orientation
// sums, the reciprocity and F-expansion checks, the graph/poset bridge to
// inv_{<k} and DES_{>=k}, and the Mahonian / Kasraoui identities.
//
// Poset convention: i <_P j iff i < j and (c_j != 0 or j - i >= k), i.e. the
// color condition sits on the larger element. This is the orientation under
// which the displayed colored statistics match the poset statistics exactly.

#include "eforge/perm.hpp"
#include "eforge/qanalog.hpp"
#include "eforge/stats.hpp"
#include "eforge/symfunc.hpp"

#include <functional>
#include <set>
#include <vector>

namespace eforge {

struct NaturalUnitIntervalPoset {
    int n = 0;
    std::vector<std::vector<bool>> lt;  // lt[i][j]: i <_P j, 1-based

    static NaturalUnitIntervalPoset from_colorword(const std::vector<int>& c, int k) {
        NaturalUnitIntervalPoset p;
        p.n = static_cast<int>(c.size());
        p.lt.assign(p.n + 1, std::vector<bool>(p.n + 1, false));
        for (int i = 1; i <= p.n; ++i)
            for (int j = i + 1; j <= p.n; ++j)
                if (c[j - 1] != 0 || j - i >= k) p.lt[i][j] = true;
        return p;
    }

    bool less(int i, int j) const { return lt[i][j]; }
    bool incomparable(int i, int j) const { return i != j && !lt[std::min(i, j)][std::max(i, j)]; }

    // the two defining conditions of a natural unit interval order
    bool is_natural_unit_interval() const {
        for (int x = 1; x <= n; ++x)
            for (int z = 1; z <= n; ++z) {
                if (!(x < z && lt[x][z]) && !(z < x && lt[z][x])) continue;
                int lo = std::min(x, z), hi = std::max(x, z);
                if (!lt[lo][hi]) return false;  // condition (1) by construction
                for (int y = 1; y <= n; ++y) {
                    if (y == lo || y == hi) continue;
                    if (incomparable(lo, y) && incomparable(hi, y) && !(lo < y && y < hi))
                        return false;  // condition (2)
                }
            }
        return true;
    }
};

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // (i, j) with i < j, 1-based

    static Graph incomparability(const NaturalUnitIntervalPoset& p) {
        Graph g;
        g.n = p.n;
        for (int i = 1; i <= p.n; ++i)
            for (int j = i + 1; j <= p.n; ++j)
                if (!p.lt[i][j]) g.edges.emplace_back(i, j);
        return g;
    }
};

// color word read off a colored permutation: value v carries the color of
// the letter whose absolute value is v
inline std::vector<int> colorword_of(const ColoredPermutation& p) {
    std::vector<int> c(p.n());
    for (const auto& a : p.w) c[a.value - 1] = a.color;
    return c;
}

// ---- statistics on plain permutations relative to G and P --------------------

inline int inv_G(const Graph& g, const std::vector<int>& sigma) {
    std::set<std::pair<int, int>> es(g.edges.begin(), g.edges.end());
    int count = 0;
    int n = static_cast<int>(sigma.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sigma[i] > sigma[j] &&
                es.count({std::min(sigma[i], sigma[j]), std::max(sigma[i], sigma[j])}))
                ++count;
    return count;
}

inline std::set<int> des_P(const NaturalUnitIntervalPoset& p, const std::vector<int>& sigma) {
    std::set<int> out;
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
        int a = sigma[i], b = sigma[i + 1];
        if (b < a && p.lt[b][a]) out.insert(static_cast<int>(i) + 1);
    }
    return out;
}

inline int maj_P(const NaturalUnitIntervalPoset& p, const std::vector<int>& sigma) {
    int s = 0;
    for (int i : des_P(p, sigma)) s += i;
    return s;
}

// ---- chromatic quasisymmetric functions ----------------------------------------

struct ChromaticContext {
    int N = 1;
    VarTablePtr table;  // t, x1..xN
    int tvar = 0;
    std::vector<int> xvars;

    static ChromaticContext make(int N) {
        ChromaticContext c;
        c.N = N;
        std::vector<std::string> names{"t"};
        for (int i = 1; i <= N; ++i) names.push_back("x" + std::to_string(i));
        c.table = make_table(names);
        for (int i = 1; i <= N; ++i) c.xvars.push_back(i);
        return c;
    }
};

inline int asc_of_coloring(const Graph& g, const std::vector<int>& kappa) {
    int asc = 0;
    for (auto [i, j] : g.edges)
        if (kappa[i - 1] > kappa[j - 1]) ++asc;
    return asc;
}

// X_G(x,t) over proper colorings with N colors
inline Polynomial chromatic_qsym(const ChromaticContext& c, const Graph& g) {
    Polynomial out(c.table);
    std::vector<int> kappa(g.n, 1);
    Monomial mono(c.table->size(), 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n) {
            std::fill(mono.begin(), mono.end(), 0);
            for (int i = 0; i < g.n; ++i) ++mono[c.xvars[kappa[i] - 1]];
            mono[c.tvar] = static_cast<std::uint32_t>(asc_of_coloring(g, kappa));
            out.add_term(mono, BigInt(1));
            return;
        }
        for (int col = 1; col <= c.N; ++col) {
            bool proper = true;
            for (auto [i, j] : g.edges) {
                if (j - 1 == v && kappa[i - 1] == col) proper = false;
                if (i - 1 == v && j - 1 < v && kappa[j - 1] == col) proper = false;
            }
            if (!proper) continue;
            kappa[v] = col;
            rec(v + 1);
        }
    };
    rec(0);
    return out;
}

// orientations as bitmasks over the edge list; bit set = edge directed (i, j)
inline bool orientation_acyclic(const Graph& g, std::uint32_t mask) {
    std::vector<std::vector<int>> adj(g.n + 1);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [i, j] = g.edges[e];
        if (mask & (1u << e))
            adj[i].push_back(j);
        else
            adj[j].push_back(i);
    }
    std::vector<int> state(g.n + 1, 0);
    std::function<bool(int)> dfs = [&](int v) {
        state[v] = 1;
        for (int w : adj[v]) {
            if (state[w] == 1) return false;
            if (state[w] == 0 && !dfs(w)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (int v = 1; v <= g.n; ++v)
        if (state[v] == 0 && !dfs(v)) return false;
    return true;
}

// asc of an acyclic orientation: edges directed from the smaller vertex label
inline int asc_of_orientation(const Graph& g, std::uint32_t mask) {
    int asc = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (mask & (1u << e)) ++asc;
    return asc;
}

// Xbar_G: acyclic orientations paired with weakly compatible colorings,
// kappa(i) <= kappa(j) along each directed edge (i, j)
inline Polynomial chromatic_qsym_bar(const ChromaticContext& c, const Graph& g) {
    Polynomial out(c.table);
    std::uint32_t total = 1u << g.edges.size();
    Monomial mono(c.table->size(), 0);
    std::vector<int> kappa(g.n, 1);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (!orientation_acyclic(g, mask)) continue;
        int asc = asc_of_orientation(g, mask);
        std::function<void(int)> rec = [&](int v) {
            if (v == g.n) {
                std::fill(mono.begin(), mono.end(), 0);
                for (int i = 0; i < g.n; ++i) ++mono[c.xvars[kappa[i] - 1]];
                mono[c.tvar] = static_cast<std::uint32_t>(asc);
                out.add_term(mono, BigInt(1));
                return;
            }
            for (int col = 1; col <= c.N; ++col) {
                kappa[v] = col;
                bool ok = true;
                for (std::size_t e = 0; e < g.edges.size() && ok; ++e) {
                    auto [i, j] = g.edges[e];
                    int from = (mask & (1u << e)) ? i : j;
                    int to = (mask & (1u << e)) ? j : i;
                    if (from - 1 <= v && to - 1 <= v && kappa[from - 1] > kappa[to - 1]) ok = false;
                }
                if (ok) rec(v + 1);
            }
        };
        rec(0);
    }
    return out;
}

// the orientation statistic agrees with the coloring statistic on every
// strictly compatible coloring; used to calibrate asc_of_orientation
inline bool calibrate_asc(const ChromaticContext& c, const Graph& g) {
    std::vector<int> kappa(g.n, 1);
    bool ok = true;
    std::function<void(int)> rec = [&](int v) {
        if (!ok) return;
        if (v == g.n) {
            bool proper = true;
            for (auto [i, j] : g.edges)
                if (kappa[i - 1] == kappa[j - 1]) proper = false;
            if (!proper) return;
            std::uint32_t mask = 0;
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                auto [i, j] = g.edges[e];
                if (kappa[i - 1] > kappa[j - 1]) mask |= 1u << e;
            }
            if (asc_of_coloring(g, kappa) != asc_of_orientation(g, mask)) ok = false;
            if (!orientation_acyclic(g, mask)) ok = false;
            return;
        }
        for (int col = 1; col <= c.N; ++col) {
            kappa[v] = col;
            rec(v + 1);
        }
    };
    rec(0);
    return ok;
}

// omega X_G = sum_sigma t^{inv_G(sigma)} F_{n, DES_P(sigma)}
inline bool verify_main2(const ChromaticContext& c, const NaturalUnitIntervalPoset& p, int n) {
    Graph g = Graph::incomparability(p);
    Polynomial xg = chromatic_qsym(c, g);
    std::uint32_t tmax = xg.degree_in(c.tvar);
    // permutation side, per t degree
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i + 1;
    std::map<std::uint32_t, QSymF> rhs;
    do {
        std::uint32_t tdeg = static_cast<std::uint32_t>(inv_G(g, sigma));
        std::uint32_t mask = 0;
        for (int i : des_P(p, sigma)) mask |= 1u << (i - 1);
        auto [it, ins] = rhs.emplace(tdeg, QSymF::zero(n, c.table));
        it->second.add(mask, Polynomial::constant(c.table, BigInt(1)));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    for (std::uint32_t td = 0; td <= tmax; ++td) {
        Polynomial layer = xg.coeff_of(c.tvar, td);
        QSymF fexp = qsym_from_polynomial(layer, n, c.table, c.xvars);
        QSymF wanted = rhs.count(td) ? rhs.at(td) : QSymF::zero(n, c.table);
        if (omega_F(fexp) != wanted) return false;
    }
    for (const auto& [td, q] : rhs)
        if (td > tmax && !q.f.empty()) return false;
    return true;
}

// reciprocity: Xbar_G equals omega X_G, compared through the F expansion
inline bool verify_reciprocity(const ChromaticContext& c, const NaturalUnitIntervalPoset& p,
                               int n) {
    Graph g = Graph::incomparability(p);
    Polynomial xg = chromatic_qsym(c, g);
    Polynomial xbar = chromatic_qsym_bar(c, g);
    std::uint32_t tmax = std::max(xg.degree_in(c.tvar), xbar.degree_in(c.tvar));
    for (std::uint32_t td = 0; td <= tmax; ++td) {
        QSymF fexp = qsym_from_polynomial(xg.coeff_of(c.tvar, td), n, c.table, c.xvars);
        Polynomial expect = qsym_monomial_expand(omega_F(fexp), c.table, c.xvars);
        if (expect != xbar.coeff_of(c.tvar, td)) return false;
    }
    return true;
}

// Eq. (gra:rawl): inv_{<k} and DES_{>=k} of a colored permutation match the
// graph/poset statistics of its absolute value
inline bool verify_gra_rawl(int n, int l, int k, std::string* witness = nullptr) {
    bool ok = true;
    enumerate_colored(n, l, [&](const ColoredPermutation& p) {
        if (!ok) return;
        auto P = NaturalUnitIntervalPoset::from_colorword(colorword_of(p), k);
        Graph g = Graph::incomparability(P);
        std::vector<int> sigma;
        for (const auto& a : p.w) sigma.push_back(a.value);
        RawlingsStats r = rawlings_stats(p, k);
        if (r.inv_lt != inv_G(g, sigma) || r.DES_ge != des_P(P, sigma)) {
            ok = false;
            if (witness) *witness = p.to_string();
        }
    });
    return ok;
}

// sum over C_l wr S_n of q^{fmaj_k} = [l]_q [2l]_q ... [nl]_q
inline bool verify_mahonian_fmajk(int n, int l, int k, const VarTablePtr& table, int qvar) {
    Polynomial sum(table);
    Monomial mono(table->size(), 0);
    enumerate_colored(n, l, [&](const ColoredPermutation& p) {
        mono[qvar] = static_cast<std::uint32_t>(rawlings_stats(p, k).fmaj_k);
        sum.add_term(mono, BigInt(1));
    });
    Polynomial expect = Polynomial::constant(table, BigInt(1));
    for (int i = 1; i <= n; ++i) expect *= q_int_in(table, qvar, i * l);
    return sum == expect;
}

// Kasraoui: sum over S_n of q^{inv_inc(P) + maj_P} = [n]_q!
inline bool verify_kasraoui(const NaturalUnitIntervalPoset& p, const VarTablePtr& table,
                            int qvar) {
    Graph g = Graph::incomparability(p);
    std::vector<int> sigma(p.n);
    for (int i = 0; i < p.n; ++i) sigma[i] = i + 1;
    Polynomial sum(table);
    Monomial mono(table->size(), 0);
    do {
        mono[qvar] = static_cast<std::uint32_t>(inv_G(g, sigma) + maj_P(p, sigma));
        sum.add_term(mono, BigInt(1));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return sum == q_factorial(table, qvar, p.n);
}

}  // namespace eforge
