// Acceptance gate: replays every headline claim end to end and prints one
// pass/fail line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fracolor/builtins.hpp"
#include "fracolor/certificate.hpp"
#include "fracolor/construct.hpp"
#include "fracolor/enumerate.hpp"
#include "fracolor/fracpow.hpp"
#include "fracolor/halfedge.hpp"
#include "fracolor/oracle.hpp"

using namespace fracolor;
using Clock = std::chrono::steady_clock;

namespace {

uint64_t env_budget() {
    if (const char* s = std::getenv("FRACOLOR_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 200'000'000ULL;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Gate {
    int failures = 0;

    void report(int id, bool pass, const std::string& detail) {
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << detail
                  << std::endl;
        if (!pass) ++failures;
    }
};

// Colorings accumulated for the extension criterion.
struct Kept {
    std::string name;
    Graph g;
    int m, n;
    VertexColoring c;
};
std::vector<Kept> kept;

void keep(const std::string& name, const Graph& g, int m, int n, const VertexColoring& c) {
    if (n <= 2 * m + 1) kept.push_back({name, g, m, n, c});
}

bool reverify(const Graph& g, int m, int n, const VertexColoring& c, std::string& err) {
    FracPowGraph fp(g, m, n);
    if (c.size() != fp.num_vertices()) {
        err = "coloring has wrong size";
        return false;
    }
    if (auto v = verify_coloring(fp, c)) {
        err = v->describe(fp);
        return false;
    }
    return true;
}

std::vector<std::pair<std::string, Graph>> named(std::initializer_list<const char*> names) {
    std::vector<std::pair<std::string, Graph>> out;
    for (const char* n : names) out.emplace_back(n, builtin_graph(n));
    return out;
}

}  // namespace

int main() {
    const uint64_t budget = env_budget();
    Gate gate;
    std::cout << "node budget: " << budget << "\n";

    // 1. Counterexample replication on the triangular prism, 3/5 power:
    //    completed "no" at k = 5 with crust merging, "yes" at k = 6.
    {
        auto t0 = Clock::now();
        std::ostringstream d;
        bool pass = true;
        Graph prism = prism_graph();
        ColoringSearch no5 = decide_omega_odd(prism, 3, 5, budget);
        if (no5.verdict == Verdict::No && no5.completed) {
            d << "k=5 no (completed, nodes=" << no5.nodes << ")";
        } else {
            d << "k=5 search did not return a completed no";
            pass = false;
        }
        FracPowGraph fp(prism, 3, 5);
        ColoringSearch yes6 = exact_chromatic(fp, 6, budget);
        if (yes6.verdict == Verdict::Yes && yes6.coloring &&
            !verify_coloring(fp, *yes6.coloring)) {
            d << "; k=6 yes (verified)";
        } else {
            d << "; k=6 search failed";
            pass = false;
        }
        d << "; chi = 6 > 5 = clique size; " << seconds_since(t0) << "s";
        gate.report(1, pass, d.str());
    }

    // 2. Clique-size formula against brute force on six graphs, m in 2..4,
    //    n in m+1..m+3.
    {
        auto t0 = Clock::now();
        int checked = 0, wrong = 0;
        std::string firstbad;
        for (auto& [name, g] : named({"K2", "K4", "prism", "petersen", "K33", "K5"})) {
            for (int m = 2; m <= 4; ++m) {
                for (int n = m + 1; n <= m + 3; ++n) {
                    FracPowGraph fp(g, m, n);
                    CliqueResult cr = max_clique(fp, budget);
                    int expect = omega_formula(g.max_degree(), m);
                    ++checked;
                    if (!cr.completed || cr.size != expect) {
                        ++wrong;
                        if (firstbad.empty()) {
                            std::ostringstream b;
                            b << name << " m=" << m << " n=" << n << " got " << cr.size
                              << " want " << expect;
                            firstbad = b.str();
                        }
                    }
                }
            }
        }
        std::ostringstream d;
        d << checked << " instances, " << wrong << " mismatches";
        if (wrong) d << " (first: " << firstbad << ")";
        d << "; " << seconds_since(t0) << "s";
        gate.report(2, wrong == 0, d.str());
    }

    // 3. Even m, Delta >= 4: construction uses exactly (m/2)Delta + 1 colors
    //    on every n in m+2..2m+1; smallest instance cross-checked exactly.
    {
        auto t0 = Clock::now();
        int checked = 0, bad = 0;
        std::ostringstream d;
        for (auto& [name, g] : named({"K5", "Q4", "C9(1,2)"})) {
            for (int m : {2, 4}) {
                for (int n = m + 2; n <= 2 * m + 1; ++n) {
                    ++checked;
                    std::string err;
                    ConstructResult r = color_even_highdeg(g, m, n);
                    int expect = (m / 2) * g.max_degree() + 1;
                    if (!r.ok || !reverify(g, m, n, r.coloring, err) ||
                        r.colors_used != expect) {
                        ++bad;
                        d << " [" << name << " m=" << m << " n=" << n << ": "
                          << (err.empty() ? "wrong color count" : err) << "]";
                        continue;
                    }
                    keep(name, g, m, n, r.coloring);
                }
            }
        }
        bool cross = false;
        {
            FracPowGraph fp(builtin_graph("K5"), 2, 4);
            ColoringSearch yes5 = exact_chromatic(fp, 5, budget);
            ColoringSearch no4 = exact_chromatic(fp, 4, budget);
            cross = yes5.verdict == Verdict::Yes && no4.verdict == Verdict::No && no4.completed;
        }
        std::ostringstream head;
        head << checked << " constructions, " << bad << " failures; K5 2/4 chromatic number "
             << (cross ? "confirmed 5" : "NOT confirmed") << d.str() << "; "
             << seconds_since(t0) << "s";
        gate.report(3, bad == 0 && cross, head.str());
    }

    // 4. Even m, cubic: exactly 3m/2 + 1 colors across both constructive
    //    ranges; the n = 2m+1 case is decided exactly and the outcome
    //    recorded.
    {
        auto t0 = Clock::now();
        int checked = 0, bad = 0, exacts = 0, exact_yes = 0;
        std::ostringstream d;
        for (auto& [name, g] : named({"K4", "prism", "petersen", "K33"})) {
            for (int m : {2, 4}) {
                int expect = (3 * m) / 2 + 1;
                for (int n = m + 2; n <= 2 * m + 1; ++n) {
                    ++checked;
                    ConstructResult r = color_even_cubic(g, m, n, budget);
                    bool is_exact_case = (n == 2 * m + 1);
                    if (is_exact_case) ++exacts;
                    if (r.ok) {
                        std::string err;
                        if (!reverify(g, m, n, r.coloring, err) || r.colors_used != expect) {
                            ++bad;
                            d << " [" << name << " m=" << m << " n=" << n << ": "
                              << (err.empty() ? "wrong color count" : err) << "]";
                            continue;
                        }
                        if (is_exact_case) ++exact_yes;
                        keep(name, g, m, n, r.coloring);
                    } else if (is_exact_case &&
                               r.diagnostic.find("FINDING") != std::string::npos) {
                        // A completed "no" at k = omega: resolved, publishable.
                        std::cout << "FINDING (publishable): " << name << " m=" << m
                                  << " n=" << n << ": " << r.diagnostic << std::endl;
                    } else {
                        ++bad;
                        d << " [" << name << " m=" << m << " n=" << n << ": "
                          << r.diagnostic << "]";
                    }
                }
            }
        }
        std::ostringstream head;
        head << checked << " instances, " << bad << " failures; " << exacts
             << " exact-search cases resolved, " << exact_yes << " with a coloring"
             << d.str() << "; " << seconds_since(t0) << "s";
        gate.report(4, bad == 0, head.str());
    }

    // 5. Good half-edge colorings over the stored corpus of connected cubic
    //    graphs on up to 10 vertices.
    {
        auto t0 = Clock::now();
        std::ifstream in(std::string(FRACOLOR_TEST_DATA_DIR) + "/cubic_corpus.txt");
        std::ostringstream d;
        bool pass = true;
        if (!in) {
            d << "corpus file missing";
            pass = false;
        } else {
            std::vector<Graph> corpus;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#') continue;
                std::istringstream ls(line);
                int nv, ne;
                ls >> nv >> ne;
                std::vector<std::pair<int, int>> edges(ne);
                for (auto& [u, v] : edges) ls >> u >> v;
                corpus.emplace_back(nv, edges);
            }
            std::vector<int> count(11, 0);
            int bad = 0;
            for (const Graph& g : corpus) {
                ++count[g.num_vertices()];
                GoodColoringTrace t = good_half_edge_coloring(g);
                bool good = half_edge_proper(g, t.h, 3) && find_bad_cycles(g, t.h).empty() &&
                            !t.bad_cycle_counts.empty() && t.bad_cycle_counts.back() == 0;
                for (size_t i = 1; good && i < t.bad_cycle_counts.size(); ++i)
                    if (t.bad_cycle_counts[i] >= t.bad_cycle_counts[i - 1]) good = false;
                if (!good) ++bad;
            }
            bool counts_ok =
                count[4] == 1 && count[6] == 2 && count[8] == 5 && count[10] == 19;
            pass = bad == 0 && counts_ok;
            d << corpus.size() << " cubic graphs (1/2/5/19 by size" << (counts_ok ? "" : " MISMATCH")
              << "), " << bad << " failures";
        }
        d << "; " << seconds_since(t0) << "s";
        gate.report(5, pass, d.str());
    }

    // 6. Odd m bound of omega + 2 for Delta >= 4, m = 3, n in 5..7.
    {
        auto t0 = Clock::now();
        int checked = 0, bad = 0;
        std::ostringstream d;
        for (auto& [name, g] : named({"K5-e", "C9(1,2)", "Q4"})) {
            int omega = omega_of(g, 3);
            for (int n : {5, 6, 7}) {
                ++checked;
                ConstructResult r = color_odd_plus2(g, 3, n);
                std::string err;
                if (!r.ok || !reverify(g, 3, n, r.coloring, err) ||
                    r.colors_used > omega + 2) {
                    ++bad;
                    d << " [" << name << " n=" << n << ": "
                      << (err.empty() ? (r.ok ? "too many colors" : r.diagnostic) : err) << "]";
                    continue;
                }
                keep(name, g, 3, n, r.coloring);
            }
        }
        std::ostringstream head;
        head << checked << " instances, " << bad << " failures" << d.str() << "; "
             << seconds_since(t0) << "s";
        gate.report(6, bad == 0, head.str());
    }

    // 7. Odd m second range on the Petersen graph, m = 5: n = 10 takes
    //    exactly 8 colors, n = 11 at most 9.
    {
        auto t0 = Clock::now();
        std::ostringstream d;
        bool pass = true;
        Graph g = petersen_graph();
        ConstructResult r10 = color_odd_second_range(g, 5, 10, budget);
        std::string err;
        if (r10.ok && reverify(g, 5, 10, r10.coloring, err) && r10.colors_used == 8) {
            d << "n=10: 8 colors (" << r10.method << ")";
            keep("petersen", g, 5, 10, r10.coloring);
        } else {
            d << "n=10 failed: " << (r10.ok ? err : r10.diagnostic);
            pass = false;
        }
        ConstructResult r11 = color_odd_second_range(g, 5, 11, budget);
        if (r11.ok && reverify(g, 5, 11, r11.coloring, err) && r11.colors_used <= 9) {
            d << "; n=11: " << r11.colors_used << " colors (" << r11.method << ")";
            keep("petersen", g, 5, 11, r11.coloring);
        } else {
            d << "; n=11 failed: " << (r11.ok ? err : r11.diagnostic);
            pass = false;
        }
        d << "; " << seconds_since(t0) << "s";
        gate.report(7, pass, d.str());
    }

    // 8. Complete graphs: K_r at 3/5 takes exactly r+1 colors, K4 at 5/7
    //    exactly 8; every coloring round-trips through its certificate.
    {
        auto t0 = Clock::now();
        int bad = 0;
        std::ostringstream d;
        auto run = [&](int r, int m, int n, int expect) {
            ConstructResult res = color_complete(r, m, n, budget);
            Graph g = complete_graph(r);
            std::string err;
            if (!res.ok || !reverify(g, m, n, res.coloring, err) ||
                res.colors_used != expect) {
                ++bad;
                d << " [K" << r << " m=" << m << " n=" << n << ": "
                  << (res.ok ? (err.empty() ? "wrong color count" : err) : res.diagnostic)
                  << "]";
                return;
            }
            CertificateCheck chk = check_certificate(coloring_certificate(g, m, n, res));
            if (!chk.ok) {
                ++bad;
                d << " [K" << r << " m=" << m << " n=" << n
                  << ": certificate rejected: " << chk.message << "]";
                return;
            }
            keep("K" + std::to_string(r), g, m, n, res.coloring);
        };
        for (int r = 4; r <= 8; ++r) run(r, 3, 5, r + 1);
        run(4, 5, 7, 8);
        std::ostringstream head;
        head << "6 instances, " << bad << " failures" << d.str() << "; "
             << seconds_since(t0) << "s";
        gate.report(8, bad == 0, head.str());
    }

    // 9. Extension lemma: every kept coloring lifts from n to n + m + 1 with
    //    the checker happy and the palette unchanged.
    {
        auto t0 = Clock::now();
        int bad = 0;
        std::ostringstream d;
        for (const Kept& k : kept) {
            try {
                VertexColoring up = extend_coloring(k.g, k.m, k.n, k.c);
                FracPowGraph fp(k.g, k.m, k.n + k.m + 1);
                auto v = verify_coloring(fp, up);
                if (v.has_value() || up.palette() != k.c.palette()) {
                    ++bad;
                    d << " [" << k.name << " " << k.m << "/" << k.n
                      << (v ? ": violation" : ": palette changed") << "]";
                }
            } catch (const GraphError& e) {
                ++bad;
                d << " [" << k.name << " " << k.m << "/" << k.n << ": " << e.what() << "]";
            }
        }
        std::ostringstream head;
        head << kept.size() << " colorings extended, " << bad << " failures" << d.str()
             << "; " << seconds_since(t0) << "s";
        gate.report(9, bad == 0 && !kept.empty(), head.str());
    }

    // 10. Dynamic pipeline at m = 3, n = 5 on non-complete graphs with
    //     Delta >= 5: wherever a 4-dynamic Delta-coloring is found, the
    //     compatible half-edge coloring has zero incompatibilities and the
    //     construction lands exactly on the clique size.
    {
        auto t0 = Clock::now();
        int found = 0, complete = 0;
        std::ostringstream d;
        for (auto& [name, g] :
             named({"icosahedron", "C11(1,2,3)", "C13(1,2,3)", "T5", "Q5"})) {
            int delta = g.max_degree();
            DynamicSearch ds = find_dynamic_coloring(g, 4, delta, 50'000'000);
            if (!ds.found) {
                d << " [" << name << ": no 4-dynamic coloring within budget]";
                continue;
            }
            ++found;
            CompatibleResult cr = dynamic_compatible(g, ds.colors);
            if (!cr.ok || count_incompatible(g, ds.colors, cr.h) != 0) {
                d << " [" << name << ": compatibility failed: " << cr.diagnostic << "]";
                continue;
            }
            ConstructResult r = color_odd_compatible_with(g, 3, 5, ds.colors, cr.h);
            std::string err;
            if (!r.ok || !reverify(g, 3, 5, r.coloring, err) || r.colors_used != r.omega) {
                d << " [" << name << ": construction failed: "
                  << (r.ok ? (err.empty() ? "not clique-many colors" : err) : r.diagnostic)
                  << "]";
                continue;
            }
            ++complete;
            d << " [" << name << ": " << r.colors_used << " colors = clique size]";
        }
        std::ostringstream head;
        head << found << " hypotheses established, " << complete
             << " full pipelines (need >= 3)" << d.str() << "; " << seconds_since(t0) << "s";
        gate.report(10, complete >= 3, head.str());
    }

    std::cout << (gate.failures == 0 ? "ACCEPTANCE: all criteria passed"
                                     : "ACCEPTANCE: failures present")
              << std::endl;
    return gate.failures;
}
