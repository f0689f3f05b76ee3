#include "fracolor/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>

namespace fracolor {

std::string Violation::describe(const FracPowGraph& fp) const {
    return fp.vertex_name(x) + " and " + fp.vertex_name(y) + " share a color at distance " +
           std::to_string(dist);
}

std::optional<Violation> verify_coloring(const FracPowGraph& fp, const VertexColoring& c) {
    if (c.size() != fp.num_vertices()) throw GraphError("coloring size mismatch");
    int n = fp.num_vertices();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            int d = fp.dist(x, y);
            if (d >= 1 && d <= fp.m() && c.at[x] == c.at[y]) return Violation{x, y, d};
        }
    return std::nullopt;
}

int omega_formula(int delta, int m) {
    if (delta < 1 || m < 1) throw GraphError("omega formula needs delta >= 1 and m >= 1");
    if (delta == 1) return m + 1;
    if (m % 2 == 0) return (m / 2) * delta + 1;
    return ((m - 1) / 2) * delta + 2;
}

int omega_of(const Graph& g, int m) { return omega_formula(g.max_degree(), m); }

namespace {

// Shared bitset-of-uint64 helpers for the clique search.
using Bits = std::vector<uint64_t>;

Bits make_bits(int n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, int i) { b[i >> 6] |= uint64_t{1} << (i & 63); }
bool test_bit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }
int popcount_bits(const Bits& b) {
    int c = 0;
    for (uint64_t w : b) c += std::popcount(w);
    return c;
}

struct CliqueSolver {
    int n;
    std::vector<Bits> adj;
    uint64_t nodes = 0, budget;
    bool completed = true;
    std::vector<int> best, cur;

    CliqueSolver(const std::vector<std::vector<int>>& lists, uint64_t budget_)
        : n(static_cast<int>(lists.size())), budget(budget_) {
        adj.assign(n, make_bits(n));
        for (int u = 0; u < n; ++u)
            for (int v : lists[u]) set_bit(adj[u], v);
    }

    // Greedy coloring of the candidate set gives an upper bound on any clique
    // inside it; vertices are expanded in descending color order, so the
    // candidates must end up sorted by color ascending for the bound to hold.
    void expand(const std::vector<int>& cand_in) {
        if (++nodes > budget) {
            completed = false;
            return;
        }
        if (cand_in.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        std::vector<std::pair<int, int>> colored;  // (color, vertex)
        colored.reserve(cand_in.size());
        std::vector<Bits> classes;
        for (int v : cand_in) {
            size_t cls = 0;
            // A class keeps a conflict mask of everything adjacent to its
            // members; v joins the first class where its own bit is clear.
            while (cls < classes.size() && test_bit(classes[cls], v)) ++cls;
            if (cls == classes.size()) classes.push_back(make_bits(n));
            for (size_t w = 0; w < adj[v].size(); ++w) classes[cls][w] |= adj[v][w];
            colored.emplace_back(static_cast<int>(cls) + 1, v);
        }
        std::stable_sort(colored.begin(), colored.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<int> cand(colored.size());
        for (size_t i = 0; i < colored.size(); ++i) cand[i] = colored[i].second;

        for (int idx = static_cast<int>(cand.size()) - 1; idx >= 0; --idx) {
            if (!completed) return;
            if (cur.size() + colored[idx].first <= best.size()) return;
            int v = cand[idx];
            cur.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < idx; ++j)
                if (test_bit(adj[v], cand[j])) next.push_back(cand[j]);
            expand(next);
            cur.pop_back();
        }
    }

    void run() {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return popcount_bits(adj[a]) < popcount_bits(adj[b]);
        });
        expand(order);
    }
};

// Backtracking k-coloring with DSATUR ordering, clique seeding and the
// one-fresh-color symmetry rule. Works on any adjacency-list graph.
struct KColorSolver {
    int n, k;
    const std::vector<std::vector<int>>* adj;
    std::vector<std::array<uint16_t, 64>> cnt;  // per vertex, per color: colored neighbors
    std::vector<uint64_t> forbid;
    std::vector<int> color;  // 0 = uncolored, else 1..k
    std::vector<int> degree;
    uint64_t nodes = 0, budget;
    bool budget_hit = false;

    KColorSolver(const std::vector<std::vector<int>>& lists, int k_, uint64_t budget_)
        : n(static_cast<int>(lists.size())), k(k_), adj(&lists), budget(budget_) {
        if (k < 1 || k > 63) throw GraphError("color count out of supported range");
        cnt.assign(n, {});
        forbid.assign(n, 0);
        color.assign(n, 0);
        degree.resize(n);
        for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(lists[v].size());
    }

    void assign(int v, int c) {
        color[v] = c;
        for (int w : (*adj)[v])
            if (++cnt[w][c] == 1) forbid[w] |= uint64_t{1} << c;
    }
    void unassign(int v, int c) {
        color[v] = 0;
        for (int w : (*adj)[v])
            if (--cnt[w][c] == 0) forbid[w] &= ~(uint64_t{1} << c);
    }

    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            int sat = std::popcount(forbid[v]);
            if (sat > best_sat || (sat == best_sat && degree[v] > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = degree[v];
            }
        }
        return best;
    }

    // Returns Yes or No; No means exhausted unless budget_hit got set.
    Verdict search(int colored, int max_used) {
        if (colored == n) return Verdict::Yes;
        if (++nodes > budget) {
            budget_hit = true;
            return Verdict::No;
        }
        int v = pick_vertex();
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (forbid[v] & (uint64_t{1} << c)) continue;
            assign(v, c);
            Verdict r = search(colored + 1, std::max(max_used, c));
            // Keep the assignment on success so the caller can read it.
            if (r == Verdict::Yes) return Verdict::Yes;
            unassign(v, c);
            if (budget_hit) return Verdict::No;
            // Unused colors are interchangeable: one fresh color suffices.
            if (c > max_used) break;
        }
        return Verdict::No;
    }
};

std::vector<int> greedy_clique(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<char> inset(n);
    std::vector<int> best;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return adj[a].size() > adj[b].size(); });
    int tries = std::min(n, 16);
    for (int t = 0; t < tries; ++t) {
        std::vector<int> clique{order[t]};
        std::fill(inset.begin(), inset.end(), 0);
        inset[order[t]] = 1;
        for (int v : order) {
            if (inset[v]) continue;
            bool ok = true;
            for (int u : clique)
                if (std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end()) {
                    ok = false;
                    break;
                }
            if (ok) {
                clique.push_back(v);
                inset[v] = 1;
            }
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

struct GenericSearchOutcome {
    Verdict verdict;
    std::vector<int> colors;
    uint64_t nodes;
    bool completed;
};

GenericSearchOutcome k_color_search(const std::vector<std::vector<int>>& adj, int k,
                                    uint64_t budget, const std::vector<int>* seed_clique) {
    int n = static_cast<int>(adj.size());
    KColorSolver solver(adj, k, budget);
    int colored = 0, max_used = 0;
    std::vector<int> clique = seed_clique ? *seed_clique : greedy_clique(adj);
    if (static_cast<int>(clique.size()) > k)
        return {Verdict::No, {}, 0, true};
    for (int v : clique) {
        solver.assign(v, max_used + 1);
        ++max_used;
        ++colored;
    }
    Verdict r = solver.search(colored, max_used);
    GenericSearchOutcome out;
    out.nodes = solver.nodes;
    if (r == Verdict::Yes) {
        out.verdict = Verdict::Yes;
        out.colors = solver.color;
        out.completed = true;
    } else if (solver.budget_hit) {
        out.verdict = Verdict::Budget;
        out.completed = false;
    } else {
        out.verdict = Verdict::No;
        out.completed = true;
    }
    return out;
}

}  // namespace

CliqueResult max_clique(const FracPowGraph& fp, uint64_t node_budget) {
    std::vector<std::vector<int>> adj(fp.num_vertices());
    for (int v = 0; v < fp.num_vertices(); ++v) adj[v] = fp.power_neighbors(v);
    CliqueSolver solver(adj, node_budget);
    solver.run();
    CliqueResult res;
    res.size = static_cast<int>(solver.best.size());
    res.members = solver.best;
    std::sort(res.members.begin(), res.members.end());
    res.nodes = solver.nodes;
    res.completed = solver.completed;
    return res;
}

ColoringSearch exact_chromatic(const FracPowGraph& fp, int k, uint64_t node_budget) {
    std::vector<std::vector<int>> adj(fp.num_vertices());
    for (int v = 0; v < fp.num_vertices(); ++v) adj[v] = fp.power_neighbors(v);
    auto out = k_color_search(adj, k, node_budget, nullptr);
    ColoringSearch res;
    res.verdict = out.verdict;
    res.nodes = out.nodes;
    res.completed = out.completed;
    if (out.verdict == Verdict::Yes) {
        VertexColoring c;
        c.at.resize(fp.num_vertices());
        for (int v = 0; v < fp.num_vertices(); ++v) c.at[v] = Color::plain(out.colors[v]);
        res.coloring = std::move(c);
    }
    return res;
}

PlainColoringSearch plain_chromatic(const Graph& g, int k, uint64_t node_budget) {
    std::vector<std::vector<int>> adj(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) adj[v] = g.neighbors(v);
    auto out = k_color_search(adj, k, node_budget, nullptr);
    PlainColoringSearch res;
    res.verdict = out.verdict;
    res.nodes = out.nodes;
    res.completed = out.completed;
    if (out.verdict == Verdict::Yes) res.colors = out.colors;
    return res;
}

ColoringSearch decide_omega_odd(const Graph& g, int m, int n, uint64_t node_budget) {
    if (m % 2 == 0) throw GraphError("decide_omega_odd needs odd m");
    FracPowGraph fp(g, m, n);
    int omega = omega_of(g, m);
    int delta = g.max_degree();
    Anatomy an(fp);

    // Merge each full-degree vertex's crust into a single node; in any
    // omega-coloring those vertices are forced onto one color.
    int nv = fp.num_vertices();
    std::vector<int> node_of(nv, -1);
    std::vector<std::vector<int>> members;
    for (int u = 0; u < g.num_vertices(); ++u) {
        if (g.degree(u) != delta) continue;
        auto crust = an.crust(u);
        members.push_back(crust);
        for (int x : crust) node_of[x] = static_cast<int>(members.size()) - 1;
    }
    for (int x = 0; x < nv; ++x)
        if (node_of[x] < 0) {
            members.push_back({x});
            node_of[x] = static_cast<int>(members.size()) - 1;
        }

    int hn = static_cast<int>(members.size());
    std::vector<std::vector<char>> hadj_m(hn, std::vector<char>(hn, 0));
    bool internal_conflict = false;
    for (int x = 0; x < nv && !internal_conflict; ++x)
        for (int y : fp.power_neighbors(x)) {
            if (y <= x) continue;
            int a = node_of[x], b = node_of[y];
            if (a == b) {
                internal_conflict = true;
                break;
            }
            hadj_m[a][b] = hadj_m[b][a] = 1;
        }

    ColoringSearch res;
    if (internal_conflict) {
        // Two forced-equal vertices are adjacent, so no omega-coloring exists.
        res.verdict = Verdict::No;
        res.completed = true;
        res.nodes = 0;
        return res;
    }

    std::vector<std::vector<int>> hadj(hn);
    for (int a = 0; a < hn; ++a)
        for (int b = 0; b < hn; ++b)
            if (hadj_m[a][b]) hadj[a].push_back(b);

    auto out = k_color_search(hadj, omega, node_budget, nullptr);
    res.verdict = out.verdict;
    res.nodes = out.nodes;
    res.completed = out.completed;
    if (out.verdict == Verdict::Yes) {
        VertexColoring c;
        c.at.resize(nv);
        for (int x = 0; x < nv; ++x) c.at[x] = Color::plain(out.colors[node_of[x]]);
        res.coloring = std::move(c);
        if (verify_coloring(fp, *res.coloring)) throw GraphError("merged search produced an improper coloring");
    }
    return res;
}

}  // namespace fracolor
