#include "fracolor/halfedge.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace fracolor {

bool half_edge_proper(const Graph& g, const HalfEdgeColoring& h, int delta) {
    auto edges = g.edges();
    if (h.h.size() != edges.size()) return false;
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [c0, c1] = h.h[e];
        if (c0 < 1 || c0 > delta || c1 < 1 || c1 > delta || c0 == c1) return false;
    }
    for (int u = 0; u < g.num_vertices(); ++u) {
        std::set<int> seen;
        for (int v : g.neighbors(u))
            if (!seen.insert(h.color(g, u, v)).second) return false;
    }
    return true;
}

namespace {

// Half-edge index: 2*e for the smaller endpoint's half, 2*e+1 for the larger.
int he_index(const Graph& g, int u, int v) {
    return 2 * g.edge_index(u, v) + (u < v ? 0 : 1);
}

}  // namespace

HalfEdgeColoring half_edge_coloring(const Graph& g) {
    int delta = g.max_degree();
    if (delta < 3) throw GraphError("half-edge coloring needs max degree >= 3");
    auto edges = g.edges();
    int hn = 2 * static_cast<int>(edges.size());

    // Conflict graph: halves at a shared vertex, and the two halves of an edge.
    std::vector<std::vector<int>> adj(hn);
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[2 * e].push_back(2 * e + 1);
        adj[2 * e + 1].push_back(2 * e);
    }
    for (int u = 0; u < g.num_vertices(); ++u) {
        const auto& nb = g.neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int a = he_index(g, u, nb[i]);
                int b = he_index(g, u, nb[j]);
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
    }

    // DSATUR-ordered backtracking with exactly delta colors.
    std::vector<int> color(hn, 0);
    std::vector<std::vector<int>> cnt(hn, std::vector<int>(delta + 1, 0));
    std::vector<uint64_t> forbid(hn, 0);

    auto assign = [&](int x, int c) {
        color[x] = c;
        for (int y : adj[x])
            if (++cnt[y][c] == 1) forbid[y] |= uint64_t{1} << c;
    };
    auto unassign = [&](int x, int c) {
        color[x] = 0;
        for (int y : adj[x])
            if (--cnt[y][c] == 0) forbid[y] &= ~(uint64_t{1} << c);
    };

    std::function<bool(int)> rec = [&](int done) -> bool {
        if (done == hn) return true;
        int best = -1, best_sat = -1, best_deg = -1;
        for (int x = 0; x < hn; ++x) {
            if (color[x]) continue;
            int sat = std::popcount(forbid[x]);
            int deg = static_cast<int>(adj[x].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = x;
                best_sat = sat;
                best_deg = deg;
            }
        }
        for (int c = 1; c <= delta; ++c) {
            if (forbid[best] & (uint64_t{1} << c)) continue;
            assign(best, c);
            if (rec(done + 1)) return true;
            unassign(best, c);
        }
        return false;
    };

    if (!rec(0)) throw GraphError("no proper half-edge coloring found");
    HalfEdgeColoring out;
    out.h.resize(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) out.h[e] = {color[2 * e], color[2 * e + 1]};
    return out;
}

std::vector<std::vector<int>> find_bad_cycles(const Graph& g, const HalfEdgeColoring& h) {
    auto edges = g.edges();
    std::vector<std::vector<int>> cycles;
    // For each color pair {a,b}, edges whose both halves lie in {a,b} form
    // disjoint paths and cycles; the cycles are the bad ones.
    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b) {
            std::vector<std::vector<int>> sub(g.num_vertices());
            for (size_t e = 0; e < edges.size(); ++e) {
                auto [c0, c1] = h.h[e];
                bool in_ab = (c0 == a || c0 == b) && (c1 == a || c1 == b);
                if (in_ab) {
                    sub[edges[e].first].push_back(edges[e].second);
                    sub[edges[e].second].push_back(edges[e].first);
                }
            }
            std::vector<char> seen(g.num_vertices(), 0);
            for (int s = 0; s < g.num_vertices(); ++s) {
                if (seen[s] || sub[s].size() != 2) continue;
                // Walk the component; it is a cycle iff every vertex has
                // degree two and we return to the start.
                std::vector<int> walk{s};
                seen[s] = 1;
                int prev = -1, cur = s;
                bool is_cycle = true;
                while (true) {
                    int nxt = -1;
                    for (int w : sub[cur])
                        if (w != prev) {
                            nxt = w;
                            break;
                        }
                    if (nxt == -1 || sub[nxt].size() != 2) {
                        is_cycle = false;
                        break;
                    }
                    if (nxt == s) break;
                    if (seen[nxt]) {
                        is_cycle = false;
                        break;
                    }
                    walk.push_back(nxt);
                    seen[nxt] = 1;
                    prev = cur;
                    cur = nxt;
                }
                if (is_cycle && walk.size() >= 3) cycles.push_back(walk);
            }
        }
    return cycles;
}

GoodColoringTrace good_half_edge_coloring(const Graph& g) {
    if (g.max_degree() != 3 || g.min_degree() != 3)
        throw GraphError("good half-edge colorings are defined for cubic graphs");
    GoodColoringTrace trace;
    trace.h = half_edge_coloring(g);

    // Switching a cycle vertex's off-cycle half with one of its on-cycle
    // halves destroys the cycle; some choice also creates no new cycle.
    // Scan candidates in a fixed order and keep the first strict improvement.
    auto try_switch = [&](int u, int w1, int w2, size_t before) -> bool {
        int v = -1;
        for (int x : g.neighbors(u))
            if (x != w1 && x != w2) v = x;
        if (v < 0) throw GraphError("bad cycle misses an off-cycle neighbor");
        int hvu = trace.h.color(g, v, u);
        for (int w : {w1, w2}) {
            if (trace.h.color(g, u, w) == hvu) continue;
            int cuv = trace.h.color(g, u, v);
            int cuw = trace.h.color(g, u, w);
            trace.h.set_color(g, u, v, cuw);
            trace.h.set_color(g, u, w, cuv);
            if (half_edge_proper(g, trace.h, 3) && find_bad_cycles(g, trace.h).size() < before)
                return true;
            trace.h.set_color(g, u, v, cuv);
            trace.h.set_color(g, u, w, cuw);
        }
        return false;
    };

    while (true) {
        auto cycles = find_bad_cycles(g, trace.h);
        trace.bad_cycle_counts.push_back(static_cast<int>(cycles.size()));
        if (cycles.empty()) break;

        bool moved = false;
        for (const auto& cyc : cycles) {
            for (size_t pos = 0; pos < cyc.size() && !moved; ++pos) {
                int u = cyc[pos];
                int w1 = cyc[(pos + 1) % cyc.size()];
                int w2 = cyc[(pos + cyc.size() - 1) % cyc.size()];
                moved = try_switch(u, w1, w2, cycles.size());
            }
            if (moved) break;
        }
        if (!moved) throw GraphError("no switch reduces the bad cycle count");
    }
    return trace;
}

HalfEdgeOrientation orient_good(const Graph& g, const HalfEdgeColoring& h) {
    auto edges = g.edges();
    HalfEdgeOrientation ori;
    ori.dir.assign(edges.size(), {HalfEdgeOrientation::kUnset, HalfEdgeOrientation::kUnset});

    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b) {
            int c = 6 - a - b;
            std::vector<std::vector<int>> sub(g.num_vertices());
            for (size_t e = 0; e < edges.size(); ++e) {
                auto [c0, c1] = h.h[e];
                if ((c0 == a || c0 == b) && (c1 == a || c1 == b)) {
                    sub[edges[e].first].push_back(edges[e].second);
                    sub[edges[e].second].push_back(edges[e].first);
                }
            }
            // Components are paths (no bad cycles). Walk each from its
            // lower-labeled endpoint; odd positions point the c-half-edge
            // inward, even positions outward.
            std::vector<char> seen(g.num_vertices(), 0);
            for (int s = 0; s < g.num_vertices(); ++s) {
                if (seen[s] || sub[s].empty() || sub[s].size() == 2) continue;
                // Endpoint of a path component; find the other endpoint to
                // decide the canonical start.
                std::vector<int> path{s};
                int prev = s, cur = sub[s][0];
                while (true) {
                    path.push_back(cur);
                    if (sub[cur].size() == 1) break;
                    int nxt = sub[cur][0] == prev ? sub[cur][1] : sub[cur][0];
                    prev = cur;
                    cur = nxt;
                }
                for (int x : path) seen[x] = 1;
                if (path.back() < path.front()) std::reverse(path.begin(), path.end());
                for (size_t t = 0; t < path.size(); ++t) {
                    int x = path[t];
                    int y = -1;  // the c-colored half-edge at x
                    for (int nb : g.neighbors(x))
                        if (h.color(g, x, nb) == c) y = nb;
                    if (y < 0) continue;
                    ori.set(g, x, y,
                            t % 2 == 0 ? HalfEdgeOrientation::kIn : HalfEdgeOrientation::kOut);
                }
            }
        }

    // Anything untouched points outward, a fixed default.
    for (auto& d : ori.dir) {
        if (d[0] == HalfEdgeOrientation::kUnset) d[0] = HalfEdgeOrientation::kOut;
        if (d[1] == HalfEdgeOrientation::kUnset) d[1] = HalfEdgeOrientation::kOut;
    }

    // Flanking property: same-colored half-edges flanking an edge point in
    // opposite directions.
    for (auto [u, v] : edges)
        for (int up : g.neighbors(u)) {
            if (up == v) continue;
            for (int vp : g.neighbors(v)) {
                if (vp == u) continue;
                if (h.color(g, u, up) == h.color(g, v, vp) &&
                    ori.get(g, u, up) == ori.get(g, v, vp))
                    throw GraphError("flanking half-edges share a direction");
            }
        }
    return ori;
}

bool StarOrientation::oriented_from(const Graph& g, int e, int u) const {
    auto [a, b] = g.edges()[e];
    if (dir[e] == 1) return u == a;
    if (dir[e] == 2) return u == b;
    return false;
}

StarEdgeColoring star_edge_coloring(const Graph& g) {
    if (g.max_degree() > 3) throw GraphError("star edge coloring is for cubic graphs");
    auto edges = g.edges();
    int ne = static_cast<int>(edges.size());
    StarEdgeColoring out;
    out.color.assign(ne, 0);

    // Adjacent edge lists.
    std::vector<std::vector<int>> eadj(ne);
    for (int u = 0; u < g.num_vertices(); ++u) {
        const auto& nb = g.neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int a = g.edge_index(u, nb[i]);
                int b = g.edge_index(u, nb[j]);
                eadj[a].push_back(b);
                eadj[b].push_back(a);
            }
    }

    // Try a plain 3-edge-coloring first; otherwise take a proper
    // 4-edge-coloring (always exists for subcubic graphs) and demote the
    // fourth class to stars. Properness with four colors guarantees star
    // edges are pairwise non-adjacent.
    std::vector<int> col(ne, 0);
    auto color_with = [&](int kmax) -> bool {
        std::fill(col.begin(), col.end(), 0);
        std::function<bool(int)> rec = [&](int e) -> bool {
            if (e == ne) return true;
            for (int c = 1; c <= kmax; ++c) {
                bool ok = true;
                for (int f : eadj[e])
                    if (col[f] == c) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                col[e] = c;
                if (rec(e + 1)) return true;
                col[e] = 0;
            }
            return false;
        };
        return rec(0);
    };
    if (!color_with(3)) {
        if (!color_with(4)) throw GraphError("no proper 4-edge-coloring found");
        for (int e = 0; e < ne; ++e)
            if (col[e] == 4) col[e] = 0;
    }
    out.color = col;

    // Local minimization: recolor any star edge missing some color at both
    // endpoints. Each pass strictly shrinks the star class.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < ne; ++e) {
            if (out.color[e] != 0) continue;
            uint8_t used = 0;
            for (int f : eadj[e])
                if (out.color[f] >= 1) used |= 1 << (out.color[f] - 1);
            for (int c = 1; c <= 3; ++c)
                if (!(used & (1 << (c - 1)))) {
                    out.color[e] = c;
                    changed = true;
                    break;
                }
        }
    }
    out.star_count = static_cast<int>(std::count(out.color.begin(), out.color.end(), 0));

    // Sanity: proper, and no two star edges adjacent.
    for (int e = 0; e < ne; ++e)
        for (int f : eadj[e]) {
            if (out.color[e] != 0 && out.color[e] == out.color[f])
                throw GraphError("star edge coloring is improper");
            if (out.color[e] == 0 && out.color[f] == 0)
                throw GraphError("adjacent star edges survived minimization");
        }
    return out;
}

StarOrientation orient_star_classes(const Graph& g, const StarEdgeColoring& sec) {
    auto edges = g.edges();
    int ne = static_cast<int>(edges.size());
    StarOrientation ori;
    ori.dir.assign(ne, 0);
    ori.owner.assign(ne, 0);

    auto incident_color = [&](int u, int c) {
        for (int v : g.neighbors(u))
            if (sec.color[g.edge_index(u, v)] == c) return true;
        return false;
    };

    for (int a = 1; a <= 3; ++a) {
        // G_a: a-edges plus star edges with both endpoints on a-edges.
        std::vector<int> in_class;
        std::vector<std::vector<std::pair<int, int>>> sub(g.num_vertices());  // (nbr, edge)
        for (int e = 0; e < ne; ++e) {
            bool take = false;
            if (sec.color[e] == a) take = true;
            if (sec.color[e] == 0 && incident_color(edges[e].first, a) &&
                incident_color(edges[e].second, a)) {
                if (ori.owner[e] != 0) throw GraphError("star edge claimed by two classes");
                ori.owner[e] = a;
                take = true;
            }
            if (take) {
                in_class.push_back(e);
                sub[edges[e].first].emplace_back(edges[e].second, e);
                sub[edges[e].second].emplace_back(edges[e].first, e);
            }
        }
        for (int v = 0; v < g.num_vertices(); ++v)
            if (sub[v].size() > 2) throw GraphError("class subgraph exceeds degree two");

        // Orient each path from its lower endpoint, each cycle from its
        // lowest vertex toward its lower-labeled neighbor.
        std::vector<char> done(ne, 0);
        std::vector<char> seen(g.num_vertices(), 0);
        auto walk = [&](int start) {
            int prev = -1, cur = start;
            while (true) {
                seen[cur] = 1;
                int nxt = -1, via = -1;
                for (auto [w, e] : sub[cur])
                    if (!done[e]) {
                        nxt = w;
                        via = e;
                        break;
                    }
                if (nxt == -1) break;
                done[via] = 1;
                ori.dir[via] = (cur == edges[via].first) ? 1 : 2;
                prev = cur;
                cur = nxt;
            }
            (void)prev;
        };
        for (int v = 0; v < g.num_vertices(); ++v)
            if (sub[v].size() == 1 && !seen[v]) walk(v);
        for (int v = 0; v < g.num_vertices(); ++v)
            if (sub[v].size() == 2 && !seen[v]) walk(v);
        for (int e : in_class) seen[edges[e].first] = seen[edges[e].second] = 1;
    }

    for (int e = 0; e < ne; ++e)
        if (sec.color[e] == 0 && ori.owner[e] == 0)
            throw GraphError("star edge belongs to no class");
    return ori;
}

int incompatible_at(const Graph& g, int u, const std::vector<int>& f, const HalfEdgeColoring& h) {
    int count = 0;
    for (int v : g.neighbors(u))
        if (h.color(g, u, v) == f[v]) ++count;
    return count;
}

int count_incompatible(const Graph& g, const std::vector<int>& f, const HalfEdgeColoring& h) {
    int total = 0;
    for (int u = 0; u < g.num_vertices(); ++u) total += incompatible_at(g, u, f, h);
    return total;
}

HalfEdgeColoring two_incompatible(const Graph& g, const std::vector<int>& f,
                                  std::optional<HalfEdgeColoring> start) {
    int delta = g.max_degree();
    HalfEdgeColoring h = start ? *start : half_edge_coloring(g);
    if (!half_edge_proper(g, h, delta)) throw GraphError("starting half-edge coloring improper");

    int guard = 4 * g.num_edges() + 16;
    while (true) {
        int u = -1;
        for (int x = 0; x < g.num_vertices(); ++x)
            if (incompatible_at(g, x, f, h) >= 3) {
                u = x;
                break;
            }
        if (u < 0) break;
        if (--guard < 0) throw GraphError("two-incompatible repair failed to converge");

        // Three lowest incompatible neighbors and their half colors.
        std::vector<int> vs;
        for (int v : g.neighbors(u))
            if (h.color(g, u, v) == f[v]) vs.push_back(v);
        int v1 = vs[0], v2 = vs[1], v3 = vs[2];
        int a = h.color(g, u, v1), b = h.color(g, u, v2), c = h.color(g, u, v3);

        int before = count_incompatible(g, f, h);
        auto try_swap = [&](int x, int y) {
            int cx = h.color(g, u, x), cy = h.color(g, u, y);
            if (cy == h.color(g, x, u) || cx == h.color(g, y, u)) return false;
            h.set_color(g, u, x, cy);
            h.set_color(g, u, y, cx);
            if (count_incompatible(g, f, h) < before) return true;
            h.set_color(g, u, x, cx);
            h.set_color(g, u, y, cy);
            return false;
        };
        auto try_rotation = [&](int c1, int c2, int c3) {
            // e_uv1 <- c1, e_uv2 <- c2, e_uv3 <- c3
            if (c1 == h.color(g, v1, u) || c2 == h.color(g, v2, u) || c3 == h.color(g, v3, u))
                return false;
            int o1 = h.color(g, u, v1), o2 = h.color(g, u, v2), o3 = h.color(g, u, v3);
            h.set_color(g, u, v1, c1);
            h.set_color(g, u, v2, c2);
            h.set_color(g, u, v3, c3);
            if (count_incompatible(g, f, h) < before) return true;
            h.set_color(g, u, v1, o1);
            h.set_color(g, u, v2, o2);
            h.set_color(g, u, v3, o3);
            return false;
        };

        bool moved = try_swap(v1, v2) || try_swap(v1, v3) || try_swap(v2, v3) ||
                     try_rotation(c, a, b) || try_rotation(b, c, a);
        if (!moved) throw GraphError("no legal incompatibility-reducing move");
        if (!half_edge_proper(g, h, delta)) throw GraphError("repair broke properness");
    }
    return h;
}

bool is_r_dynamic(const Graph& g, const std::vector<int>& f, int r) {
    for (int u = 0; u < g.num_vertices(); ++u) {
        std::set<int> seen;
        for (int v : g.neighbors(u)) {
            if (f[v] == f[u]) return false;
            seen.insert(f[v]);
        }
        if (static_cast<int>(seen.size()) < std::min(r, g.degree(u))) return false;
    }
    return true;
}

DynamicSearch find_dynamic_coloring(const Graph& g, int r, int k, uint64_t node_budget) {
    int n = g.num_vertices();
    DynamicSearch out;
    std::vector<int> col(n, 0);
    uint64_t nodes = 0;
    bool budget_hit = false;

    // Dynamic feasibility prune: once a vertex's neighborhood is fully
    // colored it must already see enough distinct colors.
    auto neighborhood_ok = [&](int u) {
        std::set<int> seen;
        int uncolored = 0;
        for (int v : g.neighbors(u)) {
            if (col[v] == 0)
                ++uncolored;
            else
                seen.insert(col[v]);
        }
        int need = std::min(r, g.degree(u));
        return static_cast<int>(seen.size()) + uncolored >= need;
    };

    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == n) return true;
        if (++nodes > node_budget) {
            budget_hit = true;
            return false;
        }
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int v : g.neighbors(idx))
                if (col[v] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            col[idx] = c;
            for (int v : g.neighbors(idx))
                if (!neighborhood_ok(v)) ok = false;
            if (ok && neighborhood_ok(idx) && rec(idx + 1)) return true;
            col[idx] = 0;
            if (budget_hit) return false;
        }
        return false;
    };

    out.found = rec(0);
    out.nodes = nodes;
    out.completed = !budget_hit;
    if (out.found) {
        out.colors = col;
        if (!is_r_dynamic(g, col, r)) throw GraphError("search returned a non-dynamic coloring");
    }
    return out;
}

CompatibleResult dynamic_compatible(const Graph& g, const std::vector<int>& f) {
    CompatibleResult res;
    int delta = g.max_degree();
    if (delta < 4) {
        res.diagnostic = "needs max degree >= 4";
        return res;
    }
    if (!is_r_dynamic(g, f, 4)) {
        res.diagnostic = "coloring is not 4-dynamic";
        return res;
    }

    auto edges = g.edges();
    res.h.h.assign(edges.size(), {0, 0});
    auto colored = [&](int u, int v) { return res.h.color(g, u, v) != 0; };

    // Hopcroft-Karp is overkill at degree <= delta; simple augmenting paths.
    auto match_around = [&](int u, std::vector<int>& choice) -> bool {
        const auto& nb = g.neighbors(u);
        int an = static_cast<int>(nb.size());
        std::vector<std::vector<int>> allowed(an);
        for (int idx = 0; idx < an; ++idx) {
            int v = nb[idx];
            for (int b = 1; b <= delta; ++b) {
                if (b == f[v]) continue;
                if (colored(v, u) && res.h.color(g, v, u) == b) continue;
                allowed[idx].push_back(b);
            }
        }
        std::vector<int> owner(delta + 1, -1);
        std::vector<char> visited(delta + 1);
        std::function<bool(int)> augment = [&](int idx) -> bool {
            for (int b : allowed[idx]) {
                if (visited[b]) continue;
                visited[b] = 1;
                if (owner[b] < 0 || augment(owner[b])) {
                    owner[b] = idx;
                    return true;
                }
            }
            return false;
        };
        for (int idx = 0; idx < an; ++idx) {
            std::fill(visited.begin(), visited.end(), 0);
            if (!augment(idx)) return false;
        }
        choice.assign(an, 0);
        for (int b = 1; b <= delta; ++b)
            if (owner[b] >= 0) choice[owner[b]] = b;
        return true;
    };

    // Switching-path repair used when color b is blocked on every half-edge
    // around u.
    auto repair = [&](int u, int b) -> bool {
        int x1 = -1;
        for (int v : g.neighbors(u))
            if (f[v] != b && colored(v, u) && res.h.color(g, v, u) == b) {
                x1 = v;
                break;
            }
        if (x1 < 0) return false;

        std::vector<int> path{u, x1};
        std::set<int> on_path{u, x1};
        int guard = 2 * g.num_vertices() + 4;
        while (true) {
            if (--guard < 0) return false;
            int xi = path.back(), xp = path[path.size() - 2];
            int next = -1;
            for (int w : g.neighbors(xi)) {
                if (w == xp) continue;
                if (f[w] == b) continue;
                if (!colored(xi, w)) continue;  // repair path stays in colored territory
                if (res.h.color(g, xi, w) == f[xp]) continue;
                next = w;
                break;
            }
            if (next < 0) return false;
            path.push_back(next);
            if (on_path.count(next)) return false;  // loop-freedom violated
            on_path.insert(next);
            if (!colored(next, xi) || res.h.color(g, next, xi) != b) break;
        }

        // Switch at x_i between the halves toward x_{i-1} and x_{i+1}.
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            int xi = path[i], xp = path[i - 1], xn = path[i + 1];
            int toward_prev = res.h.color(g, xi, xp);
            int toward_next = res.h.color(g, xi, xn);
            res.h.set_color(g, xi, xp, toward_next);
            res.h.set_color(g, xi, xn, toward_prev);
        }
        ++res.repairs;
        return true;
    };

    for (int u = 0; u < g.num_vertices(); ++u) {
        std::vector<int> choice;
        int attempts = 0;
        while (!match_around(u, choice)) {
            if (++attempts > delta + 1) {
                res.diagnostic = "matching failed at vertex " + g.label(u);
                return res;
            }
            // Find the blocked color: one forbidden on every half around u.
            int blocked = -1;
            for (int b = 1; b <= delta && blocked < 0; ++b) {
                bool everywhere = true;
                for (int v : g.neighbors(u)) {
                    bool forb = (f[v] == b) || (colored(v, u) && res.h.color(g, v, u) == b);
                    if (!forb) {
                        everywhere = false;
                        break;
                    }
                }
                if (everywhere) blocked = b;
            }
            if (blocked < 0 || !repair(u, blocked)) {
                res.diagnostic = "switching repair failed at vertex " + g.label(u);
                return res;
            }
        }
        const auto& nb = g.neighbors(u);
        for (size_t idx = 0; idx < nb.size(); ++idx) res.h.set_color(g, u, nb[idx], choice[idx]);
    }

    if (!half_edge_proper(g, res.h, delta)) {
        res.diagnostic = "result is not a proper half-edge coloring";
        return res;
    }
    if (count_incompatible(g, f, res.h) != 0) {
        res.diagnostic = "incompatibilities remain";
        return res;
    }
    res.ok = true;
    return res;
}

}  // namespace fracolor
