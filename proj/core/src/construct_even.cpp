#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "construct_util.hpp"
#include "fracolor/construct.hpp"

// Constructions for even m. Tuple colors a_i (a = half-edge color, i = slot
// 1..m/2) plus the reserved branch color 0 give exactly (m/2)Delta + 1
// colors. Equal tuple entries are safe exactly when their positions sit at
// subdivision distance > m; every rule below either realizes that spacing
// or hands the slot to an exact local repair.

namespace fracolor {

using detail::exact_candidates;
using detail::fail;
using detail::finish_partial;
using detail::package;
using detail::place_seq;
using detail::placement_ok;
using detail::require;
using detail::set_one;

int reduced_n(int m, int n) {
    require(m >= 1, "reduced_n", "m must be positive");
    require(n > m, "reduced_n", "n must exceed m");
    if (n <= 2 * m + 1) return n;
    int r = n % (m + 1);
    return r == 0 ? m + 1 : m + 1 + r;
}

VertexColoring extend_coloring(const Graph& g, int m, int n, const VertexColoring& c) {
    const std::string me = "extend_coloring";
    require(m >= 1 && n > m, me, "need n > m >= 1");
    FracPowGraph src(g, m, n);
    require(c.size() == src.num_vertices(), me, "coloring size mismatch");
    if (auto v = verify_coloring(src, c))
        fail(me, "input coloring is not proper: " + v->describe(src));

    // Replay positions 0..m of each superedge after position m; every new
    // vertex keeps its source's distance to the far branch vertex and sits
    // at distance exactly m+1 from its source, so no pair gets closer.
    FracPowGraph dst(g, m, n + m + 1);
    VertexColoring out;
    out.at.assign(dst.num_vertices(), Color::zero());
    for (int u = 0; u < g.num_vertices(); ++u)
        out.at[dst.id_branch(u)] = c.at[src.id_branch(u)];
    for (auto [u, v] : g.edges()) {
        for (int p = 1; p <= n + m; ++p) {
            int q = (p <= m) ? p : p - m - 1;
            Color col = (q == 0) ? c.at[src.id_branch(u)] : c.at[src.id_internal(u, v, q)];
            out.at[dst.id_internal(u, v, p)] = col;
        }
    }
    if (auto v = verify_coloring(dst, out))
        fail(me, "extension failed verification: " + v->describe(dst));
    return out;
}

ConstructResult color_even_highdeg(const Graph& g, int m, int n) {
    const std::string me = "color_even_highdeg";
    require(g.is_connected(), me, "graph must be connected");
    require(m >= 2 && m % 2 == 0, me, "m must be even and at least 2");
    const int delta = g.max_degree();
    require(delta >= 4, me, "maximum degree must be at least 4");
    require(n >= m + 2 && n <= 2 * m + 1, me, "need m+2 <= n <= 2m+1");

    const int half = m / 2;
    FracPowGraph fp(g, m, n);
    Anatomy an(fp);
    HalfEdgeColoring h = half_edge_coloring(g);

    VertexColoring c;
    c.at.assign(fp.num_vertices(), Color::zero());
    std::vector<char> done(fp.num_vertices(), 0);
    for (int u = 0; u < g.num_vertices(); ++u)
        set_one(c, done, fp.id_branch(u), Color::zero());

    const int mid = an.middle_len();
    const int k = (mid + 1) / 2, l = mid / 2;
    for (auto [u, v] : g.edges()) {
        const int huv = h.color(g, u, v), hvu = h.color(g, v, u);
        place_seq(c, done, an.bubble(u, v), tuple_seq(huv, half));
        place_seq(c, done, an.bubble(v, u), tuple_seq(hvu, half));

        // Two smallest base colors unused on this superedge; the middle
        // runs take their reversed prefixes, so entry a_j lands at distance
        // m+1-2(j-1)+2(j-1) ... i.e. exactly far enough from both bubbles.
        int a = 0, b = 0;
        for (int col = 1; col <= delta && b == 0; ++col) {
            if (col == huv || col == hvu) continue;
            (a == 0 ? a : b) = col;
        }
        require(b != 0, me, "could not find two spare base colors");
        std::vector<int> mids = an.middle(u, v);
        std::vector<Color> ra = tuple_seq_rev(a, half), rb = tuple_seq_rev(b, half);
        for (int i = 0; i < k; ++i) set_one(c, done, mids[i], ra[i]);
        for (int i = 0; i < l; ++i) set_one(c, done, mids[mid - 1 - i], rb[i]);
    }

    return package(fp, std::move(c), done, "even-highdeg", omega_formula(delta, m));
}

namespace {

// Unique neighbor w of u whose half-edge away from u carries color col.
int colored_neighbor(const Graph& g, const HalfEdgeColoring& h, int u, int col, int skip) {
    for (int w : g.neighbors(u))
        if (w != skip && h.color(g, u, w) == col) return w;
    fail("color_even_cubic", "missing half-edge color at a vertex");
}

// First range m+2 <= n <= 3m/2+1: good half-edge coloring, oriented. The
// whole middle (k = n-m-1 <= m/2 vertices) sits on one side.
ConstructResult even_cubic_first_range(const Graph& g, const FracPowGraph& fp, int m) {
    const std::string me = "even-cubic-first";
    const int half = m / 2;
    Anatomy an(fp);
    GoodColoringTrace trace = good_half_edge_coloring(g);
    const HalfEdgeColoring& h = trace.h;
    HalfEdgeOrientation ori = orient_good(g, h);

    VertexColoring c;
    c.at.assign(fp.num_vertices(), Color::zero());
    std::vector<char> done(fp.num_vertices(), 0);
    for (int u = 0; u < g.num_vertices(); ++u)
        set_one(c, done, fp.id_branch(u), Color::zero());

    const int k = an.middle_len();
    require(k >= 1 && k <= half, me, "middle length out of range for the first range");

    if (k == 1 && half > 1) {
        // n = m+2 with m >= 4: orientation spacing is unnecessary; straight
        // bubbles put equal entries at distance exactly m+1, and the single
        // middle vertex takes the spare family's last entry c_{m/2}, which
        // clears both bubbles (distance m/2+1 to entry m/2 on either side
        // plus slack) and both branch vertices.
        for (auto [u, v] : g.edges()) {
            const int huv = h.color(g, u, v), hvu = h.color(g, v, u);
            place_seq(c, done, an.bubble(u, v), tuple_seq(huv, half));
            place_seq(c, done, an.bubble(v, u), tuple_seq(hvu, half));
            set_one(c, done, an.middle(u, v)[0], Color::tuple(6 - huv - hvu, half));
        }
        return package(fp, std::move(c), done, me + "-straight", omega_formula(3, m));
    }

    // Oriented bubbles: outward half-edges read a_1..a_{m/2} from their
    // vertex, inward ones reversed.
    for (auto [u, v] : g.edges()) {
        for (auto [s, t] : {std::pair{u, v}, std::pair{v, u}}) {
            const int col = h.color(g, s, t);
            const bool out = ori.get(g, s, t) == HalfEdgeOrientation::kOut;
            place_seq(c, done, an.bubble(s, t),
                      out ? tuple_seq(col, half) : tuple_seq_rev(col, half));
        }
    }

    // Middle run: the spare family c goes straight from the endpoint whose
    // flanking c-half points inward; the two flanking c-halves of a
    // superedge always point opposite ways.
    for (auto [u, v] : g.edges()) {
        const int huv = h.color(g, u, v), hvu = h.color(g, v, u);
        const int cc = 6 - huv - hvu;
        const int wu = colored_neighbor(g, h, u, cc, v);
        const int wv = colored_neighbor(g, h, v, cc, u);
        const bool u_in = ori.get(g, u, wu) == HalfEdgeOrientation::kIn;
        const bool v_in = ori.get(g, v, wv) == HalfEdgeOrientation::kIn;
        require(u_in != v_in, me, "flanking halves are not oppositely oriented");
        std::vector<int> mids = u_in ? an.middle(u, v) : an.middle(v, u);
        place_seq(c, done, mids, tuple_seq(cc, half));
    }

    if (k < half) {
        // Shortened runs lose the exact spacing the full-length argument
        // provides; re-check each superedge's middle and repair locally.
        const std::vector<Color> palette = detail::tuple_palette(3, half);
        for (auto [u, v] : g.edges()) {
            std::vector<int> mids = an.middle(u, v);
            bool bad = false;
            for (int id : mids)
                if (!placement_ok(fp, c, done, id, c.at[id])) { bad = true; break; }
            if (!bad) continue;
            for (int id : mids) done[id] = 0;
            if (!finish_partial(fp, c, done, mids, palette))
                fail(me, "local middle repair failed on a superedge");
        }
    }

    return package(fp, std::move(c), done, me + "-oriented", omega_formula(3, m));
}

// Second range 3m/2+2 <= n <= 2m: star edge coloring with oriented classes.
ConstructResult even_cubic_second_range(const Graph& g, const FracPowGraph& fp, int m,
                                        uint64_t node_budget) {
    const std::string me = "even-cubic-second";
    const int half = m / 2;
    const int omega = omega_formula(3, m);
    Anatomy an(fp);
    StarEdgeColoring sec = star_edge_coloring(g);
    StarOrientation so = orient_star_classes(g, sec);
    const auto edges = g.edges();

    // missing(u): the color absent from u's two non-star edges; u touches at
    // most one star edge because star edges form a matching.
    auto missing = [&](int u) {
        int seen = 0;
        for (int w : g.neighbors(u)) {
            int col = sec.color[g.edge_index(u, w)];
            if (col > 0) seen += col;
        }
        require(seen >= 3 && seen <= 5, me, "vertex does not touch exactly two colored edges");
        return 6 - seen;
    };
    // The edge at u carrying color col.
    auto edge_at = [&](int u, int col) {
        for (int w : g.neighbors(u))
            if (sec.color[g.edge_index(u, w)] == col) return std::pair{g.edge_index(u, w), w};
        fail(me, "missing edge color at a vertex");
    };

    VertexColoring c;
    c.at.assign(fp.num_vertices(), Color::zero());
    std::vector<char> done(fp.num_vertices(), 0);
    for (int u = 0; u < g.num_vertices(); ++u)
        set_one(c, done, fp.id_branch(u), Color::zero());

    // Bubbles. Colored edge oriented u -> v: B_uv straight, B_vu reversed,
    // both in the edge color. Star edge: B_uv takes the family missing(u),
    // straight when the missing(u)-edge at v points into v; that edge and
    // this bubble are the two ends the star glues together.
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        const int a = sec.color[e];
        if (a > 0) {
            const bool from_u = so.oriented_from(g, static_cast<int>(e), u);
            place_seq(c, done, an.bubble(u, v),
                      from_u ? tuple_seq(a, half) : tuple_seq_rev(a, half));
            place_seq(c, done, an.bubble(v, u),
                      from_u ? tuple_seq_rev(a, half) : tuple_seq(a, half));
        } else {
            for (auto [s, t] : {std::pair{u, v}, std::pair{v, u}}) {
                const int fam = missing(s);
                auto [fe, fw] = edge_at(t, fam);
                (void)fw;
                const bool inward = !so.oriented_from(g, fe, t);
                place_seq(c, done, an.bubble(s, t),
                          inward ? tuple_seq(fam, half) : tuple_seq_rev(fam, half));
            }
        }
    }

    const int mid = an.middle_len();
    const int k = (mid + 1) / 2, l = mid / 2;

    // Colored-edge middles copy reversed bubble colors from one different-
    // family bubble at each endpoint: entry i sits at distance exactly m+1
    // from its source slot, and the family difference separates the two
    // copied runs from each other.
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (sec.color[e] == 0) continue;
        auto family_of = [&](int s, int t) { return c.at[an.bubble(s, t)[0]].a; };
        int wu = -1, wv = -1;
        for (int p : g.neighbors(u)) {
            if (p == v) continue;
            for (int q : g.neighbors(v)) {
                if (q == u) continue;
                if (family_of(u, p) != family_of(v, q)) { wu = p; wv = q; break; }
            }
            if (wu >= 0) break;
        }
        require(wu >= 0, me, "no bubble pair with distinct families");
        std::vector<int> mu = an.middle(u, v), mv = an.middle(v, u);
        std::vector<int> bu = an.bubble(u, wu), bv = an.bubble(v, wv);
        for (int i = 1; i <= k; ++i) set_one(c, done, mu[i - 1], c.at[bu[half - i]]);
        for (int i = 1; i <= l; ++i) set_one(c, done, mv[i - 1], c.at[bv[half - i]]);
    }

    // Star-edge middles: two short runs in the endpoint families flank a
    // central run in the owner family, aligned with the class orientation;
    // odd leftover adds one special vertex handled last.
    std::vector<int> specials;          // middle slot ids, one per star edge
    std::vector<size_t> special_edge;   // star edge index per special
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (sec.color[e] != 0) continue;
        const int cu = missing(u), cv = missing(v);
        const int a = 6 - cu - cv;
        require(so.owner[e] == a, me, "star owner does not match endpoint colors");
        const int t = mid - half;
        require(t >= 1, me, "middle too short for the second range");
        const int run = (t % 2 == 0) ? t / 2 : (t - 1) / 2;

        std::vector<int> mu = an.middle(u, v), mv = an.middle(v, u);
        // Run near u in family cv = missing(v): co-rotates with B_vu, i.e.
        // straight from u exactly when the cv-edge at u points into u.
        if (run > 0) {
            auto [ue, uw] = edge_at(u, cv);
            (void)uw;
            const bool inward_u = !so.oriented_from(g, ue, u);
            std::vector<Color> seq = inward_u ? tuple_seq(cv, half) : tuple_seq_rev(cv, half);
            for (int i = 0; i < run; ++i) set_one(c, done, mu[i], seq[i]);
            // Run near v in family cu = missing(u): co-rotates with B_uv.
            auto [ve, vw] = edge_at(v, cu);
            (void)vw;
            const bool inward_v = !so.oriented_from(g, ve, v);
            seq = inward_v ? tuple_seq(cu, half) : tuple_seq_rev(cu, half);
            for (int i = 0; i < run; ++i) set_one(c, done, mv[i], seq[i]);
        }
        // Central owner-family run, read along the class orientation.
        const bool from_u = so.oriented_from(g, static_cast<int>(e), u);
        std::vector<Color> ca = tuple_seq(a, half);
        for (int i = 0; i < half; ++i) {
            int slot = run + i;  // 0-based slots run..run+half-1 from u
            set_one(c, done, mu[slot], from_u ? ca[i] : ca[half - 1 - i]);
        }
        if (t % 2 == 1) {
            specials.push_back(mu[run + half]);
            special_edge.push_back(e);
        }
    }

    // Specials: try every palette color exactly; otherwise donate, i.e.
    // color the special 0, pass the clash to the near branch vertex v, and
    // let v take a color freed from one of its own bubble slots.
    std::vector<Color> palette = detail::tuple_palette(3, half);
    palette.insert(palette.begin(), Color::zero());
    for (size_t s = 0; s < specials.size(); ++s) {
        const int id = specials[s];
        std::vector<Color> cands = exact_candidates(fp, c, done, id, palette);
        if (!cands.empty()) {
            set_one(c, done, id, cands.front());
            continue;
        }
        auto [u, v] = edges[special_edge[s]];
        const int vb = fp.id_branch(v);
        bool repaired = false;
        c.at[id] = Color::zero();
        done[id] = 1;
        for (int z : g.neighbors(v)) {
            if (z == u || repaired) continue;
            std::vector<int> bz = an.bubble(v, z);
            for (int j = 0; j < half && !repaired; ++j) {
                const Color donor = c.at[bz[j]];
                const Color old_v = c.at[vb];
                c.at[bz[j]] = Color::zero();
                c.at[vb] = donor;
                if (placement_ok(fp, c, done, id, c.at[id]) &&
                    placement_ok(fp, c, done, bz[j], c.at[bz[j]]) &&
                    placement_ok(fp, c, done, vb, c.at[vb])) {
                    repaired = true;
                } else {
                    c.at[bz[j]] = donor;
                    c.at[vb] = old_v;
                }
            }
        }
        if (repaired) continue;
        // Joint local search over the special, the branch and v's bubbles.
        done[id] = 0;
        std::vector<int> open{id, vb};
        done[vb] = 0;
        for (int z : g.neighbors(v)) {
            if (z == u) continue;
            for (int b : an.bubble(v, z)) {
                done[b] = 0;
                open.push_back(b);
            }
        }
        if (!finish_partial(fp, c, done, open, palette)) {
            // Give up on the scheme for this instance; decide exactly.
            return detail::exact_result(fp, omega, omega, node_budget, me + "-exact");
        }
    }

    return package(fp, std::move(c), done, me, omega);
}

}  // namespace

ConstructResult color_even_cubic(const Graph& g, int m, int n, uint64_t node_budget) {
    const std::string me = "color_even_cubic";
    require(g.is_connected(), me, "graph must be connected");
    require(g.num_vertices() >= 4 && g.is_regular() && g.max_degree() == 3, me,
            "graph must be cubic");
    require(m >= 2 && m % 2 == 0, me, "m must be even and at least 2");
    require(n >= m + 2 && n <= 2 * m + 1, me, "need m+2 <= n <= 2m+1");

    const int omega = omega_formula(3, m);
    FracPowGraph fp(g, m, n);
    if (n == 2 * m + 1) {
        // Not covered by either edge-coloring scheme; decided exactly with
        // k = omega and the outcome reported either way.
        return detail::exact_result(fp, omega, omega, node_budget, "even-cubic-exact");
    }
    if (n <= 3 * m / 2 + 1) return even_cubic_first_range(g, fp, m);
    return even_cubic_second_range(g, fp, m, node_budget);
}

ConstructResult color_even(const Graph& g, int m, int n, uint64_t node_budget) {
    const std::string me = "color_even";
    require(g.num_vertices() >= 2 && g.num_edges() >= 1 && g.is_connected(), me,
            "graph must be connected with at least one edge");
    require(m >= 2 && m % 2 == 0, me, "m must be even and at least 2");
    require(n > m, me, "n must exceed m");
    const int delta = g.max_degree();
    require(delta >= 3, me, "maximum degree must be at least 3");
    const int omega = omega_formula(delta, m);

    if (n == m + 1) {
        FracPowGraph fp(g, m, n);
        return detail::exact_result(fp, omega, omega, node_budget, "even-exact-tight");
    }
    if (n > 2 * m + 1) {
        const int n0 = reduced_n(m, n);
        ConstructResult base = color_even(g, m, n0, node_budget);
        if (!base.ok) return base;
        VertexColoring cur = std::move(base.coloring);
        for (int nn = n0; nn < n; nn += m + 1) cur = extend_coloring(g, m, nn, cur);
        base.coloring = std::move(cur);
        base.method += "+extend";
        base.colors_used = base.coloring.palette_size();
        base.optimal = (base.colors_used == base.omega);
        return base;
    }
    if (delta >= 4) return color_even_highdeg(g, m, n);
    if (g.is_regular()) return color_even_cubic(g, m, n, node_budget);

    // Delta = 3 but not regular: color a cubic supergraph that contains g
    // with the original vertex ids, then restrict. Distances only shrink in
    // the supergraph, so the restriction stays proper.
    Graph h = regular_embed(g);
    ConstructResult rc = color_even_cubic(h, m, n, node_budget);
    if (!rc.ok) return rc;
    FracPowGraph fpg(g, m, n), fph(h, m, n);
    VertexColoring c;
    c.at.assign(fpg.num_vertices(), Color::zero());
    for (int id = 0; id < fpg.num_vertices(); ++id) {
        FPVertex x = fpg.vertex(id);
        int hid = x.is_branch() ? fph.id_branch(x.u) : fph.id_internal(x.u, x.v, x.i);
        c.at[id] = rc.coloring.at[hid];
    }
    if (auto v = verify_coloring(fpg, c))
        fail(me, "internal error after embedding restriction: " + v->describe(fpg));
    rc.coloring = std::move(c);
    rc.method += "+embed";
    rc.colors_used = rc.coloring.palette_size();
    rc.optimal = (rc.colors_used == omega);
    return rc;
}

}  // namespace fracolor
