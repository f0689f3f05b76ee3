#ifndef FRACOLOR_CONSTRUCT_UTIL_HPP
#define FRACOLOR_CONSTRUCT_UTIL_HPP

// Private helpers shared by the constructive coloring sources. Colors are
// tracked with an explicit "done" mask because Color's default state (0) is
// itself a legal color.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fracolor/color.hpp"
#include "fracolor/construct.hpp"
#include "fracolor/fracpow.hpp"
#include "fracolor/graph.hpp"
#include "fracolor/oracle.hpp"

namespace fracolor {
namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
    throw GraphError(where + ": " + what);
}

inline void require(bool cond, const std::string& where, const std::string& what) {
    if (!cond) fail(where, what);
}

inline void set_one(VertexColoring& c, std::vector<char>& done, int id, const Color& col) {
    c.at[id] = col;
    done[id] = 1;
}

// Assigns seq[i] to ids[i]; seq may be longer than ids.
inline void place_seq(VertexColoring& c, std::vector<char>& done,
                      const std::vector<int>& ids, const std::vector<Color>& seq) {
    require(seq.size() >= ids.size(), "place_seq", "color sequence shorter than id run");
    for (size_t i = 0; i < ids.size(); ++i) set_one(c, done, ids[i], seq[i]);
}

// All tuple colors a_i with 1 <= a <= delta, 1 <= i <= half.
inline std::vector<Color> tuple_palette(int delta, int half) {
    std::vector<Color> p;
    for (int a = 1; a <= delta; ++a)
        for (int i = 1; i <= half; ++i) p.push_back(Color::tuple(a, i));
    return p;
}

// True when giving vertex id the color col conflicts with no already
// colored vertex within power distance m.
inline bool placement_ok(const FracPowGraph& fp, const VertexColoring& c,
                         const std::vector<char>& done, int id, const Color& col) {
    const int nv = fp.num_vertices();
    for (int x = 0; x < nv; ++x) {
        if (x == id || !done[x]) continue;
        if (c.at[x] == col && fp.adjacent(x, id)) return false;
    }
    return true;
}

// Palette entries admissible at id against the current partial coloring.
inline std::vector<Color> exact_candidates(const FracPowGraph& fp,
                                           const VertexColoring& c,
                                           const std::vector<char>& done, int id,
                                           const std::vector<Color>& palette) {
    std::vector<Color> out;
    for (const Color& col : palette)
        if (placement_ok(fp, c, done, id, col)) out.push_back(col);
    return out;
}

inline bool finish_rec(const FracPowGraph& fp, VertexColoring& c,
                       std::vector<char>& done, std::vector<int>& open,
                       const std::vector<Color>& palette, uint64_t& nodes,
                       uint64_t node_budget) {
    if (open.empty()) return true;
    if (++nodes > node_budget) return false;

    // Branch on the open vertex with the fewest admissible colors.
    size_t best = 0;
    std::vector<Color> best_cands;
    bool have = false;
    for (size_t i = 0; i < open.size(); ++i) {
        std::vector<Color> cands = exact_candidates(fp, c, done, open[i], palette);
        if (!have || cands.size() < best_cands.size()) {
            best = i;
            best_cands = std::move(cands);
            have = true;
            if (best_cands.empty()) return false;
            if (best_cands.size() == 1) break;
        }
    }

    const int id = open[best];
    std::swap(open[best], open.back());
    open.pop_back();
    for (const Color& col : best_cands) {
        c.at[id] = col;
        done[id] = 1;
        if (finish_rec(fp, c, done, open, palette, nodes, node_budget)) return true;
        done[id] = 0;
    }
    open.push_back(id);
    std::swap(open[best], open.back());
    return false;
}

// Completes the open vertices by depth-first search with exact conflict
// checks. Fills c and done on success; restores done on failure. Intended
// for small repair sets, not whole graphs.
inline bool finish_partial(const FracPowGraph& fp, VertexColoring& c,
                           std::vector<char>& done, std::vector<int> open,
                           const std::vector<Color>& palette,
                           uint64_t node_budget = 2'000'000) {
    uint64_t nodes = 0;
    return finish_rec(fp, c, done, open, palette, nodes, node_budget);
}

// Verifies a finished construction and packages it. Every vertex must be
// done; any checker violation means a bug in the construction and throws.
inline ConstructResult package(const FracPowGraph& fp, VertexColoring c,
                               const std::vector<char>& done,
                               const std::string& method, int omega) {
    for (int i = 0; i < fp.num_vertices(); ++i)
        if (!done[i]) fail(method, "internal error: uncolored vertex " + fp.vertex_name(i));
    if (auto v = verify_coloring(fp, c)) fail(method, "internal error: " + v->describe(fp));
    ConstructResult r;
    r.ok = true;
    r.coloring = std::move(c);
    r.method = method;
    r.colors_used = r.coloring.palette_size();
    r.omega = omega;
    r.optimal = (r.colors_used == omega);
    return r;
}

// Exhaustive k-coloring search packaged as a ConstructResult. A completed
// "no" is reported loudly: for the instances routed here a "no" would
// contradict the expected bound.
inline ConstructResult exact_result(const FracPowGraph& fp, int k, int omega,
                                    uint64_t node_budget, const std::string& method) {
    ColoringSearch s = exact_chromatic(fp, k, node_budget);
    ConstructResult r;
    r.method = method;
    r.omega = omega;
    r.nodes = s.nodes;
    if (s.verdict == Verdict::Yes) {
        if (auto v = verify_coloring(fp, *s.coloring))
            fail(method, "internal error: search returned an improper coloring: " + v->describe(fp));
        r.ok = true;
        r.coloring = *s.coloring;
        r.colors_used = r.coloring.palette_size();
        r.optimal = (r.colors_used == omega);
    } else if (s.verdict == Verdict::No) {
        r.diagnostic = "FINDING: no proper " + std::to_string(k) +
                       "-coloring exists (exhaustive search completed, nodes=" +
                       std::to_string(s.nodes) + "); this contradicts the expected bound";
    } else {
        r.diagnostic = "search budget exhausted before a decision (nodes=" +
                       std::to_string(s.nodes) + ")";
    }
    return r;
}

}  // namespace detail
}  // namespace fracolor

#endif
