#include "fracolor/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace fracolor {

bool Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("self-loop on vertex " + labels_[u]);
    if (has_edge(u, v)) return false;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
    return true;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = degree(0);
    for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::is_connected() const {
    if (num_vertices() == 0) return true;
    std::vector<char> seen(num_vertices(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == num_vertices();
}

bool Graph::is_complete() const {
    int n = num_vertices();
    return edge_count_ == n * (n - 1) / 2;
}

std::optional<int> Graph::vertex_by_label(const std::string& s) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (labels_[v] == s) return v;
    return std::nullopt;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    int idx = 0;
    for (int a = 0; a < num_vertices(); ++a) {
        for (int b : adj_[a]) {
            if (a >= b) continue;
            if (a == u && b == v) return idx;
            ++idx;
        }
    }
    return -1;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> parts;
    std::string tok;
    while (in >> tok) parts.push_back(tok);
    return parts;
}

}  // namespace

Graph parse_graph(const std::string& text, ParseReport* report) {
    ParseReport local;
    ParseReport& rep = report ? *report : local;
    rep = ParseReport{};

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool dimacs = false;
    bool saw_header = false;
    Graph g;
    std::map<std::string, int> by_label;

    auto intern = [&](const std::string& lbl) {
        auto it = by_label.find(lbl);
        if (it != by_label.end()) return it->second;
        int v = g.add_vertex(lbl);
        by_label.emplace(lbl, v);
        return v;
    };

    std::vector<std::pair<std::string, std::pair<std::string, std::string>>> pending;
    int first_content_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        auto parts = split_ws(line);
        if (parts.empty()) continue;
        if (parts[0] == "c" || parts[0][0] == '#') {
            ++rep.comment_lines;
            continue;
        }
        if (parts[0] == "p") {
            if (saw_header) throw ParseError("repeated DIMACS header", line_no);
            if (parts.size() != 4 || parts[1] != "edge")
                throw ParseError("malformed DIMACS header", line_no);
            dimacs = true;
            saw_header = true;
            int n;
            try {
                n = std::stoi(parts[2]);
            } catch (...) {
                throw ParseError("bad vertex count", line_no);
            }
            if (n < 0) throw ParseError("negative vertex count", line_no);
            g = Graph(n);
            continue;
        }
        if (parts[0] == "e") {
            if (!saw_header) throw ParseError("edge before DIMACS header", line_no);
            if (parts.size() != 3) throw ParseError("malformed edge line", line_no);
            int u, v;
            try {
                u = std::stoi(parts[1]);
                v = std::stoi(parts[2]);
            } catch (...) {
                throw ParseError("bad edge endpoint", line_no);
            }
            if (u < 1 || v < 1 || u > g.num_vertices() || v > g.num_vertices())
                throw ParseError("edge endpoint out of range", line_no);
            if (u == v) throw ParseError("self-loop", line_no);
            if (!g.add_edge(u - 1, v - 1)) ++rep.duplicate_edges;
            continue;
        }
        if (dimacs) throw ParseError("unrecognized DIMACS line", line_no);
        if (parts.size() != 2) throw ParseError("expected two labels per line", line_no);
        if (first_content_line == 0) first_content_line = line_no;
        pending.emplace_back(std::to_string(line_no), std::make_pair(parts[0], parts[1]));
    }

    if (!dimacs) {
        for (const auto& [where, e] : pending) {
            int ln = std::stoi(where);
            if (e.first == e.second) throw ParseError("self-loop", ln);
            int u = intern(e.first);
            int v = intern(e.second);
            if (!g.add_edge(u, v)) ++rep.duplicate_edges;
        }
    }
    return g;
}

std::string export_dot(const Graph& g, const std::vector<std::string>& vertex_colors) {
    if (!vertex_colors.empty() && static_cast<int>(vertex_colors.size()) != g.num_vertices())
        throw GraphError("color list size mismatch");
    // Distinct color names get distinct fills from a 12-entry scheme, cycling
    // when the palette is larger; the exact color name rides in the label.
    std::map<std::string, int> class_of;
    std::ostringstream out;
    out << "graph G {\n";
    if (!vertex_colors.empty()) out << "  node [style=filled];\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "  \"" << g.label(v) << "\"";
        if (!vertex_colors.empty()) {
            auto [it, fresh] = class_of.emplace(vertex_colors[v], class_of.size());
            (void)fresh;
            out << " [label=\"" << g.label(v) << "\\n" << vertex_colors[v]
                << "\", fillcolor=\"/set312/" << (it->second % 12) + 1 << "\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges())
        out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
    out << "}\n";
    return out.str();
}

Graph regular_embed(const Graph& g) {
    if (g.num_vertices() == 0) return g;
    Graph cur = g;
    int target = g.max_degree();
    int rounds = 0;
    while (!cur.is_regular() || cur.max_degree() != target) {
        if (++rounds > target + 1) throw GraphError("regular embedding did not converge");
        int n = cur.num_vertices();
        Graph next(0, {});
        for (int v = 0; v < n; ++v) next.add_vertex(cur.label(v));
        for (int v = 0; v < n; ++v) {
            // Twin copies get a round-local suffix; re-suffixing keeps labels unique.
            next.add_vertex(cur.label(v) + "#" + std::to_string(rounds));
        }
        for (auto [u, v] : cur.edges()) {
            next.add_edge(u, v);
            next.add_edge(u + n, v + n);
        }
        for (int v = 0; v < n; ++v)
            if (cur.degree(v) < target) next.add_edge(v, v + n);
        cur = std::move(next);
    }
    return cur;
}

uint64_t invariant_hash(const Graph& g) {
    int n = g.num_vertices();
    std::vector<uint64_t> h(n), nh(n);
    for (int v = 0; v < n; ++v) h[v] = 0x9e3779b97f4a7c15ULL ^ (uint64_t)g.degree(v);
    for (int round = 0; round < n; ++round) {
        for (int v = 0; v < n; ++v) {
            std::vector<uint64_t> nb;
            nb.reserve(g.degree(v));
            for (int w : g.neighbors(v)) nb.push_back(h[w]);
            std::sort(nb.begin(), nb.end());
            uint64_t acc = h[v] * 0x100000001b3ULL + 0xcbf29ce484222325ULL;
            for (uint64_t x : nb) acc = (acc ^ x) * 0x100000001b3ULL;
            nh[v] = acc;
        }
        h.swap(nh);
    }
    std::sort(h.begin(), h.end());
    uint64_t acc = 14695981039346656037ULL ^ (uint64_t)n ^ ((uint64_t)g.num_edges() << 32);
    for (uint64_t x : h) acc = (acc ^ x) * 0x100000001b3ULL;
    return acc;
}

namespace {

bool extend_iso(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                std::vector<int>& map_ba, int next) {
    int n = a.num_vertices();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (map_ba[cand] != -1) continue;
        if (a.degree(next) != b.degree(cand)) continue;
        bool ok = true;
        for (int w : a.neighbors(next)) {
            if (w < next && !b.has_edge(cand, map_ab[w])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            // Mapped non-neighbors must stay non-neighbors.
            for (int w = 0; w < next && ok; ++w)
                if (!a.has_edge(next, w) && b.has_edge(cand, map_ab[w])) ok = false;
        }
        if (!ok) continue;
        map_ab[next] = cand;
        map_ba[cand] = next;
        if (extend_iso(a, b, map_ab, map_ba, next + 1)) return true;
        map_ab[next] = -1;
        map_ba[cand] = -1;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.num_vertices(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.num_vertices(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map_ab(a.num_vertices(), -1), map_ba(a.num_vertices(), -1);
    return extend_iso(a, b, map_ab, map_ba, 0);
}

}  // namespace fracolor
