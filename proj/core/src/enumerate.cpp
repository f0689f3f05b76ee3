#include "fracolor/enumerate.hpp"

#include <algorithm>
#include <map>

#include "fracolor/builtins.hpp"

namespace fracolor {

namespace {

// Backtracking generator: completes vertex degrees in order, picking each
// vertex's missing neighbors among higher-numbered vertices. Vertex 0's
// neighborhood is pinned to {1,2,3}, which every cubic graph admits after
// relabeling, so each isomorphism class survives at least once.
struct CubicGen {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> deg;
    std::vector<Graph> out;

    explicit CubicGen(int n_) : n(n_), adj(n_), deg(n_, 0) {}

    void add(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        ++deg[u];
        ++deg[v];
    }
    void remove_last(int u, int v) {
        adj[u].pop_back();
        adj[v].pop_back();
        --deg[u];
        --deg[v];
    }

    bool feasible(int from) const {
        // Every vertex below `from` is already full; remaining stubs must pair up.
        int stubs = 0;
        for (int v = from; v < n; ++v) stubs += 3 - deg[v];
        return stubs % 2 == 0;
    }

    void emit() {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) g.add_edge(u, v);
        if (g.is_connected()) out.push_back(std::move(g));
    }

    // Chooses the remaining neighbors of vertex u, ascending, then recurses.
    void complete_vertex(int u, int min_next) {
        if (u == n) {
            emit();
            return;
        }
        if (deg[u] == 3) {
            complete_vertex(u + 1, u + 2);
            return;
        }
        for (int v = std::max(min_next, u + 1); v < n; ++v) {
            if (deg[v] == 3) continue;
            if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) continue;
            add(u, v);
            if (feasible(u)) complete_vertex(u, v + 1);
            remove_last(u, v);
        }
    }

    void run() {
        if (n == 4) {
            // K4 directly; the pinning below assumes n > 4.
            out.push_back(complete_graph(4));
            return;
        }
        add(0, 1);
        add(0, 2);
        add(0, 3);
        complete_vertex(1, 2);
    }
};

Graph complete_graph_local(int r) {
    Graph g(r);
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

std::vector<Graph> connected_cubic_graphs(int n) {
    if (n < 4 || n % 2 != 0) throw GraphError("cubic graphs need even n >= 4");
    CubicGen gen(n);
    if (n == 4) {
        return {complete_graph_local(4)};
    }
    gen.run();

    // Dedupe: bucket by invariant hash, then exact isomorphism within buckets.
    std::map<uint64_t, std::vector<int>> buckets;
    std::vector<Graph> classes;
    for (auto& g : gen.out) {
        uint64_t key = invariant_hash(g);
        auto& bucket = buckets[key];
        bool fresh = true;
        for (int idx : bucket)
            if (isomorphic(classes[idx], g)) {
                fresh = false;
                break;
            }
        if (fresh) {
            bucket.push_back(static_cast<int>(classes.size()));
            classes.push_back(std::move(g));
        }
    }
    return classes;
}

std::vector<Graph> connected_cubic_graphs_up_to(int max_n) {
    std::vector<Graph> all;
    for (int n = 4; n <= max_n; n += 2) {
        auto part = connected_cubic_graphs(n);
        for (auto& g : part) all.push_back(std::move(g));
    }
    return all;
}

}  // namespace fracolor
