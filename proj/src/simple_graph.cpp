#include "mpx/simple_graph.hpp"

#include <algorithm>
#include <queue>

#include "mpx/maniplex.hpp"
#include "mpx/union_find.hpp"

namespace mpx {

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g;
    g.node_count = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.edges.emplace_back(a, b);
    return g;
}

SimpleGraph SimpleGraph::cycle(int n) {
    SimpleGraph g;
    g.node_count = n;
    for (int a = 0; a + 1 < n; ++a) g.edges.emplace_back(a, a + 1);
    if (n >= 3) g.edges.emplace_back(0, n - 1);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

void SimpleGraph::add_edge(int a, int b) {
    if (a == b) throw input_error("loop edge in simple graph");
    if (a < 0 || b < 0 || a >= node_count || b >= node_count)
        throw input_error("edge endpoint out of range");
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
    if (it == edges.end() || *it != std::make_pair(a, b)) edges.insert(it, {a, b});
}

bool SimpleGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
    std::vector<std::vector<int>> adj(node_count);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> deg(node_count, 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

Bipartition bipartition(const SimpleGraph& g) {
    Bipartition out;
    out.side.assign(g.node_count, -1);
    auto adj = g.adjacency();
    std::vector<int> parent(g.node_count, -1);

    for (int start = 0; start < g.node_count; ++start) {
        if (out.side[start] != -1) continue;
        out.side[start] = 0;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : adj[u]) {
                if (out.side[v] == -1) {
                    out.side[v] = 1 - out.side[u];
                    parent[v] = u;
                    queue.push(v);
                } else if (out.side[v] == out.side[u]) {
                    // walk both endpoints up to the root; the two tree paths
                    // plus edge (u, v) close an odd cycle
                    std::vector<int> up_u, up_v;
                    for (int x = u; x != -1; x = parent[x]) up_u.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) up_v.push_back(x);
                    while (up_u.size() > 1 && up_v.size() > 1 &&
                           up_u[up_u.size() - 2] == up_v[up_v.size() - 2]) {
                        up_u.pop_back();
                        up_v.pop_back();
                    }
                    out.odd_cycle.assign(up_u.begin(), up_u.end());
                    out.odd_cycle.insert(out.odd_cycle.end(), up_v.rbegin() + 1, up_v.rend());
                    out.bipartite = false;
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    return out;
}

bool is_connected(const SimpleGraph& g) {
    if (g.node_count == 0) return true;
    UnionFind uf(g.node_count);
    for (auto [a, b] : g.edges) uf.unite(a, b);
    return uf.count() == 1;
}

bool is_cycle_graph(const SimpleGraph& g) {
    if (g.node_count < 3) return false;
    auto deg = g.degrees();
    if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) return false;
    return is_connected(g);
}

}  // namespace mpx
