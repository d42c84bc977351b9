#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace mpx::oracle {

std::vector<int> components_bfs(const Maniplex& m, const std::vector<int>& colors) {
    std::vector<int> label(m.flag_count(), -1);
    int next = 0;
    for (int start = 0; start < m.flag_count(); ++start) {
        if (label[start] != -1) continue;
        label[start] = next;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop();
            for (int c : colors) {
                int g = m.adjacent(f, c);
                if (label[g] == -1) {
                    label[g] = next;
                    queue.push(g);
                }
            }
        }
        ++next;
    }
    return label;
}

bool is_maniplex(const Maniplex& m) {
    for (int f = 0; f < m.flag_count(); ++f)
        for (int i = 0; i < m.rank(); ++i)
            for (int j = 0; j < m.rank(); ++j)
                if (i - j > 1 || j - i > 1)
                    if (m.adjacent(m.adjacent(f, i), j) != m.adjacent(m.adjacent(f, j), i))
                        return false;
    return true;
}

bool is_polytope(const Maniplex& m) {
    const int n = m.rank();
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (*std::max_element(components_bfs(m, all).begin(), components_bfs(m, all).end()) != 0)
        return false;
    if (!is_maniplex(m)) return false;

    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            std::vector<int> upper, lower, middle;
            for (int c = i; c <= n - 1; ++c) upper.push_back(c);
            for (int c = 0; c <= j; ++c) lower.push_back(c);
            for (int c = i; c <= j; ++c) middle.push_back(c);
            std::vector<int> hi = components_bfs(m, upper);
            std::vector<int> lo = components_bfs(m, lower);
            std::vector<int> mid = components_bfs(m, middle);
            for (int a = 0; a < m.flag_count(); ++a)
                for (int b = a + 1; b < m.flag_count(); ++b)
                    if (hi[a] == hi[b] && lo[a] == lo[b] && mid[a] != mid[b]) return false;
        }
    }
    return true;
}

bool is_flat(const Maniplex& m, int i, int j) {
    std::vector<int> no_i, no_j;
    for (int c = 0; c < m.rank(); ++c) {
        if (c != i) no_i.push_back(c);
        if (c != j) no_j.push_back(c);
    }
    std::vector<int> iface = components_bfs(m, no_i);
    std::vector<int> jface = components_bfs(m, no_j);
    int icount = *std::max_element(iface.begin(), iface.end()) + 1;
    int jcount = *std::max_element(jface.begin(), jface.end()) + 1;

    for (int a = 0; a < icount; ++a) {
        for (int b = 0; b < jcount; ++b) {
            bool meets = false;
            for (int f = 0; f < m.flag_count() && !meets; ++f)
                meets = iface[f] == a && jface[f] == b;
            if (!meets) return false;
        }
    }
    return true;
}

bool colorable(const SimpleGraph& g, int c) {
    if (g.node_count == 0) return true;
    std::vector<int> color(g.node_count, 0);
    while (true) {
        bool proper = true;
        for (auto [a, b] : g.edges)
            if (color[a] == color[b]) {
                proper = false;
                break;
            }
        if (proper) return true;
        int pos = 0;
        while (pos < g.node_count && color[pos] == c - 1) color[pos++] = 0;
        if (pos == g.node_count) return false;
        ++color[pos];
    }
}

bool hamiltonian_union(const std::vector<int>& factor_a, const std::vector<int>& factor_b) {
    const int k = static_cast<int>(factor_a.size());
    std::vector<std::vector<int>> adj(k);
    for (int v = 0; v < k; ++v) {
        adj[v].push_back(factor_a[v]);
        if (factor_b[v] != factor_a[v]) adj[v].push_back(factor_b[v]);
    }
    for (int v = 0; v < k; ++v)
        if (adj[v].size() != 2) return false;
    std::vector<char> seen(k, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                queue.push(u);
            }
    }
    return reached == k;
}

Maniplex random_relabel(const Maniplex& m, std::mt19937& rng) {
    std::vector<int> perm(m.flag_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> adj(static_cast<size_t>(m.flag_count()) * m.rank());
    for (int f = 0; f < m.flag_count(); ++f)
        for (int i = 0; i < m.rank(); ++i)
            adj[static_cast<size_t>(perm[f]) * m.rank() + i] = perm[m.adjacent(f, i)];
    return Maniplex(m.rank(), m.flag_count(), std::move(adj), m.name());
}

SimpleGraph random_graph(int nodes, double density, std::mt19937& rng) {
    SimpleGraph g;
    g.node_count = nodes;
    std::bernoulli_distribution flip(density);
    for (int a = 0; a < nodes; ++a)
        for (int b = a + 1; b < nodes; ++b)
            if (flip(rng)) g.add_edge(a, b);
    return g;
}

}  // namespace mpx::oracle
