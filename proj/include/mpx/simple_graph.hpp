#pragma once

#include <utility>
#include <vector>

namespace mpx {

// Loop-free undirected graph on nodes 0..node_count-1. Edges are kept
// normalized (a < b), sorted, and duplicate-free, so equal graphs compare
// equal and exports are stable.
struct SimpleGraph {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;

    // Facet graphs only: set when an edge of the defining color stayed inside
    // a single face. Such pairings add no edge here; the flag records the
    // degeneracy.
    bool degenerate = false;

    static SimpleGraph complete(int n);
    static SimpleGraph cycle(int n);

    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;

    bool operator==(const SimpleGraph& other) const {
        return node_count == other.node_count && edges == other.edges;
    }
};

struct Bipartition {
    bool bipartite = false;
    std::vector<int> side;       // node -> 0/1; the smallest node of each component is 0
    std::vector<int> odd_cycle;  // closed node walk of odd length (when !bipartite)
    explicit operator bool() const { return bipartite; }
};

Bipartition bipartition(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

// Connected with every degree 2 (a single cycle). Requires node_count >= 3.
bool is_cycle_graph(const SimpleGraph& g);

}  // namespace mpx
