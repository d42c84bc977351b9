#pragma once

#include <string>
#include <vector>

#include "mpx/maniplex.hpp"
#include "mpx/simple_graph.hpp"

namespace mpx {

// Commutation check: colors at distance > 1 must commute at every flag.
struct ManiplexCheck {
    bool ok = true;
    int flag = -1, color_i = -1, color_j = -1;  // witness on failure
    explicit operator bool() const { return ok; }
    std::string describe() const;
};

ManiplexCheck is_maniplex(const Maniplex& m);

// Path Intersection Property: for colors i <= j, flags in the same
// {i..n-1}-component and the same {0..j}-component must share their
// {i..j}-component. Checked by asserting the map
// (label_{i..n-1}, label_{0..j}) -> label_{i..j} is well-defined.
// A polytope is a connected maniplex satisfying the PIP.
struct PolytopeCheck {
    enum class Failure { none, disconnected, commutation, path_intersection };
    bool ok = true;
    Failure failure = Failure::none;
    int flag_a = -1, flag_b = -1;   // witness flags (PIP / commutation)
    int color_i = -1, color_j = -1;
    explicit operator bool() const { return ok; }
    std::string describe() const;
};

PolytopeCheck is_polytope(const Maniplex& m);

// Every i-face incident to every j-face. Requires 0 <= i < j < rank.
bool is_flat(const Maniplex& m, int i, int j);

// Parity of the number of color-c edges along paths from the smallest flag
// of each component. Well-defined iff no cycle has an odd count of color-c
// edges; the odd cycle is returned as a closed flag walk otherwise.
struct ColorParity {
    bool well_defined = false;
    std::vector<int> parity;     // flag -> 0/1
    std::vector<int> odd_cycle;  // flags, when !well_defined
    explicit operator bool() const { return well_defined; }
};

ColorParity color_parity(const Maniplex& m, int c);

// Facet (color n-1) or vertex (color 0) bipartition, as flag classes and as
// classes of the canonical face ids. Red (0) is the class of flag 0.
struct BipartiteCheck {
    bool bipartite = false;
    std::vector<int> flag_side;  // flag -> 0 red / 1 blue
    std::vector<int> face_side;  // canonical face id -> side
    std::vector<int> odd_cycle;  // closed flag walk, when !bipartite
    explicit operator bool() const { return bipartite; }
};

BipartiteCheck is_facet_bipartite(const Maniplex& m);
BipartiteCheck is_vertex_bipartite(const Maniplex& m);

// Nodes are the facets (canonical ids); two facets are joined when some
// color-(n-1) edge crosses between them. A color-(n-1) edge inside a single
// facet sets the graph's degenerate flag instead of adding a loop.
SimpleGraph facet_graph(const Maniplex& m);

// facet_graph(dual(m)): nodes are the 0-faces.
SimpleGraph skeleton_graph(const Maniplex& m);

}  // namespace mpx
