#include <doctest.h>

#include <set>

#include "mpx/builders.hpp"
#include "mpx/constructions.hpp"
#include "mpx/predicates.hpp"
#include "oracles.hpp"

using namespace mpx;
using namespace mpx::builders;

namespace {

// two 4-flag blocks tied by a twisted color-2 matching; colors 0 and 2 fail
// to commute at flag 0 (three disjoint matchings on only 4 flags always
// commute, so 8 flags is the smallest such example)
Maniplex twisted_matching() {
    return Maniplex(3, {{1, 2, 4},
                        {0, 3, 6},
                        {3, 0, 5},
                        {2, 1, 7},
                        {5, 6, 0},
                        {4, 7, 2},
                        {7, 4, 1},
                        {6, 5, 3}});
}

}  // namespace

TEST_CASE("is_maniplex") {
    CHECK(static_cast<bool>(is_maniplex(hypercube(3))));
    CHECK(static_cast<bool>(is_maniplex(polygon(5))));  // rank 2 is vacuous

    Maniplex bad = twisted_matching();
    ManiplexCheck check = is_maniplex(bad);
    CHECK_FALSE(static_cast<bool>(check));
    CHECK(check.flag == 0);
    CHECK(check.color_i == 0);
    CHECK(check.color_j == 2);
    CHECK(bad.adjacent(bad.adjacent(0, 0), 2) != bad.adjacent(bad.adjacent(0, 2), 0));
    CHECK(is_maniplex(bad).ok == oracle::is_maniplex(bad));
}

TEST_CASE("is_polytope") {
    CHECK(static_cast<bool>(is_polytope(hypercube(3))));
    CHECK(static_cast<bool>(is_polytope(torus44(2))));
    CHECK(static_cast<bool>(is_polytope(Maniplex(0, {{}}))));

    SUBCASE("the one-face torus map fails path intersection") {
        Maniplex small = torus44(1);
        CHECK(static_cast<bool>(is_maniplex(small)));
        PolytopeCheck check = is_polytope(small);
        CHECK_FALSE(static_cast<bool>(check));
        CHECK(check.failure == PolytopeCheck::Failure::path_intersection);
        // the witness names two flags sharing their outer components but not
        // the middle one
        std::vector<int> upper, lower, middle;
        for (int c = check.color_i; c < small.rank(); ++c) upper.push_back(c);
        for (int c = 0; c <= check.color_j; ++c) lower.push_back(c);
        for (int c = check.color_i; c <= check.color_j; ++c) middle.push_back(c);
        auto hi = components(small, upper), lo = components(small, lower),
             mid = components(small, middle);
        CHECK(hi.label[check.flag_a] == hi.label[check.flag_b]);
        CHECK(lo.label[check.flag_a] == lo.label[check.flag_b]);
        CHECK(mid.label[check.flag_a] != mid.label[check.flag_b]);
    }

    SUBCASE("disconnected graphs are rejected") {
        Maniplex two_segments(1, {{1}, {0}, {3}, {2}});
        PolytopeCheck check = is_polytope(two_segments);
        CHECK_FALSE(static_cast<bool>(check));
        CHECK(check.failure == PolytopeCheck::Failure::disconnected);
    }

    SUBCASE("commutation failures are reported") {
        PolytopeCheck check = is_polytope(twisted_matching());
        CHECK_FALSE(static_cast<bool>(check));
        CHECK(check.failure == PolytopeCheck::Failure::commutation);
    }
}

TEST_CASE("is_flat") {
    Maniplex cube = hypercube(3);
    CHECK_FALSE(is_flat(cube, 0, 2));
    CHECK(is_flat(trivial_extension(cube), 1, 3));
    CHECK(is_flat(flat_extension(polygon(4), 4), 0, 2));
    CHECK_THROWS_AS(is_flat(cube, 2, 0), input_error);
    CHECK_THROWS_AS(is_flat(cube, 1, 1), input_error);
    CHECK_THROWS_AS(is_flat(cube, 0, 3), input_error);
    CHECK(is_flat(cube, 0, 1) == oracle::is_flat(cube, 0, 1));
    CHECK(is_flat(cube, 0, 2) == oracle::is_flat(cube, 0, 2));
}

TEST_CASE("facet and vertex bipartiteness") {
    BipartiteCheck square = is_facet_bipartite(polygon(4));
    CHECK(static_cast<bool>(square));
    CHECK(square.flag_side[0] == 0);  // red is the class of flag 0
    CHECK(square.face_side.size() == 4);

    BipartiteCheck triangle = is_facet_bipartite(polygon(3));
    CHECK_FALSE(static_cast<bool>(triangle));
    // the witness walk closes a cycle with an odd number of top-color edges
    int crossings = 0;
    const Maniplex tri = polygon(3);
    const auto& walk = triangle.odd_cycle;
    REQUIRE(!walk.empty());
    for (size_t s = 0; s < walk.size(); ++s) {
        int u = walk[s], v = walk[(s + 1) % walk.size()];
        if (tri.adjacent(u, 1) == v) ++crossings;
    }
    CHECK(crossings % 2 == 1);

    CHECK(static_cast<bool>(is_facet_bipartite(cuboctahedron())));
    CHECK_FALSE(static_cast<bool>(is_facet_bipartite(hypercube(3))));
    CHECK(static_cast<bool>(is_vertex_bipartite(hypercube(3))));
    CHECK_FALSE(static_cast<bool>(is_vertex_bipartite(cuboctahedron())));
    CHECK(static_cast<bool>(is_vertex_bipartite(rhombic_dodecahedron())));
}

TEST_CASE("facet graphs") {
    for (int n = 1; n <= 5; ++n) CHECK(facet_graph(simplex(n)) == SimpleGraph::complete(n + 1));
    CHECK(facet_graph(polygon(4)) == SimpleGraph::cycle(4));

    SimpleGraph fg = facet_graph(cuboctahedron());
    CHECK(fg.node_count == 14);
    CHECK_FALSE(fg.degenerate);
    Bipartition classes = bipartition(fg);
    CHECK(static_cast<bool>(classes));
    // 8 triangles on one side, 6 squares on the other
    std::vector<Face> facet_list = faces(cuboctahedron(), 2);
    int triangles = 0, squares = 0;
    int triangle_side = -1, square_side = -1;
    bool pure = true;
    for (int v = 0; v < fg.node_count; ++v) {
        if (facet_list[v].flags.size() == 6) {
            ++triangles;
            if (triangle_side == -1) triangle_side = classes.side[v];
            pure = pure && classes.side[v] == triangle_side;
        } else {
            CHECK(facet_list[v].flags.size() == 8);
            ++squares;
            if (square_side == -1) square_side = classes.side[v];
            pure = pure && classes.side[v] == square_side;
        }
    }
    CHECK(triangles == 8);
    CHECK(squares == 6);
    CHECK(pure);
    CHECK(triangle_side != square_side);
}

TEST_CASE("internal top-color edges set the degeneracy flag") {
    SimpleGraph fg = facet_graph(torus44(1));
    CHECK(fg.node_count == 1);
    CHECK(fg.edges.empty());
    CHECK(fg.degenerate);
}

TEST_CASE("skeletons") {
    SimpleGraph cube_skeleton = skeleton_graph(hypercube(3));
    CHECK(cube_skeleton.node_count == 8);
    CHECK(static_cast<bool>(bipartition(cube_skeleton)));

    SimpleGraph cubocta_skeleton = skeleton_graph(cuboctahedron());
    CHECK(cubocta_skeleton.node_count == 12);
    CHECK_FALSE(static_cast<bool>(bipartition(cubocta_skeleton)));

    SimpleGraph rd_skeleton = skeleton_graph(rhombic_dodecahedron());
    CHECK(rd_skeleton.node_count == 14);
    CHECK(static_cast<bool>(bipartition(rd_skeleton)));
}

TEST_CASE("color parity") {
    Maniplex hexagon = polygon(6);
    ColorParity parity = color_parity(hexagon, 1);
    CHECK(static_cast<bool>(parity));
    CHECK(parity.parity[0] == 0);
    CHECK(parity.parity[2] == 1);  // one color-1 edge from flag 0

    ColorParity broken = color_parity(polygon(3), 1);
    CHECK_FALSE(static_cast<bool>(broken));
    CHECK(!broken.odd_cycle.empty());
}
