#include <doctest.h>

#include <vector>

#include "mpx/builders.hpp"
#include "mpx/maniplex.hpp"
#include "mpx/morphisms.hpp"
#include "oracles.hpp"

using namespace mpx;
using namespace mpx::builders;

TEST_CASE("constructor rejects malformed tables") {
    CHECK_THROWS_AS(Maniplex(1, {{0}, {1}}), input_error);            // fixed points
    CHECK_THROWS_AS(Maniplex(1, {{1}, {0}, {3}, {1}}), input_error);  // not an involution
    CHECK_THROWS_AS(Maniplex(1, {{5}, {0}}), input_error);            // out of range
    CHECK_THROWS_AS(Maniplex(2, {{1, 1}, {0, 0}}), input_error);      // parallel edges
    CHECK_THROWS_AS(Maniplex(0, {{}, {}}), input_error);              // rank 0 needs one flag
    CHECK_THROWS_AS(Maniplex(2, {{1}, {0}}), input_error);            // short row
    CHECK_NOTHROW(Maniplex(0, {{}}));
    CHECK_NOTHROW(Maniplex(1, {{1}, {0}}));
}

TEST_CASE("components of the square") {
    Maniplex square = polygon(4);
    CHECK(components(square, std::vector<int>{0, 1}).count == 1);
    CHECK(components(square, std::vector<int>{}).count == 8);
    CHECK_THROWS_AS(components(square, std::vector<int>{2}), input_error);
}

TEST_CASE("components of the cube agree with the breadth-first oracle") {
    Maniplex cube = hypercube(3);
    ComponentLabeling lab = components(cube, std::vector<int>{0, 1});
    CHECK(lab.count == 6);
    std::vector<int> size(lab.count, 0);
    for (int f = 0; f < cube.flag_count(); ++f) ++size[lab.label[f]];
    for (int s : size) CHECK(s == 8);
    // canonical ids match the independent BFS labeling exactly
    CHECK(lab.label == oracle::components_bfs(cube, {0, 1}));
}

TEST_CASE("faces") {
    Maniplex square = polygon(4);
    std::vector<Face> vertices = faces(square, 0);
    CHECK(vertices.size() == 4);
    for (const Face& v : vertices) {
        CHECK(v.rank_i == 0);
        CHECK(v.flags.size() == 2);
    }
    CHECK(faces(hypercube(3), 2).size() == 6);
    CHECK(faces(simplex(3), 2).size() == 4);
    CHECK_THROWS_AS(faces(square, 2), input_error);
}

TEST_CASE("face census of the corpus") {
    CHECK(face_census(polygon(4)) == std::vector<int>{4, 4});
    CHECK(face_census(polygon(7)) == std::vector<int>{7, 7});
    CHECK(face_census(hypercube(3)) == std::vector<int>{8, 12, 6});
    CHECK(face_census(cuboctahedron()) == std::vector<int>{12, 24, 14});
    CHECK(face_census(rhombic_dodecahedron()) == std::vector<int>{14, 24, 12});
}

TEST_CASE("dual") {
    Maniplex cube = hypercube(3);
    Maniplex octahedron = dual(cube);
    CHECK(octahedron.flag_count() == 48);
    CHECK(faces(octahedron, 2).size() == 8);
    CHECK(dual(octahedron) == cube);

    CHECK(is_isomorphic(dual(polygon(5)), polygon(5)).has_value());
    CHECK(is_isomorphic(dual(rhombic_dodecahedron()), cuboctahedron()).has_value());
}

TEST_CASE("restrict_component extracts facets") {
    Maniplex cube = hypercube(3);
    std::vector<int> colors{0, 1};
    Maniplex facet = restrict_component(cube, colors, 0);
    CHECK(facet.rank() == 2);
    CHECK(facet.flag_count() == 8);
    CHECK(is_isomorphic(facet, polygon(4)).has_value());
}
