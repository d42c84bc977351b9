#pragma once

#include "mpx/maniplex.hpp"

namespace mpx {
namespace builders {

// The unique 1-polytope: two flags joined by a color-0 edge.
Maniplex point_segment();

// k-gon, 2k flags in a single cycle alternating colors 0 and 1. k >= 2.
Maniplex polygon(int k);

// Flags are the orderings of the n+1 vertex labels in lexicographic rank
// order; color i swaps positions i and i+1. 1 <= n <= 7.
Maniplex simplex(int n);

// Flags are (vertex, axis order) pairs; color 0 flips the first axis bit,
// color i swaps axes i-1 and i. 1 <= n <= 5.
Maniplex hypercube(int n);

// The map {4,4}_(s,0): s*s square faces on the torus, 8s^2 flags. s >= 1.
// (s = 1 is a maniplex but not a polytope.)
Maniplex torus44(int s);

// Medial of the cube, built from cube edge incidences; 96 flags.
Maniplex cuboctahedron();

// dual(cuboctahedron()).
Maniplex rhombic_dodecahedron();

}  // namespace builders
}  // namespace mpx
