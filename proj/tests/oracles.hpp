#pragma once

// Brute-force reference implementations, independent of the library's
// union-find / labeling-map code paths. Everything here runs breadth-first
// searches and all-pairs loops straight from the definitions, at the cost of
// being slow; keep inputs small (~200 flags).

#include <random>
#include <vector>

#include "mpx/maniplex.hpp"
#include "mpx/simple_graph.hpp"

namespace mpx::oracle {

// flag -> component id under the given colors, ids by smallest member flag,
// computed by repeated BFS.
std::vector<int> components_bfs(const Maniplex& m, const std::vector<int>& colors);

bool is_maniplex(const Maniplex& m);

// Path Intersection Property checked over every flag pair and every i <= j.
bool is_polytope(const Maniplex& m);

// Every i-face meets every j-face, by explicit all-pairs intersection.
bool is_flat(const Maniplex& m, int i, int j);

// Exhaustive c^n search for a proper coloring.
bool colorable(const SimpleGraph& g, int c);

// The union of two perfect matchings (partner arrays, 0-based) is a single
// Hamiltonian cycle: connected and 2-regular as an explicit edge set.
bool hamiltonian_union(const std::vector<int>& factor_a, const std::vector<int>& factor_b);

// m with flags renamed by a uniformly random permutation.
Maniplex random_relabel(const Maniplex& m, std::mt19937& rng);

SimpleGraph random_graph(int nodes, double density, std::mt19937& rng);

}  // namespace mpx::oracle
