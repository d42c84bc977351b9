#pragma once

#include <optional>
#include <vector>

#include "mpx/maniplex.hpp"

namespace mpx {

using FlagMap = std::vector<int>;

// The color-preserving homomorphism a -> b determined by anchor_a -> anchor_b,
// grown by breadth-first propagation over a's component of anchor_a; empty on
// any conflict. A color-preserving map of connected properly edge-colored
// graphs is determined by one flag image, so this is exhaustive.
std::optional<FlagMap> propagate_map(const Maniplex& a, const Maniplex& b, int anchor_a, int anchor_b);

// Color-preserving bijection, anchored at flag 0 of a against every candidate
// image in b (smallest image wins, so the result is deterministic). Both
// inputs must be connected and of equal rank.
std::optional<FlagMap> is_isomorphic(const Maniplex& a, const Maniplex& b);

// Color-preserving epimorphism q -> p (q covers p). Equal rank required;
// both connected.
std::optional<FlagMap> covers(const Maniplex& q, const Maniplex& p);

bool is_automorphism(const Maniplex& m, const FlagMap& phi);

}  // namespace mpx
