#pragma once

#include <vector>

#include "mpx/constructions.hpp"
#include "mpx/maniplex.hpp"
#include "mpx/morphisms.hpp"

namespace mpx {

// All color-preserving automorphisms, stored as full flag permutations and
// sorted by the image of flag 0 (the action is free, so that image is a
// unique key and elements[0] is the identity). Orbit ids are ordered by
// smallest member flag.
struct AutomorphismGroup {
    int flag_count = 0;
    std::vector<FlagMap> elements;
    std::vector<int> orbit_label;
    int orbit_count = 0;

    int order() const { return static_cast<int>(elements.size()); }
    // the unique element sending flag 0 to image, or -1
    int element_with_image(int image) const;
};

AutomorphismGroup automorphism_group(const Maniplex& m);

// Transitive flag action: order equals flag count.
bool is_regular(const Maniplex& m);

// Quotient of the flag graph by the automorphism orbits. A color whose edge
// stays inside an orbit always projects to a semi-edge, because the free
// action then contains an element swapping the edge's endpoints.
struct SymmetryTypeGraph {
    struct Dart {
        bool semi = false;
        int target = -1;  // == the node itself for semi-edges
        bool operator==(const Dart&) const = default;
    };
    int node_count = 0;
    int rank = 0;
    std::vector<std::vector<Dart>> darts;  // [node][color]
    bool operator==(const SymmetryTypeGraph&) const = default;
};

SymmetryTypeGraph symmetry_type_graph(const Maniplex& m);
SymmetryTypeGraph symmetry_type_graph(const Maniplex& m, const AutomorphismGroup& group);

// q must be an extension of p built by this library (layer 1 of q embeds p
// at flags 0..F-1). True iff every automorphism of p agrees on layer-1
// underlying flags with some automorphism of q.
bool is_hereditary_extension(const Maniplex& p, const Maniplex& q);

enum class Parity { even, odd };

// Parity of the number of color-c edges along any path from flag 0 to its
// image under phi; base-independent. Requires the parity classes of color c
// to be well-defined.
Parity automorphism_parity(const Maniplex& m, const FlagMap& phi, int c);

// Checks the amalgamation group law on m = p|q: the group order equals the
// number of pairs (φ, ψ) whose (n-1)- and 0-parities match, and every such
// pair acts component-wise as an automorphism of m.
struct AmalgamGroupReport {
    bool ok = false;
    int group_order = 0;
    int matched_pairs = 0;
    bool pairs_act = false;
};

AmalgamGroupReport amalgam_group_check(const RootedManiplex& p, const RootedManiplex& q,
                                       const MixResult& m);

}  // namespace mpx
