#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mpx/factorization.hpp"
#include "mpx/maniplex.hpp"

namespace mpx {

// Every extension places the flag f of layer i (layers are 1..k) at index
// (i-1)*F + f, where F is the layer size. Layer 1 therefore embeds p at
// indices 0..F-1.
inline int layered_index(int layer, int flag, int layer_size) {
    return (layer - 1) * layer_size + flag;
}
inline int layer_of(int index, int layer_size) { return index / layer_size + 1; }
inline int underlying_flag(int index, int layer_size) { return index % layer_size; }

// {P, 2}: two layers with every flag matched to its twin by the new color.
Maniplex trivial_extension(const Maniplex& p);

// P|k for even k: k layers of the facet-bipartite polytope p, the new color
// matching red flags across layers (1,2),(3,4),... and blue flags across
// (2,3),...,(k,1). Red is the facet class of flag 0. k = 2 needs no
// bipartiteness and reduces to the trivial extension.
Maniplex flat_extension(const Maniplex& p, int k);

// Necessary condition for any (n-2,n)-flat extension with k >= 3 facets:
// the facet graph must be (k-1)-colorable. Exact decision; throws
// input_error when the facet graph exceeds node_cap (no heuristic).
bool check_flat_extension_necessary(const Maniplex& p, int k, int node_cap = 24);

// General extension: facet_coloring assigns colors 1..k-1 to the canonical
// facet ids (proper on the facet graph; unused colors are fine), and factor
// c of fac matches the layers of the flags with facet color c.
Maniplex factorization_extension(const Maniplex& p, const std::vector<int>& facet_coloring,
                                 const OneFactorization& fac);

// Picks an exact proper (k-1)-coloring and the prime-case factorization.
// Requires k-1 prime.
Maniplex factorization_extension_auto(const Maniplex& p, int k);

// Left fold of flat_extension over ks.
Maniplex iterate_extension(const Maniplex& p, std::span<const int> ks);

// A mix or amalgamation together with its flag provenance.
struct MixResult {
    RootedManiplex rooted;                   // base flag is 0 (breadth-first start)
    std::vector<std::pair<int, int>> pairs;  // result flag -> (flag of p, flag of q)
};

// The r-mix (P,Φ) ◇_r (Q,Ψ): color i acts as (Λ^i, Δ^(i-r)) with
// out-of-range superscripts acting as the identity; the flag set is the
// component of the base pair. Requires 0 <= r <= n-1 and r >= n-m, except
// that a rank-0 right factor is allowed and leaves p unchanged.
MixResult mix(const RootedManiplex& p, const RootedManiplex& q, int r);

// The (n-1)-mix of a facet-bipartite polytope with a vertex-bipartite
// polytope: an (m+n-1)-polytope that is (n-2,n)-flat.
MixResult flat_amalgamation(const RootedManiplex& p, const RootedManiplex& q);

}  // namespace mpx
