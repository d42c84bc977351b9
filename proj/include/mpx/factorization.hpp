#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mpx/simple_graph.hpp"

namespace mpx {

// An ordered list of k-1 perfect matchings on k nodes whose union is K_k.
// Nodes are 0-based in memory; the FAC format, the layer numbering of
// extensions, and sigma() speak 1..k. Factor c (1-based) backs facet color c.
struct OneFactorization {
    int k = 0;
    std::vector<std::vector<int>> factors;  // factors[c][v] = partner of node v (0-based)

    // σ_c(i): the layer matched to layer i by factor c, all 1-based.
    int sigma(int c, int i) const { return factors[c - 1][i - 1] + 1; }

    // Type invariants: k even >= 2, k-1 factors, each a perfect matching,
    // pairwise edge-disjoint, union K_k. Throws input_error with a witness.
    void validate() const;
};

struct FactorizationCheck {
    bool perfect = true;
    int factor_a = -1, factor_b = -1;  // 1-based failing pair
    explicit operator bool() const { return perfect; }
};

// Perfect iff every pair of distinct factors unions to a single Hamiltonian
// cycle. Expects a validated factorization.
FactorizationCheck is_perfect_factorization(const OneFactorization& f);

// The starter construction on Z_{k-1} ∪ {∞} for k-1 prime: factor i matches
// ∞ with i and i+j with i-j (mod k-1). ∞ is relabeled as node k.
OneFactorization prime_case_factorization(int k);

struct ChromaticResult {
    enum class Status { colorable, not_colorable, undecided };
    Status status = Status::undecided;
    std::vector<int> coloring;  // node -> 1..c when colorable
    explicit operator bool() const { return status == Status::colorable; }
};

// Exact c-colorability via branch and bound with saturation-degree ordering.
// Deterministic under fixed node order. Graphs above node_cap come back
// undecided; the necessary-condition check needs an exact answer, so there
// is no heuristic fallback.
ChromaticResult chromatic_decision(const SimpleGraph& g, int c, int node_cap = 24);

OneFactorization read_factorization(std::istream& in, const std::string& source = "<stream>");
OneFactorization read_factorization_file(const std::string& path);
void write_factorization(const OneFactorization& f, std::ostream& out);

}  // namespace mpx
