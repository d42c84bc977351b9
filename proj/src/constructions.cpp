#include "mpx/constructions.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "mpx/predicates.hpp"

namespace mpx {

namespace {

void require_polytope(const Maniplex& p, const char* who) {
    if (PolytopeCheck check = is_polytope(p); !check) {
        std::ostringstream msg;
        msg << who << " requires a polytope; input is not one (" << check.describe() << ")";
        throw input_error(msg.str());
    }
}

std::string extension_name(const Maniplex& p, int k) {
    if (p.name().empty()) return {};
    std::ostringstream name;
    name << p.name() << "|" << k;
    return name.str();
}

// k layered copies of p, color n matching flag f of layer i to the same flag
// of layer to_layer(f, i).
template <typename ToLayer>
Maniplex layered_extension(const Maniplex& p, int k, ToLayer to_layer, std::string name) {
    const int n = p.rank();
    const int layer = p.flag_count();
    const int flags = k * layer;
    std::vector<int> adj(static_cast<size_t>(flags) * (n + 1));
    for (int i = 1; i <= k; ++i) {
        for (int f = 0; f < layer; ++f) {
            int t = layered_index(i, f, layer);
            for (int c = 0; c < n; ++c)
                adj[static_cast<size_t>(t) * (n + 1) + c] = layered_index(i, p.adjacent(f, c), layer);
            adj[static_cast<size_t>(t) * (n + 1) + n] = layered_index(to_layer(f, i), f, layer);
        }
    }
    return Maniplex(n + 1, flags, std::move(adj), std::move(name));
}

}  // namespace

Maniplex trivial_extension(const Maniplex& p) {
    if (p.rank() < 1) throw input_error("trivial extension needs rank >= 1");
    require_polytope(p, "trivial_extension");
    return layered_extension(
        p, 2, [](int, int i) { return 3 - i; }, extension_name(p, 2));
}

Maniplex flat_extension(const Maniplex& p, int k) {
    if (k < 2 || k % 2 != 0) throw input_error("flat extension needs an even k >= 2");
    if (p.rank() < 1) throw input_error("flat extension needs rank >= 1");
    if (k == 2) return trivial_extension(p);

    require_polytope(p, "flat_extension");
    BipartiteCheck classes = is_facet_bipartite(p);
    if (!classes) {
        std::ostringstream msg;
        msg << "flat extension needs a facet-bipartite polytope; odd cycle through flags";
        for (int f : classes.odd_cycle) msg << " " << f;
        throw input_error(msg.str());
    }

    // red flags pair layers (1,2),(3,4),...; blue flags pair (2,3),...,(k,1)
    auto to_layer = [&classes, k](int f, int i) {
        if (classes.flag_side[f] == 0) return (i % 2 == 1) ? i + 1 : i - 1;
        if (i % 2 == 0) return i == k ? 1 : i + 1;
        return i == 1 ? k : i - 1;
    };
    return layered_extension(p, k, to_layer, extension_name(p, k));
}

bool check_flat_extension_necessary(const Maniplex& p, int k, int node_cap) {
    if (k < 3) throw input_error("the facet-coloring condition applies for k >= 3");
    require_polytope(p, "check_flat_extension_necessary");
    ChromaticResult result = chromatic_decision(facet_graph(p), k - 1, node_cap);
    if (result.status == ChromaticResult::Status::undecided)
        throw input_error("facet graph exceeds the exact-coloring cap; undecided");
    return static_cast<bool>(result);
}

Maniplex factorization_extension(const Maniplex& p, const std::vector<int>& facet_coloring,
                                 const OneFactorization& fac) {
    const int k = fac.k;
    if (k < 4 || k % 2 != 0) throw input_error("factorization extension needs an even k >= 4");
    require_polytope(p, "factorization_extension");

    if (FactorizationCheck check = is_perfect_factorization(fac); !check) {
        std::ostringstream msg;
        msg << "factorization is not perfect: factors " << check.factor_a << " and "
            << check.factor_b << " do not union to a Hamiltonian cycle";
        throw input_error(msg.str());
    }

    SimpleGraph fg = facet_graph(p);
    if (fg.node_count < 2) throw input_error("factorization extension needs at least 2 facets");
    if (static_cast<int>(facet_coloring.size()) != fg.node_count)
        throw input_error("facet coloring size does not match facet count");
    for (int color : facet_coloring)
        if (color < 1 || color > k - 1) throw input_error("facet color out of range 1..k-1");
    for (auto [a, b] : fg.edges) {
        if (facet_coloring[a] == facet_coloring[b]) {
            std::ostringstream msg;
            msg << "facet coloring is not proper: adjacent facets " << a << " and " << b
                << " share color " << facet_coloring[a];
            throw input_error(msg.str());
        }
    }

    // color each flag by its facet, then send flag f of layer i to layer σ_c(i)
    const int top = p.rank() - 1;
    std::vector<int> keep;
    for (int c = 0; c < top; ++c) keep.push_back(c);
    ComponentLabeling facets = components(p, keep);
    auto to_layer = [&](int f, int i) { return fac.sigma(facet_coloring[facets.label[f]], i); };
    return layered_extension(p, k, to_layer, extension_name(p, k));
}

Maniplex factorization_extension_auto(const Maniplex& p, int k) {
    OneFactorization fac = prime_case_factorization(k);
    ChromaticResult coloring = chromatic_decision(facet_graph(p), k - 1);
    if (coloring.status == ChromaticResult::Status::undecided)
        throw input_error("facet graph exceeds the exact-coloring cap; undecided");
    if (!coloring) {
        std::ostringstream msg;
        msg << "no proper " << k - 1 << "-coloring of the facet graph exists";
        throw input_error(msg.str());
    }
    return factorization_extension(p, coloring.coloring, fac);
}

Maniplex iterate_extension(const Maniplex& p, std::span<const int> ks) {
    Maniplex out = p;
    for (int k : ks) out = flat_extension(out, k);
    return out;
}

MixResult mix(const RootedManiplex& p, const RootedManiplex& q, int r) {
    const int n = p.graph.rank();
    const int m = q.graph.rank();
    if (p.base < 0 || p.base >= p.graph.flag_count()) throw input_error("base flag of p out of range");
    if (q.base < 0 || q.base >= q.graph.flag_count()) throw input_error("base flag of q out of range");
    if (r < 0 || r > n - 1) throw input_error("mix requires 0 <= r <= n-1");
    if (m > 0 && r < n - m) throw input_error("mix requires r >= n - m");

    // out-of-range superscripts act as the identity; a rank-0 right factor
    // leaves every color acting on the left alone
    const int rank = std::max(n, m + r);
    auto left_of = [&](int pf, int i) { return i < n ? p.graph.adjacent(pf, i) : pf; };
    auto right_of = [&](int qf, int i) {
        int c = i - r;
        return (c >= 0 && c < m) ? q.graph.adjacent(qf, c) : qf;
    };

    const long long qn = q.graph.flag_count();
    std::unordered_map<long long, int> index_of;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> adj;
    std::queue<int> queue;
    auto intern = [&](int pf, int qf) {
        auto [it, inserted] = index_of.try_emplace(pf * qn + qf, static_cast<int>(pairs.size()));
        if (inserted) {
            pairs.emplace_back(pf, qf);
            queue.push(it->second);
        }
        return it->second;
    };

    intern(p.base, q.base);
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop();
        auto [pf, qf] = pairs[t];
        adj.resize((static_cast<size_t>(t) + 1) * rank, -1);
        for (int i = 0; i < rank; ++i)
            adj[static_cast<size_t>(t) * rank + i] = intern(left_of(pf, i), right_of(qf, i));
    }

    MixResult out;
    out.pairs = std::move(pairs);
    out.rooted.base = 0;
    out.rooted.graph = Maniplex(rank, static_cast<int>(out.pairs.size()), std::move(adj));
    return out;
}

MixResult flat_amalgamation(const RootedManiplex& p, const RootedManiplex& q) {
    const int n = p.graph.rank();
    if (n < 1 || q.graph.rank() < 1) throw input_error("flat amalgamation needs ranks >= 1");
    require_polytope(p.graph, "flat_amalgamation");
    require_polytope(q.graph, "flat_amalgamation");
    if (!is_facet_bipartite(p.graph))
        throw input_error("flat amalgamation needs a facet-bipartite left factor");
    if (!is_vertex_bipartite(q.graph))
        throw input_error("flat amalgamation needs a vertex-bipartite right factor");

    MixResult out = mix(p, q, n - 1);
    if (!p.graph.name().empty() && !q.graph.name().empty())
        out.rooted.graph.set_name(p.graph.name() + "|" + q.graph.name());
    return out;
}

}  // namespace mpx
