#include "mpx/symmetry.hpp"

#include <algorithm>
#include <unordered_map>

#include "mpx/predicates.hpp"
#include "mpx/union_find.hpp"

namespace mpx {

int AutomorphismGroup::element_with_image(int image) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), image,
                               [](const FlagMap& e, int img) { return e[0] < img; });
    if (it == elements.end() || (*it)[0] != image) return -1;
    return static_cast<int>(it - elements.begin());
}

AutomorphismGroup automorphism_group(const Maniplex& m) {
    if (!is_connected(m)) throw input_error("automorphism_group requires a connected maniplex");
    AutomorphismGroup group;
    group.flag_count = m.flag_count();
    if (m.rank() == 0) {
        group.elements = {FlagMap{0}};
        group.orbit_label = {0};
        group.orbit_count = 1;
        return group;
    }
    UnionFind orbits(m.flag_count());
    for (int g = 0; g < m.flag_count(); ++g) {
        if (auto map = propagate_map(m, m, 0, g)) {
            for (int f = 0; f < m.flag_count(); ++f) orbits.unite(f, (*map)[f]);
            group.elements.push_back(std::move(*map));
        }
    }
    // candidates were tried in ascending image order
    group.orbit_label.assign(m.flag_count(), -1);
    std::unordered_map<int, int> id_of_root;
    for (int f = 0; f < m.flag_count(); ++f) {
        auto [it, inserted] = id_of_root.try_emplace(orbits.find(f), group.orbit_count);
        if (inserted) ++group.orbit_count;
        group.orbit_label[f] = it->second;
    }
    return group;
}

bool is_regular(const Maniplex& m) {
    AutomorphismGroup group = automorphism_group(m);
    return group.order() == m.flag_count();
}

SymmetryTypeGraph symmetry_type_graph(const Maniplex& m) {
    return symmetry_type_graph(m, automorphism_group(m));
}

SymmetryTypeGraph symmetry_type_graph(const Maniplex& m, const AutomorphismGroup& group) {
    SymmetryTypeGraph stg;
    stg.node_count = group.orbit_count;
    stg.rank = m.rank();
    stg.darts.assign(stg.node_count, std::vector<SymmetryTypeGraph::Dart>(m.rank()));

    std::vector<int> representative(stg.node_count, -1);
    for (int f = 0; f < m.flag_count(); ++f)
        if (representative[group.orbit_label[f]] == -1) representative[group.orbit_label[f]] = f;

    for (int node = 0; node < stg.node_count; ++node) {
        int f = representative[node];
        for (int i = 0; i < m.rank(); ++i) {
            int target = group.orbit_label[m.adjacent(f, i)];
            stg.darts[node][i] = {target == node, target};
        }
    }
    return stg;
}

bool is_hereditary_extension(const Maniplex& p, const Maniplex& q) {
    const int layer = p.flag_count();
    if (q.flag_count() % layer != 0 || q.rank() != p.rank() + 1)
        throw input_error("q does not carry the layer structure of an extension of p");
    for (int f = 0; f < layer; ++f)
        for (int c = 0; c < p.rank(); ++c)
            if (underlying_flag(q.adjacent(f, c), layer) != p.adjacent(f, c) ||
                layer_of(q.adjacent(f, c), layer) != 1)
                throw input_error("q does not carry the layer structure of an extension of p");

    AutomorphismGroup gp = automorphism_group(p);
    AutomorphismGroup gq = automorphism_group(q);
    for (const FlagMap& phi : gp.elements) {
        bool lifted = false;
        for (const FlagMap& psi : gq.elements) {
            bool agrees = true;
            for (int f = 0; f < layer && agrees; ++f)
                agrees = underlying_flag(psi[f], layer) == phi[f];
            if (agrees) {
                lifted = true;
                break;
            }
        }
        if (!lifted) return false;
    }
    return true;
}

Parity automorphism_parity(const Maniplex& m, const FlagMap& phi, int c) {
    ColorParity classes = color_parity(m, c);
    if (!classes) throw input_error("parity is not well-defined: an odd cycle exists for this color");
    if (phi.empty() || static_cast<int>(phi.size()) != m.flag_count())
        throw input_error("automorphism has the wrong size");
    return classes.parity[phi[0]] == classes.parity[0] ? Parity::even : Parity::odd;
}

AmalgamGroupReport amalgam_group_check(const RootedManiplex& p, const RootedManiplex& q,
                                       const MixResult& m) {
    const Maniplex& graph = m.rooted.graph;
    AmalgamGroupReport report;

    AutomorphismGroup gm = automorphism_group(graph);
    report.group_order = gm.order();

    AutomorphismGroup gp = automorphism_group(p.graph);
    AutomorphismGroup gq = automorphism_group(q.graph);
    ColorParity parity_p = color_parity(p.graph, p.graph.rank() - 1);
    ColorParity parity_q = color_parity(q.graph, 0);
    if (!parity_p || !parity_q) throw input_error("amalgam parity is not well-defined");

    const long long qn = q.graph.flag_count();
    std::unordered_map<long long, int> index_of;
    for (size_t t = 0; t < m.pairs.size(); ++t)
        index_of.emplace(m.pairs[t].first * qn + m.pairs[t].second, static_cast<int>(t));

    report.pairs_act = true;
    for (const FlagMap& phi : gp.elements) {
        int even_p = parity_p.parity[phi[p.base]] == parity_p.parity[p.base];
        for (const FlagMap& psi : gq.elements) {
            int even_q = parity_q.parity[psi[q.base]] == parity_q.parity[q.base];
            if (even_p != even_q) continue;
            ++report.matched_pairs;

            FlagMap action(m.pairs.size(), -1);
            bool inside = true;
            for (size_t t = 0; t < m.pairs.size() && inside; ++t) {
                auto it = index_of.find(phi[m.pairs[t].first] * qn + psi[m.pairs[t].second]);
                if (it == index_of.end())
                    inside = false;
                else
                    action[t] = it->second;
            }
            if (!inside || !is_automorphism(graph, action)) report.pairs_act = false;
        }
    }
    report.ok = report.pairs_act && report.group_order == report.matched_pairs;
    return report;
}

}  // namespace mpx
