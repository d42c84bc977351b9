#include "mpx/predicates.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <utility>

namespace mpx {

std::string ManiplexCheck::describe() const {
    if (ok) return "maniplex";
    std::ostringstream msg;
    msg << "colors " << color_i << " and " << color_j << " do not commute at flag " << flag;
    return msg.str();
}

std::string PolytopeCheck::describe() const {
    std::ostringstream msg;
    switch (failure) {
        case Failure::none:
            return "polytope";
        case Failure::disconnected:
            return "not connected";
        case Failure::commutation:
            msg << "colors " << color_i << " and " << color_j << " do not commute at flag " << flag_a;
            break;
        case Failure::path_intersection:
            msg << "path intersection fails for flags " << flag_a << " and " << flag_b
                << " at color range (" << color_i << ", " << color_j << ")";
            break;
    }
    return msg.str();
}

ManiplexCheck is_maniplex(const Maniplex& m) {
    for (int f = 0; f < m.flag_count(); ++f) {
        for (int i = 0; i < m.rank(); ++i) {
            for (int j = i + 2; j < m.rank(); ++j) {
                if (m.adjacent(m.adjacent(f, i), j) != m.adjacent(m.adjacent(f, j), i))
                    return {false, f, i, j};
            }
        }
    }
    return {};
}

namespace {

std::vector<int> color_range(int lo, int hi) {
    std::vector<int> colors(hi - lo + 1);
    std::iota(colors.begin(), colors.end(), lo);
    return colors;
}

}  // namespace

PolytopeCheck is_polytope(const Maniplex& m) {
    PolytopeCheck out;
    if (!is_connected(m)) {
        out.ok = false;
        out.failure = PolytopeCheck::Failure::disconnected;
        return out;
    }
    if (ManiplexCheck mc = is_maniplex(m); !mc) {
        out.ok = false;
        out.failure = PolytopeCheck::Failure::commutation;
        out.flag_a = mc.flag;
        out.color_i = mc.color_i;
        out.color_j = mc.color_j;
        return out;
    }

    const int n = m.rank();
    for (int i = 0; i <= n - 1; ++i) {
        for (int j = i; j <= n - 1; ++j) {
            ComponentLabeling upper = components(m, color_range(i, n - 1));
            ComponentLabeling lower = components(m, color_range(0, j));
            ComponentLabeling middle = components(m, color_range(i, j));
            // map (upper, lower) -> (middle, first flag seen with this key)
            std::map<std::pair<int, int>, std::pair<int, int>> seen;
            for (int f = 0; f < m.flag_count(); ++f) {
                std::pair<int, int> key{upper.label[f], lower.label[f]};
                auto [it, inserted] = seen.try_emplace(key, middle.label[f], f);
                if (!inserted && it->second.first != middle.label[f]) {
                    out.ok = false;
                    out.failure = PolytopeCheck::Failure::path_intersection;
                    out.flag_a = it->second.second;
                    out.flag_b = f;
                    out.color_i = i;
                    out.color_j = j;
                    return out;
                }
            }
        }
    }
    return out;
}

bool is_flat(const Maniplex& m, int i, int j) {
    if (i >= j) throw input_error("is_flat requires i < j");
    if (i < 0 || j >= m.rank()) throw input_error("is_flat color out of range");

    std::vector<int> no_i, no_j;
    for (int c = 0; c < m.rank(); ++c) {
        if (c != i) no_i.push_back(c);
        if (c != j) no_j.push_back(c);
    }
    ComponentLabeling ifaces = components(m, no_i);
    ComponentLabeling jfaces = components(m, no_j);

    std::vector<std::pair<int, int>> incident(m.flag_count());
    for (int f = 0; f < m.flag_count(); ++f) incident[f] = {ifaces.label[f], jfaces.label[f]};
    std::sort(incident.begin(), incident.end());
    incident.erase(std::unique(incident.begin(), incident.end()), incident.end());
    return incident.size() == static_cast<size_t>(ifaces.count) * jfaces.count;
}

ColorParity color_parity(const Maniplex& m, int c) {
    if (c < 0 || c >= m.rank()) throw input_error("parity color out of range");
    ColorParity out;
    const int n = m.flag_count();
    out.parity.assign(n, -1);
    std::vector<int> parent(n, -1);

    for (int start = 0; start < n; ++start) {
        if (out.parity[start] != -1) continue;
        out.parity[start] = 0;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int i = 0; i < m.rank(); ++i) {
                int v = m.adjacent(u, i);
                int p = out.parity[u] ^ (i == c ? 1 : 0);
                if (out.parity[v] == -1) {
                    out.parity[v] = p;
                    parent[v] = u;
                    queue.push(v);
                } else if (out.parity[v] != p) {
                    std::vector<int> up_u, up_v;
                    for (int x = u; x != -1; x = parent[x]) up_u.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) up_v.push_back(x);
                    while (up_u.size() > 1 && up_v.size() > 1 &&
                           up_u[up_u.size() - 2] == up_v[up_v.size() - 2]) {
                        up_u.pop_back();
                        up_v.pop_back();
                    }
                    out.odd_cycle.assign(up_u.begin(), up_u.end());
                    out.odd_cycle.insert(out.odd_cycle.end(), up_v.rbegin() + 1, up_v.rend());
                    out.well_defined = false;
                    return out;
                }
            }
        }
    }
    out.well_defined = true;
    return out;
}

namespace {

BipartiteCheck bipartite_by_color(const Maniplex& m, int color) {
    if (m.rank() < 1) throw input_error("bipartiteness needs rank >= 1");
    BipartiteCheck out;
    ColorParity parity = color_parity(m, color);
    if (!parity) {
        out.bipartite = false;
        out.odd_cycle = std::move(parity.odd_cycle);
        return out;
    }
    out.bipartite = true;
    out.flag_side = std::move(parity.parity);

    // all flags of a face avoid the defining color, so they share a side
    std::vector<int> keep;
    for (int c = 0; c < m.rank(); ++c)
        if (c != color) keep.push_back(c);
    ComponentLabeling lab = components(m, keep);
    out.face_side.assign(lab.count, -1);
    for (int f = 0; f < m.flag_count(); ++f) out.face_side[lab.label[f]] = out.flag_side[f];
    return out;
}

}  // namespace

BipartiteCheck is_facet_bipartite(const Maniplex& m) { return bipartite_by_color(m, m.rank() - 1); }

BipartiteCheck is_vertex_bipartite(const Maniplex& m) { return bipartite_by_color(m, 0); }

SimpleGraph facet_graph(const Maniplex& m) {
    if (m.rank() < 1) throw input_error("facet graph needs rank >= 1");
    const int top = m.rank() - 1;
    std::vector<int> keep;
    for (int c = 0; c < top; ++c) keep.push_back(c);
    ComponentLabeling lab = components(m, keep);

    SimpleGraph g;
    g.node_count = lab.count;
    for (int f = 0; f < m.flag_count(); ++f) {
        int other = lab.label[m.adjacent(f, top)];
        if (other == lab.label[f])
            g.degenerate = true;
        else
            g.add_edge(lab.label[f], other);
    }
    return g;
}

SimpleGraph skeleton_graph(const Maniplex& m) { return facet_graph(dual(m)); }

}  // namespace mpx
