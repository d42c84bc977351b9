#include "mpx/morphisms.hpp"

#include <queue>

namespace mpx {

std::optional<FlagMap> propagate_map(const Maniplex& a, const Maniplex& b, int anchor_a, int anchor_b) {
    if (a.rank() != b.rank()) return std::nullopt;
    FlagMap map(a.flag_count(), -1);
    map[anchor_a] = anchor_b;
    std::queue<int> queue;
    queue.push(anchor_a);
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop();
        for (int i = 0; i < a.rank(); ++i) {
            int fa = a.adjacent(f, i);
            int gb = b.adjacent(map[f], i);
            if (map[fa] == -1) {
                map[fa] = gb;
                queue.push(fa);
            } else if (map[fa] != gb) {
                return std::nullopt;
            }
        }
    }
    return map;
}

namespace {

bool surjective(const FlagMap& map, int target_count) {
    std::vector<char> hit(target_count, 0);
    int covered = 0;
    for (int g : map) {
        if (g >= 0 && !hit[g]) {
            hit[g] = 1;
            ++covered;
        }
    }
    return covered == target_count;
}

void require_connected(const Maniplex& m, const char* who) {
    if (!is_connected(m)) throw input_error(std::string(who) + " requires connected maniplexes");
}

}  // namespace

std::optional<FlagMap> is_isomorphic(const Maniplex& a, const Maniplex& b) {
    if (a.rank() != b.rank() || a.flag_count() != b.flag_count()) return std::nullopt;
    require_connected(a, "is_isomorphic");
    require_connected(b, "is_isomorphic");
    if (a.rank() == 0) return FlagMap{0};
    for (int g = 0; g < b.flag_count(); ++g) {
        auto map = propagate_map(a, b, 0, g);
        if (map && surjective(*map, b.flag_count())) return map;
    }
    return std::nullopt;
}

std::optional<FlagMap> covers(const Maniplex& q, const Maniplex& p) {
    if (q.rank() != p.rank()) throw input_error("covers requires equal rank");
    require_connected(q, "covers");
    require_connected(p, "covers");
    if (q.rank() == 0) return FlagMap{0};
    for (int g = 0; g < p.flag_count(); ++g) {
        auto map = propagate_map(q, p, 0, g);
        if (map && surjective(*map, p.flag_count())) return map;
    }
    return std::nullopt;
}

bool is_automorphism(const Maniplex& m, const FlagMap& phi) {
    if (static_cast<int>(phi.size()) != m.flag_count()) return false;
    if (!surjective(phi, m.flag_count())) return false;
    for (int f = 0; f < m.flag_count(); ++f) {
        if (phi[f] < 0 || phi[f] >= m.flag_count()) return false;
        for (int i = 0; i < m.rank(); ++i)
            if (phi[m.adjacent(f, i)] != m.adjacent(phi[f], i)) return false;
    }
    return true;
}

}  // namespace mpx
