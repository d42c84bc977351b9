#include "mpx/builders.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

namespace mpx {
namespace builders {

namespace {

// lexicographic rank of a permutation of 0..n-1
int perm_rank(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    int rank = 0;
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int i = 0; i < n; ++i) {
        fact /= (n - i);
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (perm[j] < perm[i]) ++smaller;
        rank += smaller * fact;
    }
    return rank;
}

std::string numbered(const char* stem, int k) {
    std::ostringstream name;
    name << stem << k;
    return name.str();
}

}  // namespace

Maniplex point_segment() { return Maniplex(1, {{1}, {0}}, "point-segment"); }

Maniplex polygon(int k) {
    if (k < 2) throw input_error("polygon needs k >= 2");
    const int flags = 2 * k;
    std::vector<int> adj(flags * 2);
    for (int f = 0; f < flags; ++f) {
        if (f % 2 == 0) {
            adj[f * 2 + 0] = f + 1;
            adj[f * 2 + 1] = (f + flags - 1) % flags;
        } else {
            adj[f * 2 + 0] = f - 1;
            adj[f * 2 + 1] = (f + 1) % flags;
        }
    }
    return Maniplex(2, flags, std::move(adj), numbered("polygon-", k));
}

Maniplex simplex(int n) {
    if (n < 1 || n > 7) throw input_error("simplex supports 1 <= n <= 7");
    const int labels = n + 1;
    int flags = 1;
    for (int i = 2; i <= labels; ++i) flags *= i;

    std::vector<int> adj(static_cast<size_t>(flags) * n);
    std::vector<int> perm(labels);
    std::iota(perm.begin(), perm.end(), 0);
    int f = 0;
    do {
        for (int i = 0; i < n; ++i) {
            std::vector<int> swapped = perm;
            std::swap(swapped[i], swapped[i + 1]);
            adj[static_cast<size_t>(f) * n + i] = perm_rank(swapped);
        }
        ++f;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Maniplex(n, flags, std::move(adj), numbered("simplex-", n));
}

Maniplex hypercube(int n) {
    if (n < 1 || n > 5) throw input_error("hypercube supports 1 <= n <= 5");
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    const int flags = (1 << n) * fact;

    // enumerate axis orders once, in lexicographic order
    std::vector<std::vector<int>> orders;
    std::vector<int> axes(n);
    std::iota(axes.begin(), axes.end(), 0);
    do {
        orders.push_back(axes);
    } while (std::next_permutation(axes.begin(), axes.end()));

    auto index = [&](int vertex, const std::vector<int>& order) {
        return vertex * fact + perm_rank(order);
    };

    std::vector<int> adj(static_cast<size_t>(flags) * n);
    for (int v = 0; v < (1 << n); ++v) {
        for (int r = 0; r < fact; ++r) {
            const auto& order = orders[r];
            int f = v * fact + r;
            adj[static_cast<size_t>(f) * n + 0] = index(v ^ (1 << order[0]), order);
            for (int i = 1; i < n; ++i) {
                std::vector<int> swapped = order;
                std::swap(swapped[i - 1], swapped[i]);
                adj[static_cast<size_t>(f) * n + i] = index(v, swapped);
            }
        }
    }
    return Maniplex(n, flags, std::move(adj), numbered("hypercube-", n));
}

Maniplex torus44(int s) {
    if (s < 1) throw input_error("torus44 needs s >= 1");
    const int flags = 8 * s * s;
    auto face = [&](int x, int y) { return ((x % s + s) % s) + s * ((y % s + s) % s); };
    auto id = [&](int x, int y, int t) { return 8 * face(x, y) + t; };

    // within a face, positions t = 0..7 run around the boundary; vertex moves
    // are t^0 (pair within a side), edge moves are t^1 (across a corner), and
    // t^2 crosses to the neighbor sharing side t/2
    std::vector<int> adj(static_cast<size_t>(flags) * 3);
    for (int x = 0; x < s; ++x) {
        for (int y = 0; y < s; ++y) {
            for (int t = 0; t < 8; ++t) {
                int f = id(x, y, t);
                adj[f * 3 + 0] = id(x, y, (t % 2 == 0) ? t + 1 : t - 1);
                adj[f * 3 + 1] = id(x, y, (t % 2 == 0) ? (t + 7) % 8 : (t + 1) % 8);
                switch (t) {
                    case 0: adj[f * 3 + 2] = id(x, y - 1, 5); break;
                    case 1: adj[f * 3 + 2] = id(x, y - 1, 4); break;
                    case 2: adj[f * 3 + 2] = id(x + 1, y, 7); break;
                    case 3: adj[f * 3 + 2] = id(x + 1, y, 6); break;
                    case 4: adj[f * 3 + 2] = id(x, y + 1, 1); break;
                    case 5: adj[f * 3 + 2] = id(x, y + 1, 0); break;
                    case 6: adj[f * 3 + 2] = id(x - 1, y, 3); break;
                    case 7: adj[f * 3 + 2] = id(x - 1, y, 2); break;
                }
            }
        }
    }
    std::ostringstream name;
    name << "torus44-" << s << "," << 0;
    return Maniplex(3, flags, std::move(adj), name.str());
}

Maniplex cuboctahedron() {
    // medial flags are (cube flag, side): side 0 sits in the face around a
    // cube vertex, side 1 in the shrunk cube face
    Maniplex cube = hypercube(3);
    const int flags = 2 * cube.flag_count();
    std::vector<int> adj(static_cast<size_t>(flags) * 3);
    for (int f = 0; f < cube.flag_count(); ++f) {
        for (int s = 0; s < 2; ++s) {
            int t = 2 * f + s;
            adj[t * 3 + 0] = 2 * cube.adjacent(f, 1) + s;
            adj[t * 3 + 1] = s == 0 ? 2 * cube.adjacent(f, 2) : 2 * cube.adjacent(f, 0) + 1;
            adj[t * 3 + 2] = 2 * f + (1 - s);
        }
    }
    return Maniplex(3, flags, std::move(adj), "cuboctahedron");
}

Maniplex rhombic_dodecahedron() {
    Maniplex rd = dual(cuboctahedron());
    rd.set_name("rhombic-dodecahedron");
    return rd;
}

}  // namespace builders
}  // namespace mpx
