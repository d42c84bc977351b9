#include "mpx/factorization.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "mpx/maniplex.hpp"

namespace mpx {

void OneFactorization::validate() const {
    if (k < 2 || k % 2 != 0) throw input_error("factorization needs an even k >= 2");
    if (static_cast<int>(factors.size()) != k - 1) {
        std::ostringstream msg;
        msg << "expected " << k - 1 << " factors, got " << factors.size()
            << " (union is not complete)";
        throw input_error(msg.str());
    }
    std::set<std::pair<int, int>> seen;
    for (size_t c = 0; c < factors.size(); ++c) {
        const auto& partner = factors[c];
        if (static_cast<int>(partner.size()) != k) throw input_error("factor on wrong node count");
        for (int v = 0; v < k; ++v) {
            int w = partner[v];
            std::ostringstream msg;
            if (w < 0 || w >= k || w == v) {
                msg << "factor " << c + 1 << " is not a perfect matching at node " << v + 1;
                throw input_error(msg.str());
            }
            if (partner[w] != v) {
                msg << "factor " << c + 1 << " is not an involution at node " << v + 1;
                throw input_error(msg.str());
            }
            if (v < w && !seen.insert({v, w}).second) {
                msg << "duplicate edge " << v + 1 << "-" << w + 1;
                throw input_error(msg.str());
            }
        }
    }
    // k-1 disjoint perfect matchings carry k(k-1)/2 edges: union is K_k
}

FactorizationCheck is_perfect_factorization(const OneFactorization& f) {
    f.validate();
    for (int a = 0; a < f.k - 1; ++a) {
        for (int b = a + 1; b < f.k - 1; ++b) {
            // walk the union starting at node 0, alternating factors
            int visited = 0;
            int node = 0;
            int turn = a;
            do {
                node = f.factors[turn][node];
                turn = (turn == a) ? b : a;
                ++visited;
            } while (node != 0);
            if (visited != f.k) return {false, a + 1, b + 1};
        }
    }
    return {};
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

OneFactorization prime_case_factorization(int k) {
    if (k < 4 || k % 2 != 0) throw input_error("prime-case factorization needs an even k >= 4");
    const int p = k - 1;
    if (!is_prime(p)) {
        std::ostringstream msg;
        msg << "k - 1 = " << p << " is not prime";
        throw input_error(msg.str());
    }
    OneFactorization f;
    f.k = k;
    f.factors.assign(p, std::vector<int>(k, -1));
    const int inf = k - 1;  // ∞, labeled k
    for (int i = 0; i < p; ++i) {
        auto& partner = f.factors[i];
        partner[inf] = i;
        partner[i] = inf;
        for (int j = 1; j <= (k - 2) / 2; ++j) {
            int u = (i + j) % p;
            int v = ((i - j) % p + p) % p;
            partner[u] = v;
            partner[v] = u;
        }
    }
    f.validate();
    return f;
}

namespace {

// DSATUR branch and bound: pick the uncolored node with the most distinctly
// colored neighbors (ties: degree, then index), try colors up to one past the
// highest used so far.
struct ColorSearch {
    const std::vector<std::vector<int>>& adj;
    int limit;
    std::vector<int> color;  // 0 = uncolored

    bool extend(int colored, int max_used) {
        if (colored == static_cast<int>(color.size())) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < static_cast<int>(color.size()); ++v) {
            if (color[v] != 0) continue;
            std::set<int> around;
            for (int u : adj[v])
                if (color[u] != 0) around.insert(color[u]);
            int sat = static_cast<int>(around.size());
            int deg = static_cast<int>(adj[v].size());
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::vector<char> banned(limit + 1, 0);
        for (int u : adj[pick])
            if (color[u] != 0) banned[color[u]] = 1;
        int ceiling = std::min(limit, max_used + 1);
        for (int c = 1; c <= ceiling; ++c) {
            if (banned[c]) continue;
            color[pick] = c;
            if (extend(colored + 1, std::max(max_used, c))) return true;
            color[pick] = 0;
        }
        return false;
    }
};

}  // namespace

ChromaticResult chromatic_decision(const SimpleGraph& g, int c, int node_cap) {
    ChromaticResult out;
    if (c < 1) {
        out.status = g.node_count == 0 ? ChromaticResult::Status::colorable
                                       : ChromaticResult::Status::not_colorable;
        return out;
    }
    if (g.node_count > node_cap) {
        out.status = ChromaticResult::Status::undecided;
        return out;
    }
    auto adj = g.adjacency();
    ColorSearch search{adj, c, std::vector<int>(g.node_count, 0)};
    if (search.extend(0, 0)) {
        out.status = ChromaticResult::Status::colorable;
        out.coloring = std::move(search.color);
    } else {
        out.status = ChromaticResult::Status::not_colorable;
    }
    return out;
}

OneFactorization read_factorization(std::istream& in, const std::string& source) {
    auto fail = [&](int line, const std::string& what) -> input_error {
        std::ostringstream msg;
        msg << source << ":" << line << ": " << what;
        return input_error(msg.str());
    };

    std::string line;
    int line_no = 0;
    auto next_line = [&](std::string& out_line) {
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out_line = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw fail(line_no, "empty file");
    std::istringstream head(header);
    std::string magic;
    int k = 0;
    if (!(head >> magic >> k) || magic != "fac") throw fail(line_no, "expected header 'fac <k>'");
    if (k < 2 || k % 2 != 0) throw fail(line_no, "k must be even and >= 2");

    OneFactorization f;
    f.k = k;
    for (int c = 0; c < k - 1; ++c) {
        std::string body;
        if (!next_line(body)) {
            std::ostringstream msg;
            msg << "expected " << k - 1 << " factors, got " << c << " (union is not complete)";
            throw fail(line_no, msg.str());
        }
        std::vector<int> partner(k, -1);
        std::istringstream row(body);
        std::string pair;
        int pairs = 0;
        while (row >> pair) {
            auto dash = pair.find('-');
            if (dash == std::string::npos) throw fail(line_no, "expected pairs 'a-b'");
            int a = 0, b = 0;
            try {
                a = std::stoi(pair.substr(0, dash));
                b = std::stoi(pair.substr(dash + 1));
            } catch (const std::exception&) {
                throw fail(line_no, "expected pairs 'a-b'");
            }
            if (a < 1 || a > k || b < 1 || b > k || a == b) throw fail(line_no, "node out of range in pair " + pair);
            if (partner[a - 1] != -1 || partner[b - 1] != -1)
                throw fail(line_no, "node repeated within factor in pair " + pair);
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
            ++pairs;
        }
        if (pairs != k / 2) throw fail(line_no, "factor must list exactly k/2 pairs");
        f.factors.push_back(std::move(partner));
    }
    try {
        f.validate();
    } catch (const input_error& e) {
        throw fail(line_no, e.what());
    }
    return f;
}

OneFactorization read_factorization_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_factorization(in, path);
}

void write_factorization(const OneFactorization& f, std::ostream& out) {
    out << "fac " << f.k << "\n";
    for (const auto& partner : f.factors) {
        bool first = true;
        for (int v = 0; v < f.k; ++v) {
            if (partner[v] <= v) continue;
            if (!first) out << " ";
            out << v + 1 << "-" << partner[v] + 1;
            first = false;
        }
        out << "\n";
    }
}

}  // namespace mpx
