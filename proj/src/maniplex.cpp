#include "mpx/maniplex.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "mpx/union_find.hpp"

namespace mpx {

namespace {

std::vector<int> flatten(int rank, const std::vector<std::vector<int>>& adj) {
    std::vector<int> flat;
    flat.reserve(adj.size() * static_cast<size_t>(rank));
    for (size_t f = 0; f < adj.size(); ++f) {
        if (static_cast<int>(adj[f].size()) != rank) {
            std::ostringstream msg;
            msg << "adjacency row " << f << " has " << adj[f].size() << " entries, expected " << rank;
            throw input_error(msg.str());
        }
        flat.insert(flat.end(), adj[f].begin(), adj[f].end());
    }
    return flat;
}

}  // namespace

Maniplex::Maniplex(int rank, const std::vector<std::vector<int>>& adj, std::string name)
    : Maniplex(rank, static_cast<int>(adj.size()), flatten(rank, adj), std::move(name)) {}

Maniplex::Maniplex(int rank, int flag_count, std::vector<int> adj_flat, std::string name)
    : rank_(rank), flag_count_(flag_count), adj_(std::move(adj_flat)), name_(std::move(name)) {
    validate();
}

void Maniplex::validate() const {
    if (rank_ < 0) throw input_error("negative rank");
    if (flag_count_ <= 0) throw input_error("flag count must be positive");
    if (rank_ == 0) {
        if (flag_count_ != 1) throw input_error("rank 0 requires exactly one flag");
        if (!adj_.empty()) throw input_error("rank 0 requires an empty adjacency table");
        return;
    }
    if (adj_.size() != static_cast<size_t>(flag_count_) * rank_)
        throw input_error("adjacency table size does not match rank * flag count");
    for (int f = 0; f < flag_count_; ++f) {
        for (int i = 0; i < rank_; ++i) {
            int g = adjacent(f, i);
            std::ostringstream msg;
            if (g < 0 || g >= flag_count_) {
                msg << "adj[" << f << "][" << i << "] = " << g << " is out of range";
                throw input_error(msg.str());
            }
            if (g == f) {
                msg << "adj[" << f << "][" << i << "] = " << f << " (color " << i << " has a fixed point)";
                throw input_error(msg.str());
            }
            if (adjacent(g, i) != f) {
                msg << "color " << i << " is not an involution: adj[" << f << "][" << i << "] = " << g
                    << " but adj[" << g << "][" << i << "] = " << adjacent(g, i);
                throw input_error(msg.str());
            }
            for (int j = 0; j < i; ++j) {
                if (adjacent(f, j) == g) {
                    msg << "parallel edge at flag " << f << ": colors " << j << " and " << i
                        << " both lead to flag " << g;
                    throw input_error(msg.str());
                }
            }
        }
    }
}

bool is_connected(const Maniplex& m) {
    if (m.rank() == 0) return true;
    UnionFind uf(m.flag_count());
    for (int f = 0; f < m.flag_count(); ++f)
        for (int i = 0; i < m.rank(); ++i) uf.unite(f, m.adjacent(f, i));
    return uf.count() == 1;
}

ComponentLabeling components(const Maniplex& m, std::span<const int> colors) {
    ComponentLabeling out;
    out.colors.assign(colors.begin(), colors.end());
    std::sort(out.colors.begin(), out.colors.end());
    out.colors.erase(std::unique(out.colors.begin(), out.colors.end()), out.colors.end());
    for (int c : out.colors) {
        if (c < 0 || c >= m.rank()) {
            std::ostringstream msg;
            msg << "color " << c << " out of range for rank " << m.rank();
            throw input_error(msg.str());
        }
    }

    const int n = m.flag_count();
    UnionFind uf(n);
    for (int f = 0; f < n; ++f)
        for (int c : out.colors) uf.unite(f, m.adjacent(f, c));

    // ids ordered by smallest member: first appearance while scanning flags
    out.label.assign(n, -1);
    std::unordered_map<int, int> id_of_root;
    for (int f = 0; f < n; ++f) {
        int root = uf.find(f);
        auto [it, inserted] = id_of_root.try_emplace(root, out.count);
        if (inserted) ++out.count;
        out.label[f] = it->second;
    }
    return out;
}

std::vector<Face> faces(const Maniplex& m, int i) {
    if (i < 0 || i >= m.rank()) {
        std::ostringstream msg;
        msg << "face rank " << i << " out of range for rank " << m.rank();
        throw input_error(msg.str());
    }
    std::vector<int> colors;
    for (int c = 0; c < m.rank(); ++c)
        if (c != i) colors.push_back(c);
    ComponentLabeling lab = components(m, colors);
    std::vector<Face> out(lab.count);
    for (int id = 0; id < lab.count; ++id) {
        out[id].rank_i = i;
        out[id].id = id;
    }
    for (int f = 0; f < m.flag_count(); ++f) out[lab.label[f]].flags.push_back(f);
    return out;
}

std::vector<int> face_census(const Maniplex& m) {
    std::vector<int> census(m.rank());
    for (int i = 0; i < m.rank(); ++i) {
        std::vector<int> colors;
        for (int c = 0; c < m.rank(); ++c)
            if (c != i) colors.push_back(c);
        census[i] = components(m, colors).count;
    }
    return census;
}

Maniplex dual(const Maniplex& m) {
    const int n = m.rank();
    std::vector<int> adj(m.table().size());
    for (int f = 0; f < m.flag_count(); ++f)
        for (int i = 0; i < n; ++i) adj[f * n + i] = m.adjacent(f, n - 1 - i);
    std::string name = m.name().empty() ? std::string{} : m.name() + "*";
    return Maniplex(n, m.flag_count(), std::move(adj), std::move(name));
}

Maniplex restrict_component(const Maniplex& m, std::span<const int> color_list, int seed_flag) {
    if (seed_flag < 0 || seed_flag >= m.flag_count()) throw input_error("seed flag out of range");
    for (int c : color_list)
        if (c < 0 || c >= m.rank()) throw input_error("restriction color out of range");

    ComponentLabeling lab = components(m, color_list);
    const int comp = lab.label[seed_flag];
    std::vector<int> member;  // ascending by construction
    std::vector<int> index_of(m.flag_count(), -1);
    for (int f = 0; f < m.flag_count(); ++f) {
        if (lab.label[f] == comp) {
            index_of[f] = static_cast<int>(member.size());
            member.push_back(f);
        }
    }

    const int sub_rank = static_cast<int>(color_list.size());
    std::vector<int> adj(member.size() * color_list.size());
    for (size_t t = 0; t < member.size(); ++t)
        for (int c = 0; c < sub_rank; ++c)
            adj[t * sub_rank + c] = index_of[m.adjacent(member[t], color_list[c])];
    return Maniplex(sub_rank, static_cast<int>(member.size()), std::move(adj));
}

}  // namespace mpx
