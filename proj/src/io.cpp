#include "mpx/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mpx {

namespace {

constexpr const char* kPalette[] = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#a65628", "#f781bf", "#17becf", "#666666", "#bcbd22",
};
constexpr int kPaletteSize = 10;

const char* edge_color(int i) { return kPalette[i % kPaletteSize]; }

}  // namespace

Maniplex read_mpx(std::istream& in, const std::string& source) {
    auto fail = [&](int line, const std::string& what) -> input_error {
        std::ostringstream msg;
        msg << source << ":" << line << ": " << what;
        return input_error(msg.str());
    };

    std::string raw;
    int line_no = 0;
    auto next_line = [&](std::string& out_line) {
        while (std::getline(in, raw)) {
            ++line_no;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
            if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
            out_line = raw;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw fail(line_no, "empty file");
    std::istringstream head(header);
    std::string magic;
    int rank = 0, flag_count = 0;
    if (!(head >> magic >> rank >> flag_count) || magic != "mpx")
        throw fail(line_no, "expected header 'mpx <rank> <flag_count>'");
    if (rank < 0 || flag_count <= 0) throw fail(line_no, "invalid rank or flag count");

    std::vector<int> adj;
    adj.reserve(static_cast<size_t>(rank) * flag_count);
    std::string name;
    int rows = rank == 0 ? flag_count : 0;  // rank 0 carries no table lines
    std::string body;
    while (next_line(body)) {
        std::istringstream row(body);
        std::string first;
        row >> first;
        if (first == "name") {
            auto pos = body.find("name");
            name = body.substr(pos + 4);
            auto start = name.find_first_not_of(" \t");
            auto end = name.find_last_not_of(" \t\r");
            name = start == std::string::npos ? "" : name.substr(start, end - start + 1);
            continue;
        }
        if (rows >= flag_count) throw fail(line_no, "more table rows than flags");
        std::istringstream cells(body);
        for (int i = 0; i < rank; ++i) {
            int value = 0;
            if (!(cells >> value)) throw fail(line_no, "expected " + std::to_string(rank) + " integers");
            adj.push_back(value);
        }
        int extra;
        if (cells >> extra) throw fail(line_no, "too many integers on row");
        ++rows;
    }
    if (rows != flag_count) throw fail(line_no, "expected " + std::to_string(flag_count) + " table rows");

    try {
        return Maniplex(rank, flag_count, std::move(adj), std::move(name));
    } catch (const input_error& e) {
        throw fail(line_no, e.what());
    }
}

Maniplex read_mpx_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_mpx(in, path);
}

void write_mpx(const Maniplex& m, std::ostream& out) {
    out << "mpx " << m.rank() << " " << m.flag_count() << "\n";
    for (int f = 0; f < m.flag_count(); ++f) {
        for (int i = 0; i < m.rank(); ++i) {
            if (i) out << " ";
            out << m.adjacent(f, i);
        }
        if (m.rank() > 0) out << "\n";
    }
    if (!m.name().empty()) out << "name " << m.name() << "\n";
}

std::string to_mpx(const Maniplex& m) {
    std::ostringstream out;
    write_mpx(m, out);
    return out.str();
}

void write_mpx_file(const Maniplex& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open " + path + " for writing");
    write_mpx(m, out);
}

std::string to_dot(const Maniplex& m) {
    std::ostringstream out;
    out << "graph \"" << (m.name().empty() ? "maniplex" : m.name()) << "\" {\n";
    out << "  node [shape=point];\n";
    for (int f = 0; f < m.flag_count(); ++f)
        for (int i = 0; i < m.rank(); ++i)
            if (f < m.adjacent(f, i))
                out << "  " << f << " -- " << m.adjacent(f, i) << " [color=\"" << edge_color(i)
                    << "\", label=" << i << "];\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const SimpleGraph& g, const std::vector<int>* node_colors) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.node_count; ++v) {
        out << "  " << v;
        if (node_colors && v < static_cast<int>(node_colors->size()))
            out << " [style=filled, fillcolor=\"" << edge_color((*node_colors)[v]) << "\"]";
        out << ";\n";
    }
    for (auto [a, b] : g.edges) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const SymmetryTypeGraph& stg) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < stg.node_count; ++v) out << "  o" << v << " [shape=circle];\n";
    int stub = 0;
    for (int v = 0; v < stg.node_count; ++v) {
        for (int i = 0; i < stg.rank; ++i) {
            const auto& dart = stg.darts[v][i];
            if (dart.semi) {
                // dangling half-edge
                out << "  s" << stub << " [shape=none, width=0, label=\"\"];\n";
                out << "  o" << v << " -- s" << stub << " [color=\"" << edge_color(i)
                    << "\", label=" << i << "];\n";
                ++stub;
            } else if (dart.target > v) {
                out << "  o" << v << " -- o" << dart.target << " [color=\"" << edge_color(i)
                    << "\", label=" << i << "];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

std::string layer_graph_dot(const OneFactorization& f) {
    std::ostringstream out;
    out << "graph \"layers\" {\n";
    out << "  layout=circo;\n";
    for (int v = 1; v <= f.k; ++v) out << "  " << v << ";\n";
    for (int c = 1; c <= f.k - 1; ++c)
        for (int v = 1; v <= f.k; ++v)
            if (f.sigma(c, v) > v)
                out << "  " << v << " -- " << f.sigma(c, v) << " [color=\"" << edge_color(c - 1)
                    << "\", label=" << c << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace mpx
