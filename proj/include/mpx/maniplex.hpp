#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpx {

// Malformed input: bad parameters, violated preconditions, unparsable files.
// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A properly edge-colored n-regular flag graph. Flags are 0..F-1, colors are
// 0..n-1, and adjacent(f, i) is the other endpoint of the color-i edge at f.
// Each color class is a perfect matching without fixed points, and distinct
// colors at a flag lead to distinct flags (the graph is simple). Rank 0 is
// the single-flag graph with an empty table.
//
// Immutable after construction; the constructor rejects tables that violate
// the above with an input_error naming the offending flag and color.
class Maniplex {
public:
    Maniplex() = default;  // the rank-0 single-flag graph
    Maniplex(int rank, const std::vector<std::vector<int>>& adj, std::string name = "");
    Maniplex(int rank, int flag_count, std::vector<int> adj_flat, std::string name = "");

    int rank() const { return rank_; }
    int flag_count() const { return flag_count_; }

    // Φ^i
    int adjacent(int flag, int color) const { return adj_[flag * rank_ + color]; }

    std::span<const int> row(int flag) const {
        return {adj_.data() + static_cast<size_t>(flag) * rank_, static_cast<size_t>(rank_)};
    }
    const std::vector<int>& table() const { return adj_; }

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    // Re-checks the type invariants; throws input_error with a witness.
    void validate() const;

    // Structural equality of rank and adjacency table (names are labels and
    // do not participate).
    bool operator==(const Maniplex& other) const {
        return rank_ == other.rank_ && flag_count_ == other.flag_count_ && adj_ == other.adj_;
    }

private:
    int rank_ = 0;
    int flag_count_ = 1;
    std::vector<int> adj_;  // flag_count_ x rank_, row-major
    std::string name_;
};

// The n-polytope (P, Φ) with a distinguished base flag.
struct RootedManiplex {
    Maniplex graph;
    int base = 0;
};

bool is_connected(const Maniplex& m);

// Labeling of flags by connected component of the subgraph spanned by the
// given colors. Component ids are 0..count-1, ordered by smallest member
// flag, so labelings are deterministic and comparable across runs.
struct ComponentLabeling {
    std::vector<int> colors;  // sorted, duplicate-free
    std::vector<int> label;   // flag -> component id
    int count = 0;
};

ComponentLabeling components(const Maniplex& m, std::span<const int> colors);

// One color-component of the graph omitting color rank_i: an i-face.
struct Face {
    int rank_i = -1;
    int id = -1;
    std::vector<int> flags;  // ascending
};

std::vector<Face> faces(const Maniplex& m, int i);

// Number of i-faces for each i in 0..rank-1.
std::vector<int> face_census(const Maniplex& m);

// Edge label i becomes rank-1-i. Involutive on the adjacency table.
Maniplex dual(const Maniplex& m);

// The color-component of seed_flag spanned by color_list, as a maniplex of
// rank |color_list|: result color c acts as color color_list[c] of m. Flags
// keep their relative order.
Maniplex restrict_component(const Maniplex& m, std::span<const int> color_list, int seed_flag);

}  // namespace mpx
