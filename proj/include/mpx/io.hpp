#pragma once

#include <iosfwd>
#include <string>

#include "mpx/factorization.hpp"
#include "mpx/maniplex.hpp"
#include "mpx/simple_graph.hpp"
#include "mpx/symmetry.hpp"

namespace mpx {

// MPX text format: line 1 is "mpx <rank> <flag_count>", then one line per
// flag holding its rank adjacent flags (column i = adj[f][i]), then an
// optional trailing "name <label>" line. '#' starts a comment. Reading what
// write_mpx wrote gives back an equal maniplex, bit-exactly.
Maniplex read_mpx(std::istream& in, const std::string& source = "<stream>");
Maniplex read_mpx_file(const std::string& path);
void write_mpx(const Maniplex& m, std::ostream& out);
std::string to_mpx(const Maniplex& m);
void write_mpx_file(const Maniplex& m, const std::string& path);

std::string to_dot(const Maniplex& m);
std::string to_dot(const SimpleGraph& g, const std::vector<int>* node_colors = nullptr);
std::string to_dot(const SymmetryTypeGraph& stg);

// The layer graph of a factorization: K_k with edge colors by factor.
std::string layer_graph_dot(const OneFactorization& f);

}  // namespace mpx
