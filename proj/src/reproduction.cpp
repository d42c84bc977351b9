#include "mpx/reproduction.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mpx/builders.hpp"
#include "mpx/constructions.hpp"
#include "mpx/factorization.hpp"
#include "mpx/morphisms.hpp"
#include "mpx/predicates.hpp"
#include "mpx/symmetry.hpp"

namespace mpx {

namespace {

using builders::cuboctahedron;
using builders::point_segment;
using builders::polygon;
using builders::rhombic_dodecahedron;
using builders::simplex;
using builders::torus44;

struct Reporter {
    bool ok = true;
    std::ostringstream detail;

    // records the first failure; later notes are appended
    void expect(bool condition, const std::string& what) {
        if (condition) return;
        if (!ok) detail << "; ";
        ok = false;
        detail << what;
    }
};

bool facets_isomorphic_to(const Maniplex& e, const Maniplex& p, int expected_count, Reporter& r,
                          const std::string& label) {
    std::vector<Face> facet_list = faces(e, e.rank() - 1);
    r.expect(static_cast<int>(facet_list.size()) == expected_count,
             label + ": wrong facet count");
    std::vector<int> colors;
    for (int c = 0; c + 1 < e.rank(); ++c) colors.push_back(c);
    for (const Face& facet : facet_list) {
        Maniplex sub = restrict_component(e, colors, facet.flags.front());
        r.expect(is_isomorphic(sub, p).has_value(), label + ": facet not isomorphic to base");
        if (!r.ok) return false;
    }
    return r.ok;
}

// the (facet-bipartite, vertex-bipartite) corpus used by the amalgamation claims
std::vector<Maniplex> left_corpus() {
    return {point_segment(), polygon(2), polygon(4), polygon(6), polygon(8), torus44(2),
            cuboctahedron()};
}

std::vector<Maniplex> right_corpus() {
    return {point_segment(), polygon(2), polygon(4), polygon(6), polygon(8),
            builders::hypercube(3), torus44(2), rhombic_dodecahedron()};
}

struct Check {
    const char* id;
    const char* claim;
    std::function<void(Reporter&)> run;
};

const std::vector<Check>& checks() {
    static const std::vector<Check> table = {
        {"1", "extending the 1-polytope by k gives the k-gon (k = 2, 4, 6, 8)",
         [](Reporter& r) {
             for (int k : {2, 4, 6, 8}) {
                 Maniplex e = flat_extension(point_segment(), k);
                 r.expect(is_isomorphic(e, polygon(k)).has_value(),
                          "extension by " + std::to_string(k) + " is not the k-gon");
             }
         }},
        {"2", "extending the square by 4 gives the {4,4} torus map with 32 flags",
         [](Reporter& r) {
             Maniplex e = flat_extension(polygon(4), 4);
             r.expect(e.flag_count() == 32, "expected 32 flags");
             r.expect(is_isomorphic(e, torus44(2)).has_value(), "not isomorphic to the torus map");
         }},
        {"3", "simplex facet graphs are complete; no flat extension with n+1 simplicial facets",
         [](Reporter& r) {
             for (int n = 1; n <= 6; ++n) {
                 SimpleGraph fg = facet_graph(simplex(n));
                 r.expect(fg == SimpleGraph::complete(n + 1),
                          "facet graph of simplex " + std::to_string(n) + " is not complete");
             }
             for (int n = 2; n <= 6; ++n)
                 r.expect(!check_flat_extension_necessary(simplex(n), n + 1),
                          "complete graph reported (n)-colorable at n = " + std::to_string(n));
         }},
        {"4", "flat extensions are flat polytopes with k bipartite layers isomorphic to the base",
         [](Reporter& r) {
             std::vector<Maniplex> bases = {polygon(4), polygon(6), cuboctahedron(), torus44(2)};
             for (const Maniplex& p : bases) {
                 for (int k : {2, 4, 6}) {
                     std::string label = p.name() + "|" + std::to_string(k);
                     Maniplex e = flat_extension(p, k);
                     e.validate();
                     r.expect(e.flag_count() == k * p.flag_count(), label + ": wrong flag count");
                     r.expect(static_cast<bool>(is_polytope(e)), label + ": not a polytope");
                     if (p.rank() >= 2)
                         r.expect(is_flat(e, p.rank() - 2, p.rank()), label + ": not flat");
                     facets_isomorphic_to(e, p, k, r, label);
                     r.expect(static_cast<bool>(is_facet_bipartite(e)),
                              label + ": not facet-bipartite");
                     SimpleGraph fg = facet_graph(e);
                     bool cyclic = k == 2 ? (fg.node_count == 2 && fg.edges.size() == 1)
                                          : (fg.node_count == k && is_cycle_graph(fg));
                     r.expect(cyclic, label + ": facet graph is not a k-cycle");
                     if (!r.ok) return;
                 }
             }
         }},
        {"5", "extension groups have order k times the base; regularity and symmetry type carry over",
         [](Reporter& r) {
             std::vector<Maniplex> bases = {polygon(4), polygon(6), cuboctahedron(), torus44(2)};
             for (const Maniplex& p : bases) {
                 AutomorphismGroup gp = automorphism_group(p);
                 SymmetryTypeGraph expected = symmetry_type_graph(p, gp);
                 expected.rank += 1;
                 for (int v = 0; v < expected.node_count; ++v) expected.darts[v].push_back({true, v});
                 for (int k : {2, 4, 6}) {
                     std::string label = p.name() + "|" + std::to_string(k);
                     Maniplex e = flat_extension(p, k);
                     AutomorphismGroup ge = automorphism_group(e);
                     r.expect(ge.order() == k * gp.order(), label + ": group order is not k times");
                     r.expect((ge.order() == e.flag_count()) == (gp.order() == p.flag_count()),
                              label + ": regularity does not carry over");
                     r.expect(symmetry_type_graph(e, ge) == expected,
                              label + ": symmetry type graph did not gain one semi-edge per node");
                     if (!r.ok) return;
                 }
             }
         }},
        {"6", "extensions cover extensions: by divisor of k, and along covers of the base",
         [](Reporter& r) {
             Maniplex square = polygon(4);
             r.expect(covers(flat_extension(square, 8), flat_extension(square, 4)).has_value(),
                      "square|8 does not cover square|4");
             r.expect(covers(flat_extension(square, 4), flat_extension(square, 2)).has_value(),
                      "square|4 does not cover the trivial extension");
             r.expect(covers(polygon(8), polygon(4)).has_value(), "octagon does not cover square");
             r.expect(covers(flat_extension(polygon(8), 4), flat_extension(polygon(4), 4)).has_value(),
                      "octagon|4 does not cover square|4");
         }},
        {"7", "the prime-case construction yields perfect 1-factorizations (k = 4, 6, 8, 12, 14)",
         [](Reporter& r) {
             for (int k : {4, 6, 8, 12, 14}) {
                 FactorizationCheck check = is_perfect_factorization(prime_case_factorization(k));
                 r.expect(static_cast<bool>(check),
                          "k = " + std::to_string(k) + ": factors " + std::to_string(check.factor_a) +
                              "," + std::to_string(check.factor_b) + " are not Hamiltonian");
             }
         }},
        {"8", "a factorization extension of the triangle is a flat 24-flag polytope with 4 triangular facets",
         [](Reporter& r) {
             Maniplex triangle = polygon(3);
             ChromaticResult coloring = chromatic_decision(facet_graph(triangle), 3);
             r.expect(static_cast<bool>(coloring), "triangle facet graph is not 3-colorable");
             if (!r.ok) return;
             Maniplex e = factorization_extension(triangle, coloring.coloring,
                                                  prime_case_factorization(4));
             e.validate();
             r.expect(e.rank() == 3 && e.flag_count() == 24, "expected a rank-3 graph on 24 flags");
             r.expect(static_cast<bool>(is_polytope(e)), "not a polytope");
             r.expect(is_flat(e, 0, 2), "not (0,2)-flat");
             facets_isomorphic_to(e, triangle, 4, r, "triangle|4");
         }},
        {"9", "amalgamation flags are the same-color pairs: half the product count",
         [](Reporter& r) {
             for (const Maniplex& p : left_corpus()) {
                 ColorParity parity_p = color_parity(p, p.rank() - 1);
                 for (const Maniplex& q : right_corpus()) {
                     if (p.flag_count() * q.flag_count() > 20000) continue;
                     std::string label = p.name() + "|" + q.name();
                     MixResult m = flat_amalgamation({p, 0}, {q, 0});
                     r.expect(m.rooted.graph.flag_count() == p.flag_count() * q.flag_count() / 2,
                              label + ": flag count is not half the product");
                     ColorParity parity_q = color_parity(q, 0);
                     std::vector<std::pair<int, int>> expected;
                     for (int a = 0; a < p.flag_count(); ++a)
                         for (int b = 0; b < q.flag_count(); ++b)
                             if (parity_p.parity[a] == parity_q.parity[b]) expected.emplace_back(a, b);
                     std::vector<std::pair<int, int>> got = m.pairs;
                     std::sort(got.begin(), got.end());
                     r.expect(got == expected, label + ": flag set is not the same-color product set");
                     if (!r.ok) return;
                 }
             }
         }},
        {"10", "cuboctahedron | rhombic dodecahedron is a (1,3)-flat rank-5 polytope on 4608 flags",
         [](Reporter& r) {
             MixResult m = flat_amalgamation({cuboctahedron(), 0}, {rhombic_dodecahedron(), 0});
             const Maniplex& g = m.rooted.graph;
             g.validate();
             r.expect(g.rank() == 5, "wrong rank");
             r.expect(g.flag_count() == 4608, "wrong flag count");
             r.expect(static_cast<bool>(is_polytope(g)), "not a polytope");
             r.expect(is_flat(g, 1, 3), "not (1,3)-flat");
         }},
        {"11", "its automorphism group has order 2304 and is the parity-matched product",
         [](Reporter& r) {
             RootedManiplex p{cuboctahedron(), 0}, q{rhombic_dodecahedron(), 0};
             MixResult m = flat_amalgamation(p, q);
             AmalgamGroupReport report = amalgam_group_check(p, q, m);
             r.expect(report.group_order == 2304,
                      "group order is " + std::to_string(report.group_order));
             r.expect(report.ok, "group is not the parity-matched product of the factor groups");
         }},
        {"12", "amalgamating with a k-gon equals the flat extension by k (k = 4, 6)",
         [](Reporter& r) {
             Maniplex square = polygon(4);
             for (int k : {4, 6}) {
                 MixResult m = flat_amalgamation({square, 0}, {polygon(k), 0});
                 r.expect(is_isomorphic(m.rooted.graph, flat_extension(square, k)).has_value(),
                          "square|" + std::to_string(k) + "-gon differs from square|" +
                              std::to_string(k));
             }
         }},
        {"13", "iterated extension of the square by 4 is regular with 32 flags",
         [](Reporter& r) {
             const int ks[] = {4};
             Maniplex e = iterate_extension(polygon(4), ks);
             r.expect(e.flag_count() == 32, "expected 2*4*4 flags");
             r.expect(is_regular(e), "not regular");
         }},
        {"14", "negative controls: the 1x1 torus map fails path intersection; a twisted matching fails commutation",
         [](Reporter& r) {
             PolytopeCheck pip = is_polytope(torus44(1));
             r.expect(!pip, "the 1x1 torus map passed the polytope check");
             r.expect(pip.failure == PolytopeCheck::Failure::path_intersection,
                      "failure is not a path intersection witness");
             // two 4-flag blocks tied by a twisted color-2 matching: 0 and 2
             // commute everywhere except across the twist
             Maniplex twisted(3, {{1, 2, 4},
                                  {0, 3, 6},
                                  {3, 0, 5},
                                  {2, 1, 7},
                                  {5, 6, 0},
                                  {4, 7, 2},
                                  {7, 4, 1},
                                  {6, 5, 3}});
             ManiplexCheck mc = is_maniplex(twisted);
             r.expect(!mc, "the twisted graph passed the commutation check");
             r.expect(mc.flag == 0 && mc.color_i == 0 && mc.color_j == 2,
                      "expected witness (0, 0, 2)");
         }},
    };
    return table;
}

}  // namespace

std::vector<std::string> reproduction_ids() {
    std::vector<std::string> ids;
    for (const Check& c : checks()) ids.push_back(c.id);
    return ids;
}

ReproResult run_reproduction(const std::string& id) {
    for (const Check& c : checks()) {
        if (id != c.id) continue;
        ReproResult result{c.id, c.claim, false, ""};
        Reporter reporter;
        try {
            c.run(reporter);
            result.passed = reporter.ok;
            result.detail = reporter.detail.str();
        } catch (const std::exception& e) {
            result.passed = false;
            result.detail = e.what();
        }
        return result;
    }
    throw input_error("unknown reproduction id " + id);
}

std::vector<ReproResult> run_reproduction() {
    std::vector<ReproResult> results;
    for (const Check& c : checks()) results.push_back(run_reproduction(c.id));
    return results;
}

}  // namespace mpx
