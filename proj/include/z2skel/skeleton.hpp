// skeleton.hpp
// The colored-multigraph core: an abstract 1-skeleton of type (k,n) is a
// finite loopless n-regular multigraph with an edge coloring alpha into the
// nonzero vectors of GF(2)^k.  Validation checks the span axiom (P1), the
// mod-alpha(e) congruence (P2) and the independence level of the coloring.

#pragma once

#include <string>
#include <vector>

#include "z2skel/gf2.hpp"

namespace z2skel {

struct Edge {
    std::string id;
    int u = -1, v = -1;  // endpoint vertex indices, u != v
    GF2Vector color;
};

class ColoredSkeleton {
public:
    int k = 0;  // rank of the 2-torus
    int n = 0;  // valence
    std::vector<std::string> vertex_ids;      // sorted lexicographically
    std::vector<Edge> edges;                  // sorted by id
    std::vector<std::vector<int>> star;       // per-vertex incident edge indices

    // builds from raw pieces, sorting vertices/edges and checking structure:
    // no loops, n-regular, nonzero colors of width k, unique ids, known ends
    static ColoredSkeleton build(int k, int n, std::vector<std::string> vertices,
                                 std::vector<std::tuple<std::string, std::string,
                                                        std::string, GF2Vector>>
                                     edge_list);

    int vertex_count() const { return (int)vertex_ids.size(); }
    int vertex_index(const std::string& id) const;  // -1 when unknown
    int edge_index(const std::string& id) const;    // -1 when unknown
    int other_end(int edge, int vertex) const;
    std::vector<GF2Vector> star_colors(int vertex) const;
    bool underlying_connected() const;
};

struct ValidationReport {
    bool loopless_ok = true;
    bool regular_ok = true;
    std::vector<std::string> regularity_failures;  // vertex ids
    bool p1_ok = true;
    std::vector<std::string> p1_failures;  // vertex ids where the span rank < k
    bool p2_ok = true;
    std::vector<std::string> p2_failures;  // edge ids with unequal quotient multisets
    int independence_level = 0;            // largest l <= n with l-independence everywhere
    bool valence_bound_ok = true;          // level >= 2 implies n <= 2^k - 1

    bool ok() const { return loopless_ok && regular_ok && p1_ok && p2_ok; }
};

ValidationReport validate(const ColoredSkeleton& s);

// The connection along e = pq: a bijection of the edge stars with
// theta(e) = e and alpha(theta(x)) in {alpha(x), alpha(x)+alpha(e)}.
// Unique when alpha is 3-independent; otherwise a deterministic greedy
// matching is returned and the ambiguity flag is set.
struct Connection {
    int edge = -1;
    std::vector<std::pair<int, int>> dart_map;  // edge index at p -> edge index at q
    bool ambiguous = false;
    std::vector<std::string> ambiguous_cosets;  // coset reps with several pairings
};

Connection connection(const ColoredSkeleton& s, int edge_index);

}  // namespace z2skel
