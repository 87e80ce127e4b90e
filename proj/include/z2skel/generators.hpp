// generators.hpp
// Constructors for the canonical skeleton families (simplex, cube, k=1
// colorings, products) and the exhaustive search over colorings of small
// multigraphs for witness skeletons with prescribed properties.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z2skel/duality.hpp"
#include "z2skel/skeleton.hpp"

namespace z2skel {

// complete graph K_{n+1} of type (n,n), built by declaring the facets
// F_i = (vertex i omitted) with lambda(F_i) = e_i (i>=1) and
// lambda(F_0) = e_1+...+e_n, then reconstructing alpha
ColoredSkeleton gen_simplex(int n);

// vertex set {0,1}^n, direction-i edges colored r_i; type (n,n)
ColoredSkeleton gen_cube(int n);

// all edges colored r1; type (1,n); satisfies (P1),(P2) for any loopless
// n-regular multigraph
ColoredSkeleton gen_k1(const UncoloredMultigraph& graph);

// vertices V1 x V2, block coloring; type (k1+k2, n1+n2)
ColoredSkeleton gen_product(const ColoredSkeleton& a, const ColoredSkeleton& b);

struct SearchTarget {
    enum Kind {
        ObstructedByF,                     // localization sum of f is non-polynomial
        NoFaceExtension,                   // m edges at a vertex lie in no m-face
        DisconnectedTwoFaceIntersection,   // two 2-faces meeting in >= 2 components
        ManifoldViolation                  // type (4,4) with f1 != f0 + f3
    };
    Kind kind = ObstructedByF;
    std::string f_expr;  // for ObstructedByF
    int m = 3;           // for NoFaceExtension
};

struct SearchSpec {
    int k = 0, n = 0;
    std::optional<int> vertex_count;  // absent: sweep from the smallest feasible
    int max_vertex_count = 12;        // sweep bound when vertex_count is absent
    std::optional<int> independence_min;
    std::optional<int> independence_max;
    std::optional<int> min_connectivity;
    SearchTarget target;
    long long node_budget = 200'000'000;  // coloring assignments tried
    uint64_t seed = 0;  // accepted for interface stability; enumeration is canonical
};

struct SearchStats {
    long long nodes = 0;
    long long graphs = 0;      // canonical multigraphs colored
    long long skeletons = 0;   // valid skeletons reaching the predicate
    bool exhausted = false;    // space exhausted without a witness
    bool budget_hit = false;
};

struct SearchResult {
    std::optional<ColoredSkeleton> skeleton;
    std::string witness;  // human description of the matched predicate
    SearchStats stats;
};

// deterministic exhaustive search: loopless n-regular multigraphs on v
// labeled vertices up to isomorphism (orderly rejection), colorings up to
// the GL(k,2) action via a canonical-assignment rule, pruned by partial
// (P1)/(P2) checks; the first witness in enumeration order is returned
SearchResult search(const SearchSpec& spec);

}  // namespace z2skel
