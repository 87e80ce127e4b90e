// duality.hpp
// Type-(n,n) machinery: face spans, the characteristic function lambda on
// facets (the unique nonzero annihilator of a facet's span), reconstruction
// of alpha from lambda, the simplicial poset of faces under reversed
// inclusion with its boolean-interval verification and f-vector, the
// simplicial-complex criterion, and the f1 = f0 + f3 closed-3-manifold test.

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "z2skel/faces.hpp"
#include "z2skel/skeleton.hpp"

namespace z2skel {

// span of all face-edge colors; for k = n it equals the per-vertex span and
// has rank dim F (both asserted)
GF2Subspace face_span(const ColoredSkeleton& s, const Face& f);

struct CharacteristicFunction {
    std::vector<Face> facets;        // canonical face order
    std::vector<GF2Vector> lambda;   // parallel to facets
};

// requires a validated connected type-(n,n) skeleton; asserts that the
// lambda values of the n facets through each vertex are independent
CharacteristicFunction characteristic_function(const ColoredSkeleton& s);

struct UncoloredMultigraph {
    int n = 0;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::array<std::string, 2>>> edges;  // id, ends
};

struct FacetDecl {
    std::string id;
    std::vector<std::string> edge_ids;
};

// alpha(e) = the unique nonzero vector annihilated by the lambda values of
// the n-1 declared facets containing e
std::map<std::string, GF2Vector> reconstruct_alpha(
    const UncoloredMultigraph& graph, const std::vector<FacetDecl>& facets,
    const std::map<std::string, GF2Vector>& lambda);

struct SimplicialPoset {
    int rank = 0;                 // n
    std::vector<Face> elements;   // all faces, canonical order (dim, cells)
    int bottom = -1;              // index of the unique n-face
    // parent contains child and dim(parent) = dim(child)+1
    std::vector<std::pair<int, int>> covers;  // (child index, parent index)
    std::vector<long long> f_vector;          // f_i = #(n-i-1)-faces, i = 0..n-1
};

// builds the face poset and verifies property (i): every interval [0^,a] is
// boolean of rank codim(a), lattice-isomorphic to the subsets of the facets
// containing a
SimplicialPoset simplicial_poset(const ColoredSkeleton& s);

struct ComplexCheck {
    bool is_complex = false;
    // when false: the lexicographically least facet subset (element indices
    // into the facet list) with a disconnected intersection
    std::vector<int> witness_subset;
    std::vector<Face> facets;
};

// property (ii): the poset is the face poset of a simplicial complex iff all
// nonempty intersections of facet subsets are connected
ComplexCheck is_simplicial_complex_poset(const ColoredSkeleton& s);

// type (4,4): evaluates f1 = f0 + f3 on the computed f-vector
bool manifold3_check(const ColoredSkeleton& s);

}  // namespace z2skel
