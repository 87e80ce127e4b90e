// faces.hpp
// Faces of an abstract 1-skeleton: recognition, the unique-extension
// construction (connected component of the edges colored inside the seed
// span), enumeration, intersection decomposition, and the facet family
// through a face on type (n,n) skeletons.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "z2skel/skeleton.hpp"

namespace z2skel {

struct Face {
    std::vector<int> vertices;  // sorted vertex indices
    std::vector<int> edges;     // sorted edge indices
    int dim = 0;                // valence of the subgraph
    GF2Subspace span;           // common span of the face-edge colors

    bool same_cells(const Face& o) const {
        return vertices == o.vertices && edges == o.edges;
    }
};

// canonical order: dim, then vertex set, then edge set
bool face_less(const Face& a, const Face& b);

struct FaceCheck {
    bool ok = false;
    std::string reason;  // empty when ok
    Face face;           // populated when ok
};

// connected + m-regular + constant span across vertices + per-edge congruence
FaceCheck is_face(const ColoredSkeleton& s, std::vector<int> vertex_set,
                  std::vector<int> edge_set);

struct ExtendResult {
    std::optional<Face> face;
    std::string failure;  // first violated condition: regularity | span | congruence
};

// Extends m seed edges at p to the connected component of the edges whose
// color lies in K = span(seeds).  Always the unique m-face when
// m < independence level (and for any m <= n when k = n).
ExtendResult extend_face(const ColoredSkeleton& s, int p, const std::vector<int>& seed_edges);

// All distinct dim-faces, deduplicated and canonically sorted.  Enumeration
// is only guaranteed complete when dim < independence_level, dim == 0,
// dim == n, or k == n; other requests are refused unless force is set
// (then failing seeds are skipped).
std::vector<Face> enumerate_faces(const ColoredSkeleton& s, int dim,
                                  int independence_level, bool force = false);

// dims for which enumerate_faces is guaranteed on this skeleton
std::vector<int> safe_dimensions(const ColoredSkeleton& s, int independence_level);

// intersection of several faces, split into connected components; when all
// inputs have dimension below the independence level every component is
// itself a face, otherwise an invariant-violation error is thrown
std::vector<Face> face_intersection(const ColoredSkeleton& s, const std::vector<Face>& faces);

// all m-faces containing the given edges at p (exhaustive over subsets of
// the K-colored subgraph; used for genuine non-extension witnesses)
std::vector<Face> faces_containing_edges(const ColoredSkeleton& s, int p,
                                         const std::vector<int>& seed_edges);

// type (n,n), m < n: the n-m facets through F obtained by dropping one
// non-face edge at a vertex of F; F is a connected component of their
// intersection (asserted)
std::vector<Face> facets_containing(const ColoredSkeleton& s, const Face& f);

}  // namespace z2skel
