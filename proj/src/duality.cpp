#include "z2skel/duality.hpp"

#include <algorithm>
#include <set>

namespace z2skel {

GF2Subspace face_span(const ColoredSkeleton& s, const Face& f) {
    if (s.k != s.n) throw Error("face_span: requires type (n,n)");
    std::vector<GF2Vector> colors;
    for (int e : f.edges) colors.push_back(s.edges[e].color);
    GF2Subspace total = span(colors, s.k);
    if (total.rank() != f.dim)
        throw Error("face_span: total span rank " + std::to_string(total.rank()) +
                    " != face dimension " + std::to_string(f.dim));
    if (total != f.span) throw Error("face_span: differs from the per-vertex span");
    return total;
}

CharacteristicFunction characteristic_function(const ColoredSkeleton& s) {
    if (s.k != s.n) throw Error("characteristic_function: requires type (n,n)");
    if (!s.underlying_connected())
        throw Error("characteristic_function: skeleton is disconnected");

    CharacteristicFunction cf;
    cf.facets = enumerate_faces(s, s.n - 1, s.n);
    for (const auto& f : cf.facets) {
        GF2Subspace ann = annihilator(f.dim > 0 ? face_span(s, f) : GF2Subspace{s.k, {}});
        if (ann.rank() != 1)
            throw Error("characteristic_function: annihilator rank " +
                        std::to_string(ann.rank()) + " != 1");
        cf.lambda.emplace_back(ann.rows[0], s.k);
    }

    // lambda values of the n facets through each vertex form a dual basis
    for (int v = 0; v < s.vertex_count(); ++v) {
        std::vector<GF2Vector> at_v;
        for (size_t i = 0; i < cf.facets.size(); ++i)
            if (std::binary_search(cf.facets[i].vertices.begin(), cf.facets[i].vertices.end(), v))
                at_v.push_back(cf.lambda[i]);
        if ((int)at_v.size() != s.n || span(at_v, s.k).rank() != s.n)
            throw Error("characteristic_function: lambda values at vertex " + s.vertex_ids[v] +
                        " are not a dual basis");
    }
    return cf;
}

std::map<std::string, GF2Vector> reconstruct_alpha(
    const UncoloredMultigraph& graph, const std::vector<FacetDecl>& facets,
    const std::map<std::string, GF2Vector>& lambda) {
    int n = graph.n;
    std::map<std::string, std::vector<std::string>> facets_of_edge;
    for (const auto& [id, ends] : graph.edges) facets_of_edge[id];
    for (const auto& fd : facets) {
        if (!lambda.count(fd.id)) throw Error("reconstruct_alpha: no lambda for " + fd.id);
        for (const auto& eid : fd.edge_ids) {
            auto it = facets_of_edge.find(eid);
            if (it == facets_of_edge.end())
                throw Error("reconstruct_alpha: facet " + fd.id + " mentions unknown edge " + eid);
            it->second.push_back(fd.id);
        }
    }

    std::map<std::string, GF2Vector> alpha;
    for (const auto& [eid, fids] : facets_of_edge) {
        if ((int)fids.size() != n - 1)
            throw Error("reconstruct_alpha: edge " + eid + " lies in " +
                        std::to_string(fids.size()) + " facets, expected " + std::to_string(n - 1));
        std::vector<GF2Vector> rows;
        for (const auto& fid : fids) rows.push_back(lambda.at(fid));
        GF2Subspace kernel = annihilator(span(rows, n));
        if (kernel.rank() != 1)
            throw Error("reconstruct_alpha: lambda values at edge " + eid +
                        " are dependent (kernel rank " + std::to_string(kernel.rank()) + ")");
        alpha.emplace(eid, GF2Vector(kernel.rows[0], n));
    }
    return alpha;
}

namespace {

// does face a contain face b (as cell pairs)?
bool contains_face(const Face& a, const Face& b) {
    return std::includes(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                         b.vertices.end()) &&
           std::includes(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end());
}

}  // namespace

SimplicialPoset simplicial_poset(const ColoredSkeleton& s) {
    if (s.k != s.n) throw Error("simplicial_poset: requires type (n,n)");
    if (!s.underlying_connected()) throw Error("simplicial_poset: skeleton is disconnected");

    SimplicialPoset poset;
    poset.rank = s.n;
    for (int d = 0; d <= s.n; ++d)
        for (auto& f : enumerate_faces(s, d, s.n)) poset.elements.push_back(std::move(f));
    std::sort(poset.elements.begin(), poset.elements.end(), face_less);

    int ne = (int)poset.elements.size();
    for (int i = 0; i < ne; ++i)
        if (poset.elements[i].dim == s.n) poset.bottom = i;
    if (poset.bottom < 0) throw Error("simplicial_poset: missing the n-face");

    // covers: child of dimension d inside parent of dimension d+1
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ne; ++j)
            if (poset.elements[j].dim == poset.elements[i].dim + 1 &&
                contains_face(poset.elements[j], poset.elements[i]))
                poset.covers.emplace_back(i, j);

    // facet list (dimension n-1) in element order, for interval verification
    std::vector<int> facet_idx;
    for (int i = 0; i < ne; ++i)
        if (poset.elements[i].dim == s.n - 1) facet_idx.push_back(i);

    // property (i): the faces containing a are in order-reversing bijection
    // with the subsets of the facets containing a
    for (int a = 0; a < ne; ++a) {
        const Face& fa = poset.elements[a];
        int codim = s.n - fa.dim;
        std::vector<int> super;
        for (int b = 0; b < ne; ++b)
            if (contains_face(poset.elements[b], fa)) super.push_back(b);
        if ((long long)super.size() != (1LL << codim))
            throw Error("simplicial_poset: interval at a " + std::to_string(fa.dim) +
                        "-face has " + std::to_string(super.size()) + " elements, expected 2^" +
                        std::to_string(codim));
        std::vector<int> facets_of_a;
        for (int fi : facet_idx)
            if (contains_face(poset.elements[fi], fa)) facets_of_a.push_back(fi);
        if ((int)facets_of_a.size() != codim)
            throw Error("simplicial_poset: face lies in " +
                        std::to_string(facets_of_a.size()) + " facets, expected " +
                        std::to_string(codim));
        // map each superface to the set of those facets containing it; the
        // map must be injective (counts match 2^codim) and order-compatible
        std::set<std::vector<int>> images;
        std::vector<std::vector<int>> image_of(super.size());
        for (size_t bi = 0; bi < super.size(); ++bi) {
            for (int fi : facets_of_a)
                if (contains_face(poset.elements[fi], poset.elements[super[bi]]))
                    image_of[bi].push_back(fi);
            if ((int)image_of[bi].size() != s.n - poset.elements[super[bi]].dim)
                throw Error("simplicial_poset: boolean interval rank mismatch");
            images.insert(image_of[bi]);
        }
        if (images.size() != super.size())
            throw Error("simplicial_poset: interval is not boolean (facet sets collide)");
        for (size_t bi = 0; bi < super.size(); ++bi)
            for (size_t bj = 0; bj < super.size(); ++bj) {
                bool sub = std::includes(image_of[bj].begin(), image_of[bj].end(),
                                         image_of[bi].begin(), image_of[bi].end());
                bool cont = contains_face(poset.elements[super[bi]], poset.elements[super[bj]]);
                if (sub != cont)
                    throw Error("simplicial_poset: interval order is not the subset order");
            }
    }

    poset.f_vector.assign(s.n, 0);
    for (const auto& f : poset.elements) {
        int i = s.n - f.dim - 1;
        if (i >= 0) poset.f_vector[i]++;
    }
    return poset;
}

ComplexCheck is_simplicial_complex_poset(const ColoredSkeleton& s) {
    ComplexCheck out;
    out.facets = enumerate_faces(s, s.n - 1, s.n);
    int nf = (int)out.facets.size();

    // depth-first over facet subsets in lexicographic order, extending only
    // subsets with a nonempty intersection (supersets of empty stay empty)
    std::vector<int> chosen;
    bool bad_found = false;
    auto rec = [&](auto&& self, int next, const std::vector<Face>& inter) -> void {
        if (bad_found) return;
        for (int i = next; i < nf && !bad_found; ++i) {
            std::vector<Face> pieces = inter;
            pieces.push_back(out.facets[i]);
            std::vector<Face> comps;
            if (chosen.empty()) {
                comps = {out.facets[i]};
            } else {
                comps = face_intersection(s, pieces);
            }
            if (comps.empty()) continue;
            chosen.push_back(i);
            if (comps.size() > 1) {
                bad_found = true;
                out.witness_subset = chosen;
                chosen.pop_back();
                return;
            }
            // the intersection is a single face; recurse with it
            self(self, i + 1, {comps[0]});
            chosen.pop_back();
        }
    };
    rec(rec, 0, {});
    out.is_complex = !bad_found;
    return out;
}

bool manifold3_check(const ColoredSkeleton& s) {
    if (s.k != 4 || s.n != 4) throw Error("manifold3_check: requires type (4,4)");
    auto poset = simplicial_poset(s);
    return poset.f_vector[1] == poset.f_vector[0] + poset.f_vector[3];
}

}  // namespace z2skel
