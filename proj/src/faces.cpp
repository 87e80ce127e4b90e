#include "z2skel/faces.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace z2skel {

bool face_less(const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.edges < b.edges;
}

namespace {

std::vector<GF2Vector> sorted_reps(const std::vector<GF2Vector>& colors, const GF2Vector& m) {
    std::vector<GF2Vector> out;
    out.reserve(colors.size());
    for (const auto& c : colors) out.push_back(quotient_rep(c, m));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// face-edge indices at each vertex of the candidate subgraph
std::map<int, std::vector<int>> subgraph_stars(const ColoredSkeleton& s,
                                               const std::vector<int>& vertex_set,
                                               const std::vector<int>& edge_set) {
    std::map<int, std::vector<int>> stars;
    for (int v : vertex_set) stars[v];
    for (int e : edge_set) {
        stars[s.edges[e].u].push_back(e);
        stars[s.edges[e].v].push_back(e);
    }
    return stars;
}

bool subgraph_connected(const ColoredSkeleton& s, const std::vector<int>& vertex_set,
                        const std::vector<int>& edge_set) {
    if (vertex_set.empty()) return false;
    std::set<int> verts(vertex_set.begin(), vertex_set.end());
    std::map<int, std::vector<int>> adj;
    for (int e : edge_set) {
        adj[s.edges[e].u].push_back(s.edges[e].v);
        adj[s.edges[e].v].push_back(s.edges[e].u);
    }
    std::set<int> seen{vertex_set[0]};
    std::vector<int> stack{vertex_set[0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (verts.count(w) && seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == verts.size();
}

}  // namespace

FaceCheck is_face(const ColoredSkeleton& s, std::vector<int> vertex_set,
                  std::vector<int> edge_set) {
    std::sort(vertex_set.begin(), vertex_set.end());
    vertex_set.erase(std::unique(vertex_set.begin(), vertex_set.end()), vertex_set.end());
    std::sort(edge_set.begin(), edge_set.end());
    edge_set.erase(std::unique(edge_set.begin(), edge_set.end()), edge_set.end());

    FaceCheck out;
    if (vertex_set.empty()) {
        out.reason = "empty vertex set";
        return out;
    }
    for (int e : edge_set) {
        bool inside = std::binary_search(vertex_set.begin(), vertex_set.end(), s.edges[e].u) &&
                      std::binary_search(vertex_set.begin(), vertex_set.end(), s.edges[e].v);
        if (!inside) {
            out.reason = "edge endpoints outside the vertex set";
            return out;
        }
    }
    if (!subgraph_connected(s, vertex_set, edge_set)) {
        out.reason = "not connected";
        return out;
    }
    auto stars = subgraph_stars(s, vertex_set, edge_set);
    int m = (int)stars.begin()->second.size();
    for (const auto& [v, es] : stars)
        if ((int)es.size() != m) {
            out.reason = "not regular";
            return out;
        }

    // constant span K across vertices
    GF2Subspace K;
    bool first = true;
    for (const auto& [v, es] : stars) {
        std::vector<GF2Vector> colors;
        for (int e : es) colors.push_back(s.edges[e].color);
        GF2Subspace kv = span(colors, s.k);
        if (first) {
            K = kv;
            first = false;
        } else if (kv != K) {
            out.reason = "span varies across vertices";
            return out;
        }
    }

    // per-edge congruence of the face stars
    for (int e : edge_set) {
        std::vector<GF2Vector> cu, cv;
        for (int f : stars[s.edges[e].u]) cu.push_back(s.edges[f].color);
        for (int f : stars[s.edges[e].v]) cv.push_back(s.edges[f].color);
        if (sorted_reps(cu, s.edges[e].color) != sorted_reps(cv, s.edges[e].color)) {
            out.reason = "congruence fails";
            return out;
        }
    }

    out.ok = true;
    out.face = Face{std::move(vertex_set), std::move(edge_set), m, K};
    return out;
}

ExtendResult extend_face(const ColoredSkeleton& s, int p, const std::vector<int>& seed_edges) {
    int m = (int)seed_edges.size();
    if (m < 1) throw Error("extend_face: need at least one seed edge");
    if (m > s.n) throw Error("extend_face: more seed edges than the valence");
    for (int e : seed_edges)
        if (s.edges[e].u != p && s.edges[e].v != p)
            throw Error("extend_face: seed edge " + s.edges[e].id + " is not at the vertex");
    {
        std::set<int> dedup(seed_edges.begin(), seed_edges.end());
        if ((int)dedup.size() != m) throw Error("extend_face: repeated seed edge");
    }

    std::vector<GF2Vector> seed_colors;
    for (int e : seed_edges) seed_colors.push_back(s.edges[e].color);
    GF2Subspace K = span(seed_colors, s.k);

    // connected component through p of the K-colored subgraph
    std::vector<bool> edge_in(s.edges.size(), false);
    for (size_t e = 0; e < s.edges.size(); ++e) edge_in[e] = K.contains(s.edges[e].color);
    std::set<int> verts{p};
    std::set<int> comp_edges;
    std::vector<int> stack{p};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : s.star[v]) {
            if (!edge_in[e]) continue;
            comp_edges.insert(e);
            int w = s.other_end(e, v);
            if (verts.insert(w).second) stack.push_back(w);
        }
    }

    ExtendResult out;
    // m-regularity
    std::map<int, int> deg;
    for (int v : verts) deg[v] = 0;
    for (int e : comp_edges) {
        deg[s.edges[e].u]++;
        deg[s.edges[e].v]++;
    }
    for (const auto& [v, d] : deg)
        if (d != m) {
            out.failure = "regularity";
            return out;
        }
    // spans K at every vertex
    for (int v : verts) {
        std::vector<GF2Vector> colors;
        for (int e : s.star[v])
            if (comp_edges.count(e)) colors.push_back(s.edges[e].color);
        if (span(colors, s.k) != K) {
            out.failure = "span";
            return out;
        }
    }
    // congruence along every component edge
    for (int e : comp_edges) {
        std::vector<GF2Vector> cu, cv;
        for (int f : s.star[s.edges[e].u])
            if (comp_edges.count(f)) cu.push_back(s.edges[f].color);
        for (int f : s.star[s.edges[e].v])
            if (comp_edges.count(f)) cv.push_back(s.edges[f].color);
        if (sorted_reps(cu, s.edges[e].color) != sorted_reps(cv, s.edges[e].color)) {
            out.failure = "congruence";
            return out;
        }
    }

    Face f;
    f.vertices.assign(verts.begin(), verts.end());
    f.edges.assign(comp_edges.begin(), comp_edges.end());
    f.dim = m;
    f.span = K;
    out.face = std::move(f);
    return out;
}

std::vector<int> safe_dimensions(const ColoredSkeleton& s, int independence_level) {
    std::vector<int> dims;
    for (int m = 0; m <= s.n; ++m)
        if (m == 0 || m == s.n || m < independence_level || s.k == s.n) dims.push_back(m);
    return dims;
}

std::vector<Face> enumerate_faces(const ColoredSkeleton& s, int dim, int independence_level,
                                  bool force) {
    if (dim < 0 || dim > s.n) throw Error("enumerate_faces: dimension out of range");
    std::vector<Face> out;
    if (dim == 0) {
        for (int v = 0; v < s.vertex_count(); ++v)
            out.push_back(Face{{v}, {}, 0, GF2Subspace{s.k, {}}});
        return out;
    }
    bool guaranteed = dim < independence_level || dim == s.n || s.k == s.n;
    if (!guaranteed && !force)
        throw Error("enumerate_faces: uniqueness of " + std::to_string(dim) +
                    "-face extension is not guaranteed (independence level " +
                    std::to_string(independence_level) + ", k=" + std::to_string(s.k) +
                    ", n=" + std::to_string(s.n) + "); pass force to skip failing seeds");

    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (int p = 0; p < s.vertex_count(); ++p) {
        const auto& st = s.star[p];
        int deg = (int)st.size();
        if (dim > deg) continue;
        std::vector<int> idx(dim);
        for (int i = 0; i < dim; ++i) idx[i] = i;
        while (true) {
            std::vector<int> seeds;
            for (int i : idx) seeds.push_back(st[i]);
            auto ext = extend_face(s, p, seeds);
            if (ext.face) {
                auto key = std::make_pair(ext.face->vertices, ext.face->edges);
                if (seen.insert(key).second) out.push_back(std::move(*ext.face));
            } else if (!force && guaranteed && dim != s.n) {
                throw Error("enumerate_faces: extension unexpectedly failed (" + ext.failure +
                            ") at vertex " + s.vertex_ids[p]);
            }
            int i = dim - 1;
            while (i >= 0 && idx[i] == deg - dim + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

std::vector<Face> face_intersection(const ColoredSkeleton& s, const std::vector<Face>& faces) {
    if (faces.empty()) throw Error("face_intersection: no faces given");
    std::vector<int> verts = faces[0].vertices;
    std::vector<int> edges = faces[0].edges;
    for (size_t i = 1; i < faces.size(); ++i) {
        std::vector<int> v2, e2;
        std::set_intersection(verts.begin(), verts.end(), faces[i].vertices.begin(),
                              faces[i].vertices.end(), std::back_inserter(v2));
        std::set_intersection(edges.begin(), edges.end(), faces[i].edges.begin(),
                              faces[i].edges.end(), std::back_inserter(e2));
        verts = std::move(v2);
        edges = std::move(e2);
    }
    std::vector<Face> out;
    if (verts.empty()) return out;

    // split into connected components
    std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (other, edge)
    for (int e : edges) {
        adj[s.edges[e].u].emplace_back(s.edges[e].v, e);
        adj[s.edges[e].v].emplace_back(s.edges[e].u, e);
    }
    std::set<int> remaining(verts.begin(), verts.end());
    while (!remaining.empty()) {
        int start = *remaining.begin();
        std::set<int> cv{start};
        std::set<int> ce;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[v]) {
                ce.insert(e);
                if (cv.insert(w).second) stack.push_back(w);
            }
        }
        for (int v : cv) remaining.erase(v);
        auto chk = is_face(s, std::vector<int>(cv.begin(), cv.end()),
                           std::vector<int>(ce.begin(), ce.end()));
        if (!chk.ok)
            throw Error("face_intersection: component is not a face (" + chk.reason +
                        "); precondition breach");
        out.push_back(std::move(chk.face));
    }
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

std::vector<Face> faces_containing_edges(const ColoredSkeleton& s, int p,
                                         const std::vector<int>& seed_edges) {
    int m = (int)seed_edges.size();
    std::vector<GF2Vector> seed_colors;
    for (int e : seed_edges) {
        if (s.edges[e].u != p && s.edges[e].v != p)
            throw Error("faces_containing_edges: seed edge not at the vertex");
        seed_colors.push_back(s.edges[e].color);
    }
    GF2Subspace K = span(seed_colors, s.k);
    // a face of dimension m containing all m seeds at p has exactly the seeds
    // there, so its span is K and all its edges are K-colored
    if (K.rank() > m) throw Error("faces_containing_edges: seed span too large");

    std::vector<int> candidates;
    std::vector<int> pos(s.edges.size(), -1);
    for (int e = 0; e < (int)s.edges.size(); ++e)
        if (K.contains(s.edges[e].color)) {
            pos[e] = (int)candidates.size();
            candidates.push_back(e);
        }

    std::vector<Face> found;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<bool> chosen(candidates.size(), false);
    for (int e : seed_edges) chosen[pos[e]] = true;

    // DFS over the remaining candidate edges (include/exclude), pruning on
    // vertex degrees: every touched vertex must end with degree m
    std::vector<int> deg(s.vertex_count(), 0);
    for (int e : seed_edges) {
        deg[s.edges[e].u]++;
        deg[s.edges[e].v]++;
    }
    std::vector<int> free_idx;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (!chosen[i]) free_idx.push_back((int)i);

    auto record = [&]() {
        std::vector<int> es;
        for (size_t i = 0; i < candidates.size(); ++i)
            if (chosen[i]) es.push_back(candidates[i]);
        std::set<int> vs;
        for (int e : es) {
            vs.insert(s.edges[e].u);
            vs.insert(s.edges[e].v);
        }
        if (!vs.count(p)) return;
        auto chk = is_face(s, std::vector<int>(vs.begin(), vs.end()), es);
        if (chk.ok && chk.face.dim == (int)seed_edges.size()) {
            auto key = std::make_pair(chk.face.vertices, chk.face.edges);
            if (seen.insert(key).second) found.push_back(std::move(chk.face));
        }
    };

    // iterative subset walk with a degree cap
    std::vector<int> choice(free_idx.size(), -1);  // -1 unvisited, 0 out, 1 in
    int depth = 0;
    while (depth >= 0) {
        if (depth == (int)free_idx.size()) {
            record();
            --depth;
            continue;
        }
        int ci = free_idx[depth];
        const Edge& ed = s.edges[candidates[ci]];
        if (choice[depth] == -1) {
            // try including it first
            if (deg[ed.u] < m && deg[ed.v] < m) {
                choice[depth] = 1;
                chosen[ci] = true;
                deg[ed.u]++;
                deg[ed.v]++;
                ++depth;
            } else {
                choice[depth] = 0;
                ++depth;
            }
        } else if (choice[depth] == 1) {
            chosen[ci] = false;
            deg[ed.u]--;
            deg[ed.v]--;
            choice[depth] = 0;
            ++depth;
        } else {
            choice[depth] = -1;
            --depth;
        }
    }
    std::sort(found.begin(), found.end(), face_less);
    return found;
}

std::vector<Face> facets_containing(const ColoredSkeleton& s, const Face& f) {
    if (s.k != s.n) throw Error("facets_containing: requires type (n,n)");
    if (f.dim >= s.n) throw Error("facets_containing: face must have dimension < n");
    int p = f.vertices.front();
    std::set<int> face_edges_at_p;
    for (int e : f.edges)
        if (s.edges[e].u == p || s.edges[e].v == p) face_edges_at_p.insert(e);

    std::vector<Face> facets;
    for (int x : s.star[p]) {
        if (face_edges_at_p.count(x)) continue;
        std::vector<int> seeds;
        for (int e : s.star[p])
            if (e != x) seeds.push_back(e);
        auto ext = extend_face(s, p, seeds);
        if (!ext.face)
            throw Error("facets_containing: facet extension failed (" + ext.failure + ")");
        facets.push_back(std::move(*ext.face));
    }
    std::sort(facets.begin(), facets.end(), face_less);
    facets.erase(std::unique(facets.begin(), facets.end(),
                             [](const Face& a, const Face& b) { return a.same_cells(b); }),
                 facets.end());
    if ((int)facets.size() != s.n - f.dim)
        throw Error("facets_containing: expected " + std::to_string(s.n - f.dim) +
                    " facets, found " + std::to_string(facets.size()));

    // the face must reappear as a connected component of the intersection
    auto components = face_intersection(s, facets);
    bool present = false;
    for (const auto& c : components)
        if (c.same_cells(f)) present = true;
    if (!present)
        throw Error("facets_containing: face is not a component of the facet intersection");
    return facets;
}

}  // namespace z2skel
