#include "z2skel/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "z2skel/connectivity.hpp"
#include "z2skel/obstruction.hpp"

namespace z2skel {

ColoredSkeleton gen_simplex(int n) {
    if (n < 1 || n > kMaxRank) throw Error("gen_simplex: n out of range");
    UncoloredMultigraph g;
    g.n = n;
    for (int i = 0; i <= n; ++i) g.vertices.push_back(std::to_string(i));
    auto edge_id = [](int i, int j) {
        return std::to_string(i) + "-" + std::to_string(j);
    };
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            g.edges.push_back({edge_id(i, j), {std::to_string(i), std::to_string(j)}});

    // facet F_t omits vertex t
    std::vector<FacetDecl> facets;
    std::map<std::string, GF2Vector> lambda;
    for (int t = 0; t <= n; ++t) {
        FacetDecl fd;
        fd.id = "F" + std::to_string(t);
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (i != t && j != t) fd.edge_ids.push_back(edge_id(i, j));
        facets.push_back(std::move(fd));
        uint32_t bits = t == 0 ? (uint32_t)((1u << n) - 1) : (1u << (t - 1));
        lambda.emplace("F" + std::to_string(t), GF2Vector(bits, n));
    }
    auto alpha = reconstruct_alpha(g, facets, lambda);

    std::vector<std::tuple<std::string, std::string, std::string, GF2Vector>> edge_list;
    for (const auto& [id, ends] : g.edges)
        edge_list.emplace_back(id, ends[0], ends[1], alpha.at(id));
    auto s = ColoredSkeleton::build(n, n, g.vertices, std::move(edge_list));
    if (!validate(s).ok()) throw Error("gen_simplex: construction failed validation");
    return s;
}

ColoredSkeleton gen_cube(int n) {
    if (n < 1 || n > kMaxRank) throw Error("gen_cube: n out of range");
    std::vector<std::string> vertices;
    for (uint32_t v = 0; v < (1u << n); ++v) vertices.push_back(GF2Vector(v, n).str());
    std::vector<std::tuple<std::string, std::string, std::string, GF2Vector>> edges;
    for (uint32_t v = 0; v < (1u << n); ++v)
        for (int i = 0; i < n; ++i) {
            if ((v >> i) & 1u) continue;
            std::string a = GF2Vector(v, n).str();
            std::string b = GF2Vector(v | (1u << i), n).str();
            edges.emplace_back(a + ":" + std::to_string(i + 1), a, b, GF2Vector::unit(i, n));
        }
    auto s = ColoredSkeleton::build(n, n, std::move(vertices), std::move(edges));
    if (!validate(s).ok()) throw Error("gen_cube: construction failed validation");
    return s;
}

ColoredSkeleton gen_k1(const UncoloredMultigraph& graph) {
    std::vector<std::tuple<std::string, std::string, std::string, GF2Vector>> edges;
    for (const auto& [id, ends] : graph.edges)
        edges.emplace_back(id, ends[0], ends[1], GF2Vector(1, 1));
    auto s = ColoredSkeleton::build(1, graph.n, graph.vertices, std::move(edges));
    if (!validate(s).ok()) throw Error("gen_k1: construction failed validation");
    return s;
}

ColoredSkeleton gen_product(const ColoredSkeleton& a, const ColoredSkeleton& b) {
    int k = a.k + b.k;
    if (k > kMaxRank) throw Error("gen_product: combined rank exceeds capacity");
    std::vector<std::string> vertices;
    for (const auto& va : a.vertex_ids)
        for (const auto& vb : b.vertex_ids) vertices.push_back(va + "|" + vb);
    std::vector<std::tuple<std::string, std::string, std::string, GF2Vector>> edges;
    for (const auto& ea : a.edges)
        for (const auto& vb : b.vertex_ids)
            edges.emplace_back("A:" + ea.id + "|" + vb, a.vertex_ids[ea.u] + "|" + vb,
                               a.vertex_ids[ea.v] + "|" + vb, GF2Vector(ea.color.bits, k));
    for (const auto& eb : b.edges)
        for (const auto& va : a.vertex_ids)
            edges.emplace_back("B:" + va + "|" + eb.id, va + "|" + b.vertex_ids[eb.u],
                               va + "|" + b.vertex_ids[eb.v],
                               GF2Vector(eb.color.bits << a.k, k));
    auto s = ColoredSkeleton::build(k, a.n + b.n, std::move(vertices), std::move(edges));
    if (!validate(s).ok()) throw Error("gen_product: construction failed validation");
    return s;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

namespace {

struct MultiGraph {
    int v = 0;
    std::vector<std::vector<int>> mult;  // symmetric multiplicity matrix
};

bool multigraph_connected(const MultiGraph& g) {
    std::vector<bool> seen(g.v, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < g.v; ++y)
            if (g.mult[x][y] > 0 && !seen[y]) {
                seen[y] = true;
                ++count;
                stack.push_back(y);
            }
    }
    return count == g.v;
}

// upper-triangle row-major vector of the permuted matrix, compared lazily:
// the graph is canonical iff no permutation yields a lex-greater vector
bool is_canonical_graph(const MultiGraph& g) {
    int v = g.v;
    std::vector<int> perm(v, -1), used(v, 0);
    // DFS over partial permutations; cmp: 0 = equal so far, -1 = smaller (prune)
    auto rec = [&](auto&& self, int depth) -> bool {  // returns false if a greater perm exists
        if (depth == v) return true;
        for (int img = 0; img < v; ++img) {
            if (used[img]) continue;
            perm[depth] = img;
            used[img] = 1;
            // newly comparable entries: (i, depth) for i < depth
            int cmp = 0;
            for (int i = 0; i < depth && cmp == 0; ++i) {
                int orig = g.mult[i][depth];
                int mapped = g.mult[perm[i]][img];
                if (mapped != orig) cmp = mapped > orig ? 1 : -1;
            }
            bool ok = true;
            if (cmp == 1) ok = false;          // found lex-greater image
            else if (cmp == 0) ok = self(self, depth + 1);
            used[img] = 0;
            perm[depth] = -1;
            if (!ok) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

struct EdgeSlot {
    int u, v, copy;
};

struct ColoringSearcher {
    const SearchSpec& spec;
    SearchStats& stats;
    SearchResult& result;
    SymmetricExpr target_f;  // parsed once for ObstructedByF

    MultiGraph graph;
    std::vector<EdgeSlot> slots;
    std::vector<int> color;              // per slot, 0 = unassigned
    std::vector<std::vector<int>> at;    // vertex -> slot indices
    std::vector<int> assigned_at;        // vertex -> count assigned
    int rank = 0;                        // rank of the colors assigned so far

    bool budget_exceeded() {
        if (stats.nodes >= spec.node_budget) {
            stats.budget_hit = true;
            return true;
        }
        return false;
    }

    // partial (P2): reps of assigned colors at w mod t must fit inside the
    // full multiset at x (x complete); equality follows when w completes
    bool fits(int w, int x, uint32_t t) const {
        GF2Vector tv(t, spec.k);
        std::map<uint32_t, int> have;
        for (int sl : at[w])
            if (color[sl])
                have[quotient_rep(GF2Vector((uint32_t)color[sl], spec.k), tv).bits]++;
        std::map<uint32_t, int> full;
        for (int sl : at[x])
            full[quotient_rep(GF2Vector((uint32_t)color[sl], spec.k), tv).bits]++;
        for (const auto& [rep, c] : have) {
            auto it = full.find(rep);
            if (it == full.end() || it->second < c) return false;
        }
        return true;
    }

    bool partial_ok(int slot_idx) {
        const EdgeSlot& es = slots[slot_idx];
        for (int w : {es.u, es.v}) {
            // rank feasibility for (P1)
            std::vector<GF2Vector> cols;
            int unassigned = 0;
            for (int sl : at[w]) {
                if (color[sl]) cols.push_back(GF2Vector((uint32_t)color[sl], spec.k));
                else ++unassigned;
            }
            int r = span(cols, spec.k).rank();
            if (r + unassigned < spec.k) return false;
            if (unassigned == 0 && r != spec.k) return false;
        }
        // congruence fits across every assigned edge at the endpoints
        for (int w : {es.u, es.v}) {
            for (int sl : at[w]) {
                if (!color[sl]) continue;
                int x = slots[sl].u == w ? slots[sl].v : slots[sl].u;
                if (assigned_at[x] == (int)at[x].size() && !fits(w, x, (uint32_t)color[sl]))
                    return false;
                if (assigned_at[w] == (int)at[w].size() && !fits(x, w, (uint32_t)color[sl]))
                    return false;
            }
        }
        return true;
    }

    ColoredSkeleton build_skeleton() const {
        auto pad = [](int x) {
            std::string s = std::to_string(x);
            return s.size() < 2 ? "0" + s : s;
        };
        std::vector<std::string> vertices;
        for (int i = 0; i < graph.v; ++i) vertices.push_back(pad(i));
        std::vector<std::tuple<std::string, std::string, std::string, GF2Vector>> edges;
        for (size_t i = 0; i < slots.size(); ++i)
            edges.emplace_back(pad(slots[i].u) + "-" + pad(slots[i].v) + "/" +
                                   std::to_string(slots[i].copy),
                               pad(slots[i].u), pad(slots[i].v),
                               GF2Vector((uint32_t)color[i], spec.k));
        return ColoredSkeleton::build(spec.k, spec.n, std::move(vertices), std::move(edges));
    }

    // predicate on a structurally complete coloring; true = witness found
    bool check_candidate() {
        ColoredSkeleton s = build_skeleton();
        auto report = validate(s);
        if (!report.ok()) return false;
        ++stats.skeletons;
        if (spec.independence_min && report.independence_level < *spec.independence_min)
            return false;
        if (spec.independence_max && report.independence_level > *spec.independence_max)
            return false;
        if (spec.min_connectivity) {
            auto conn = vertex_connectivity(s);
            int value = conn.at_least ? s.n : conn.connectivity;
            if (value < *spec.min_connectivity) return false;
        }
        switch (spec.target.kind) {
            case SearchTarget::ObstructedByF: {
                auto sum = localization_sum(s, target_f);
                if (sum.is_polynomial()) return false;
                result.witness = "localization sum of " + target_f.str() +
                                 " is non-polynomial: " + sum.str();
                break;
            }
            case SearchTarget::NoFaceExtension: {
                int m = spec.target.m;
                bool found = false;
                for (int p = 0; p < s.vertex_count() && !found; ++p) {
                    const auto& st = s.star[p];
                    if (m > (int)st.size()) break;
                    std::vector<int> idx(m);
                    for (int i = 0; i < m; ++i) idx[i] = i;
                    while (true) {
                        std::vector<int> seeds;
                        for (int i : idx) seeds.push_back(st[i]);
                        auto ext = extend_face(s, p, seeds);
                        if (!ext.face && faces_containing_edges(s, p, seeds).empty()) {
                            std::string ids;
                            for (int e : seeds) ids += (ids.empty() ? "" : ",") + s.edges[e].id;
                            result.witness = "edges {" + ids + "} at vertex " +
                                             s.vertex_ids[p] + " lie in no " +
                                             std::to_string(m) + "-face";
                            found = true;
                            break;
                        }
                        int i = m - 1;
                        while (i >= 0 && idx[i] == (int)st.size() - m + i) --i;
                        if (i < 0) break;
                        ++idx[i];
                        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
                    }
                }
                if (!found) return false;
                break;
            }
            case SearchTarget::DisconnectedTwoFaceIntersection: {
                std::vector<Face> twos;
                try {
                    twos = enumerate_faces(s, 2, report.independence_level);
                } catch (const Error&) {
                    return false;  // enumeration not guaranteed; cannot certify
                }
                bool found = false;
                for (size_t i = 0; i < twos.size() && !found; ++i)
                    for (size_t j = i + 1; j < twos.size(); ++j) {
                        auto comps = face_intersection(s, {twos[i], twos[j]});
                        if (comps.size() > 1) {
                            result.witness =
                                "two 2-faces intersect in " + std::to_string(comps.size()) +
                                " components";
                            found = true;
                            break;
                        }
                    }
                if (!found) return false;
                break;
            }
            case SearchTarget::ManifoldViolation: {
                if (s.k != 4 || s.n != 4) return false;
                auto poset = simplicial_poset(s);
                if (poset.f_vector[1] == poset.f_vector[0] + poset.f_vector[3]) return false;
                result.witness = "f-vector (" + std::to_string(poset.f_vector[0]) + "," +
                                 std::to_string(poset.f_vector[1]) + "," +
                                 std::to_string(poset.f_vector[2]) + "," +
                                 std::to_string(poset.f_vector[3]) + ") violates f1 = f0 + f3";
                break;
            }
        }
        result.skeleton = std::move(s);
        return true;
    }

    // DFS over edge slots, colors canonical under GL(k,2): allowed values
    // are 1..2^rank, taking 2^rank increments the rank; parallel copies are
    // assigned non-decreasing colors
    bool dfs(int slot_idx) {
        if (slot_idx == (int)slots.size()) return check_candidate();
        const EdgeSlot& es = slots[slot_idx];
        int lo = 1;
        if (es.copy > 0) lo = color[slot_idx - 1];  // previous parallel copy
        int hi = std::min(1 << rank, (1 << spec.k) - 1);
        for (int c = lo; c <= hi; ++c) {
            ++stats.nodes;
            if (budget_exceeded()) return false;
            bool bump = (rank < spec.k) && (c == (1 << rank));
            color[slot_idx] = c;
            assigned_at[es.u]++;
            assigned_at[es.v]++;
            if (bump) ++rank;
            if (partial_ok(slot_idx) && dfs(slot_idx + 1)) return true;
            if (bump) --rank;
            assigned_at[es.u]--;
            assigned_at[es.v]--;
            color[slot_idx] = 0;
            if (stats.budget_hit) return false;
        }
        return false;
    }

    bool run(const MultiGraph& g) {
        graph = g;
        slots.clear();
        for (int u = 0; u < g.v; ++u)
            for (int v = u + 1; v < g.v; ++v)
                for (int c = 0; c < g.mult[u][v]; ++c) slots.push_back(EdgeSlot{u, v, c});
        color.assign(slots.size(), 0);
        at.assign(g.v, {});
        for (size_t i = 0; i < slots.size(); ++i) {
            at[slots[i].u].push_back((int)i);
            at[slots[i].v].push_back((int)i);
        }
        assigned_at.assign(g.v, 0);
        rank = 0;
        ++stats.graphs;
        return dfs(0);
    }
};

// enumerate loopless n-regular multigraphs on v labeled vertices in a fixed
// order, keeping canonical representatives only
bool enumerate_graphs(int v, int n, const std::function<bool(const MultiGraph&)>& visit) {
    MultiGraph g;
    g.v = v;
    g.mult.assign(v, std::vector<int>(v, 0));
    std::vector<int> rem(v, n);

    std::vector<std::pair<int, int>> entries;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) entries.emplace_back(i, j);

    auto rec = [&](auto&& self, size_t idx) -> bool {
        if (idx == entries.size()) {
            for (int i = 0; i < v; ++i)
                if (rem[i] != 0) return false;
            if (!multigraph_connected(g)) return false;
            if (!is_canonical_graph(g)) return false;
            return visit(g);
        }
        auto [i, j] = entries[idx];
        // the last slot of row i must absorb its remaining degree
        int hi = std::min(rem[i], rem[j]);
        int lo = 0;
        if (j == v - 1) {
            if (rem[i] > rem[j]) return false;
            lo = hi = rem[i];
        }
        for (int m = hi; m >= lo; --m) {
            g.mult[i][j] = g.mult[j][i] = m;
            rem[i] -= m;
            rem[j] -= m;
            bool done = self(self, idx + 1);
            rem[i] += m;
            rem[j] += m;
            g.mult[i][j] = g.mult[j][i] = 0;
            if (done) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

SearchResult search(const SearchSpec& spec) {
    if (spec.k < 1 || spec.k > kMaxRank || spec.n < spec.k)
        throw Error("search: inconsistent (k,n)");
    if (spec.independence_min && spec.independence_max &&
        *spec.independence_min > *spec.independence_max)
        throw Error("search: empty independence constraint");

    SearchResult result;
    ColoringSearcher searcher{spec, result.stats, result, {}, {}, {}, {}, {}, {}, 0};
    if (spec.target.kind == SearchTarget::ObstructedByF)
        searcher.target_f = SymmetricExpr::parse(spec.target.f_expr, spec.n);

    int v_lo = spec.vertex_count ? *spec.vertex_count : 2;
    int v_hi = spec.vertex_count ? *spec.vertex_count : spec.max_vertex_count;
    for (int v = v_lo; v <= v_hi; ++v) {
        if ((v * spec.n) % 2 != 0) continue;
        if (v < 2) continue;
        enumerate_graphs(v, spec.n, [&](const MultiGraph& g) {
            if (result.stats.budget_hit) return true;
            return searcher.run(g);
        });
        if (result.skeleton || result.stats.budget_hit) return result;
    }
    result.stats.exhausted = true;
    return result;
}

}  // namespace z2skel
