#include "z2skel/skeleton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace z2skel {

ColoredSkeleton ColoredSkeleton::build(
    int k, int n, std::vector<std::string> vertices,
    std::vector<std::tuple<std::string, std::string, std::string, GF2Vector>> edge_list) {
    if (k < 1 || k > kMaxRank) throw Error("rank k out of range");
    if (n < 1) throw Error("valence n must be >= 1");
    if (n < k) throw Error("valence n must be >= rank k");

    ColoredSkeleton s;
    s.k = k;
    s.n = n;
    std::sort(vertices.begin(), vertices.end());
    for (size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1])
            throw Error("duplicate vertex id \"" + vertices[i] + "\"");
    s.vertex_ids = std::move(vertices);

    std::map<std::string, int> vidx;
    for (int i = 0; i < (int)s.vertex_ids.size(); ++i) vidx[s.vertex_ids[i]] = i;

    std::sort(edge_list.begin(), edge_list.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    std::set<std::string> eids;
    for (auto& [id, ua, va, color] : edge_list) {
        if (!eids.insert(id).second) throw Error("duplicate edge id \"" + id + "\"");
        auto iu = vidx.find(ua), iv = vidx.find(va);
        if (iu == vidx.end()) throw Error("edge \"" + id + "\": unknown vertex \"" + ua + "\"");
        if (iv == vidx.end()) throw Error("edge \"" + id + "\": unknown vertex \"" + va + "\"");
        if (iu->second == iv->second)
            throw Error("edge \"" + id + "\" is a loop at \"" + ua + "\"");
        if (color.width != k)
            throw Error("edge \"" + id + "\": color length " + std::to_string(color.width) +
                        " != k=" + std::to_string(k));
        if (color.is_zero()) throw Error("edge \"" + id + "\": zero color");
        s.edges.push_back(Edge{id, iu->second, iv->second, color});
    }

    s.star.assign(s.vertex_ids.size(), {});
    for (int e = 0; e < (int)s.edges.size(); ++e) {
        s.star[s.edges[e].u].push_back(e);
        s.star[s.edges[e].v].push_back(e);
    }
    for (int v = 0; v < (int)s.vertex_ids.size(); ++v)
        if ((int)s.star[v].size() != n)
            throw Error("vertex \"" + s.vertex_ids[v] + "\" has valence " +
                        std::to_string(s.star[v].size()) + ", expected " + std::to_string(n));
    return s;
}

int ColoredSkeleton::vertex_index(const std::string& id) const {
    auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), id);
    if (it == vertex_ids.end() || *it != id) return -1;
    return (int)(it - vertex_ids.begin());
}

int ColoredSkeleton::edge_index(const std::string& id) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), id,
                               [](const Edge& e, const std::string& s) { return e.id < s; });
    if (it == edges.end() || it->id != id) return -1;
    return (int)(it - edges.begin());
}

int ColoredSkeleton::other_end(int edge, int vertex) const {
    const Edge& e = edges[edge];
    return e.u == vertex ? e.v : e.u;
}

std::vector<GF2Vector> ColoredSkeleton::star_colors(int vertex) const {
    std::vector<GF2Vector> out;
    out.reserve(star[vertex].size());
    for (int e : star[vertex]) out.push_back(edges[e].color);
    return out;
}

bool ColoredSkeleton::underlying_connected() const {
    if (vertex_ids.empty()) return true;
    std::vector<bool> seen(vertex_ids.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : star[v]) {
            int w = other_end(e, v);
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == vertex_ids.size();
}

namespace {

// sorted multiset of coset representatives of the star colors mod m
std::vector<GF2Vector> quotient_multiset(const std::vector<GF2Vector>& colors,
                                         const GF2Vector& m) {
    std::vector<GF2Vector> out;
    out.reserve(colors.size());
    for (const auto& c : colors) out.push_back(quotient_rep(c, m));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

ValidationReport validate(const ColoredSkeleton& s) {
    ValidationReport r;
    for (const auto& e : s.edges)
        if (e.u == e.v) r.loopless_ok = false;
    for (int v = 0; v < s.vertex_count(); ++v)
        if ((int)s.star[v].size() != s.n) {
            r.regular_ok = false;
            r.regularity_failures.push_back(s.vertex_ids[v]);
        }

    // (P1) the colors at every vertex span GF(2)^k
    for (int v = 0; v < s.vertex_count(); ++v) {
        if (span(s.star_colors(v), s.k).rank() != s.k) {
            r.p1_ok = false;
            r.p1_failures.push_back(s.vertex_ids[v]);
        }
    }

    // (P2) quotient multisets at the endpoints of every edge agree
    for (const auto& e : s.edges) {
        if (quotient_multiset(s.star_colors(e.u), e.color) !=
            quotient_multiset(s.star_colors(e.v), e.color)) {
            r.p2_ok = false;
            r.p2_failures.push_back(e.id);
        }
    }

    // largest l <= n with all l-subsets independent at every vertex
    int level = 1;
    for (int l = 2; l <= s.n; ++l) {
        bool all = true;
        for (int v = 0; v < s.vertex_count() && all; ++v)
            if (!is_l_independent(s.star_colors(v), l)) all = false;
        if (!all) break;
        level = l;
    }
    r.independence_level = level;
    r.valence_bound_ok = level < 2 || s.n <= (1 << s.k) - 1;
    return r;
}

Connection connection(const ColoredSkeleton& s, int edge_index) {
    if (edge_index < 0 || edge_index >= (int)s.edges.size())
        throw Error("connection: bad edge index");
    const Edge& e = s.edges[edge_index];
    Connection conn;
    conn.edge = edge_index;

    // group darts at both endpoints by their coset mod alpha(e)
    auto classes = [&](int vtx) {
        std::map<uint32_t, std::vector<int>> by_rep;  // rep bits -> edge indices
        for (int f : s.star[vtx])
            by_rep[quotient_rep(s.edges[f].color, e.color).bits].push_back(f);
        return by_rep;
    };
    auto at_p = classes(e.u);
    auto at_q = classes(e.v);
    if (at_p.size() != at_q.size()) throw Error("connection: P2 violated at edge " + e.id);

    // deterministic order within a class: by color (lex), then edge id
    auto sort_class = [&](std::vector<int>& c) {
        std::sort(c.begin(), c.end(), [&](int a, int b) {
            if (s.edges[a].color != s.edges[b].color)
                return lex_less(s.edges[a].color, s.edges[b].color);
            return s.edges[a].id < s.edges[b].id;
        });
    };
    for (auto& [rep, darts_p] : at_p) {
        auto it = at_q.find(rep);
        if (it == at_q.end() || it->second.size() != darts_p.size())
            throw Error("connection: P2 violated at edge " + e.id);
        auto darts_q = it->second;
        sort_class(darts_p);
        sort_class(darts_q);
        // the edge itself maps to itself
        auto self_p = std::find(darts_p.begin(), darts_p.end(), edge_index);
        if (self_p != darts_p.end()) {
            darts_p.erase(self_p);
            darts_q.erase(std::find(darts_q.begin(), darts_q.end(), edge_index));
            conn.dart_map.emplace_back(edge_index, edge_index);
        }
        if (darts_p.size() > 1) {
            conn.ambiguous = true;
            conn.ambiguous_cosets.push_back(GF2Vector(rep, s.k).str());
        }
        for (size_t i = 0; i < darts_p.size(); ++i)
            conn.dart_map.emplace_back(darts_p[i], darts_q[i]);
    }
    std::sort(conn.dart_map.begin(), conn.dart_map.end());
    return conn;
}

}  // namespace z2skel
