#include "z2skel/connectivity.hpp"

#include <algorithm>
#include <bit>

namespace z2skel {

namespace {

// underlying simple graph as adjacency masks; supports up to 64 vertices
std::vector<uint64_t> simple_adjacency(const ColoredSkeleton& s) {
    if (s.vertex_count() > 64) throw Error("connectivity: more than 64 vertices");
    std::vector<uint64_t> adj(s.vertex_count(), 0);
    for (const auto& e : s.edges) {
        adj[e.u] |= uint64_t{1} << e.v;
        adj[e.v] |= uint64_t{1} << e.u;
    }
    return adj;
}

bool connected_after_removal(const std::vector<uint64_t>& adj, uint64_t removed) {
    int n = (int)adj.size();
    uint64_t alive = (n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1) & ~removed;
    if (alive == 0) return true;
    int start = std::countr_zero(alive);
    uint64_t seen = uint64_t{1} << start;
    uint64_t frontier = seen;
    while (frontier) {
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v] & alive & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == alive;
}

}  // namespace

ConnectivityReport vertex_connectivity(const ColoredSkeleton& s) {
    if (s.vertex_count() < 2) throw Error("vertex_connectivity: need at least 2 vertices");
    auto adj = simple_adjacency(s);
    int nv = s.vertex_count();
    ConnectivityReport r;

    bool complete = true;
    for (int v = 0; v < nv && complete; ++v) {
        uint64_t expect = ((nv == 64 ? ~uint64_t{0} : (uint64_t{1} << nv) - 1)) &
                          ~(uint64_t{1} << v);
        if (adj[v] != expect) complete = false;
    }
    r.complete_graph = complete;

    if (!connected_after_removal(adj, 0)) {
        r.connectivity = 0;
        r.checked_up_to = 0;
        return r;
    }

    int max_cut = std::min(s.n - 1, nv - 2);
    r.checked_up_to = std::max(max_cut, 0);
    // subsets in lexicographic order of the sorted index tuples, so the
    // reported witness is deterministic
    for (int t = 1; t <= max_cut; ++t) {
        std::vector<int> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            uint64_t removed = 0;
            for (int i : idx) removed |= uint64_t{1} << i;
            if (!connected_after_removal(adj, removed)) {
                r.connectivity = t;
                for (int i : idx) r.witness.push_back(s.vertex_ids[i]);
                return r;
            }
            int i = t - 1;
            while (i >= 0 && idx[i] == nv - t + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    r.connectivity = s.n;
    r.at_least = true;
    return r;
}

int menger_connectivity(const ColoredSkeleton& s) {
    auto adj = simple_adjacency(s);
    int nv = s.vertex_count();
    if (!connected_after_removal(adj, 0)) return 0;

    bool complete = true;
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v)
            if (!((adj[u] >> v) & 1)) complete = false;
    if (complete) return nv - 1;

    // unit-capacity max-flow on the vertex-split digraph: v_in=2v, v_out=2v+1
    int N = 2 * nv;
    auto flow_between = [&](int s0, int t0) {
        std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
        for (int v = 0; v < nv; ++v) cap[2 * v][2 * v + 1] = (v == s0 || v == t0) ? nv : 1;
        for (int u = 0; u < nv; ++u)
            for (int v = 0; v < nv; ++v)
                if ((adj[u] >> v) & 1) cap[2 * u + 1][2 * v] = nv;
        int total = 0;
        while (true) {
            std::vector<int> prev(N, -1);
            std::vector<int> queue{2 * s0};
            prev[2 * s0] = 2 * s0;
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int x = queue[qi];
                for (int y = 0; y < N; ++y)
                    if (cap[x][y] > 0 && prev[y] == -1) {
                        prev[y] = x;
                        queue.push_back(y);
                    }
            }
            if (prev[2 * t0 + 1] == -1) break;
            int y = 2 * t0 + 1;
            while (y != 2 * s0) {
                int x = prev[y];
                cap[x][y] -= 1;
                cap[y][x] += 1;
                y = x;
            }
            ++total;
        }
        return total;
    };

    int best = nv;
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v)
            if (!((adj[u] >> v) & 1)) best = std::min(best, flow_between(u, v));
    return best;
}

TwoConnectedResult check_two_connected(const ColoredSkeleton& s, int independence_level) {
    if (independence_level < 3)
        throw Error("check_two_connected: requires independence level >= 3");
    if (!s.underlying_connected()) throw Error("check_two_connected: skeleton is disconnected");
    auto r = vertex_connectivity(s);
    TwoConnectedResult out;
    out.ok = r.at_least || r.connectivity >= 2;
    if (!out.ok) out.certificate = r.witness;
    return out;
}

NConnectedReport n_connected_criterion(const ColoredSkeleton& s, int independence_level) {
    if (independence_level < 3)
        throw Error("n_connected_criterion: requires independence level >= 3");
    if (!s.underlying_connected())
        throw Error("n_connected_criterion: skeleton is disconnected");

    std::vector<Face> low;
    for (int d : {1, 2})
        for (auto& f : enumerate_faces(s, d, independence_level)) low.push_back(std::move(f));

    NConnectedReport rep;
    rep.hypothesis_holds = true;
    for (size_t i = 0; i < low.size() && rep.hypothesis_holds; ++i) {
        for (size_t j = i + 1; j < low.size(); ++j) {
            auto comps = face_intersection(s, {low[i], low[j]});
            if (comps.size() > 1) {
                rep.hypothesis_holds = false;
                rep.violating_pair = std::make_pair(low[i], low[j]);
                break;
            }
        }
    }
    rep.connectivity = vertex_connectivity(s);
    rep.connectivity_conclusion =
        rep.connectivity.at_least || rep.connectivity.connectivity >= s.n;
    return rep;
}

}  // namespace z2skel
