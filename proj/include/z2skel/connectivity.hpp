// connectivity.hpp
// Vertex connectivity via the Whitney characterization (exhaustive deletion
// of vertex subsets up to size n-1), a Menger/max-flow cross oracle, the
// 2-connectedness check, and the face-intersection criterion for
// n-connectedness.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "z2skel/faces.hpp"
#include "z2skel/skeleton.hpp"

namespace z2skel {

struct ConnectivityReport {
    int connectivity = 0;  // exact cut size, or the lower bound n when at_least
    bool at_least = false; // no cut of size <= n-1 exists; reported as ">= n"
    bool complete_graph = false;  // underlying simple graph is complete
    std::vector<std::string> witness;  // a minimum separating set (vertex ids)
    int checked_up_to = 0;             // largest deletion size examined
};

// exhaustive-deletion connectivity of the underlying simple graph, exact up
// to the valence n (the only threshold the Whitney applications need)
ConnectivityReport vertex_connectivity(const ColoredSkeleton& s);

// exact vertex connectivity via vertex-split max-flow (Menger); |V|-1 for
// complete graphs; 0 when disconnected
int menger_connectivity(const ColoredSkeleton& s);

struct TwoConnectedResult {
    bool ok = false;
    std::vector<std::string> certificate;  // cut vertex when not 2-connected
};

// requires a validated connected skeleton with independence level >= 3
TwoConnectedResult check_two_connected(const ColoredSkeleton& s, int independence_level);

struct NConnectedReport {
    bool hypothesis_holds = false;  // all 1-/2-face pairwise intersections connected or empty
    std::optional<std::pair<Face, Face>> violating_pair;
    bool connectivity_conclusion = false;  // measured connectivity >= n
    ConnectivityReport connectivity;
};

NConnectedReport n_connected_criterion(const ColoredSkeleton& s, int independence_level);

}  // namespace z2skel
