#pragma once

#include <random>

#include "snprkit/network.hpp"

namespace snprkit::testing {

// Rebuilds `n` with vertex ids shuffled, preserving the labelled graph.
inline Network shuffled_copy(const Network& n, std::mt19937_64& rng) {
    std::vector<int> perm(n.vertex_count());
    for (int i = 0; i < n.vertex_count(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    GraphDraft d;
    std::vector<int> where(n.vertex_count());
    for (int i = 0; i < n.vertex_count(); ++i) where[perm[i]] = d.add_vertex(n.label(perm[i]));
    for (const auto& e : n.edges()) d.add_edge(where[e.tail], where[e.head]);
    return Network::from_draft(d);
}

}  // namespace snprkit::testing
