#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "snprkit/network.hpp"

namespace snprkit {

// A pendant-rooted tree pattern used as one agreement-forest component.
// Node 0 is the root: unlabelled with one child, or labelled rho (label 0)
// when the component anchors at the host root. The isolated-rho component is
// a single childless root node. Leaves carry positive labels.
struct ForestComponent {
    struct Node {
        int parent = -1;
        std::array<int, 2> child{-1, -1};
        int label = -1;  // >= 0 for labelled (0 = rho at the root)
        int child_count() const { return (child[0] >= 0) + (child[1] >= 0); }
    };
    std::vector<Node> nodes;
    bool root_is_rho = false;

    int edge_count() const;
    // Sorted labels, including 0 when the root is rho.
    std::vector<int> label_set() const;
    // Compact "(...)" rendering for output; rho prints nothing (root position).
    std::string render() const;
};

// Restriction of a tree to a label block: the minimal spanning subtree of the
// block's leaves under a fresh pendant root. A 0 in `labels` marks the rho
// component (root labelled rho); the block {0} alone yields the isolated rho.
ForestComponent restriction_of(const Network& tree, const std::vector<int>& labels);

struct ComponentEmbedding {
    std::vector<int> vertex_image;               // component node -> host vertex
    std::vector<std::vector<EdgeRef>> edge_paths;  // per component edge, host path
};

struct ForestEmbedding {
    bool ok = false;
    std::vector<ComponentEmbedding> components;
    std::vector<std::vector<EdgeRef>> slack_paths;  // images of the single-edge graphs
};

// Searches for simultaneous edge-disjoint embeddings of all components into
// `host` such that the uncovered edges decompose into exactly `slack_count`
// directed paths (the disagreement edges). With slack_count = 0 the
// embeddings must cover every edge of the host. Each component's subdivision
// is vertex-disjoint within itself; distinct components may share vertices.
ForestEmbedding embed_forest(const std::vector<ForestComponent>& components, const Network& host,
                             int slack_count);

}  // namespace snprkit
