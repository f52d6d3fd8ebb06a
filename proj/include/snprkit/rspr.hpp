#pragma once

#include <string>
#include <vector>

#include "snprkit/embedding.hpp"
#include "snprkit/network.hpp"

namespace snprkit {

// Agreement forest between two trees: label blocks partitioning X u {rho}
// (rho written as 0), with the component shapes given by restriction.
struct TreeAgreementForest {
    std::vector<std::vector<int>> components;  // sorted blocks, rho block first
    int size() const { return static_cast<int>(components.size()); }
};

// Exact rSPR-distance via maximum agreement forests: iterative deepening on
// the number of cut edges with cherry-based branching. Throws on label-set
// mismatch. Equals the SNPR-distance between the trees.
int rspr_distance(const PhyloTree& t, const PhyloTree& u);

// A maximum agreement forest witness; among all maximum forests the
// canonically least (blocks compared lexicographically) is returned.
TreeAgreementForest maximum_agreement_forest(const PhyloTree& t, const PhyloTree& u);

// Every maximum agreement forest, canonically sorted.
std::vector<TreeAgreementForest> all_maximum_agreement_forests(const PhyloTree& t,
                                                               const PhyloTree& u);

// Checks blocks against the agreement-forest conditions for two trees
// (restrictions agree, simultaneous edge-disjoint covering embeddings exist).
bool is_tree_agreement_forest(const TreeAgreementForest& f, const PhyloTree& t,
                              const PhyloTree& u);

// All set partitions of `labels` (used here and by the tree-network search).
std::vector<std::vector<std::vector<int>>> partitions_of(const std::vector<int>& labels);

}  // namespace snprkit
