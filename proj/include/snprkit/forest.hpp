#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snprkit/embedding.hpp"
#include "snprkit/network.hpp"
#include "snprkit/snpr.hpp"

namespace snprkit {

// Agreement forest between a tree T and a network N: tree components
// T_rho, T_1..T_k whose label sets partition X u {rho}, plus r single-edge
// "disagreement" graphs, admitting simultaneous edge-disjoint embeddings that
// cover all edges of T (tree components) and all edges of N (everything).
struct AgreementForest {
    std::vector<std::vector<int>> component_labels;  // rho block (contains 0) first
    int disagreement_edges = 0;                      // must equal r(N)
    // Witness embeddings, filled by maf_tree_network / is_agreement_forest.
    ForestEmbedding tree_embedding;
    ForestEmbedding network_embedding;

    int k() const { return static_cast<int>(component_labels.size()) - 1; }
    int size() const { return static_cast<int>(component_labels.size()) + disagreement_edges; }
};

struct ForestSize {
    int k = 0, r = 0;
    int m() const { return k + r; }
};

// Verifies the three agreement-forest conditions by explicit embedding
// search; on success the witness embeddings are stored into `f`.
bool is_agreement_forest(AgreementForest& f, const PhyloTree& t, const Network& n);

// Maximum agreement forest: minimises k over all agreement forests, ties
// broken by canonical (lexicographic) block order. Throws on label mismatch.
std::pair<AgreementForest, ForestSize> maf_tree_network(const PhyloTree& t, const Network& n);

// d_SNPR(T, N) as min over displayed trees of the rSPR-distance, plus r.
int dsnpr_via_displayed(const PhyloTree& t, const Network& n);

// d_SNPR(T, N) as m(T, N) = k + r of a maximum agreement forest.
int dsnpr_via_maf(const PhyloTree& t, const Network& n);

// Explicit SNPR-sequence from T to N of length at most |F| - 1: peels the
// reticulations top-down (removing one disagreement edge per step and
// re-attaching it with an SNPR+), then connects the trees with SNPR0 moves.
// For a maximum forest the length is exactly d_SNPR(T, N).
SnprSequence snpr_sequence_from_forest(const AgreementForest& f, const PhyloTree& t,
                                       const Network& n);

}  // namespace snprkit
