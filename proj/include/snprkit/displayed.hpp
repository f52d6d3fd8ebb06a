#pragma once

#include <vector>

#include "snprkit/network.hpp"

namespace snprkit {

// D(N): trees displayed by N, one per switching after cleanup, deduplicated by
// canonical form and sorted by it. |result| <= 2^r.
std::vector<PhyloTree> displayed_trees(const Network& n);

// T in D(N), up to isomorphism. Throws on label-set mismatch.
bool displays(const Network& n, const PhyloTree& t);

}  // namespace snprkit
