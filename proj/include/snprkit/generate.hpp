#pragma once

#include <random>
#include <vector>

#include "snprkit/network.hpp"

namespace snprkit {

// All rooted binary phylogenetic trees on labels {1..n}, canonically sorted.
std::vector<Network> all_trees(int n);

// All networks on {1..n} with exactly r reticulations, built as the SNPR+
// closure of the tier below (every tier-r network is one SNPR+ above tier
// r-1, since a topmost reticulation always has a removable in-edge).
std::vector<Network> tier(int n, int r);

Network random_tree(std::mt19937_64& rng, int n);
// Random tree followed by r random SNPR+ applications.
Network random_network(std::mt19937_64& rng, int n, int r);

}  // namespace snprkit
