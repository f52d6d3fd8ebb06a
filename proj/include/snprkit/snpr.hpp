#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snprkit/network.hpp"

namespace snprkit {

// One applied rewrite. Edge descriptors name edges of the network the move is
// applied to:
//   zero  : `pruned` = deleted edge (u,v) with u an inner tree vertex;
//           `target` = edge of the intermediate network (after deletion and
//           suppression of u) that gets subdivided for regrafting. The edge
//           created by suppressing u keeps the ids (parent(u), other child).
//   plus  : `source` = edge (u,v) subdivided by the new reticulation v';
//           `target` = edge of the network-after-first-subdivision that gets
//           subdivided by u'. The new vertex v' has id vertex_count().
//   minus : `pruned` = deleted reticulation edge (u,v), u tree, v reticulation.
struct SnprMove {
    enum class Kind { zero, plus, minus };
    Kind kind = Kind::zero;
    EdgeRef pruned;
    EdgeRef source;
    EdgeRef target;
};

const char* to_string(SnprMove::Kind k);

Network apply_snpr0(const Network& n, EdgeRef e, EdgeRef f);
Network apply_snpr_plus(const Network& n, EdgeRef e, EdgeRef g);
Network apply_snpr_minus(const Network& n, EdgeRef e);
Network apply(const Network& n, const SnprMove& move);

struct Neighbor {
    Network net;
    SnprMove move;  // first witness in deterministic enumeration order
};

struct NeighborOptions {
    int max_reticulations = -1;  // skip SNPR+ results above this, -1 = unlimited
    bool zero = true, plus = true, minus = true;
};

// Complete one-move neighborhood, deduplicated by canonical form and sorted
// by it. Networks isomorphic to `n` itself (identity regrafts) are excluded.
std::vector<Neighbor> neighbors(const Network& n, const NeighborOptions& opt = {});

// All moves that turn `n` into a network isomorphic to `m` (no dedup).
std::vector<SnprMove> move_witnesses(const Network& n, const Network& m,
                                     const NeighborOptions& opt = {});

// Canonical identifier of the pendant sub-DAG hanging below edge `e` in `n`;
// used to recognise when two moves prune "the same" edge.
std::string pruned_pendant_id(const Network& n, const SnprMove& move);

// Vertex ids are not stable across rewrites, so a sequence lives on canonical
// representatives: networks[i] is the parsed canonical form, and moves[i] is
// expressed against networks[i] (the network it is applied to).
struct SnprSequence {
    Network start;
    std::vector<SnprMove> moves;
    std::vector<Network> networks;  // networks[0] == start, one entry per step after

    std::size_t length() const { return moves.size(); }
};

// Replays `moves` from the canonical representative of `start`, validating and
// re-normalizing each step.
SnprSequence replay(const Network& start, const std::vector<SnprMove>& moves);

}  // namespace snprkit
