#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "snprkit/network.hpp"

namespace snprkit {

struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t position);
    std::size_t position;
};

// Extended Newick with `#Hk` hybrid tags marking reticulations. Two
// occurrences of the same tag are merged into one vertex; a parallel pair is
// written by referencing the same tag twice from one parent. The pendant root
// is the implicit outermost wrapper, e.g. "((1,2));" is the cherry on {1,2}.
//
// parse_enewick validates the result and throws invalid_network_error on
// degree/cycle/label violations; parse_enewick_draft only builds the graph so
// that `validate` can report violations of arbitrary candidates.
Network parse_enewick(const std::string& text);
GraphDraft parse_enewick_draft(const std::string& text);

// Canonical serialization: lexicographically minimal eNewick string over all
// child orderings, hybrid tags numbered by first occurrence. Networks are
// isomorphic iff their canonical strings are equal.
std::string canonical_enewick(const Network& n);

// write_enewick is the canonical form; parse(write(n)) is isomorphic to n.
inline std::string write_enewick(const Network& n) { return n.canonical_form(); }

// Canonical serialization of the sub-DAG reachable from `v` (used as a
// position-independent identifier for pruned pendants).
std::string canonical_subdag(const Network& n, int v);

// One network per non-blank line; lines wrapped in [...] are comments.
std::vector<Network> read_enewick_file(const std::string& path);
Network read_single_enewick(const std::string& path_or_inline);

}  // namespace snprkit
