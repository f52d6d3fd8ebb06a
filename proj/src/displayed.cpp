#include "snprkit/displayed.hpp"

#include <algorithm>
#include <map>

#include "snprkit/enewick.hpp"

namespace snprkit {

namespace {

// Applies one switching: drops unkept reticulation in-edges, prunes dead
// internal vertices, suppresses degree-2 vertices.
Network tree_of_switching(const Network& n, const std::vector<int>& retics, std::uint64_t mask) {
    GraphDraft d = n.to_draft();
    for (std::size_t i = 0; i < retics.size(); ++i) {
        const auto& ps = n.parents(retics[i]);
        int dropped = ps[(mask >> i) & 1 ? 1 : 0];
        d.remove_edge(dropped, retics[i]);
    }
    // prune internal vertices left without outgoing edges (cascades upward)
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < d.size(); ++v) {
            if (!d.at(v).alive || d.at(v).label > 0) continue;
            if (d.at(v).out.empty()) {
                d.kill(v);
                changed = true;
            }
        }
    }
    for (int v = 0; v < d.size(); ++v) {
        if (!d.at(v).alive) continue;
        if (d.at(v).in.size() == 1 && d.at(v).out.size() == 1) d.suppress(v);
    }
    return Network::from_draft(d);
}

}  // namespace

std::vector<PhyloTree> displayed_trees(const Network& n) {
    std::vector<int> retics;
    for (int v = 0; v < n.vertex_count(); ++v)
        if (n.kind(v) == VertexKind::reticulation) retics.push_back(v);
    std::map<std::string, Network> seen;
    for (std::uint64_t mask = 0; mask < (1ull << retics.size()); ++mask) {
        Network t = tree_of_switching(n, retics, mask);
        std::string key = t.canonical_form();
        seen.try_emplace(std::move(key), std::move(t));
    }
    std::vector<PhyloTree> out;
    out.reserve(seen.size());
    for (auto& [canon, net] : seen) out.emplace_back(std::move(net));
    return out;
}

bool displays(const Network& n, const PhyloTree& t) {
    if (n.labels() != t.net().labels())
        throw std::invalid_argument("displays: label sets differ");
    for (const auto& x : displayed_trees(n))
        if (x.net().canonical_form() == t.net().canonical_form()) return true;
    return false;
}

}  // namespace snprkit
