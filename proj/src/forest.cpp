#include "snprkit/forest.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "snprkit/displayed.hpp"
#include "snprkit/enewick.hpp"
#include "snprkit/oracle.hpp"
#include "snprkit/rspr.hpp"

namespace snprkit {

namespace {

void check_labels(const PhyloTree& t, const Network& n, const char* who) {
    if (t.net().labels() != n.labels())
        throw std::invalid_argument(std::string(who) + ": label sets differ");
}

std::vector<ForestComponent> build_components(const std::vector<std::vector<int>>& blocks,
                                              const Network& tree) {
    std::vector<ForestComponent> comps;
    for (const auto& b : blocks) comps.push_back(restriction_of(tree, b));
    std::stable_sort(comps.begin(), comps.end(),
                     [](const ForestComponent& a, const ForestComponent& b) {
                         return a.root_is_rho > b.root_is_rho;
                     });
    return comps;
}

bool partition_covers(const std::vector<std::vector<int>>& blocks, const Network& n) {
    std::vector<int> want = n.labels();
    want.insert(want.begin(), 0);
    std::vector<int> got;
    for (const auto& b : blocks) {
        if (b.empty()) return false;
        got.insert(got.end(), b.begin(), b.end());
    }
    std::sort(got.begin(), got.end());
    return got == want;
}

}  // namespace

bool is_agreement_forest(AgreementForest& f, const PhyloTree& t, const Network& n) {
    check_labels(t, n, "is_agreement_forest");
    if (f.disagreement_edges != n.reticulation_count()) return false;
    if (!partition_covers(f.component_labels, n)) return false;

    std::vector<ForestComponent> comps;
    try {
        comps = build_components(f.component_labels, t.net());
    } catch (const std::invalid_argument&) {
        return false;
    }
    auto in_tree = embed_forest(comps, t.net(), 0);
    if (!in_tree.ok) return false;
    auto in_net = embed_forest(comps, n, f.disagreement_edges);
    if (!in_net.ok) return false;
    f.tree_embedding = std::move(in_tree);
    f.network_embedding = std::move(in_net);
    return true;
}

std::pair<AgreementForest, ForestSize> maf_tree_network(const PhyloTree& t, const Network& n) {
    check_labels(t, n, "maf_tree_network");
    const int r = n.reticulation_count();
    std::vector<int> labels = t.net().labels();
    labels.insert(labels.begin(), 0);

    auto parts = partitions_of(labels);
    for (auto& p : parts) {
        for (auto& b : p) std::sort(b.begin(), b.end());
        std::stable_sort(p.begin(), p.end());  // rho block ends up first (contains 0)
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

    for (const auto& p : parts) {
        AgreementForest f;
        f.component_labels = p;
        f.disagreement_edges = r;
        if (is_agreement_forest(f, t, n)) {
            ForestSize size{static_cast<int>(p.size()) - 1, r};
            return {std::move(f), size};
        }
    }
    throw std::logic_error("maf_tree_network: no agreement forest found");
}

int dsnpr_via_displayed(const PhyloTree& t, const Network& n) {
    check_labels(t, n, "dsnpr_via_displayed");
    int best = -1;
    for (const auto& d : displayed_trees(n)) {
        int v = rspr_distance(t, d);
        if (best < 0 || v < best) best = v;
    }
    return best + n.reticulation_count();
}

int dsnpr_via_maf(const PhyloTree& t, const Network& n) {
    return maf_tree_network(t, n).second.m();
}

// --- sequence construction ------------------------------------------------------

namespace {

// Reticulations of `n` with no reticulation among their ancestors.
std::vector<int> topmost_reticulations(const Network& n) {
    std::vector<int> out;
    for (int v = 0; v < n.vertex_count(); ++v) {
        if (n.kind(v) != VertexKind::reticulation) continue;
        // walk ancestors
        std::vector<int> stack{v};
        std::vector<char> seen(n.vertex_count(), 0);
        bool clean = true;
        seen[v] = 1;
        while (!stack.empty() && clean) {
            int x = stack.back();
            stack.pop_back();
            for (int p : n.parents(x)) {
                if (seen[p]) continue;
                seen[p] = 1;
                if (n.kind(p) == VertexKind::reticulation) clean = false;
                stack.push_back(p);
            }
        }
        if (clean) out.push_back(v);
    }
    return out;
}

// Shortest SNPR0 move list between two trees: tier-0 restricted oracle search.
std::vector<SnprMove> tree_move_path(const Network& from, const Network& to) {
    if (from.canonical_form() == to.canonical_form()) return {};
    SearchConfig cfg;
    cfg.restriction = ClassRestriction::fixed_tier;
    cfg.restriction_tier = 0;
    cfg.geodesic_limit = 1;
    cfg.collect_moves = true;
    SearchReport rep = bfs_distance(from, to, cfg);
    if (!rep.exact || rep.geodesics.empty())
        throw std::logic_error("tree_move_path: tier-0 search failed");
    return rep.geodesics.front().moves;
}

}  // namespace

SnprSequence snpr_sequence_from_forest(const AgreementForest& f, const PhyloTree& t,
                                       const Network& n) {
    AgreementForest probe = f;
    if (!is_agreement_forest(probe, t, n))
        throw std::invalid_argument("snpr_sequence_from_forest: not an agreement forest");

    // Peel reticulations top-down: each step deletes one reticulation edge
    // covered by a disagreement path, re-checking that the shrunken forest
    // stays an agreement forest for the peeled network.
    std::vector<Network> chain{n};  // n = chain[0] .. chain[r] = displayed tree
    int slack = n.reticulation_count();
    while (chain.back().reticulation_count() > 0) {
        const Network& cur = chain.back();
        Network next;
        bool peeled = false;
        for (int v : topmost_reticulations(cur)) {
            std::vector<int> ps = cur.parents(v);
            std::sort(ps.begin(), ps.end());
            ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
            for (int u : ps) {
                if (cur.kind(u) != VertexKind::inner_tree) continue;
                Network cand = apply_snpr_minus(cur, {u, v, 0});
                AgreementForest trial = f;
                trial.disagreement_edges = slack - 1;
                if (!is_agreement_forest(trial, t, cand)) continue;
                next = std::move(cand);
                peeled = true;
                break;
            }
            if (peeled) break;
        }
        if (!peeled) throw std::logic_error("snpr_sequence_from_forest: peeling failed");
        chain.push_back(std::move(next));
        --slack;
    }

    // Tree leg first, then the reversed peels as SNPR+ steps. Sequences live
    // on canonical representatives, so each move is derived against the
    // normalized predecessor.
    SnprSequence seq;
    seq.start = parse_enewick(t.net().canonical_form());
    seq.networks.push_back(seq.start);
    auto push = [&seq](const SnprMove& mv) {
        Network next = apply(seq.networks.back(), mv);
        seq.networks.push_back(parse_enewick(next.canonical_form()));
        seq.moves.push_back(mv);
    };
    for (const auto& mv : tree_move_path(t.net(), chain.back())) push(mv);
    NeighborOptions plus_only;
    plus_only.zero = plus_only.minus = false;
    for (int i = static_cast<int>(chain.size()) - 2; i >= 0; --i) {
        auto ws = move_witnesses(seq.networks.back(), chain[i], plus_only);
        if (ws.empty()) throw std::logic_error("snpr_sequence_from_forest: missing SNPR+ witness");
        push(ws.front());
    }
    if (!is_isomorphic(seq.networks.back(), n))
        throw std::logic_error("snpr_sequence_from_forest: replay mismatch");
    return seq;
}

}  // namespace snprkit
