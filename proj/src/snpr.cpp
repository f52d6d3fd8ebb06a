#include "snprkit/snpr.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "snprkit/enewick.hpp"

namespace snprkit {

const char* to_string(SnprMove::Kind k) {
    switch (k) {
        case SnprMove::Kind::zero: return "zero";
        case SnprMove::Kind::plus: return "plus";
        case SnprMove::Kind::minus: return "minus";
    }
    return "?";
}

namespace {

void require_edge(const GraphDraft& d, EdgeRef e, const char* who) {
    if (e.tail < 0 || e.tail >= d.size() || e.head < 0 || e.head >= d.size() ||
        !d.at(e.tail).alive || !d.at(e.head).alive)
        throw std::invalid_argument(std::string(who) + ": edge endpoints out of range");
    const auto& out = d.at(e.tail).out;
    int mult = static_cast<int>(std::count(out.begin(), out.end(), e.head));
    if (e.index < 0 || e.index >= mult)
        throw std::invalid_argument(std::string(who) + ": no such edge (" +
                                    std::to_string(e.tail) + "," + std::to_string(e.head) + ")");
}

// Vertices reachable from v in a draft, as a membership mask.
std::vector<char> reach_mask(const GraphDraft& d, int v) {
    std::vector<char> seen(d.size(), 0);
    std::vector<int> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int c : d.at(x).out)
            if (!seen[c]) {
                seen[c] = 1;
                stack.push_back(c);
            }
    }
    return seen;
}

// An edge is a descendant of v iff its tail is v or reachable from v; grafting
// onto a non-descendant edge is what keeps the result acyclic.
bool edge_descends_from(const std::vector<char>& reach, EdgeRef f) { return reach[f.tail]; }

int subdivide(GraphDraft& d, EdgeRef f) {
    d.remove_edge(f.tail, f.head);
    int w = d.add_vertex();
    d.add_edge(f.tail, w);
    d.add_edge(w, f.head);
    return w;
}

}  // namespace

Network apply_snpr0(const Network& n, EdgeRef e, EdgeRef f) {
    if (n.kind(e.tail) != VertexKind::inner_tree)
        throw std::invalid_argument("snpr0: pruned edge tail must be an inner tree vertex");
    GraphDraft d = n.to_draft();
    require_edge(d, e, "snpr0");
    int u = e.tail, v = e.head;
    d.remove_edge(u, v);
    d.suppress(u);
    require_edge(d, f, "snpr0 target");
    auto reach = reach_mask(d, v);
    if (edge_descends_from(reach, f))
        throw std::invalid_argument("snpr0: target edge is a descendant of the pruned subnetwork");
    int u2 = subdivide(d, f);
    d.add_edge(u2, v);
    return Network::from_draft(d);
}

Network apply_snpr_plus(const Network& n, EdgeRef e, EdgeRef g) {
    GraphDraft d = n.to_draft();
    require_edge(d, e, "snpr+");
    int v2 = subdivide(d, e);  // v2 becomes the new reticulation
    require_edge(d, g, "snpr+ target");
    auto reach = reach_mask(d, v2);
    if (edge_descends_from(reach, g))
        throw std::invalid_argument("snpr+: target edge is a descendant of the new vertex");
    int u2 = subdivide(d, g);
    d.add_edge(u2, v2);
    return Network::from_draft(d);
}

Network apply_snpr_minus(const Network& n, EdgeRef e) {
    if (n.kind(e.tail) != VertexKind::inner_tree)
        throw std::invalid_argument("snpr-: edge tail must be an inner tree vertex");
    if (n.kind(e.head) != VertexKind::reticulation)
        throw std::invalid_argument("snpr-: edge head must be a reticulation");
    GraphDraft d = n.to_draft();
    require_edge(d, e, "snpr-");
    d.remove_edge(e.tail, e.head);
    d.suppress(e.tail);
    d.suppress(e.head);
    return Network::from_draft(d);
}

Network apply(const Network& n, const SnprMove& m) {
    switch (m.kind) {
        case SnprMove::Kind::zero: return apply_snpr0(n, m.pruned, m.target);
        case SnprMove::Kind::plus: return apply_snpr_plus(n, m.source, m.target);
        case SnprMove::Kind::minus: return apply_snpr_minus(n, m.pruned);
    }
    throw std::invalid_argument("apply: bad move kind");
}

namespace {

// Unique (tail, head) pairs of a draft, alive edges only, sorted.
std::vector<EdgeRef> unique_edges(const GraphDraft& d) {
    std::vector<EdgeRef> out;
    for (int v = 0; v < d.size(); ++v) {
        if (!d.at(v).alive) continue;
        std::vector<int> ch = d.at(v).out;
        std::sort(ch.begin(), ch.end());
        ch.erase(std::unique(ch.begin(), ch.end()), ch.end());
        for (int c : ch) out.push_back({v, c, 0});
    }
    return out;
}

template <typename Fn>
void for_each_move(const Network& n, const NeighborOptions& opt, Fn&& fn) {
    const auto all = n.edges();
    std::vector<EdgeRef> uniq;
    for (const auto& e : all)
        if (e.index == 0) uniq.push_back(e);

    if (opt.zero) {
        for (const auto& e : uniq) {
            if (n.kind(e.tail) != VertexKind::inner_tree) continue;
            GraphDraft d = n.to_draft();
            d.remove_edge(e.tail, e.head);
            d.suppress(e.tail);
            auto reach = reach_mask(d, e.head);
            for (const auto& f : unique_edges(d)) {
                if (edge_descends_from(reach, f)) continue;
                GraphDraft d2 = d;
                int u2 = subdivide(d2, f);
                d2.add_edge(u2, e.head);
                fn(SnprMove{SnprMove::Kind::zero, e, {}, f}, d2);
            }
        }
    }
    if (opt.plus) {
        for (const auto& e : uniq) {
            if (opt.max_reticulations >= 0 && n.reticulation_count() + 1 > opt.max_reticulations)
                break;
            GraphDraft d = n.to_draft();
            int v2 = subdivide(d, e);
            auto reach = reach_mask(d, v2);
            for (const auto& g : unique_edges(d)) {
                if (edge_descends_from(reach, g)) continue;
                GraphDraft d2 = d;
                int u2 = subdivide(d2, g);
                d2.add_edge(u2, v2);
                fn(SnprMove{SnprMove::Kind::plus, {}, e, g}, d2);
            }
        }
    }
    if (opt.minus) {
        for (const auto& e : uniq) {
            if (n.kind(e.tail) != VertexKind::inner_tree ||
                n.kind(e.head) != VertexKind::reticulation)
                continue;
            GraphDraft d = n.to_draft();
            d.remove_edge(e.tail, e.head);
            d.suppress(e.tail);
            d.suppress(e.head);
            fn(SnprMove{SnprMove::Kind::minus, e, {}, {}}, d);
        }
    }
}

}  // namespace

std::vector<Neighbor> neighbors(const Network& n, const NeighborOptions& opt) {
    std::map<std::string, Neighbor> seen;
    for_each_move(n, opt, [&](const SnprMove& m, const GraphDraft& d) {
        Network res = Network::from_draft(d);
        if (res.canonical_form() == n.canonical_form()) return;  // identity regraft
        std::string key = res.canonical_form();
        seen.try_emplace(std::move(key), Neighbor{std::move(res), m});
    });
    std::vector<Neighbor> out;
    out.reserve(seen.size());
    for (auto& [canon, nb] : seen) out.push_back(std::move(nb));
    return out;
}

std::vector<SnprMove> move_witnesses(const Network& n, const Network& m,
                                     const NeighborOptions& opt) {
    std::vector<SnprMove> out;
    for_each_move(n, opt, [&](const SnprMove& mv, const GraphDraft& d) {
        Network res = Network::from_draft(d);
        if (res.canonical_form() == m.canonical_form()) out.push_back(mv);
    });
    return out;
}

std::string pruned_pendant_id(const Network& n, const SnprMove& move) {
    if (move.kind == SnprMove::Kind::plus) return {};
    return canonical_subdag(n, move.pruned.head);
}

SnprSequence replay(const Network& start, const std::vector<SnprMove>& moves) {
    SnprSequence seq;
    seq.start = parse_enewick(start.canonical_form());
    seq.networks.push_back(seq.start);
    for (const auto& m : moves) {
        Network next = apply(seq.networks.back(), m);
        seq.networks.push_back(parse_enewick(next.canonical_form()));
        seq.moves.push_back(m);
    }
    return seq;
}

}  // namespace snprkit
