#include "snprkit/network.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "snprkit/enewick.hpp"

namespace snprkit {

const char* to_string(VertexKind k) {
    switch (k) {
        case VertexKind::root: return "root";
        case VertexKind::leaf: return "leaf";
        case VertexKind::inner_tree: return "inner-tree";
        case VertexKind::reticulation: return "reticulation";
    }
    return "?";
}

static std::string summarize(const std::vector<Violation>& v) {
    std::ostringstream os;
    os << "invalid network:";
    for (const auto& x : v) {
        os << " [" << x.rule;
        if (!x.detail.empty()) os << ": " << x.detail;
        os << "]";
    }
    return os.str();
}

invalid_network_error::invalid_network_error(std::vector<Violation> v)
    : std::runtime_error(summarize(v)), violations(std::move(v)) {}

// --- GraphDraft -------------------------------------------------------------

int GraphDraft::add_vertex(int label) {
    verts_.push_back(Vertex{});
    verts_.back().label = label;
    return static_cast<int>(verts_.size()) - 1;
}

void GraphDraft::add_edge(int tail, int head) {
    verts_[tail].out.push_back(head);
    verts_[head].in.push_back(tail);
}

void GraphDraft::remove_edge(int tail, int head) {
    auto& out = verts_[tail].out;
    auto it = std::find(out.begin(), out.end(), head);
    if (it == out.end()) throw std::invalid_argument("remove_edge: no such edge");
    out.erase(it);
    auto& in = verts_[head].in;
    auto jt = std::find(in.begin(), in.end(), tail);
    in.erase(jt);
}

std::pair<int, int> GraphDraft::suppress(int v) {
    if (verts_[v].in.size() != 1 || verts_[v].out.size() != 1)
        throw std::invalid_argument("suppress: vertex is not degree (1,1)");
    int p = verts_[v].in[0];
    int c = verts_[v].out[0];
    remove_edge(p, v);
    remove_edge(v, c);
    verts_[v].alive = false;
    add_edge(p, c);
    return {p, c};
}

void GraphDraft::kill(int v) {
    auto in = verts_[v].in;
    for (int p : in) remove_edge(p, v);
    auto out = verts_[v].out;
    for (int c : out) remove_edge(v, c);
    verts_[v].alive = false;
}

std::vector<int> GraphDraft::reachable_from(int from) const {
    std::vector<char> seen(verts_.size(), 0);
    std::vector<int> stack{from}, out;
    seen[from] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int c : verts_[v].out)
            if (!seen[c]) {
                seen[c] = 1;
                stack.push_back(c);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- validation --------------------------------------------------------------

std::vector<Violation> validate(const GraphDraft& d) {
    std::vector<Violation> out;
    std::vector<int> alive;
    for (int v = 0; v < d.size(); ++v)
        if (d.at(v).alive) alive.push_back(v);
    if (alive.empty()) {
        out.push_back({"nonempty", {}, {}, "graph has no vertices"});
        return out;
    }

    std::vector<int> roots;
    for (int v : alive) {
        const auto& vx = d.at(v);
        size_t in = vx.in.size(), deg_out = vx.out.size();
        bool ok = (in == 0 && deg_out == 1) || (in == 1 && deg_out == 0) ||
                  (in == 1 && deg_out == 2) || (in == 2 && deg_out == 1);
        if (!ok)
            out.push_back({"degree", {v}, {}, "in-degree " + std::to_string(in) +
                                                  ", out-degree " + std::to_string(deg_out)});
        if (in == 0) roots.push_back(v);
        if (deg_out == 0 && vx.label <= 0)
            out.push_back({"leaf-label", {v}, {}, "leaf without a positive label"});
        if (deg_out != 0 && vx.label > 0)
            out.push_back({"leaf-label", {v}, {}, "label on a non-leaf vertex"});
    }
    if (roots.size() != 1)
        out.push_back({"root", roots, {}, roots.empty() ? "no in-degree-0 vertex"
                                                        : "several in-degree-0 vertices"});

    // duplicate leaf labels
    std::map<int, std::vector<int>> by_label;
    for (int v : alive)
        if (d.at(v).out.empty() && d.at(v).label > 0) by_label[d.at(v).label].push_back(v);
    for (auto& [lab, vs] : by_label)
        if (vs.size() > 1)
            out.push_back({"duplicate-label", vs, {}, "label " + std::to_string(lab)});

    // acyclicity via iterative removal of in-degree-0 vertices
    {
        std::vector<int> indeg(d.size(), -1);
        std::vector<int> queue;
        for (int v : alive) {
            indeg[v] = static_cast<int>(d.at(v).in.size());
            if (indeg[v] == 0) queue.push_back(v);
        }
        size_t processed = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++processed;
            for (int c : d.at(v).out)
                if (--indeg[c] == 0) queue.push_back(c);
        }
        if (processed != alive.size()) {
            std::vector<int> cyc;
            for (int v : alive)
                if (indeg[v] > 0) cyc.push_back(v);
            out.push_back({"acyclic", cyc, {}, "directed cycle detected"});
            return out;  // reachability is meaningless with a cycle present
        }
    }

    if (roots.size() == 1) {
        auto reach = d.reachable_from(roots[0]);
        if (reach.size() != alive.size()) {
            std::vector<int> missing;
            for (int v : alive)
                if (!std::binary_search(reach.begin(), reach.end(), v)) missing.push_back(v);
            out.push_back({"reachable", missing, {}, "vertices unreachable from the root"});
        }
    }

    // >2 copies of an edge cannot pass the degree checks, but report the pair
    // explicitly when degrees already failed.
    for (int v : alive) {
        std::map<int, int> mult;
        for (int c : d.at(v).out) ++mult[c];
        for (auto& [c, m] : mult)
            if (m > 2) out.push_back({"parallel", {v, c}, {{v, c}}, "edge multiplicity > 2"});
    }
    return out;
}

// --- Network ----------------------------------------------------------------

Network Network::from_draft(const GraphDraft& d, std::vector<int>* old_to_new) {
    auto violations = validate(d);
    if (!violations.empty()) throw invalid_network_error(std::move(violations));

    std::vector<int> map(d.size(), -1);
    int next = 0;
    for (int v = 0; v < d.size(); ++v)
        if (d.at(v).alive) map[v] = next++;

    Network n;
    n.kinds_.resize(next);
    n.labels_.assign(next, 0);
    n.children_.resize(next);
    n.parents_.resize(next);
    for (int v = 0; v < d.size(); ++v) {
        if (map[v] < 0) continue;
        const auto& vx = d.at(v);
        int id = map[v];
        n.labels_[id] = vx.label;
        for (int c : vx.out) n.children_[id].push_back(map[c]);
        for (int p : vx.in) n.parents_[id].push_back(map[p]);
        std::sort(n.children_[id].begin(), n.children_[id].end());
        std::sort(n.parents_[id].begin(), n.parents_[id].end());
        if (vx.in.empty()) {
            n.kinds_[id] = VertexKind::root;
            n.root_ = id;
        } else if (vx.out.empty()) {
            n.kinds_[id] = VertexKind::leaf;
            ++n.n_leaves_;
        } else if (vx.in.size() == 2) {
            n.kinds_[id] = VertexKind::reticulation;
            ++n.n_retics_;
        } else {
            n.kinds_[id] = VertexKind::inner_tree;
        }
    }
    for (int v = 0; v < next; ++v) {
        int prev = -1, idx = 0;
        for (int c : n.children_[v]) {
            idx = (c == prev) ? idx + 1 : 0;
            n.edges_.push_back({v, c, idx});
            prev = c;
        }
    }
    std::sort(n.edges_.begin(), n.edges_.end());
    n.n_edges_ = static_cast<int>(n.edges_.size());
    n.canon_ = canonical_enewick(n);
    if (old_to_new) *old_to_new = std::move(map);
    return n;
}

std::vector<int> Network::labels() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (kinds_[v] == VertexKind::leaf) out.push_back(labels_[v]);
    std::sort(out.begin(), out.end());
    return out;
}

int Network::leaf_with_label(int label) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (kinds_[v] == VertexKind::leaf && labels_[v] == label) return v;
    return -1;
}

bool Network::has_edge(int tail, int head) const {
    const auto& ch = children_[tail];
    return std::find(ch.begin(), ch.end(), head) != ch.end();
}

int Network::edge_multiplicity(int tail, int head) const {
    const auto& ch = children_[tail];
    return static_cast<int>(std::count(ch.begin(), ch.end(), head));
}

std::vector<int> Network::descendants_including(int v) const {
    std::vector<char> seen(vertex_count(), 0);
    std::vector<int> stack{v}, out;
    seen[v] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (int c : children_[x])
            if (!seen[c]) {
                seen[c] = 1;
                stack.push_back(c);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

GraphDraft Network::to_draft() const {
    GraphDraft d;
    for (int v = 0; v < vertex_count(); ++v) d.add_vertex(labels_[v]);
    for (const auto& e : edges_) d.add_edge(e.tail, e.head);
    return d;
}

// --- class predicates ---------------------------------------------------------

bool is_tree_child(const Network& n) {
    for (int v = 0; v < n.vertex_count(); ++v) {
        if (n.kind(v) == VertexKind::leaf) continue;
        bool has_tree_child = false;
        for (int c : n.children(v))
            if (n.kind(c) != VertexKind::reticulation) has_tree_child = true;
        if (!has_tree_child) return false;
    }
    return true;
}

bool is_reticulation_visible(const Network& n) {
    for (int v = 0; v < n.vertex_count(); ++v) {
        if (n.kind(v) != VertexKind::reticulation) continue;
        // v is visible iff deleting it makes some leaf unreachable.
        std::vector<char> seen(n.vertex_count(), 0);
        seen[v] = 1;  // blocked
        std::vector<int> stack{n.root()};
        seen[n.root()] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int c : n.children(x))
                if (!seen[c]) {
                    seen[c] = 1;
                    stack.push_back(c);
                }
        }
        bool visible = false;
        for (int l = 0; l < n.vertex_count(); ++l)
            if (n.kind(l) == VertexKind::leaf && !seen[l]) visible = true;
        if (!visible) return false;
    }
    return true;
}

bool is_tree_based(const Network& n) {
    // Brute force over switchings: keep one in-edge per reticulation and check
    // that no internal vertex loses all of its out-edges.
    std::vector<int> retics;
    for (int v = 0; v < n.vertex_count(); ++v)
        if (n.kind(v) == VertexKind::reticulation) retics.push_back(v);
    int r = static_cast<int>(retics.size());
    for (std::uint64_t mask = 0; mask < (1ull << r); ++mask) {
        // kept in-edge of retics[i] is parents(retics[i])[bit i]
        std::vector<int> lost_out(n.vertex_count(), 0);
        for (int i = 0; i < r; ++i) {
            const auto& ps = n.parents(retics[i]);
            int dropped = ps[(mask >> i) & 1 ? 1 : 0];
            ++lost_out[dropped];
        }
        bool dead = false;
        for (int v = 0; v < n.vertex_count() && !dead; ++v) {
            if (n.kind(v) == VertexKind::leaf) continue;
            if (static_cast<int>(n.children(v).size()) - lost_out[v] <= 0) dead = true;
        }
        if (!dead) return true;
    }
    return false;
}

bool has_parallel_edges(const Network& n) {
    for (const auto& e : n.edges())
        if (e.index > 0) return true;
    return false;
}

// --- isomorphism ---------------------------------------------------------------

namespace {

// Joint colour refinement over both networks so colour ids are comparable;
// seeded by (kind, label).
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Network& a, const Network& b) {
    auto seed = [](const Network& n, std::map<long long, int>& dict, std::vector<int>& color) {
        for (int v = 0; v < n.vertex_count(); ++v) {
            long long key =
                (static_cast<long long>(n.kind(v)) << 32) | static_cast<unsigned>(n.label(v));
            auto [it, _] = dict.try_emplace(key, static_cast<int>(dict.size()));
            color[v] = it->second;
        }
    };
    std::vector<int> ca(a.vertex_count()), cb(b.vertex_count());
    {
        std::map<long long, int> dict;
        seed(a, dict, ca);
        seed(b, dict, cb);
    }
    int rounds = a.vertex_count() + b.vertex_count();
    for (int round = 0; round < rounds; ++round) {
        std::map<std::vector<int>, int> dict;
        auto signature = [&](const Network& n, const std::vector<int>& color, int v) {
            std::vector<int> sig{color[v]};
            std::vector<int> cc, pc;
            for (int c : n.children(v)) cc.push_back(color[c]);
            for (int p : n.parents(v)) pc.push_back(color[p]);
            std::sort(cc.begin(), cc.end());
            std::sort(pc.begin(), pc.end());
            sig.push_back(-1);
            sig.insert(sig.end(), cc.begin(), cc.end());
            sig.push_back(-2);
            sig.insert(sig.end(), pc.begin(), pc.end());
            return sig;
        };
        std::vector<int> na(a.vertex_count()), nb(b.vertex_count());
        for (int v = 0; v < a.vertex_count(); ++v) {
            auto [it, _] = dict.try_emplace(signature(a, ca, v), static_cast<int>(dict.size()));
            na[v] = it->second;
        }
        for (int v = 0; v < b.vertex_count(); ++v) {
            auto [it, _] = dict.try_emplace(signature(b, cb, v), static_cast<int>(dict.size()));
            nb[v] = it->second;
        }
        bool changed = na != ca || nb != cb;
        ca = std::move(na);
        cb = std::move(nb);
        if (!changed) break;
    }
    return {std::move(ca), std::move(cb)};
}

struct IsoSearch {
    const Network& a;
    const Network& b;
    std::vector<int> ca, cb;
    std::vector<int> map_ab;  // a-vertex -> b-vertex or -1
    std::vector<char> used_b;

    bool edges_consistent(int va, int vb) {
        // check already-mapped neighbours, with multiplicity
        for (int c : a.children(va)) {
            if (map_ab[c] < 0) continue;
            if (a.edge_multiplicity(va, c) != b.edge_multiplicity(vb, map_ab[c])) return false;
        }
        for (int p : a.parents(va)) {
            if (map_ab[p] < 0) continue;
            if (a.edge_multiplicity(p, va) != b.edge_multiplicity(map_ab[p], vb)) return false;
        }
        return true;
    }

    bool go(int va) {
        while (va < a.vertex_count() && map_ab[va] >= 0) ++va;
        if (va == a.vertex_count()) return true;
        for (int vb = 0; vb < b.vertex_count(); ++vb) {
            if (used_b[vb] || cb[vb] != ca[va]) continue;
            if (!edges_consistent(va, vb)) continue;
            map_ab[va] = vb;
            used_b[vb] = 1;
            if (go(va + 1)) return true;
            map_ab[va] = -1;
            used_b[vb] = 0;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const Network& a, const Network& b) {
    if (a.labels() != b.labels()) throw std::invalid_argument("is_isomorphic: label sets differ");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        a.reticulation_count() != b.reticulation_count())
        return false;
    auto [ca, cb] = refine_colors(a, b);
    {
        auto ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return false;
    }
    IsoSearch s{a, b, std::move(ca), std::move(cb),
                std::vector<int>(a.vertex_count(), -1),
                std::vector<char>(b.vertex_count(), 0)};
    // anchor the roots and the labelled leaves
    s.map_ab[a.root()] = b.root();
    s.used_b[b.root()] = 1;
    for (int v = 0; v < a.vertex_count(); ++v) {
        if (a.kind(v) != VertexKind::leaf) continue;
        int w = b.leaf_with_label(a.label(v));
        if (w < 0) return false;
        s.map_ab[v] = w;
        s.used_b[w] = 1;
    }
    if (s.cb[b.root()] != s.ca[a.root()]) return false;
    for (int v = 0; v < a.vertex_count(); ++v)
        if (s.map_ab[v] >= 0 && (s.cb[s.map_ab[v]] != s.ca[v] || !s.edges_consistent(v, s.map_ab[v])))
            return false;
    return s.go(0);
}

}  // namespace snprkit
