#include "snprkit/embedding.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace snprkit {

int ForestComponent::edge_count() const {
    int e = 0;
    for (const auto& nd : nodes) e += nd.child_count();
    return e;
}

std::vector<int> ForestComponent::label_set() const {
    std::vector<int> out;
    for (const auto& nd : nodes)
        if (nd.label >= 0) out.push_back(nd.label);
    std::sort(out.begin(), out.end());
    return out;
}

std::string ForestComponent::render() const {
    std::function<std::string(int)> go = [&](int i) -> std::string {
        const auto& nd = nodes[i];
        if (nd.child_count() == 0) return nd.label == 0 ? "rho" : std::to_string(nd.label);
        if (nd.child_count() == 1) return go(nd.child[0]);
        std::string a = go(nd.child[0]), b = go(nd.child[1]);
        if (b < a) std::swap(a, b);
        return "(" + a + "," + b + ")";
    };
    if (nodes.size() == 1) return root_is_rho ? "rho" : go(0);
    std::string body = go(nodes[0].child[0]);
    return root_is_rho ? "rho:" + body : body;
}

ForestComponent restriction_of(const Network& tree, const std::vector<int>& labels) {
    ForestComponent comp;
    bool rho = std::find(labels.begin(), labels.end(), 0) != labels.end();
    comp.root_is_rho = rho;
    comp.nodes.push_back({});
    comp.nodes[0].label = rho ? 0 : -1;

    std::vector<int> leaf_labels;
    for (int l : labels)
        if (l > 0) leaf_labels.push_back(l);

    // reduce(v): component subtree spanning the block's leaves below v, or -1
    std::function<int(int)> reduce = [&](int v) -> int {
        if (tree.kind(v) == VertexKind::leaf) {
            if (std::find(leaf_labels.begin(), leaf_labels.end(), tree.label(v)) ==
                leaf_labels.end())
                return -1;
            comp.nodes.push_back({});
            int id = static_cast<int>(comp.nodes.size()) - 1;
            comp.nodes[id].label = tree.label(v);
            return id;
        }
        std::vector<int> got;
        for (int c : tree.children(v)) {
            int r = reduce(c);
            if (r >= 0) got.push_back(r);
        }
        if (got.empty()) return -1;
        if (got.size() == 1) return got[0];
        comp.nodes.push_back({});
        int id = static_cast<int>(comp.nodes.size()) - 1;
        comp.nodes[id].child = {got[0], got[1]};
        comp.nodes[got[0]].parent = id;
        comp.nodes[got[1]].parent = id;
        return id;
    };

    if (!leaf_labels.empty()) {
        int crown = reduce(tree.crown());
        if (crown < 0) throw std::invalid_argument("restriction_of: labels missing from tree");
        comp.nodes[0].child[0] = crown;
        comp.nodes[crown].parent = 0;
    }
    return comp;
}

namespace {

struct Embedder {
    const std::vector<ForestComponent>& comps;
    const Network& host;
    int slack;

    // host adjacency: out-edge list as (edge id, head)
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::vector<char>> reach;  // reach[v][w]: w reachable from v
    std::uint64_t used = 0;                // edge bitmask
    std::uint64_t all_edges = 0;
    std::vector<std::vector<int>> images;      // per component: node -> host vertex
    std::vector<std::vector<std::vector<int>>> paths;  // per component, per edge: edge ids
    std::vector<std::vector<std::pair<int, int>>> comp_edges;  // per component: (node x, node y)

    ForestEmbedding result;

    explicit Embedder(const std::vector<ForestComponent>& c, const Network& h, int s)
        : comps(c), host(h), slack(s) {
        const auto& es = host.edges();
        if (es.size() > 63) throw std::invalid_argument("embed_forest: host too large");
        out.resize(host.vertex_count());
        for (int i = 0; i < static_cast<int>(es.size()); ++i) {
            out[es[i].tail].push_back({i, es[i].head});
            all_edges |= 1ull << i;
        }
        reach.assign(host.vertex_count(), std::vector<char>(host.vertex_count(), 0));
        for (int v = 0; v < host.vertex_count(); ++v)
            for (int w : host.descendants_including(v)) reach[v][w] = 1;

        images.resize(comps.size());
        paths.resize(comps.size());
        comp_edges.resize(comps.size());
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            images[ci].assign(comps[ci].nodes.size(), -1);
            // DFS preorder edges so the tail image is known when we reach an edge
            std::function<void(int)> walk = [&](int x) {
                for (int c : comps[ci].nodes[x].child)
                    if (c >= 0) {
                        comp_edges[ci].push_back({x, c});
                        walk(c);
                    }
            };
            walk(0);
            paths[ci].resize(comp_edges[ci].size());
        }
    }

    int free_out(int v) const {
        int c = 0;
        for (auto [ei, w] : out[v])
            if (!(used >> ei & 1)) ++c;
        return c;
    }

    bool leftover_ok() const {
        std::uint64_t left = all_edges & ~used;
        int cnt = __builtin_popcountll(left);
        if (slack == 0) return cnt == 0;
        if (cnt < slack) return false;
        // minimum number of directed paths partitioning `left`
        int excess = 0;
        std::vector<int> bal(host.vertex_count(), 0);
        const auto& es = host.edges();
        for (int i = 0; i < static_cast<int>(es.size()); ++i)
            if (left >> i & 1) {
                ++bal[es[i].tail];
                --bal[es[i].head];
            }
        for (int v = 0; v < host.vertex_count(); ++v)
            if (bal[v] > 0) excess += bal[v];
        return excess <= slack;
    }

    // decomposes leftover into exactly `slack` paths (assumes leftover_ok)
    std::vector<std::vector<EdgeRef>> decompose_slack() const {
        const auto& es = host.edges();
        std::uint64_t left = all_edges & ~used;
        std::vector<std::vector<int>> rem(host.vertex_count());
        std::vector<int> indeg(host.vertex_count(), 0);
        for (int i = 0; i < static_cast<int>(es.size()); ++i)
            if (left >> i & 1) {
                rem[es[i].tail].push_back(i);
                ++indeg[es[i].head];
            }
        auto outdeg = [&](int v) { return static_cast<int>(rem[v].size()); };
        std::vector<std::vector<int>> trails;
        for (;;) {
            int start = -1;
            for (int v = 0; v < host.vertex_count(); ++v)
                if (outdeg(v) > indeg[v]) {
                    start = v;
                    break;
                }
            if (start < 0) break;
            std::vector<int> trail;
            int cur = start;
            while (!rem[cur].empty()) {
                int ei = rem[cur].back();
                rem[cur].pop_back();
                --indeg[es[ei].head];
                trail.push_back(ei);
                cur = es[ei].head;
            }
            trails.push_back(std::move(trail));
        }
        // split until there are exactly `slack` paths
        while (static_cast<int>(trails.size()) < slack) {
            auto it = std::find_if(trails.begin(), trails.end(),
                                   [](const std::vector<int>& t) { return t.size() > 1; });
            std::vector<int> tail(it->begin() + 1, it->end());
            it->resize(1);
            trails.push_back(std::move(tail));
        }
        std::vector<std::vector<EdgeRef>> out_paths;
        for (auto& t : trails) {
            std::vector<EdgeRef> p;
            for (int ei : t) p.push_back(es[ei]);
            out_paths.push_back(std::move(p));
        }
        std::sort(out_paths.begin(), out_paths.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return out_paths;
    }

    bool accept_endpoint(std::size_t ci, int y, int w) const {
        const auto& nd = comps[ci].nodes[y];
        if (nd.label > 0)
            return host.kind(w) == VertexKind::leaf && host.label(w) == nd.label;
        if (host.kind(w) == VertexKind::leaf) return false;
        return free_out(w) >= nd.child_count();
    }

    // any still-needed labelled leaf of node y's subtree must stay reachable
    bool leaf_reachable(std::size_t ci, int y, int from) const {
        const auto& comp = comps[ci];
        std::vector<int> stack{y};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (comp.nodes[x].label > 0) {
                int lv = host.leaf_with_label(comp.nodes[x].label);
                if (lv < 0 || !reach[from][lv]) return false;
            }
            for (int c : comp.nodes[x].child)
                if (c >= 0) stack.push_back(c);
        }
        return true;
    }

    bool extend(std::size_t ci, std::size_t ei, int cur, std::vector<char>& local_used) {
        const auto [x, y] = comp_edges[ci][ei];
        for (auto [eid, w] : out[cur]) {
            if (used >> eid & 1) continue;
            if (local_used[w]) continue;
            used |= 1ull << eid;
            paths[ci][ei].push_back(eid);
            if (accept_endpoint(ci, y, w)) {
                images[ci][y] = w;
                local_used[w] = 1;
                if (search_edge(ci, ei + 1, local_used)) return true;
                local_used[w] = 0;
                images[ci][y] = -1;
            }
            if (host.kind(w) != VertexKind::leaf && leaf_reachable(ci, y, w) &&
                extend(ci, ei, w, local_used))
                return true;
            paths[ci][ei].pop_back();
            used &= ~(1ull << eid);
        }
        return false;
    }

    bool search_edge(std::size_t ci, std::size_t ei, std::vector<char>& local_used) {
        if (ei == comp_edges[ci].size()) return search_component(ci + 1);
        int hx = images[ci][comp_edges[ci][ei].first];
        return extend(ci, ei, hx, local_used);
    }

    bool search_component(std::size_t ci) {
        if (ci == comps.size()) {
            if (!leftover_ok()) return false;
            result.ok = true;
            for (std::size_t i = 0; i < comps.size(); ++i) {
                ComponentEmbedding ce;
                ce.vertex_image = images[i];
                const auto& es = host.edges();
                for (const auto& path : paths[i]) {
                    std::vector<EdgeRef> p;
                    for (int eid : path) p.push_back(es[eid]);
                    ce.edge_paths.push_back(std::move(p));
                }
                result.components.push_back(std::move(ce));
            }
            result.slack_paths = decompose_slack();
            return true;
        }
        const auto& comp = comps[ci];
        std::vector<char> local_used(host.vertex_count(), 0);
        if (comp.root_is_rho) {
            images[ci][0] = host.root();
            local_used[host.root()] = 1;
            if (comp.nodes.size() == 1) {
                if (search_component(ci + 1)) return true;
            } else if (search_edge(ci, 0, local_used)) {
                return true;
            }
            images[ci][0] = -1;
            return false;
        }
        for (int cand = 0; cand < host.vertex_count(); ++cand) {
            if (host.kind(cand) == VertexKind::leaf) continue;
            if (free_out(cand) < 1) continue;
            if (!leaf_reachable(ci, 0, cand)) continue;
            images[ci][0] = cand;
            local_used.assign(host.vertex_count(), 0);
            local_used[cand] = 1;
            if (search_edge(ci, 0, local_used)) return true;
            images[ci][0] = -1;
        }
        return false;
    }
};

}  // namespace

ForestEmbedding embed_forest(const std::vector<ForestComponent>& components, const Network& host,
                             int slack_count) {
    Embedder e(components, host, slack_count);
    e.search_component(0);
    return std::move(e.result);
}

}  // namespace snprkit
