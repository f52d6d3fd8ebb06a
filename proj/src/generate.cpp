#include "snprkit/generate.hpp"

#include <algorithm>
#include <map>

#include "snprkit/enewick.hpp"
#include "snprkit/snpr.hpp"

namespace snprkit {

namespace {

// grows every tree shape by attaching the next leaf onto each edge
void grow(GraphDraft& d, int next_label, int n, std::map<std::string, Network>& out) {
    if (next_label > n) {
        Network net = Network::from_draft(d);
        std::string key = net.canonical_form();
        out.try_emplace(std::move(key), std::move(net));
        return;
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < d.size(); ++v)
        if (d.at(v).alive)
            for (int c : d.at(v).out) edges.push_back({v, c});
    for (auto [u, w] : edges) {
        GraphDraft d2 = d;
        d2.remove_edge(u, w);
        int mid = d2.add_vertex();
        int leaf = d2.add_vertex(next_label);
        d2.add_edge(u, mid);
        d2.add_edge(mid, w);
        d2.add_edge(mid, leaf);
        grow(d2, next_label + 1, n, out);
    }
}

}  // namespace

std::vector<Network> all_trees(int n) {
    GraphDraft d;
    int rho = d.add_vertex();
    int leaf1 = d.add_vertex(1);
    d.add_edge(rho, leaf1);
    std::map<std::string, Network> out;
    grow(d, 2, n, out);
    std::vector<Network> res;
    res.reserve(out.size());
    for (auto& [k, v] : out) res.push_back(std::move(v));
    return res;
}

std::vector<Network> tier(int n, int r) {
    if (r == 0) return all_trees(n);
    std::vector<Network> below = tier(n, r - 1);
    NeighborOptions opt;
    opt.zero = opt.minus = false;
    opt.max_reticulations = r;
    std::map<std::string, Network> out;
    for (const auto& net : below) {
        for (auto& nb : neighbors(net, opt)) {
            std::string key = nb.net.canonical_form();
            out.try_emplace(std::move(key), std::move(nb.net));
        }
    }
    std::vector<Network> res;
    res.reserve(out.size());
    for (auto& [k, v] : out) res.push_back(std::move(v));
    return res;
}

Network random_tree(std::mt19937_64& rng, int n) {
    GraphDraft d;
    int rho = d.add_vertex();
    int leaf1 = d.add_vertex(1);
    d.add_edge(rho, leaf1);
    for (int lab = 2; lab <= n; ++lab) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < d.size(); ++v)
            if (d.at(v).alive)
                for (int c : d.at(v).out) edges.push_back({v, c});
        auto [u, w] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
        d.remove_edge(u, w);
        int mid = d.add_vertex();
        int leaf = d.add_vertex(lab);
        d.add_edge(u, mid);
        d.add_edge(mid, w);
        d.add_edge(mid, leaf);
    }
    return Network::from_draft(d);
}

Network random_network(std::mt19937_64& rng, int n, int r) {
    Network net = random_tree(rng, n);
    for (int i = 0; i < r; ++i) {
        const auto& es = net.edges();
        for (int attempt = 0;; ++attempt) {
            EdgeRef e = es[std::uniform_int_distribution<std::size_t>(0, es.size() - 1)(rng)];
            // edges of the intermediate after subdividing e: recompute candidates lazily
            GraphDraft d = net.to_draft();
            d.remove_edge(e.tail, e.head);
            int v2 = d.add_vertex();
            d.add_edge(e.tail, v2);
            d.add_edge(v2, e.head);
            std::vector<char> seen(d.size(), 0);
            std::vector<int> stack{v2};
            seen[v2] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int c : d.at(x).out)
                    if (!seen[c]) {
                        seen[c] = 1;
                        stack.push_back(c);
                    }
            }
            std::vector<std::pair<int, int>> targets;
            for (int v = 0; v < d.size(); ++v)
                if (d.at(v).alive && !seen[v])
                    for (int c : d.at(v).out) targets.push_back({v, c});
            if (targets.empty()) {
                if (attempt > 32) throw std::logic_error("random_network: no regraft target");
                continue;
            }
            auto [gt, gh] =
                targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
            int u2 = d.add_vertex();
            d.remove_edge(gt, gh);
            d.add_edge(gt, u2);
            d.add_edge(u2, gh);
            d.add_edge(u2, v2);
            net = Network::from_draft(d);
            break;
        }
    }
    return net;
}

}  // namespace snprkit
