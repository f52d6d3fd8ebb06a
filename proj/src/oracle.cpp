#include "snprkit/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <thread>

#include "snprkit/displayed.hpp"
#include "snprkit/enewick.hpp"
#include "snprkit/rspr.hpp"

namespace snprkit {

const char* to_string(ClassRestriction c) {
    switch (c) {
        case ClassRestriction::none: return "none";
        case ClassRestriction::tree_child: return "tree-child";
        case ClassRestriction::reticulation_visible: return "reticulation-visible";
        case ClassRestriction::tree_based: return "tree-based";
        case ClassRestriction::tree_based_simple: return "tree-based-simple";
        case ClassRestriction::fixed_tier: return "fixed-tier";
        case ClassRestriction::min_tier: return "min-tier";
    }
    return "?";
}

ClassRestriction class_restriction_from_string(const std::string& s) {
    if (s == "none") return ClassRestriction::none;
    if (s == "tree-child") return ClassRestriction::tree_child;
    if (s == "reticulation-visible") return ClassRestriction::reticulation_visible;
    if (s == "tree-based") return ClassRestriction::tree_based;
    if (s == "tree-based-simple") return ClassRestriction::tree_based_simple;
    if (s == "fixed-tier") return ClassRestriction::fixed_tier;
    if (s == "min-tier") return ClassRestriction::min_tier;
    throw std::invalid_argument("unknown class restriction: " + s);
}

bool in_restriction(const Network& n, ClassRestriction c, int tier) {
    switch (c) {
        case ClassRestriction::none: return true;
        case ClassRestriction::tree_child: return is_tree_child(n);
        case ClassRestriction::reticulation_visible: return is_reticulation_visible(n);
        case ClassRestriction::tree_based: return is_tree_based(n);
        case ClassRestriction::tree_based_simple:
            return !has_parallel_edges(n) && is_tree_based(n);
        case ClassRestriction::fixed_tier: return n.reticulation_count() == tier;
        case ClassRestriction::min_tier: return n.reticulation_count() >= tier;
    }
    return false;
}

// --- NeighborCache ---------------------------------------------------------------

const std::vector<std::string>& NeighborCache::neighbors_of(const std::string& canon) {
    auto it = nbrs_.find(canon);
    if (it != nbrs_.end()) return it->second;
    Network n = parse_enewick(canon);
    std::vector<std::string> out;
    for (const auto& nb : neighbors(n)) out.push_back(nb.net.canonical_form());
    return nbrs_.emplace(canon, std::move(out)).first->second;
}

void NeighborCache::ensure(const std::vector<std::string>& canons, int threads) {
    std::vector<std::string> missing;
    for (const auto& c : canons)
        if (!nbrs_.count(c)) missing.push_back(c);
    if (missing.empty()) return;
    if (threads <= 1 || missing.size() < 16) {
        for (const auto& c : missing) neighbors_of(c);
        return;
    }
    std::vector<std::vector<std::string>> results(missing.size());
    std::vector<std::thread> pool;
    std::size_t chunk = (missing.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(missing.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) {
                Network n = parse_enewick(missing[i]);
                for (const auto& nb : neighbors(n)) results[i].push_back(nb.net.canonical_form());
            }
        });
    }
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < missing.size(); ++i)
        nbrs_.emplace(missing[i], std::move(results[i]));
}

int NeighborCache::tier_of(const std::string& canon) {
    auto it = tier_.find(canon);
    if (it != tier_.end()) return it->second;
    int r = parse_enewick(canon).reticulation_count();
    tier_.emplace(canon, r);
    return r;
}

const std::array<bool, 4>& NeighborCache::flags_of(const std::string& canon) {
    auto it = flags_.find(canon);
    if (it != flags_.end()) return it->second;
    Network n = parse_enewick(canon);
    std::array<bool, 4> f{is_tree_child(n), is_reticulation_visible(n), is_tree_based(n),
                          !has_parallel_edges(n)};
    return flags_.emplace(canon, f).first->second;
}

// --- bfs -------------------------------------------------------------------------

namespace {

int env_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* s = std::getenv("SNPRKIT_THREADS")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 1;
}

struct Filter {
    int cap;
    ClassRestriction cls;
    int tier;
    NeighborCache* cache;

    bool pass(const std::string& canon) const {
        int r = cache->tier_of(canon);
        if (cap >= 0 && r > cap) return false;
        switch (cls) {
            case ClassRestriction::none: return true;
            case ClassRestriction::fixed_tier: return r == tier;
            case ClassRestriction::min_tier: return r >= tier;
            case ClassRestriction::tree_child: return cache->flags_of(canon)[0];
            case ClassRestriction::reticulation_visible: return cache->flags_of(canon)[1];
            case ClassRestriction::tree_based: return cache->flags_of(canon)[2];
            case ClassRestriction::tree_based_simple: {
                const auto& f = cache->flags_of(canon);
                return f[2] && f[3];
            }
        }
        return false;
    }
};

struct Side {
    std::map<std::string, int> depth;
    std::vector<std::string> frontier;
    int radius = 0;
};

// expands one full layer; returns new frontier
void expand(Side& side, const Filter& flt, NeighborCache& cache, int threads) {
    cache.ensure(side.frontier, threads);
    std::vector<std::string> next;
    for (const auto& cur : side.frontier) {
        for (const auto& nb : cache.neighbors_of(cur)) {
            if (side.depth.count(nb)) continue;
            if (!flt.pass(nb)) continue;
            side.depth.emplace(nb, side.radius + 1);
            next.push_back(nb);
        }
    }
    ++side.radius;
    side.frontier = std::move(next);
}

}  // namespace

int upper_bound_via_displayed(const Network& n, const Network& m) {
    int best = -1;
    auto dn = displayed_trees(n), dm = displayed_trees(m);
    for (const auto& a : dn)
        for (const auto& b : dm) {
            int v = rspr_distance(a, b);
            if (best < 0 || v < best) best = v;
        }
    return best + n.reticulation_count() + m.reticulation_count();
}

SearchReport bfs_distance(const Network& n, const Network& m, const SearchConfig& cfg,
                          NeighborCache* cache) {
    if (n.labels() != m.labels()) throw std::invalid_argument("bfs_distance: label sets differ");
    if (!in_restriction(n, cfg.restriction, cfg.restriction_tier) ||
        !in_restriction(m, cfg.restriction, cfg.restriction_tier))
        throw std::invalid_argument("bfs_distance: an endpoint violates the class restriction");

    NeighborCache local;
    NeighborCache& nc = cache ? *cache : local;
    const int threads = env_threads(cfg.threads);

    SearchReport rep;
    int cap = cfg.max_reticulations;
    int depth_limit = cfg.max_depth;
    if (cap < 0 || (depth_limit < 0 && cfg.restriction == ClassRestriction::none)) {
        int ub = upper_bound_via_displayed(n, m);
        if (cap < 0) cap = std::max(n.reticulation_count(), m.reticulation_count()) + ub;
        if (depth_limit < 0 && cfg.restriction == ClassRestriction::none) depth_limit = ub;
    }
    if (cap < std::max(n.reticulation_count(), m.reticulation_count()))
        throw std::invalid_argument("bfs_distance: max_reticulations below endpoint tier");
    rep.cap_used = cap;
    rep.depth_limit = depth_limit;

    Filter flt{cap, cfg.restriction, cfg.restriction_tier, &nc};

    const std::string start = n.canonical_form(), goal = m.canonical_form();
    nc.tier_of(start);
    nc.tier_of(goal);

    int best = -1;
    if (start == goal) best = 0;

    Side fwd, bwd;
    fwd.depth.emplace(start, 0);
    fwd.frontier.push_back(start);
    bwd.depth.emplace(goal, 0);
    bwd.frontier.push_back(goal);

    while (best < 0 || best > fwd.radius + bwd.radius) {
        if (fwd.frontier.empty() && bwd.frontier.empty()) break;
        if (depth_limit >= 0 && fwd.radius + bwd.radius >= depth_limit && best < 0) break;
        Side& side = (bwd.frontier.empty() ||
                      (!fwd.frontier.empty() && fwd.frontier.size() <= bwd.frontier.size()))
                         ? fwd
                         : bwd;
        const Side& other = (&side == &fwd) ? bwd : fwd;
        expand(side, flt, nc, threads);
        for (const auto& key : side.frontier) {
            auto it = other.depth.find(key);
            if (it == other.depth.end()) continue;
            int cand = side.depth.at(key) + it->second;
            if (best < 0 || cand < best) best = cand;
        }
    }

    if (best < 0) {
        rep.exact = false;
        if (fwd.frontier.empty() && bwd.frontier.empty()) {
            rep.space_exhausted = true;
            rep.lower_bound = fwd.radius + bwd.radius + 1;
            rep.note = "no sequence exists under the configured class/cap";
        } else {
            rep.lower_bound = std::min(depth_limit < 0 ? fwd.radius + bwd.radius + 1
                                                       : depth_limit + 1,
                                       fwd.radius + bwd.radius + 1);
            rep.note = "search stopped before meeting; distance at least " +
                       std::to_string(rep.lower_bound);
        }
        return rep;
    }
    if (depth_limit >= 0 && best > depth_limit) {
        rep.exact = false;
        rep.lower_bound = depth_limit + 1;
        rep.note = "meeting point beyond depth limit";
        return rep;
    }

    rep.exact = true;
    rep.distance = best;
    rep.lower_bound = best;

    // --- geodesic DAG via clean exact-depth balls ---------------------------------
    const int d = best;
    const int rf = (d + 1) / 2, rb = d - rf;
    auto ball = [&](const std::string& s, int radius) {
        Side sd;
        sd.depth.emplace(s, 0);
        sd.frontier.push_back(s);
        while (sd.radius < radius) expand(sd, flt, nc, threads);
        return sd.depth;
    };
    auto df = ball(start, rf), db = ball(goal, rb);

    std::vector<std::set<std::string>> layers(d + 1);
    for (const auto& [key, dep] : df)
        if (dep == rf) {
            auto it = db.find(key);
            if (it != db.end() && it->second == rb) layers[rf].insert(key);
        }
    for (int i = rf - 1; i >= 0; --i) {
        for (const auto& [key, dep] : df) {
            if (dep != i) continue;
            for (const auto& nb : nc.neighbors_of(key))
                if (layers[i + 1].count(nb)) {
                    layers[i].insert(key);
                    break;
                }
        }
    }
    for (int j = rb - 1; j >= 0; --j) {
        for (const auto& [key, dep] : db) {
            if (dep != j) continue;
            for (const auto& nb : nc.neighbors_of(key))
                if (layers[d - j - 1].count(nb)) {
                    layers[d - j].insert(key);
                    break;
                }
        }
    }
    rep.layers.assign(d + 1, {});
    for (int i = 0; i <= d; ++i) rep.layers[i].assign(layers[i].begin(), layers[i].end());

    // count geodesics (saturating) and enumerate up to the limit
    if (d == 0) {
        rep.geodesic_count = 1;
        rep.geodesics_complete = cfg.geodesic_limit > 0;
        if (cfg.geodesic_limit > 0) {
            Geodesic g;
            g.networks = {start};
            rep.geodesics.push_back(std::move(g));
        }
    } else {
        std::map<std::string, std::uint64_t> cnt;
        for (const auto& s : rep.layers[d]) cnt[s] = 1;
        for (int i = d - 1; i >= 0; --i)
            for (const auto& s : rep.layers[i]) {
                std::uint64_t total = 0;
                for (const auto& nb : nc.neighbors_of(s))
                    if (layers[i + 1].count(nb)) total += cnt[nb];
                cnt[s] = total;
            }
        rep.geodesic_count = cnt[start];
        rep.geodesics_complete = rep.geodesic_count <= cfg.geodesic_limit;
        if (cfg.geodesic_limit == 0) return rep;

        std::vector<std::string> path{start};
        std::function<bool(int)> walk = [&](int i) -> bool {
            if (rep.geodesics.size() >= cfg.geodesic_limit) return false;
            if (i == d) {
                Geodesic g;
                g.networks = path;
                rep.geodesics.push_back(std::move(g));
                return true;
            }
            for (const auto& nb : nc.neighbors_of(path.back())) {
                if (!layers[i + 1].count(nb)) continue;
                path.push_back(nb);
                walk(i + 1);
                path.pop_back();
                if (rep.geodesics.size() >= cfg.geodesic_limit) return false;
            }
            return true;
        };
        walk(0);
    }

    // facts and optional move witnesses
    for (auto& g : rep.geodesics) {
        auto& f = g.facts;
        std::vector<Network> nets;
        for (const auto& s : g.networks) nets.push_back(parse_enewick(s));
        for (const auto& net : nets) f.tier_profile.push_back(net.reticulation_count());
        f.min_reticulations = *std::min_element(f.tier_profile.begin(), f.tier_profile.end());
        f.max_reticulations = *std::max_element(f.tier_profile.begin(), f.tier_profile.end());
        f.contains_tree = f.min_reticulations == 0;
        std::set<int> horiz;
        for (std::size_t i = 1; i < f.tier_profile.size(); ++i)
            if (f.tier_profile[i] == f.tier_profile[i - 1]) horiz.insert(f.tier_profile[i]);
        f.horizontal_tiers.assign(horiz.begin(), horiz.end());
        for (const auto& net : nets)
            f.class_membership.push_back(
                {is_tree_child(net), is_reticulation_visible(net), is_tree_based(net)});
        if (cfg.collect_moves) {
            for (std::size_t i = 1; i < nets.size(); ++i) {
                auto ws = move_witnesses(nets[i - 1], nets[i]);
                if (ws.empty()) throw std::logic_error("bfs_distance: missing move witness");
                g.moves.push_back(ws.front());
            }
        }
    }
    return rep;
}

// --- verifiers ---------------------------------------------------------------------

namespace {

SearchReport full_report(const Network& n, const Network& m, SearchConfig cfg,
                         NeighborCache* cache) {
    SearchReport rep = bfs_distance(n, m, cfg, cache);
    if (!rep.exact) throw std::runtime_error("oracle: distance not determined: " + rep.note);
    if (!rep.geodesics_complete)
        throw std::runtime_error("oracle: geodesic enumeration exceeded the limit");
    return rep;
}

}  // namespace

bool verify_tier_lemma(const Network& n, const Network& m, const SearchConfig& cfg,
                       NeighborCache* cache) {
    SearchReport rep = full_report(n, m, cfg, cache);
    if (rep.distance == 0) return false;
    for (const auto& g : rep.geodesics)
        if (g.facts.horizontal_tiers.size() < 2) return false;
    return true;
}

namespace {

// Is there a geodesic (a path through the layer DAG) visiting only vertices
// that satisfy `pred`?
bool exists_geodesic_through(const SearchReport& rep, NeighborCache& nc,
                             const std::function<bool(const std::string&)>& pred) {
    if (rep.layers.empty()) return false;
    std::set<std::string> cur;
    for (const auto& s : rep.layers[0])
        if (pred(s)) cur.insert(s);
    for (std::size_t i = 1; i < rep.layers.size(); ++i) {
        std::set<std::string> layer(rep.layers[i].begin(), rep.layers[i].end());
        std::set<std::string> next;
        for (const auto& s : cur)
            for (const auto& nb : nc.neighbors_of(s))
                if (layer.count(nb) && pred(nb)) next.insert(nb);
        cur = std::move(next);
        if (cur.empty()) return false;
    }
    return !cur.empty();
}

}  // namespace

bool verify_tree_passage(const Network& n, const Network& m, const SearchConfig& cfg,
                         NeighborCache* cache) {
    if (n.reticulation_count() != m.reticulation_count()) return false;
    const int r = n.reticulation_count();
    NeighborCache local;
    NeighborCache& nc = cache ? *cache : local;
    SearchConfig c = cfg;
    c.geodesic_limit = 0;
    SearchReport rep = bfs_distance(n, m, c, &nc);
    if (!rep.exact || rep.distance != 2 * r) return false;
    // every geodesic visits tier 0 iff none stays strictly above it
    return !exists_geodesic_through(rep, nc,
                                    [&](const std::string& s) { return nc.tier_of(s) > 0; });
}

bool verify_upward_passage(const Network& n, const Network& m, const SearchConfig& cfg,
                           NeighborCache* cache) {
    if (n.reticulation_count() != m.reticulation_count()) return false;
    NeighborCache local;
    NeighborCache& nc = cache ? *cache : local;
    SearchConfig c = cfg;
    c.geodesic_limit = 0;
    SearchReport rep = bfs_distance(n, m, c, &nc);
    if (!rep.exact || rep.distance != 2) return false;
    const int want = n.reticulation_count() + 1;
    for (const auto& s : rep.layers[1])
        if (nc.tier_of(s) != want) return false;
    return true;
}

ClassGapResult verify_class_gap(const Network& n, const Network& m, ClassRestriction cls,
                                const SearchConfig& cfg, NeighborCache* cache) {
    if (!in_restriction(n, cls, 0) || !in_restriction(m, cls, 0))
        throw std::invalid_argument("verify_class_gap: endpoints not in the class");
    ClassGapResult res;
    {
        SearchConfig c = cfg;
        c.restriction = ClassRestriction::none;
        SearchReport rep = bfs_distance(n, m, c, cache);
        if (!rep.exact) throw std::runtime_error("verify_class_gap: unrestricted search failed");
        res.unrestricted = rep.distance;
    }
    {
        SearchConfig c = cfg;
        c.restriction = cls;
        SearchReport rep = bfs_distance(n, m, c, cache);
        res.restricted_exact = rep.exact;
        res.restricted_bound = rep.exact ? rep.distance : rep.lower_bound;
    }
    return res;
}

UpperBoundCheck verify_upper_bound(const Network& n, const Network& m, const SearchConfig& cfg,
                                   NeighborCache* cache) {
    UpperBoundCheck out;
    out.bound = upper_bound_via_displayed(n, m);
    SearchConfig c = cfg;
    SearchReport rep = bfs_distance(n, m, c, cache);
    if (!rep.exact) throw std::runtime_error("verify_upper_bound: oracle distance not determined");
    out.distance = rep.distance;
    out.holds = rep.distance <= out.bound;
    out.tight = rep.distance == out.bound;
    return out;
}

bool double_prune_check(const Network& n, const Network& m, const SearchConfig& cfg,
                        NeighborCache* cache) {
    SearchReport rep = full_report(n, m, cfg, cache);
    if (rep.distance == 0) return false;
    for (const auto& g : rep.geodesics) {
        // witness pendant ids per step; a step realizable by an SNPR+ needs none
        std::vector<std::vector<std::string>> id_sets;
        bool step_free = false;
        std::vector<Network> nets;
        for (const auto& s : g.networks) nets.push_back(parse_enewick(s));
        for (std::size_t i = 1; i < nets.size(); ++i) {
            auto ws = move_witnesses(nets[i - 1], nets[i]);
            std::vector<std::string> ids;
            step_free = false;
            for (const auto& w : ws) {
                if (w.kind == SnprMove::Kind::plus) {
                    step_free = true;
                    break;
                }
                ids.push_back(pruned_pendant_id(nets[i - 1], w));
            }
            if (step_free) continue;
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            id_sets.push_back(std::move(ids));
        }
        // can we pick pairwise-distinct pendant ids, one per constrained step?
        std::vector<std::string> chosen;
        std::function<bool(std::size_t)> pick = [&](std::size_t i) -> bool {
            if (i == id_sets.size()) return true;
            for (const auto& id : id_sets[i]) {
                if (std::find(chosen.begin(), chosen.end(), id) != chosen.end()) continue;
                chosen.push_back(id);
                if (pick(i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (pick(0)) return false;  // this geodesic avoids double pruning
    }
    return true;
}

}  // namespace snprkit
