// Development-only helper: verifies candidate figure fixtures against the
// oracle and searches small spaces for the pairs that are hard to construct
// by hand. Not part of the shipped build.
#include <cstdio>
#include <cstring>
#include <iostream>
#include <map>
#include <set>

#include "snprkit/displayed.hpp"
#include "snprkit/enewick.hpp"
#include "snprkit/forest.hpp"
#include "snprkit/generate.hpp"
#include "snprkit/oracle.hpp"
#include "snprkit/rspr.hpp"
#include "snprkit/snpr.hpp"

using namespace snprkit;

static NeighborCache g_cache;

static void show(const char* tag, bool ok) { std::printf("%-40s %s\n", tag, ok ? "OK" : "FAIL"); }

static void check_fig1() {
    Network n1 = parse_enewick("(((1,(3)#H1),(#H1,2)));");
    Network n2 = parse_enewick("(((3)#H1,(#H1,(2,1))));");
    Network n3 = parse_enewick("(((1,2),3));");
    std::printf("fig1 canon n1=%s n2=%s n3=%s\n", n1.canonical_form().c_str(),
                n2.canonical_form().c_str(), n3.canonical_form().c_str());
    bool n2_in = false, n1_in = false;
    for (auto& nb : neighbors(n1)) n2_in |= nb.net.canonical_form() == n2.canonical_form();
    for (auto& nb : neighbors(n2)) n1_in |= nb.net.canonical_form() == n1.canonical_form();
    show("fig1: n2 in nbrs(n1)", n2_in);
    show("fig1: n1 in nbrs(n2)", n1_in);
    bool minus_ok = false;
    NeighborOptions mo;
    mo.zero = mo.plus = false;
    for (auto& nb : neighbors(n2, mo)) minus_ok |= nb.net.canonical_form() == n3.canonical_form();
    show("fig1: n3 is an SNPR- result of n2", minus_ok);
    auto rep = bfs_distance(n1, n3, {}, &g_cache);
    std::printf("fig1: d(n1,n3) = %d (want 2)\n", rep.distance);
    show("fig1: tier lemma false", !verify_tier_lemma(n1, n3, {}, &g_cache));
    show("fig1: double prune false", !double_prune_check(n1, n3, {}, &g_cache));
}

static void check_fig2() {
    PhyloTree t(parse_enewick("(((1,2),(3,4)));"));
    PhyloTree u(parse_enewick("(((1,3),(2,4)));"));
    int d = rspr_distance(t, u);
    std::printf("fig2: rspr = %d (want 2)\n", d);
    auto all = all_maximum_agreement_forests(t, u);
    bool found = false;
    for (auto& f : all) {
        if (f.components == std::vector<std::vector<int>>{{0, 1, 2}, {3}, {4}}) found = true;
        std::printf("  maf:");
        for (auto& c : f.components) {
            std::printf(" {");
            for (int x : c) std::printf("%d ", x);
            std::printf("}");
        }
        std::printf("\n");
    }
    show("fig2: drawn forest among MAFs", found);
}

static void check_fig3() {
    PhyloTree t(parse_enewick("(((1,2),(3,4)));"));
    Network n = parse_enewick("(((((1,3))#H1,#H1),(((2,4))#H2,#H2)));");
    std::printf("fig3: r=%d (want 2)\n", n.reticulation_count());
    auto dts = displayed_trees(n);
    std::printf("fig3: |D(N)| = %zu:", dts.size());
    for (auto& x : dts) std::printf(" %s", x.net().canonical_form().c_str());
    std::printf("\n");
    int via_d = dsnpr_via_displayed(t, n);
    auto [f, size] = maf_tree_network(t, n);
    std::printf("fig3: via_displayed=%d via_maf=%d (k=%d r=%d)\n", via_d, size.m(), size.k,
                size.r);
    auto rep = bfs_distance(t.net(), n, {}, &g_cache);
    std::printf("fig3: oracle=%d\n", rep.distance);
    std::printf("fig3: maf blocks:");
    for (auto& c : f.component_labels) {
        std::printf(" {");
        for (int x : c) std::printf("%d ", x);
        std::printf("}");
    }
    std::printf("\n");
    AgreementForest probe;
    probe.component_labels = {{0, 1, 2}, {3}, {4}};
    probe.disagreement_edges = 2;
    show("fig3: expected forest valid", is_agreement_forest(probe, t, n));
    AgreementForest broken = probe;
    broken.disagreement_edges = 1;
    show("fig3: dropping one E_j invalidates", !is_agreement_forest(broken, t, n));
    auto seq = snpr_sequence_from_forest(f, t, n);
    std::printf("fig3: sequence length %zu (want %d)\n", seq.length(), size.m());
}

static void check_fig5() {
    Network n = parse_enewick("((((1)#H1,2),(#H1,(3,4))));");
    Network np = parse_enewick("(((((2,3))#H2)#H1,(#H1,(#H2,(1,4)))));");
    std::printf("fig5: r(n)=%d r(np)=%d\n", n.reticulation_count(), np.reticulation_count());
    SearchConfig cfg;
    cfg.max_reticulations = 3;
    auto rep = bfs_distance(n, np, cfg, &g_cache);
    std::printf("fig5: d = %d (want 3), geodesics=%llu\n", rep.distance,
                (unsigned long long)rep.geodesic_count);
    show("fig5: tier lemma holds", verify_tier_lemma(n, np, cfg, &g_cache));
    for (auto& g : rep.geodesics) {
        std::printf("  profile:");
        for (int r : g.facts.tier_profile) std::printf(" %d", r);
        std::printf(" | horiz:");
        for (int r : g.facts.horizontal_tiers) std::printf(" %d", r);
        std::printf("\n");
        if (rep.geodesics.size() > 12) break;
    }
}

static void check_fig6() {
    Network n = parse_enewick("(((1,2),((3)#H1,((4)#H2,((5,#H1),(6,#H2))))));");
    Network np = parse_enewick("(((((1,2))#H2)#H1,((3,#H1),((4,#H2),(5,6)))));");
    std::printf("fig6: r=%d,%d\n", n.reticulation_count(), np.reticulation_count());
    SearchConfig cfg;
    cfg.geodesic_limit = 0;
    auto rep = bfs_distance(n, np, cfg, &g_cache);
    std::printf("fig6: d = %d (want 4)\n", rep.distance);
    show("fig6: tree passage", verify_tree_passage(n, np, cfg, &g_cache));
    auto ub = verify_upper_bound(n, np, cfg, &g_cache);
    std::printf("fig6: bound=%d dist=%d tight=%d\n", ub.bound, ub.distance, (int)ub.tight);
}

static void check_fig8() {
    Network n = parse_enewick("((((1,(((3)#H3,4))#H2))#H1,(#H1,(#H2,(#H3,2)))));");
    Network np = parse_enewick("((((3,(((1)#H3,4))#H2))#H1,(#H1,(#H2,(#H3,2)))));");
    std::printf("fig8: tc(n)=%d tc(np)=%d rv=%d,%d r=%d\n", (int)is_tree_child(n),
                (int)is_tree_child(np), (int)is_reticulation_visible(n),
                (int)is_reticulation_visible(np), n.reticulation_count());
    auto gap_tc = verify_class_gap(n, np, ClassRestriction::tree_child, {}, &g_cache);
    std::printf("fig8: unrestricted=%d tc-restricted=%d exact=%d\n", gap_tc.unrestricted,
                gap_tc.restricted_bound, (int)gap_tc.restricted_exact);
    auto gap_rv = verify_class_gap(n, np, ClassRestriction::reticulation_visible, {}, &g_cache);
    std::printf("fig8: rv-restricted=%d exact=%d\n", gap_rv.restricted_bound,
                (int)gap_rv.restricted_exact);
    SearchConfig cfg;
    auto rep = bfs_distance(n, np, cfg, &g_cache);
    for (auto& g : rep.geodesics) {
        Network mid = parse_enewick(g.networks[1]);
        std::printf("  middle: tc=%d rv=%d tb=%d %s\n", (int)is_tree_child(mid),
                    (int)is_reticulation_visible(mid), (int)is_tree_based(mid),
                    g.networks[1].c_str());
    }
}

static void check_fig9() {
    Network n = parse_enewick("(((((1,(3)#H3))#H1,((#H3)#H2,#H2)),(#H1,(2,4))));");
    Network np = parse_enewick("(((((3,(1)#H3))#H1,((#H3)#H2,#H2)),(#H1,(2,4))));");
    std::printf("fig9: tb=%d,%d tc=%d parallel=%d r=%d\n", (int)is_tree_based(n),
                (int)is_tree_based(np), (int)is_tree_child(n), (int)has_parallel_edges(n),
                n.reticulation_count());
    auto gap = verify_class_gap(n, np, ClassRestriction::tree_based, {}, &g_cache);
    std::printf("fig9: unrestricted=%d tb-restricted=%d exact=%d\n", gap.unrestricted,
                gap.restricted_bound, (int)gap.restricted_exact);
    auto rep = bfs_distance(n, np, {}, &g_cache);
    for (auto& g : rep.geodesics) {
        Network mid = parse_enewick(g.networks[1]);
        std::printf("  middle: tb=%d %s\n", (int)is_tree_based(mid), g.networks[1].c_str());
    }

    Network v = parse_enewick("(((((1,(3)#H3))#H1,(((#H3)#H2,(#H2)#H4),#H4)),(#H1,(2,4))));");
    Network vp = parse_enewick("(((((3,(1)#H3))#H1,(((#H3)#H2,(#H2)#H4),#H4)),(#H1,(2,4))));");
    std::printf("fig9v: tb=%d,%d parallel=%d r=%d\n", (int)is_tree_based(v),
                (int)is_tree_based(vp), (int)has_parallel_edges(v), v.reticulation_count());
    auto gv = verify_class_gap(v, vp, ClassRestriction::tree_based_simple, {}, &g_cache);
    std::printf("fig9v: unrestricted=%d tbs-restricted=%d exact=%d\n", gv.unrestricted,
                gv.restricted_bound, (int)gv.restricted_exact);
}

// search for an r=1 pair (n=4) where every shortest sequence passes a tree
static void search_fig6b() {
    auto t1 = tier(4, 1);
    std::printf("tier(4,1) size = %zu\n", t1.size());
    int found = 0;
    for (std::size_t i = 0; i < t1.size() && found < 6; ++i) {
        for (std::size_t j = i + 1; j < t1.size() && found < 6; ++j) {
            SearchConfig cfg;
            cfg.geodesic_limit = 0;
            cfg.max_reticulations = 3;
            cfg.max_depth = 4;
            auto rep = bfs_distance(t1[i], t1[j], cfg, &g_cache);
            if (!rep.exact || rep.distance != 2) continue;
            bool all_tree_mid = true;
            for (auto& s : rep.layers[1])
                if (g_cache.tier_of(s) != 0) all_tree_mid = false;
            if (!all_tree_mid) continue;
            std::printf("fig6b candidate:\n  %s\n  %s\n", t1[i].canonical_form().c_str(),
                        t1[j].canonical_form().c_str());
            ++found;
        }
    }
    if (!found) std::printf("fig6b: nothing found\n");
}

// search for an n=2, r=3 pair at distance 2 whose every middle has r=4
static void search_fig7() {
    auto t3 = tier(2, 3);
    std::printf("tier(2,3) size = %zu\n", t3.size());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < t3.size(); ++i) index[t3[i].canonical_form()] = i;
    int found = 0;
    for (std::size_t i = 0; i < t3.size() && found < 6; ++i) {
        for (std::size_t j = i + 1; j < t3.size() && found < 6; ++j) {
            SearchConfig cfg;
            cfg.geodesic_limit = 0;
            cfg.max_reticulations = 5;
            cfg.max_depth = 3;
            auto rep = bfs_distance(t3[i], t3[j], cfg, &g_cache);
            if (!rep.exact || rep.distance != 2) continue;
            bool ok = true;
            for (auto& s : rep.layers[1])
                if (g_cache.tier_of(s) != 4) ok = false;
            if (!ok) continue;
            std::printf("fig7 candidate:\n  %s\n  %s\n", t3[i].canonical_form().c_str(),
                        t3[j].canonical_form().c_str());
            ++found;
        }
    }
    if (!found) std::printf("fig7: nothing found\n");
}

// search for a pair where every shortest sequence prunes some pendant twice
static void search_fig10(int n, int maxr, int dmax) {
    std::vector<Network> pool;
    for (int r = 0; r <= maxr; ++r) {
        auto t = tier(n, r);
        pool.insert(pool.end(), t.begin(), t.end());
    }
    std::printf("pool(n=%d, r<=%d) = %zu\n", n, maxr, pool.size());
    int found = 0;
    for (std::size_t i = 0; i < pool.size() && found < 4; ++i) {
        for (std::size_t j = i + 1; j < pool.size() && found < 4; ++j) {
            if (pool[i].labels() != pool[j].labels()) continue;
            SearchConfig cfg;
            cfg.max_reticulations = maxr + dmax;
            cfg.max_depth = dmax;
            cfg.geodesic_limit = 4000;
            auto rep = bfs_distance(pool[i], pool[j], cfg, &g_cache);
            if (!rep.exact || rep.distance < 2) continue;
            if (!rep.geodesics_complete) continue;
            if (double_prune_check(pool[i], pool[j], cfg, &g_cache)) {
                std::printf("fig10 candidate (d=%d):\n  %s\n  %s\n", rep.distance,
                            pool[i].canonical_form().c_str(), pool[j].canonical_form().c_str());
                ++found;
            }
        }
        if (i % 20 == 0) std::printf("... i=%zu\n", i);
    }
    if (!found) std::printf("fig10: nothing found\n");
}


// ---- appended search modes ----
namespace {

bool leaf_under_reticulation(const Network& n, int label) {
    int l = n.leaf_with_label(label);
    std::vector<int> stack{l};
    std::set<int> seen{l};
    while (!stack.empty()) {
        int x = stack.back(); stack.pop_back();
        for (int p : n.parents(x)) {
            if (n.kind(p) == VertexKind::reticulation) return true;
            if (seen.insert(p).second) stack.push_back(p);
        }
    }
    return false;
}

bool leaf_child_of_reticulation(const Network& n, int label) {
    int l = n.leaf_with_label(label);
    return n.kind(n.parents(l)[0]) == VertexKind::reticulation;
}

bool has_cherry(const Network& n, int a, int b) {
    int la = n.leaf_with_label(a), lb = n.leaf_with_label(b);
    return n.parents(la)[0] == n.parents(lb)[0];
}

int reticulations_above(const Network& n, int label) {
    int l = n.leaf_with_label(label);
    // count reticulations that are ancestors of l
    std::set<int> anc;
    std::vector<int> stack{l};
    while (!stack.empty()) {
        int x = stack.back(); stack.pop_back();
        for (int p : n.parents(x)) if (anc.insert(p).second) stack.push_back(p);
    }
    int c = 0;
    for (int v : anc) if (n.kind(v) == VertexKind::reticulation) ++c;
    return c;
}

void fig5_candidates(std::vector<Network>& ns, std::vector<Network>& nps) {
    for (auto& x : tier(4, 1)) {
        if (!leaf_under_reticulation(x, 1)) continue;
        if (has_cherry(x, 1, 4) || has_cherry(x, 2, 3)) continue;
        ns.push_back(x);
    }
    for (auto& x : tier(4, 2)) {
        if (leaf_under_reticulation(x, 1)) continue;
        if (!has_cherry(x, 1, 4) || !has_cherry(x, 2, 3)) continue;
        if (reticulations_above(x, 2) < 2 || reticulations_above(x, 3) < 2) continue;
        nps.push_back(x);
    }
    std::printf("fig5 search: %zu candidate N, %zu candidate N'\n", ns.size(), nps.size());
}

void search_fig5() {
    std::vector<Network> ns, nps;
    fig5_candidates(ns, nps);
    int shown = 0;
    for (auto& a : ns) {
        for (auto& b : nps) {
            SearchConfig cfg;
            cfg.max_reticulations = 3;
            cfg.max_depth = 4;
            auto rep = bfs_distance(a, b, cfg, &g_cache);
            if (!rep.exact || rep.distance != 3) continue;
            if (!verify_tier_lemma(a, b, cfg, &g_cache)) continue;
            std::printf("fig5 candidate:\n  N : %s\n  N': %s\n", a.canonical_form().c_str(),
                        b.canonical_form().c_str());
            if (++shown >= 8) return;
        }
    }
    if (!shown) std::printf("fig5: nothing found\n");
}

void search_fig9() {
    Network m = parse_enewick("(((((1,(3)#H3))#H1,((#H3)#H2,#H2)),(#H1,(2,4))));");
    // non-tree-based core: prune leaf 1 and regraft above 3
    Network core;
    {
        // locate leaf 1, prune, regraft above 3 to reproduce the middle
        SearchConfig cfg;
        auto rep = bfs_distance(m, parse_enewick("(((((3,(1)#H3))#H1,((#H3)#H2,#H2)),(#H1,(2,4))));"), cfg, &g_cache);
        for (auto& g : rep.geodesics) {
            Network mid = parse_enewick(g.networks[1]);
            if (!is_tree_based(mid)) core = mid;
        }
    }
    if (core.vertex_count() == 0) { std::printf("fig9: no non-TB core middle\n"); return; }
    std::printf("fig9 core middle: %s\n", core.canonical_form().c_str());
    std::vector<Network> cand;
    for (auto& nb : neighbors(core)) {
        if (nb.net.reticulation_count() != core.reticulation_count()) continue;
        if (!is_tree_based(nb.net) || !has_parallel_edges(nb.net)) continue;
        cand.push_back(nb.net);
    }
    std::printf("fig9: %zu TB-with-parallel neighbors of core\n", cand.size());
    int shown = 0;
    for (std::size_t i = 0; i < cand.size() && shown < 6; ++i) {
        for (std::size_t j = i + 1; j < cand.size() && shown < 6; ++j) {
            SearchConfig cfg;
            cfg.geodesic_limit = 0;
            auto rep = bfs_distance(cand[i], cand[j], cfg, &g_cache);
            if (!rep.exact || rep.distance != 2) continue;
            bool all_bad = true;
            for (auto& s : rep.layers[1]) {
                Network mid = parse_enewick(s);
                if (is_tree_based(mid)) all_bad = false;
            }
            if (!all_bad) continue;
            std::printf("fig9 candidate pair:\n  %s\n  %s\n", cand[i].canonical_form().c_str(),
                        cand[j].canonical_form().c_str());
            ++shown;
        }
    }
    if (!shown) std::printf("fig9: nothing found around this core\n");
}

}  // namespace



namespace {

Network swap_labels_13(const Network& n) {
    GraphDraft d;
    for (int v = 0; v < n.vertex_count(); ++v) {
        int lab = n.label(v);
        if (lab == 1) lab = 3; else if (lab == 3) lab = 1;
        d.add_vertex(lab);
    }
    for (const auto& e : n.edges()) d.add_edge(e.tail, e.head);
    return Network::from_draft(d);
}

void search_fig9_swap(int r) {
    auto pool = tier(4, r);
    std::printf("tier(4,%d) = %zu\n", r, pool.size());
    int shown = 0;
    std::size_t scanned = 0;
    for (auto& a : pool) {
        ++scanned;
        if (scanned % 2000 == 0) std::printf("... %zu\n", scanned);
        if (!has_parallel_edges(a) || !is_tree_based(a)) continue;
        if (!leaf_child_of_reticulation(a, 3)) continue;
        if (leaf_child_of_reticulation(a, 1)) continue;
        Network b = swap_labels_13(a);
        if (b.canonical_form() == a.canonical_form()) continue;
        SearchConfig cfg;
        cfg.geodesic_limit = 0;
        cfg.max_reticulations = r + 2;
        cfg.max_depth = 4;
        auto rep = bfs_distance(a, b, cfg, &g_cache);
        if (!rep.exact || rep.distance != 2) continue;
        bool all_bad = true;
        for (auto& s : rep.layers[1])
            if (is_tree_based(parse_enewick(s))) all_bad = false;
        if (!all_bad) continue;
        std::printf("fig9 swap candidate (r=%d):\n  %s\n  %s\n", r,
                    a.canonical_form().c_str(), b.canonical_form().c_str());
        if (++shown >= 5) return;
    }
    if (!shown) std::printf("fig9 swap: nothing in tier %d\n", r);
}

}  // namespace


namespace {

// Every network T + two added reticulation edges, deduplicated.
std::vector<Network> two_edge_augmentations(const Network& t) {
    NeighborOptions opt;
    opt.zero = opt.minus = false;
    std::vector<Network> out;
    std::set<std::string> seen;
    for (auto& a : neighbors(t, opt))
        for (auto& b : neighbors(a.net, opt))
            if (seen.insert(b.net.canonical_form()).second) out.push_back(std::move(b.net));
    return out;
}

// Can the network reach, from any vertex on the first subdivided-or-plain
// copy of base edge `eh` (head side region), the region of base leaf-edges?
// Cheap necessary filter: some reticulation edge connects region A to B.
void search_fig6r2() {
    Network np = parse_enewick("(((((1,2))#H2)#H1,((3,#H1),((4,#H2),(5,6)))));");
    Network tb = parse_enewick("(((1,2),(3,(4,(5,6)))));");
    auto cands = two_edge_augmentations(tb);
    std::printf("fig6r2: %zu augmented candidates\n", cands.size());
    // quick filters first: T must display into candidate; candidate not iso N'
    std::size_t tried = 0;
    int shown = 0;
    for (auto& n : cands) {
        if (n.canonical_form() == np.canonical_form()) continue;
        // necessary: no common SNPR+^2 successor reachable as in the broken
        // construction; approximate by demanding the + additions are blocked:
        // adding N'-style edges to n must be impossible without a cycle.
        // We test blocking exactly: is there an r=4 common successor?
        // (cheap pre-check: skip unless leaf 1 and 2 form a cherry)
        {
            int l1 = n.leaf_with_label(1), l2 = n.leaf_with_label(2);
            if (n.parents(l1)[0] != n.parents(l2)[0]) continue;
        }
        SearchConfig cfg;
        cfg.geodesic_limit = 0;
        cfg.max_depth = 4;
        cfg.max_reticulations = 4;
        ++tried;
        auto rep = bfs_distance(n, np, cfg, &g_cache);
        if (!rep.exact || rep.distance != 4) continue;
        bool all_tree = true;
        for (auto& s : rep.layers[2])
            if (g_cache.tier_of(s) != 0) all_tree = false;
        if (!all_tree) continue;
        std::printf("fig6r2 candidate:\n  %s\n", n.canonical_form().c_str());
        if (++shown >= 4) break;
    }
    std::printf("fig6r2: tried %zu full checks, found %d\n", tried, shown);
}

}  // namespace

int main(int argc, char** argv) {
    std::string what = argc > 1 ? argv[1] : "hand";
    if (what == "fig5search") { search_fig5(); return 0; }
    if (what == "fig9search") { search_fig9(); return 0; }
    if (what == "fig6r2") { search_fig6r2(); return 0; }
    if (what == "fig9swap") { search_fig9_swap(argc > 2 ? std::atoi(argv[2]) : 2); return 0; }
    if (what == "hand") {
        check_fig1();
        check_fig2();
        check_fig3();
        check_fig5();
        check_fig8();
        check_fig9();
    } else if (what == "fig6") {
        check_fig6();
    } else if (what == "fig6b") {
        search_fig6b();
    } else if (what == "fig7") {
        search_fig7();
    } else if (what == "fig10") {
        int n = argc > 2 ? std::atoi(argv[2]) : 3;
        int r = argc > 3 ? std::atoi(argv[3]) : 1;
        int d = argc > 4 ? std::atoi(argv[4]) : 3;
        search_fig10(n, r, d);
    }
    return 0;
}
