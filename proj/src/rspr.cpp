#include "snprkit/rspr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace snprkit {

namespace {

// Compact rooted forest used by the branching solver. The pendant root of a
// phylogenetic tree is modelled as a leaf labelled 0 (rho) that is a sibling
// of the whole crown, which makes rho an ordinary block element.
struct MForest {
    struct Nd {
        int par = -1, l = -1, r = -1, lab = -1;  // lab >= 0: leaf (0 = rho)
    };
    std::vector<Nd> nd;
    std::vector<int> roots;

    bool leaf(int i) const { return nd[i].lab >= 0; }

    int find_leaf(int lab) const {
        for (int i = 0; i < static_cast<int>(nd.size()); ++i)
            if (nd[i].lab == lab && alive(i)) return i;
        return -1;
    }

    // liveness: a node is alive iff reachable from a root; we keep a flag
    std::vector<char> live;
    bool alive(int i) const { return live[i]; }

    int add(int lab = -1) {
        nd.push_back({});
        nd.back().lab = lab;
        live.push_back(1);
        return static_cast<int>(nd.size()) - 1;
    }

    // replaces child `c` of `p` by `s`
    void replace_child(int p, int c, int s) {
        if (nd[p].l == c)
            nd[p].l = s;
        else
            nd[p].r = s;
        nd[s].par = p;
    }

    int sibling(int c) const {
        int p = nd[c].par;
        return nd[p].l == c ? nd[p].r : nd[p].l;
    }

    // Cuts the edge above `c`; `c` becomes a new component root and the old
    // parent is suppressed. When detach_only is set, `c` is dropped instead.
    void cut_above(int c, bool detach_only = false) {
        int p = nd[c].par;
        int s = sibling(c);
        int g = nd[p].par;
        live[p] = 0;
        if (g < 0) {
            auto it = std::find(roots.begin(), roots.end(), p);
            *it = s;
            nd[s].par = -1;
        } else {
            replace_child(g, p, s);
        }
        nd[c].par = -1;
        if (detach_only)
            live[c] = 0;
        else
            roots.push_back(c);
    }

    void remove_component(int root) {
        auto it = std::find(roots.begin(), roots.end(), root);
        roots.erase(it);
        std::function<void(int)> bury = [&](int x) {
            live[x] = 0;
            if (nd[x].l >= 0) bury(nd[x].l);
            if (nd[x].r >= 0) bury(nd[x].r);
        };
        bury(root);
    }

    // remove a leaf entirely (suppressing its parent)
    void remove_leaf(int c) {
        if (nd[c].par < 0) {
            remove_component(c);
            return;
        }
        cut_above(c, /*detach_only=*/true);
    }

    // turn internal node with two leaf children into a leaf labelled `lab`
    void contract_cherry(int p, int lab) {
        live[nd[p].l] = 0;
        live[nd[p].r] = 0;
        nd[p].l = nd[p].r = -1;
        nd[p].lab = lab;
    }

    // first cherry (pair of sibling leaves), smallest labels first
    bool find_cherry(int& a, int& b) const {
        int best = -1, ba = 0, bb = 0;
        for (int i = 0; i < static_cast<int>(nd.size()); ++i) {
            if (!alive(i) || leaf(i) || nd[i].l < 0 || nd[i].r < 0) continue;
            if (!leaf(nd[i].l) || !leaf(nd[i].r)) continue;
            int x = nd[nd[i].l].lab, y = nd[nd[i].r].lab;
            if (x > y) std::swap(x, y);
            if (best < 0 || x < ba || (x == ba && y < bb)) {
                best = i;
                ba = x;
                bb = y;
            }
        }
        if (best < 0) return false;
        a = ba;
        b = bb;
        return true;
    }

    int component_root_of(int x) const {
        while (nd[x].par >= 0) x = nd[x].par;
        return x;
    }
};

MForest from_tree(const Network& t) {
    MForest f;
    int top = f.add();
    f.roots.push_back(top);
    std::function<int(int)> build = [&](int v) -> int {
        if (t.kind(v) == VertexKind::leaf) return f.add(t.label(v));
        int id = f.add();
        int a = build(t.children(v)[0]);
        int b = build(t.children(v)[1]);
        f.nd[id].l = a;
        f.nd[id].r = b;
        f.nd[a].par = id;
        f.nd[b].par = id;
        return id;
    };
    int crown = build(t.crown());
    int rho = f.add(0);
    f.nd[top].l = crown;
    f.nd[top].r = rho;
    f.nd[crown].par = top;
    f.nd[rho].par = top;
    return f;
}

// Applies singleton-component and common-cherry reductions in place.
void reduce(MForest& t1, MForest& f2) {
    for (;;) {
        bool did = false;
        for (std::size_t i = 0; i < f2.roots.size(); ++i) {
            int r = f2.roots[i];
            if (!f2.leaf(r)) continue;
            int lab = f2.nd[r].lab;
            f2.remove_component(r);
            int lt = t1.find_leaf(lab);
            t1.remove_leaf(lt);
            did = true;
            break;
        }
        if (did) continue;
        int a, b;
        if (t1.roots.empty() || !t1.find_cherry(a, b)) break;
        // scan every cherry of t1 for one shared with f2
        bool contracted = false;
        for (int i = 0; i < static_cast<int>(t1.nd.size()) && !contracted; ++i) {
            if (!t1.alive(i) || t1.leaf(i) || t1.nd[i].l < 0) continue;
            if (!t1.leaf(t1.nd[i].l) || !t1.leaf(t1.nd[i].r)) continue;
            int la = t1.nd[t1.nd[i].l].lab, lb = t1.nd[t1.nd[i].r].lab;
            int fa = f2.find_leaf(la), fb = f2.find_leaf(lb);
            if (f2.nd[fa].par < 0 || f2.nd[fa].par != f2.nd[fb].par) continue;
            int keep = std::min(la, lb);
            t1.contract_cherry(i, keep);
            f2.contract_cherry(f2.nd[fa].par, keep);
            contracted = true;
        }
        if (!contracted) break;
    }
}

bool maf_decide(MForest t1, MForest f2, int k) {
    reduce(t1, f2);
    if (t1.roots.empty()) return true;
    if (k <= 0) return false;
    int a, b;
    if (!t1.find_cherry(a, b)) return false;  // unreachable for well-formed input
    int fa = f2.find_leaf(a), fb = f2.find_leaf(b);

    if (f2.component_root_of(fa) == f2.component_root_of(fb)) {
        // cut every pendant edge hanging off the path between a and b
        std::vector<int> mark;
        for (int x = fa; x >= 0; x = f2.nd[x].par) mark.push_back(x);
        int meet = fb;
        while (std::find(mark.begin(), mark.end(), meet) == mark.end()) meet = f2.nd[meet].par;
        std::vector<int> pendants;
        std::vector<int> path_a, path_b;
        for (int x = fa; x != meet; x = f2.nd[x].par) path_a.push_back(x);
        for (int x = fb; x != meet; x = f2.nd[x].par) path_b.push_back(x);
        auto collect = [&](const std::vector<int>& path) {
            for (std::size_t i = 1; i < path.size(); ++i) {
                int node = path[i];  // internal path node strictly below meet
                int on_path_child = path[i - 1];
                int other = f2.nd[node].l == on_path_child ? f2.nd[node].r : f2.nd[node].l;
                pendants.push_back(other);
            }
        };
        collect(path_a);
        collect(path_b);
        int q = static_cast<int>(pendants.size());
        if (q >= 1 && q <= k) {
            MForest f3 = f2;
            for (int p : pendants) f3.cut_above(p);
            if (maf_decide(t1, std::move(f3), k - q)) return true;
        }
    }
    {
        MForest f3 = f2;
        f3.cut_above(fa);
        if (maf_decide(t1, std::move(f3), k - 1)) return true;
    }
    {
        MForest f3 = f2;
        f3.cut_above(fb);
        if (maf_decide(t1, std::move(f3), k - 1)) return true;
    }
    return false;
}

void check_same_labels(const PhyloTree& t, const PhyloTree& u, const char* who) {
    if (t.net().labels() != u.net().labels())
        throw std::invalid_argument(std::string(who) + ": label sets differ");
}

}  // namespace

int rspr_distance(const PhyloTree& t, const PhyloTree& u) {
    check_same_labels(t, u, "rspr_distance");
    MForest t1 = from_tree(t.net());
    MForest f2 = from_tree(u.net());
    for (int k = 0;; ++k)
        if (maf_decide(t1, f2, k)) return k;
}

std::vector<std::vector<std::vector<int>>> partitions_of(const std::vector<int>& labels) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> assign(labels.size(), 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int blocks) {
        if (i == labels.size()) {
            std::vector<std::vector<int>> part(blocks);
            for (std::size_t j = 0; j < labels.size(); ++j) part[assign[j]].push_back(labels[j]);
            out.push_back(std::move(part));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            assign[i] = b;
            go(i + 1, std::max(blocks, b + 1));
        }
    };
    if (!labels.empty()) go(1, 1);  // label 0 pinned to block 0
    return out;
}

bool is_tree_agreement_forest(const TreeAgreementForest& f, const PhyloTree& t,
                              const PhyloTree& u) {
    check_same_labels(t, u, "is_tree_agreement_forest");
    std::vector<int> want = t.net().labels();
    want.insert(want.begin(), 0);
    std::vector<int> got;
    for (const auto& c : f.components) got.insert(got.end(), c.begin(), c.end());
    std::sort(got.begin(), got.end());
    if (got != want) return false;

    std::vector<ForestComponent> comps;
    try {
        for (const auto& block : f.components) comps.push_back(restriction_of(t.net(), block));
    } catch (const std::invalid_argument&) {
        return false;
    }
    // rho component first for the anchored search
    std::stable_sort(comps.begin(), comps.end(),
                     [](const ForestComponent& a, const ForestComponent& b) {
                         return a.root_is_rho > b.root_is_rho;
                     });
    return embed_forest(comps, t.net(), 0).ok && embed_forest(comps, u.net(), 0).ok;
}

std::vector<TreeAgreementForest> all_maximum_agreement_forests(const PhyloTree& t,
                                                               const PhyloTree& u) {
    int d = rspr_distance(t, u);
    std::vector<int> labels = t.net().labels();
    labels.insert(labels.begin(), 0);
    std::vector<TreeAgreementForest> out;
    for (auto& part : partitions_of(labels)) {
        if (static_cast<int>(part.size()) != d + 1) continue;
        TreeAgreementForest f;
        f.components = part;
        for (auto& c : f.components) std::sort(c.begin(), c.end());
        std::sort(f.components.begin(), f.components.end());
        if (is_tree_agreement_forest(f, t, u)) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const TreeAgreementForest& a,
                                         const TreeAgreementForest& b) {
        return a.components < b.components;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const TreeAgreementForest& a, const TreeAgreementForest& b) {
                              return a.components == b.components;
                          }),
              out.end());
    return out;
}

TreeAgreementForest maximum_agreement_forest(const PhyloTree& t, const PhyloTree& u) {
    auto all = all_maximum_agreement_forests(t, u);
    if (all.empty()) throw std::logic_error("maximum_agreement_forest: no witness found");
    return all.front();
}

}  // namespace snprkit
