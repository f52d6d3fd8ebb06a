#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snprkit {

// Vertex roles of a rooted binary phylogenetic network with a pendant root:
//   root        in-degree 0, out-degree 1
//   leaf        in-degree 1, out-degree 0, labelled
//   inner_tree  in-degree 1, out-degree 2
//   reticulation in-degree 2, out-degree 1
enum class VertexKind : std::uint8_t { root, leaf, inner_tree, reticulation };

const char* to_string(VertexKind k);

// Names one edge of a network. `index` disambiguates the two members of a
// parallel pair (0 for the first copy, 1 for the second).
struct EdgeRef {
    int tail = -1;
    int head = -1;
    int index = 0;

    friend bool operator==(const EdgeRef& a, const EdgeRef& b) {
        return a.tail == b.tail && a.head == b.head && a.index == b.index;
    }
    friend bool operator<(const EdgeRef& a, const EdgeRef& b) {
        if (a.tail != b.tail) return a.tail < b.tail;
        if (a.head != b.head) return a.head < b.head;
        return a.index < b.index;
    }
};

struct Violation {
    std::string rule;
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    std::string detail;
};

struct invalid_network_error : std::runtime_error {
    explicit invalid_network_error(std::vector<Violation> v);
    std::vector<Violation> violations;
};

// Mutable multigraph used while building or rewriting a network. Vertices are
// never erased, only marked dead; from_draft() compacts the survivors.
class GraphDraft {
public:
    struct Vertex {
        std::vector<int> out;
        std::vector<int> in;
        int label = 0;  // > 0 for leaves
        bool alive = true;
    };

    int add_vertex(int label = 0);
    void add_edge(int tail, int head);
    // Removes one copy of (tail, head); throws if absent.
    void remove_edge(int tail, int head);
    // Merges the in/out edges of a vertex with in-degree 1 and out-degree 1
    // and kills it. Returns the merged edge.
    std::pair<int, int> suppress(int v);
    void kill(int v);

    int size() const { return static_cast<int>(verts_.size()); }
    const Vertex& at(int v) const { return verts_[v]; }
    Vertex& at(int v) { return verts_[v]; }

    // All alive vertices reachable from `from` (inclusive).
    std::vector<int> reachable_from(int from) const;

private:
    std::vector<Vertex> verts_;
};

// Structural audit of a draft against the network invariants. An empty result
// means the draft is a valid rooted binary phylogenetic network.
std::vector<Violation> validate(const GraphDraft& draft);

// Immutable rooted binary phylogenetic network. Construct via from_draft()
// (which validates) or the eNewick parser. Vertex ids are compact 0..V-1 and
// stable for the lifetime of the value, but not across parses or rewrites.
class Network {
public:
    // Validates and compacts a draft. `old_to_new`, when given, receives the
    // id mapping (-1 for dead vertices).
    static Network from_draft(const GraphDraft& draft, std::vector<int>* old_to_new = nullptr);

    int vertex_count() const { return static_cast<int>(kinds_.size()); }
    VertexKind kind(int v) const { return kinds_[v]; }
    int label(int v) const { return labels_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    const std::vector<int>& parents(int v) const { return parents_[v]; }
    int root() const { return root_; }
    int crown() const { return children_[root_][0]; }  // the root's only child

    int leaf_count() const { return n_leaves_; }
    int reticulation_count() const { return n_retics_; }
    int edge_count() const { return n_edges_; }

    bool is_tree() const { return n_retics_ == 0; }

    // Sorted label set.
    std::vector<int> labels() const;
    // Vertex carrying a given leaf label, or -1.
    int leaf_with_label(int label) const;

    // Edges sorted by (tail, head, index); parallel pairs appear as index 0/1.
    const std::vector<EdgeRef>& edges() const { return edges_; }
    bool has_edge(int tail, int head) const;
    // Multiplicity of (tail, head).
    int edge_multiplicity(int tail, int head) const;

    // Vertices reachable from v, including v.
    std::vector<int> descendants_including(int v) const;

    GraphDraft to_draft() const;

    // Canonical eNewick form: minimum serialization over all child orderings.
    // Equal strings <=> label-preserving isomorphism. Computed at construction.
    const std::string& canonical_form() const { return canon_; }

private:
    std::vector<VertexKind> kinds_;
    std::vector<int> labels_;
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<int>> parents_;
    std::vector<EdgeRef> edges_;
    int root_ = -1;
    int n_leaves_ = 0;
    int n_retics_ = 0;
    int n_edges_ = 0;
    std::string canon_;
};

inline int reticulation_count(const Network& n) { return n.reticulation_count(); }

// A reticulation-free network. The wrapper enforces the invariant at
// construction; everything else is plain Network access.
class PhyloTree {
public:
    explicit PhyloTree(Network n) : net_(std::move(n)) {
        if (net_.reticulation_count() != 0)
            throw std::invalid_argument("PhyloTree: network has reticulations");
    }
    const Network& net() const { return net_; }

private:
    Network net_;
};

// Labelled-isomorphism test: colour refinement seeded by (kind, label),
// then backtracking over ambiguous orbits. Cross-checked against canonical
// form equality in the test suite.
bool is_isomorphic(const Network& a, const Network& b);

// Network class predicates.
bool is_tree_child(const Network& n);
bool is_reticulation_visible(const Network& n);
bool is_tree_based(const Network& n);
bool has_parallel_edges(const Network& n);

}  // namespace snprkit
