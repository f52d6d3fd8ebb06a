#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "snprkit/network.hpp"
#include "snprkit/snpr.hpp"

namespace snprkit {

enum class ClassRestriction {
    none,
    tree_child,
    reticulation_visible,
    tree_based,
    tree_based_simple,  // tree-based and free of parallel edges
    fixed_tier,
    min_tier,
};

const char* to_string(ClassRestriction c);
ClassRestriction class_restriction_from_string(const std::string& s);
bool in_restriction(const Network& n, ClassRestriction c, int tier);

struct SearchConfig {
    // Cap on reticulations during the search; -1 derives the envelope
    // max(r, r') + upper bound, which no geodesic can exceed.
    int max_reticulations = -1;
    // Longest sequence length considered; -1 derives the displayed-pair upper
    // bound for unrestricted searches and leaves restricted ones unbounded.
    int max_depth = -1;
    ClassRestriction restriction = ClassRestriction::none;
    int restriction_tier = 0;
    std::uint64_t geodesic_limit = 100000;  // enumeration cutoff, not a distance cutoff
    bool collect_moves = false;             // attach one witness move per step
    int threads = 0;                        // 0: read SNPRKIT_THREADS, default 1
};

// Shared neighbor memo; pass one instance across bfs_distance calls that
// explore the same space to avoid recomputing move sets.
class NeighborCache {
public:
    const std::vector<std::string>& neighbors_of(const std::string& canon);
    // Batch fill, parallel over missing entries when threads > 1.
    void ensure(const std::vector<std::string>& canons, int threads);
    int tier_of(const std::string& canon);
    const std::array<bool, 4>& flags_of(const std::string& canon);  // tc, rv, tb, parallel-free

private:
    std::map<std::string, std::vector<std::string>> nbrs_;
    std::map<std::string, int> tier_;
    std::map<std::string, std::array<bool, 4>> flags_;
};

struct GeodesicFacts {
    std::vector<int> tier_profile;
    std::vector<int> horizontal_tiers;  // tiers r with two consecutive networks in tier r
    bool contains_tree = false;
    int min_reticulations = 0, max_reticulations = 0;
    std::vector<std::array<bool, 3>> class_membership;  // per network: tc, rv, tb
};

struct Geodesic {
    std::vector<std::string> networks;  // canonical forms, length distance+1
    std::vector<SnprMove> moves;        // one witness per step when requested
    GeodesicFacts facts;
};

struct SearchReport {
    bool exact = false;
    int distance = -1;     // set when exact
    int lower_bound = 0;   // distance >= lower_bound always holds
    bool space_exhausted = false;  // no path exists under the configuration
    int cap_used = 0;
    int depth_limit = -1;
    std::string note;

    std::vector<std::vector<std::string>> layers;  // geodesic DAG, layers[0] = {start}
    std::uint64_t geodesic_count = 0;
    bool geodesics_complete = false;
    std::vector<Geodesic> geodesics;
};

// Exact class-restricted SNPR-distance by bidirectional breadth-first search
// over canonical forms, with full geodesic reconstruction.
SearchReport bfs_distance(const Network& n, const Network& m, const SearchConfig& cfg = {},
                          NeighborCache* cache = nullptr);

// min{ d_rSPR(T, T') : T in D(N), T' in D(M) } + r + r'
int upper_bound_via_displayed(const Network& n, const Network& m);

struct UpperBoundCheck {
    bool holds = false;
    bool tight = false;
    int bound = 0;
    int distance = 0;
};

// --- figure-level verifiers -----------------------------------------------------

// Every geodesic horizontally traverses at least two tiers.
bool verify_tier_lemma(const Network& n, const Network& m, const SearchConfig& cfg = {},
                       NeighborCache* cache = nullptr);

// Distance equals 2r and every geodesic passes through tier 0.
bool verify_tree_passage(const Network& n, const Network& m, const SearchConfig& cfg = {},
                         NeighborCache* cache = nullptr);

// Distance equals 2 and every geodesic's middle network has r+1 reticulations.
bool verify_upward_passage(const Network& n, const Network& m, const SearchConfig& cfg = {},
                           NeighborCache* cache = nullptr);

struct ClassGapResult {
    int unrestricted = -1;
    int restricted_bound = -1;  // exact value, or a proven lower bound
    bool restricted_exact = false;
    bool gap() const { return restricted_bound > unrestricted; }
};

// Both endpoint networks must lie in the class; throws otherwise.
ClassGapResult verify_class_gap(const Network& n, const Network& m, ClassRestriction cls,
                                const SearchConfig& cfg = {}, NeighborCache* cache = nullptr);

UpperBoundCheck verify_upper_bound(const Network& n, const Network& m,
                                   const SearchConfig& cfg = {}, NeighborCache* cache = nullptr);

// True iff in every shortest sequence some pendant (identified by the pruned
// edge's head-side sub-DAG canonical form) is pruned by two distinct moves.
// This identity across rewrites is one reasonable reading, not given a priori.
bool double_prune_check(const Network& n, const Network& m, const SearchConfig& cfg = {},
                        NeighborCache* cache = nullptr);

}  // namespace snprkit
