#ifndef RAAG_SPINE_HPP
#define RAAG_SPINE_HPP

#include <string>
#include <vector>

#include "raag/norms.hpp"

namespace raag {

// A pairwise-compatible set of partitions (an ideal forest).
struct CompatibleSet {
    std::vector<WhiteheadPartition> partitions;
};

// Exact maximum-compatible-set sizes over the four base/symmetry filters,
// with a witness set for each.
struct RankReport {
    int mAll = 0;           // M(V)
    int mPrincipal = 0;     // M(L)
    int mSymAll = 0;        // M^Sigma(V) = dim of the symmetric spine
    int mSymPrincipal = 0;  // M^Sigma(L)
    CompatibleSet witnessAll, witnessPrincipal, witnessSymAll, witnessSymPrincipal;
};

constexpr long long kDefaultSearchBudget = 10000000;

RankReport rank_report(const DefiningGraph& g, long long budget = kDefaultSearchBudget);

// vcd of the symmetric outer automorphism group: the symmetric spine
// dimension M^Sigma(V).
int vcd_symout(const DefiningGraph& g, long long budget = kDefaultSearchBudget);

// Maximum compatible set of symmetric principal partitions with multipliers
// whose automorphisms pairwise commute; certified combinatorially and by
// direct outer-level commutation.
std::vector<WhiteheadPair> abelian_generators(const DefiningGraph& g,
                                              long long budget = kDefaultSearchBudget);

// Membership in the minimal-norm complex for W = length-one classes:
// the W entry sits at its floor 2|V|.
bool in_kmin_length_one(const DefiningGraph& g, const MarkedSalvetti& sigma);

struct MoveGraphEdge {
    int from = 0;
    int to = 0;
    WhiteheadPair pair;
};

struct MoveGraph {
    std::vector<MarkedSalvetti> nodes;
    std::vector<std::string> labels; // canonical image-map text
    std::vector<MoveGraphEdge> edges;
    int root = 0;
};

struct ExploreOptions {
    bool symmetricOnly = false;
    long long nodeBudget = 10000;
};

// Breadth-first closure of the root under Whitehead moves, nodes identified
// modulo inner automorphisms and Omega.
MoveGraph local_explore(const DefiningGraph& g, const MarkedSalvetti& root, int depth,
                        const ExploreOptions& opts = {});

// Deterministic DOT rendering of a move graph.
std::string move_graph_dot(const DefiningGraph& g, const MoveGraph& mg);

// Exact maximum clique (with witness) of a symmetric compatibility relation,
// by branch and bound; throws BudgetError past the node budget.
std::pair<int, std::vector<int>> max_clique(const std::vector<std::vector<bool>>& adj,
                                            long long budget);

} // namespace raag

#endif
