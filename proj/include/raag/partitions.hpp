#ifndef RAAG_PARTITIONS_HPP
#define RAAG_PARTITIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// A Whitehead partition of the signed generators into two sides and the
// link of a base vertex. Stored in canonical orientation: the positive
// literal of the least base vertex lies in sideP.
struct WhiteheadPartition {
    LitMask sideP = 0;
    LitMask sideQ = 0;
    LitMask linkSet = 0;
    int base = -1;            // least vertex usable as a base
    VertMask splits = 0;      // vertices with their two literals on opposite sides
    VertMask bases = 0;       // split vertices whose link equals lk(base)
    VertMask mx = 0;          // maximal elements of splits under domination
    bool symmetric = false;   // splits no vertex other than its base
    bool degenerate = false;  // one side is a singleton

    bool splits_vertex(int v) const { return (splits >> v) & 1; }
    bool operator==(const WhiteheadPartition& o) const {
        return sideP == o.sideP && sideQ == o.sideQ;
    }
    bool operator<(const WhiteheadPartition& o) const {
        if (sideP != o.sideP) return sideP < o.sideP;
        return sideQ < o.sideQ;
    }
};

// Partition plus a multiplier literal whose vertex it splits.
struct WhiteheadPair {
    WhiteheadPartition partition;
    Lit multiplier = -1;
};

struct EnumOptions {
    bool symmetricOnly = false;
    bool allowDegenerate = false;
};

// Assemble and validate a partition from the side containing the positive
// base literal. Throws DomainError if the side data is not a valid partition.
WhiteheadPartition make_partition(const DefiningGraph& g, int base, LitMask sideWithBase);

// All partitions based at `base`, each exactly once, sorted by side masks.
std::vector<WhiteheadPartition> enumerate_partitions(const DefiningGraph& g, int base,
                                                     const EnumOptions& opts = {});

// Distinct non-degenerate partitions over every base, deduplicated across
// bases that serve the same partition.
std::vector<WhiteheadPartition> all_partitions(const DefiningGraph& g,
                                               bool symmetricOnly = false);

bool is_symmetric(const WhiteheadPartition& p);

// Distinct commuting bases.
bool adjacent(const DefiningGraph& g, const WhiteheadPartition& p, const WhiteheadPartition& q);

// Adjacent, or some side of p misses some side of q.
bool compatible(const DefiningGraph& g, const WhiteheadPartition& p, const WhiteheadPartition& q);

struct QuadrantReport {
    LitMask pq = 0;   // sideP(p) & sideP(q)
    LitMask pQ = 0;   // sideP(p) & sideQ(q)
    LitMask Pq = 0;   // sideQ(p) & sideP(q)
    LitMask PQ = 0;   // sideQ(p) & sideQ(q)
    // Opposite pairs are (pq, PQ) and (pQ, Pq).
};

QuadrantReport quadrants(const WhiteheadPartition& p, const WhiteheadPartition& q);

// For incompatible p, q: two (possibly degenerate) partitions whose sides
// are a pair of opposite quadrants, each having a maximal split vertex in
// {v, w} for some maximal v of p and w of q. Empty result would contradict
// the existence guarantee and is surfaced by the property tests.
std::optional<std::pair<WhiteheadPartition, WhiteheadPartition>>
opposite_quadrant_partitions(const DefiningGraph& g, const WhiteheadPartition& p,
                             const WhiteheadPartition& q);

// Bit-exact text form "( lits | lits | lits )", canonical sideP first.
std::string partition_text(const DefiningGraph& g, const WhiteheadPartition& p);
WhiteheadPartition parse_partition(const DefiningGraph& g, const std::string& text);

} // namespace raag

#endif
