#ifndef RAAG_NORMS_HPP
#define RAAG_NORMS_HPP

#include <optional>
#include <vector>

#include "raag/autos.hpp"

namespace raag {

// Implemented finite prefix of the lexicographic norm: the W entry, the
// length-<=2 entry, then per-class lengths up to the tail bound.
struct NormPrefix {
    long long wEntry = 0;
    long long zeroEntry = 0;
    std::vector<int> tail;

    bool operator==(const NormPrefix& o) const {
        return wEntry == o.wEntry && zeroEntry == o.zeroEntry && tail == o.tail;
    }
    bool operator<(const NormPrefix& o) const {
        if (wEntry != o.wEntry) return wEntry < o.wEntry;
        if (zeroEntry != o.zeroEntry) return zeroEntry < o.zeroEntry;
        return tail < o.tail;
    }
};

// A marking together with its cached inverse, maintained through the move
// word rather than by algebraic inversion.
struct MarkedSalvetti {
    RaagAutomorphism marking;
    RaagAutomorphism inverse;
};

// Validates the homomorphism property and that the move word inverts the
// marking back to the identity.
MarkedSalvetti make_marked_salvetti(const DefiningGraph& g, const RaagAutomorphism& marking);

MarkedSalvetti identity_salvetti(const DefiningGraph& g);

// |P|_w: hyperplane crossings of the cyclic word w. Link letters ride on
// either side, so they are dropped and the remaining cyclic pairs crossing
// the partition are counted.
int count_partition(const DefiningGraph& g, const WhiteheadPartition& p, const Word& w);

// |v|_w: occurrences of either literal of v.
int count_vertex(int v, const Word& w);

int ell(const DefiningGraph& g, const MarkedSalvetti& sigma, const CyclicClass& cls);

NormPrefix norm_prefix(const DefiningGraph& g, const MarkedSalvetti& sigma,
                       const std::vector<CyclicClass>& W, int tailBound);

// Predicted post-move length: ell(g) + |P|_w - |m|_w with w the cyclically
// reduced representative of the pulled-back class.
int predicted_length(const DefiningGraph& g, const MarkedSalvetti& sigma,
                     const WhiteheadPair& pair, const CyclicClass& cls);

MarkedSalvetti whitehead_move(const DefiningGraph& g, const MarkedSalvetti& sigma,
                              const WhiteheadPair& pair);

// First pair (base, partition, multiplier in mx) whose delta vector over
// (W, length<=2 classes, tail classes) is lexicographically negative.
// Throws UndecidedError when the only improvements tie through the whole
// prefix.
std::optional<WhiteheadPair> find_reductive(const DefiningGraph& g, const MarkedSalvetti& sigma,
                                            const std::vector<CyclicClass>& W, int tailBound);

struct MinimizeStep {
    WhiteheadPair pair;
    long long deltaW = 0;
    NormPrefix prefixAfter;
};

struct MinimizeResult {
    MarkedSalvetti sigma;
    std::vector<MinimizeStep> steps;
};

MinimizeResult minimize(const DefiningGraph& g, const MarkedSalvetti& sigma,
                        const std::vector<CyclicClass>& W, int tailBound = 3);

// The length-one classes of the graph, in canonical order.
std::vector<CyclicClass> length_one_classes(const DefiningGraph& g);

// Canonicalize and deduplicate a class set.
std::vector<CyclicClass> canonical_class_set(const DefiningGraph& g,
                                             const std::vector<Word>& words);

} // namespace raag

#endif
