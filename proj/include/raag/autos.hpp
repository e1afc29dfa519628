#ifndef RAAG_AUTOS_HPP
#define RAAG_AUTOS_HPP

#include <optional>
#include <string>
#include <vector>

#include "raag/partitions.hpp"
#include "raag/words.hpp"

namespace raag {

struct ElementaryMove {
    enum class Kind { Inversion, GraphSymmetry, Whitehead };
    Kind kind = Kind::Inversion;
    int vertex = -1;            // Inversion
    std::vector<int> perm;      // GraphSymmetry: perm[v] = image vertex
    WhiteheadPair pair;         // Whitehead
};

// Generator-image map plus the elementary-move word that produced it.
// Moves are stored left to right in application order.
struct RaagAutomorphism {
    std::vector<Word> images;
    std::vector<ElementaryMove> moves;

    bool is_identity_map(const DefiningGraph& g) const {
        for (int v = 0; v < g.n(); ++v)
            if (images[v].ls != std::vector<Lit>{make_lit(v, true)}) return false;
        return true;
    }
};

RaagAutomorphism identity_auto(const DefiningGraph& g);
RaagAutomorphism inversion_auto(const DefiningGraph& g, int v);
RaagAutomorphism symmetry_auto(const DefiningGraph& g, const std::vector<int>& perm);
RaagAutomorphism whitehead_auto(const DefiningGraph& g, const WhiteheadPair& pair);

// Partial conjugation of a component of the graph minus st(m).
RaagAutomorphism partial_conjugation(const DefiningGraph& g, int m, VertMask component);

// compose(a, b): apply b, then a.
RaagAutomorphism compose(const DefiningGraph& g, const RaagAutomorphism& a,
                         const RaagAutomorphism& b);
RaagAutomorphism invert(const DefiningGraph& g, const RaagAutomorphism& a);
Word apply(const DefiningGraph& g, const RaagAutomorphism& a, const Word& w);

// Inverse of one move: itself / inverse permutation / flipped pair with
// inverted multiplier.
ElementaryMove inverse_move(const DefiningGraph& g, const ElementaryMove& m);
RaagAutomorphism move_auto(const DefiningGraph& g, const ElementaryMove& m);

// Every edge commutator maps to the trivial word.
bool check_homomorphism(const DefiningGraph& g, const RaagAutomorphism& a);

// Every image a conjugate of a signed generator, inducing a bijection.
bool is_symmetric_auto(const DefiningGraph& g, const RaagAutomorphism& a);

// All edge-preserving vertex permutations, brute force.
std::vector<std::vector<int>> graph_symmetries(const DefiningGraph& g);

// Element of Omega: graph symmetry followed by inversions.
// Sends v to perm[v] or its inverse according to inverted bits (indexed by
// the image vertex).
struct SignedSymmetry {
    std::vector<int> perm;
    VertMask inverted = 0;
};

std::vector<SignedSymmetry> signed_symmetries(const DefiningGraph& g);
RaagAutomorphism signed_symmetry_auto(const DefiningGraph& g, const SignedSymmetry& s);

// An automorphism considered up to inner automorphisms, and additionally up
// to Omega when modOmega is set.
struct OuterMarking {
    RaagAutomorphism rep;
    bool modOmega = false;
};

struct OuterEqualResult {
    enum class Status { Equal, NotEqual, Undecided };
    Status status = Status::NotEqual;
    Word witness; // valid when Equal: a(v) = witness b(v) witness^-1
};

// Decides equality of a and b in Out within a bounded conjugator search.
// NotEqual certifies no witness exists up to the bound; Undecided reports a
// blown candidate budget.
OuterEqualResult outer_equal(const DefiningGraph& g, const RaagAutomorphism& a,
                             const RaagAutomorphism& b);

OuterEqualResult is_inner(const DefiningGraph& g, const RaagAutomorphism& e);

// Decomposition w = prefix . core . prefix^-1 with core cyclically reduced.
struct PeelResult {
    Word prefix;
    Word core;
};
PeelResult peel_conjugator(const DefiningGraph& g, const Word& w);

// Representative of { omega o a : omega in Omega } minimizing the image map
// under (length, vertex-then-positive-sign letter order).
RaagAutomorphism canon_mod_omega(const DefiningGraph& g, const RaagAutomorphism& a);

// Marking equivalence: a = b o omega in Out for some omega in Omega.
bool omega_outer_equal(const DefiningGraph& g, const RaagAutomorphism& a,
                       const RaagAutomorphism& b);
bool omega_outer_equal(const DefiningGraph& g, const std::vector<SignedSymmetry>& syms,
                       const RaagAutomorphism& a, const RaagAutomorphism& b);

// Equality of outer markings: outer_equal, plus the Omega orbit when the
// modOmega flags are set (they must agree).
bool outer_markings_equal(const DefiningGraph& g, const OuterMarking& a, const OuterMarking& b);

std::string move_text(const DefiningGraph& g, const ElementaryMove& m);
std::string automorphism_text(const DefiningGraph& g, const RaagAutomorphism& a);

// Automorphism file: one "<v> -> <word>" line per generator plus optional
// "move: ..." lines that must compose to the image map.
RaagAutomorphism parse_automorphism(const DefiningGraph& g, const std::string& text);

} // namespace raag

#endif
