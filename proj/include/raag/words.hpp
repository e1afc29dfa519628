#ifndef RAAG_WORDS_HPP
#define RAAG_WORDS_HPP

#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// A word in the group presented by the graph: a sequence of literals.
struct Word {
    std::vector<Lit> ls;

    bool empty() const { return ls.empty(); }
    int size() const { return static_cast<int>(ls.size()); }
    bool operator==(const Word& o) const { return ls == o.ls; }
    bool operator!=(const Word& o) const { return ls != o.ls; }
    bool operator<(const Word& o) const { return ls < o.ls; }
};

Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);

// Fully cancelled word, linearized as the lexicographically least
// topological order of its trace (letter order: vertex declaration order,
// inverse sign before positive sign).
Word normal_form(const DefiningGraph& g, const Word& w);

// True when no commutation shuffle exposes a cancelling pair.
bool is_reduced(const DefiningGraph& g, const Word& w);

// A minimal-length word in the conjugacy class of w, in normal form.
Word cyclic_reduce(const DefiningGraph& g, const Word& w);

bool is_cyclically_reduced(const DefiningGraph& g, const Word& w);

int conj_length(const DefiningGraph& g, const Word& w);

// Canonical conjugacy-class representative together with its length.
struct CyclicClass {
    Word rep;
    int length = 0;

    bool operator==(const CyclicClass& o) const { return rep == o.rep; }
    bool operator!=(const CyclicClass& o) const { return rep != o.rep; }
    bool operator<(const CyclicClass& o) const {
        if (length != o.length) return length < o.length;
        return rep < o.rep;
    }
};

CyclicClass conj_canon(const DefiningGraph& g, const Word& w);

// All nontrivial conjugacy classes of length at most maxLen, sorted.
std::vector<CyclicClass> enumerate_classes(const DefiningGraph& g, int maxLen);

// Word literal syntax: whitespace-separated "<v>" / "<v>^-1"; "1" = empty.
std::string word_text(const DefiningGraph& g, const Word& w);
Word parse_word(const DefiningGraph& g, const std::string& text, int line = 0);

} // namespace raag

#endif
