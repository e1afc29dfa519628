#ifndef RAAG_TESTS_FIXTURES_HPP
#define RAAG_TESTS_FIXTURES_HPP

#include <string>

#include "raag/graph.hpp"
#include "raag/words.hpp"

namespace fixtures {

// Triangle q-r-v with leaves p (at q) and s (at r).
inline raag::DefiningGraph triangle_with_leaves() {
    return raag::load_graph("vertices: p q r s v\n"
                            "edge: p q\nedge: q r\nedge: r s\nedge: q v\nedge: r v\n");
}

// Path a-b-c-d plus an isolated vertex e.
inline raag::DefiningGraph path_plus_isolated() {
    return raag::load_graph("vertices: a b c d e\n"
                            "edge: a b\nedge: b c\nedge: c d\n");
}

inline raag::DefiningGraph edgeless(int n) {
    std::string text = "vertices:";
    for (int i = 0; i < n; ++i) text += " " + std::string(1, static_cast<char>('a' + i));
    return raag::load_graph(text + "\n");
}

inline raag::DefiningGraph complete(int n) {
    std::string text = "vertices:";
    for (int i = 0; i < n; ++i) text += " " + std::string(1, static_cast<char>('a' + i));
    text += "\n";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            text += "edge: " + std::string(1, static_cast<char>('a' + i)) + " " +
                    std::string(1, static_cast<char>('a' + j)) + "\n";
    return raag::load_graph(text);
}

inline raag::Word w(const raag::DefiningGraph& g, const std::string& text) {
    return raag::parse_word(g, text);
}

} // namespace fixtures

#endif
