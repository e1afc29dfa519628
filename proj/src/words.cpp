#include "raag/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace raag {

Word word_inverse(const Word& w) {
    Word out;
    out.ls.reserve(w.ls.size());
    for (auto it = w.ls.rbegin(); it != w.ls.rend(); ++it) out.ls.push_back(lit_inverse(*it));
    return out;
}

Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    out.ls.insert(out.ls.end(), b.ls.begin(), b.ls.end());
    return out;
}

static bool commute(const DefiningGraph& g, Lit x, Lit y) {
    return lit_vertex(x) == lit_vertex(y) || g.adjacent(lit_vertex(x), lit_vertex(y));
}

// Left-to-right stacking: before pushing x, delete the latest x^-1 that can
// shuffle next to it. Reaches the fully cancelled trace.
static std::vector<Lit> reduce_lits(const DefiningGraph& g, const std::vector<Lit>& in) {
    std::vector<Lit> out;
    out.reserve(in.size());
    for (Lit x : in) {
        bool cancelled = false;
        for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
            if (out[i] == lit_inverse(x)) {
                out.erase(out.begin() + i);
                cancelled = true;
                break;
            }
            if (!commute(g, out[i], x)) break;
        }
        if (!cancelled) out.push_back(x);
    }
    return out;
}

// Greedy least-letter linearization of the trace of a reduced word.
static std::vector<Lit> lex_linearize(const DefiningGraph& g, std::vector<Lit> ls) {
    int n = static_cast<int>(ls.size());
    std::vector<Lit> out;
    out.reserve(n);
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            bool blocked = false;
            for (int k = 0; k < j && !blocked; ++k)
                if (!used[k] && !commute(g, ls[k], ls[j])) blocked = true;
            if (!blocked && (best < 0 || ls[j] < ls[best])) best = j;
        }
        used[best] = true;
        out.push_back(ls[best]);
    }
    return out;
}

Word normal_form(const DefiningGraph& g, const Word& w) {
    return Word{lex_linearize(g, reduce_lits(g, w.ls))};
}

bool is_reduced(const DefiningGraph& g, const Word& w) {
    return reduce_lits(g, w.ls).size() == w.ls.size();
}

// Removable conjugation pair: ls[i] shuffles to the front, its inverse at
// j > i shuffles to the back.
static bool find_cyclic_pair(const DefiningGraph& g, const std::vector<Lit>& ls, int& oi, int& oj) {
    int n = static_cast<int>(ls.size());
    for (int i = 0; i < n; ++i) {
        bool frontable = true;
        for (int k = 0; k < i && frontable; ++k)
            if (!commute(g, ls[k], ls[i])) frontable = false;
        if (!frontable) continue;
        for (int j = i + 1; j < n; ++j) {
            if (ls[j] != lit_inverse(ls[i])) continue;
            bool backable = true;
            for (int k = j + 1; k < n && backable; ++k)
                if (!commute(g, ls[k], ls[j])) backable = false;
            if (backable) {
                oi = i;
                oj = j;
                return true;
            }
        }
    }
    return false;
}

Word cyclic_reduce(const DefiningGraph& g, const Word& w) {
    std::vector<Lit> ls = reduce_lits(g, w.ls);
    int i, j;
    while (find_cyclic_pair(g, ls, i, j)) {
        ls.erase(ls.begin() + j);
        ls.erase(ls.begin() + i);
    }
    return Word{lex_linearize(g, std::move(ls))};
}

bool is_cyclically_reduced(const DefiningGraph& g, const Word& w) {
    return cyclic_reduce(g, w).size() == w.size();
}

int conj_length(const DefiningGraph& g, const Word& w) { return cyclic_reduce(g, w).size(); }

// Closure of the cyclically reduced representative under pivots
// (x.v -> v.x for a letter x that shuffles to the front), deduplicated by
// normal form. Covers every cyclic permutation of the trace; plain rotations
// of one linearization are not enough.
CyclicClass conj_canon(const DefiningGraph& g, const Word& w) {
    Word u = cyclic_reduce(g, w);
    int len = u.size();
    if (len == 0) return CyclicClass{Word{}, 0};
    constexpr size_t kClosureCap = 200000;
    std::set<Word> seen{u};
    std::vector<Word> todo{u};
    Word best = u;
    while (!todo.empty()) {
        Word cur = todo.back();
        todo.pop_back();
        if (cur < best) best = cur;
        for (int i = 0; i < len; ++i) {
            bool frontable = true;
            for (int k = 0; k < i && frontable; ++k)
                if (!commute(g, cur.ls[k], cur.ls[i])) frontable = false;
            if (!frontable) continue;
            std::vector<Lit> piv;
            piv.reserve(len);
            for (int k = 0; k < len; ++k)
                if (k != i) piv.push_back(cur.ls[k]);
            piv.push_back(cur.ls[i]);
            Word next{lex_linearize(g, std::move(piv))};
            if (seen.insert(next).second) {
                if (seen.size() > kClosureCap)
                    throw BudgetError("conjugacy canonicalization closure too large");
                todo.push_back(next);
            }
        }
    }
    return CyclicClass{best, len};
}

std::vector<CyclicClass> enumerate_classes(const DefiningGraph& g, int maxLen) {
    if (maxLen < 1) return {};
    std::set<CyclicClass> seen;
    int nl = 2 * g.n();
    std::vector<Lit> cur;
    // Depth-first over all raw words of length <= maxLen.
    std::vector<int> stack{-1};
    while (!stack.empty()) {
        int next = ++stack.back();
        if (next >= nl) {
            stack.pop_back();
            if (!cur.empty()) cur.pop_back();
            continue;
        }
        cur.push_back(next);
        CyclicClass c = conj_canon(g, Word{cur});
        if (c.length > 0) seen.insert(std::move(c));
        if (static_cast<int>(cur.size()) < maxLen) {
            stack.push_back(-1);
        } else {
            cur.pop_back();
        }
    }
    return std::vector<CyclicClass>(seen.begin(), seen.end());
}

std::string word_text(const DefiningGraph& g, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (int i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += lit_text(g, w.ls[i]);
    }
    return out;
}

Word parse_word(const DefiningGraph& g, const std::string& text, int line) {
    std::istringstream in(text);
    std::vector<std::string> toks;
    std::string tok;
    while (in >> tok) toks.push_back(tok);
    if (toks.empty()) throw ParseError("empty word (use '1' for the identity)", line);
    if (toks.size() == 1 && toks[0] == "1") return Word{};
    Word w;
    for (const auto& t : toks) {
        bool positive = true;
        std::string name = t;
        if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
            positive = false;
            name = t.substr(0, t.size() - 3);
        }
        if (!g.has_vertex(name)) throw ParseError("unknown vertex '" + name + "' in word", line);
        w.ls.push_back(make_lit(g.index.at(name), positive));
    }
    return w;
}

} // namespace raag
