#include "raag/autos.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace raag {

RaagAutomorphism identity_auto(const DefiningGraph& g) {
    RaagAutomorphism a;
    a.images.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) a.images.push_back(Word{{make_lit(v, true)}});
    return a;
}

RaagAutomorphism inversion_auto(const DefiningGraph& g, int v) {
    if (v < 0 || v >= g.n()) throw DomainError("unknown vertex index");
    RaagAutomorphism a = identity_auto(g);
    a.images[v] = Word{{make_lit(v, false)}};
    ElementaryMove m;
    m.kind = ElementaryMove::Kind::Inversion;
    m.vertex = v;
    a.moves.push_back(std::move(m));
    return a;
}

static bool perm_preserves_edges(const DefiningGraph& g, const std::vector<int>& perm) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
    return true;
}

RaagAutomorphism symmetry_auto(const DefiningGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n() || !perm_preserves_edges(g, perm))
        throw DomainError("permutation does not preserve the edge set");
    RaagAutomorphism a;
    for (int v = 0; v < g.n(); ++v) a.images.push_back(Word{{make_lit(perm[v], true)}});
    ElementaryMove m;
    m.kind = ElementaryMove::Kind::GraphSymmetry;
    m.perm = perm;
    a.moves.push_back(std::move(m));
    return a;
}

RaagAutomorphism whitehead_auto(const DefiningGraph& g, const WhiteheadPair& pair) {
    const WhiteheadPartition& p = pair.partition;
    Lit mu = pair.multiplier;
    int mvert = lit_vertex(mu);
    if (!p.splits_vertex(mvert)) throw DomainError("multiplier vertex is not split");
    LitMask muSide = (p.sideP & lit_bit(mu)) ? p.sideP : p.sideQ;
    if ((muSide & lit_bit(mu)) == 0) throw DomainError("multiplier literal missing from both sides");

    RaagAutomorphism a;
    for (int v = 0; v < g.n(); ++v) {
        Lit vp = make_lit(v, true), vn = make_lit(v, false);
        if (v == mvert) {
            a.images.push_back(Word{{vp}});
        } else if (p.splits_vertex(v)) {
            if (muSide & lit_bit(vp))
                a.images.push_back(Word{{vp, lit_inverse(mu)}}); // v -> v mu^-1
            else
                a.images.push_back(Word{{mu, vp}}); // v -> mu v
        } else if ((muSide & lit_bit(vp)) && (muSide & lit_bit(vn))) {
            a.images.push_back(Word{{mu, vp, lit_inverse(mu)}}); // v -> mu v mu^-1
        } else {
            a.images.push_back(Word{{vp}});
        }
    }
    ElementaryMove m;
    m.kind = ElementaryMove::Kind::Whitehead;
    m.pair = pair;
    a.moves.push_back(std::move(m));
    return a;
}

RaagAutomorphism partial_conjugation(const DefiningGraph& g, int m, VertMask component) {
    auto comps = vertex_components_outside_star(g, m);
    if (std::find(comps.begin(), comps.end(), component) == comps.end())
        throw DomainError("not a connected component of the graph minus st(m)");
    LitMask side = lit_bit(make_lit(m, true));
    VertMask c = component;
    while (c) {
        int v = __builtin_ctz(c);
        c &= c - 1;
        side |= lit_bit(make_lit(v, true)) | lit_bit(make_lit(v, false));
    }
    WhiteheadPair pair;
    pair.partition = make_partition(g, m, side);
    pair.multiplier = make_lit(m, true);
    return whitehead_auto(g, pair);
}

Word apply(const DefiningGraph& g, const RaagAutomorphism& a, const Word& w) {
    Word out;
    for (Lit x : w.ls) {
        const Word& img = a.images[lit_vertex(x)];
        if (lit_positive(x)) {
            out.ls.insert(out.ls.end(), img.ls.begin(), img.ls.end());
        } else {
            Word inv = word_inverse(img);
            out.ls.insert(out.ls.end(), inv.ls.begin(), inv.ls.end());
        }
    }
    return normal_form(g, out);
}

RaagAutomorphism compose(const DefiningGraph& g, const RaagAutomorphism& a,
                         const RaagAutomorphism& b) {
    RaagAutomorphism out;
    out.images.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) out.images.push_back(apply(g, a, b.images[v]));
    out.moves = b.moves;
    out.moves.insert(out.moves.end(), a.moves.begin(), a.moves.end());
    return out;
}

ElementaryMove inverse_move(const DefiningGraph& g, const ElementaryMove& m) {
    ElementaryMove out = m;
    switch (m.kind) {
    case ElementaryMove::Kind::Inversion:
        break;
    case ElementaryMove::Kind::GraphSymmetry: {
        out.perm.assign(m.perm.size(), 0);
        for (int v = 0; v < static_cast<int>(m.perm.size()); ++v) out.perm[m.perm[v]] = v;
        break;
    }
    case ElementaryMove::Kind::Whitehead: {
        int mv = lit_vertex(m.pair.multiplier);
        LitMask flip = lit_bit(make_lit(mv, false)) | lit_bit(make_lit(mv, true));
        WhiteheadPartition p = m.pair.partition;
        LitMask side = (p.sideP & lit_bit(make_lit(p.base, true))) ? p.sideP : p.sideQ;
        out.pair.partition = make_partition(g, p.base, side ^ flip);
        out.pair.multiplier = lit_inverse(m.pair.multiplier);
        break;
    }
    }
    return out;
}

RaagAutomorphism move_auto(const DefiningGraph& g, const ElementaryMove& m) {
    switch (m.kind) {
    case ElementaryMove::Kind::Inversion:
        return inversion_auto(g, m.vertex);
    case ElementaryMove::Kind::GraphSymmetry:
        return symmetry_auto(g, m.perm);
    case ElementaryMove::Kind::Whitehead:
        return whitehead_auto(g, m.pair);
    }
    throw DomainError("bad move kind");
}

RaagAutomorphism invert(const DefiningGraph& g, const RaagAutomorphism& a) {
    // Reversed inverse move word: the last-applied move is undone first.
    RaagAutomorphism out = identity_auto(g);
    for (auto it = a.moves.rbegin(); it != a.moves.rend(); ++it)
        out = compose(g, move_auto(g, inverse_move(g, *it)), out);
    return out;
}

bool check_homomorphism(const DefiningGraph& g, const RaagAutomorphism& a) {
    if (static_cast<int>(a.images.size()) != g.n()) return false;
    for (const auto& [u, v] : g.edges) {
        Word comm = word_concat(word_concat(a.images[u], a.images[v]),
                                word_concat(word_inverse(a.images[u]), word_inverse(a.images[v])));
        if (!normal_form(g, comm).empty()) return false;
    }
    return true;
}

bool is_symmetric_auto(const DefiningGraph& g, const RaagAutomorphism& a) {
    VertMask hit = 0;
    for (int v = 0; v < g.n(); ++v) {
        Word core = cyclic_reduce(g, a.images[v]);
        if (core.size() != 1) return false;
        int target = lit_vertex(core.ls[0]);
        if (hit & vert_bit(target)) return false;
        hit |= vert_bit(target);
    }
    return hit == (VertMask(1) << g.n()) - 1;
}

std::vector<std::vector<int>> graph_symmetries(const DefiningGraph& g) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (perm_preserves_edges(g, perm)) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<SignedSymmetry> signed_symmetries(const DefiningGraph& g) {
    std::vector<SignedSymmetry> out;
    for (const auto& perm : graph_symmetries(g))
        for (VertMask inv = 0; inv < (VertMask(1) << g.n()); ++inv)
            out.push_back(SignedSymmetry{perm, inv});
    return out;
}

RaagAutomorphism signed_symmetry_auto(const DefiningGraph& g, const SignedSymmetry& s) {
    RaagAutomorphism a = symmetry_auto(g, s.perm);
    for (int v = 0; v < g.n(); ++v) {
        int w = s.perm[v];
        if ((s.inverted >> w) & 1) {
            a.images[v] = Word{{make_lit(w, false)}};
            ElementaryMove m;
            m.kind = ElementaryMove::Kind::Inversion;
            m.vertex = w;
            a.moves.push_back(std::move(m));
        }
    }
    return a;
}

static Word apply_signed_symmetry(const DefiningGraph& g, const SignedSymmetry& s, const Word& w) {
    Word out;
    out.ls.reserve(w.ls.size());
    for (Lit x : w.ls) {
        int v = s.perm[lit_vertex(x)];
        bool pos = lit_positive(x) != (((s.inverted >> v) & 1) != 0);
        out.ls.push_back(make_lit(v, pos));
    }
    return normal_form(g, out);
}

PeelResult peel_conjugator(const DefiningGraph& g, const Word& w) {
    auto commute = [&](Lit x, Lit y) {
        return lit_vertex(x) == lit_vertex(y) || g.adjacent(lit_vertex(x), lit_vertex(y));
    };
    std::vector<Lit> ls = normal_form(g, w).ls;
    PeelResult r;
    bool progress = true;
    while (progress) {
        progress = false;
        int n = static_cast<int>(ls.size());
        for (int i = 0; i < n && !progress; ++i) {
            bool frontable = true;
            for (int k = 0; k < i && frontable; ++k)
                if (!commute(ls[k], ls[i])) frontable = false;
            if (!frontable) continue;
            for (int j = i + 1; j < n && !progress; ++j) {
                if (ls[j] != lit_inverse(ls[i])) continue;
                bool backable = true;
                for (int k = j + 1; k < n && backable; ++k)
                    if (!commute(ls[k], ls[j])) backable = false;
                if (!backable) continue;
                r.prefix.ls.push_back(ls[i]);
                ls.erase(ls.begin() + j);
                ls.erase(ls.begin() + i);
                progress = true;
            }
        }
    }
    r.core = normal_form(g, Word{ls});
    return r;
}

// Candidate budget for the conjugator prefix search inside is_inner.
static constexpr long long kInnerCandidateBudget = 500000;

OuterEqualResult is_inner(const DefiningGraph& g, const RaagAutomorphism& e) {
    OuterEqualResult res;
    if (e.is_identity_map(g)) {
        res.status = OuterEqualResult::Status::Equal;
        return res;
    }
    std::vector<PeelResult> peels(g.n());
    int maxImage = 1;
    for (int v = 0; v < g.n(); ++v) {
        peels[v] = peel_conjugator(g, e.images[v]);
        maxImage = std::max(maxImage, e.images[v].size());
        if (peels[v].core.ls != std::vector<Lit>{make_lit(v, true)}) return res; // NotEqual
    }
    int bound = std::max(8, 2 * maxImage);

    // A witness g satisfies nf(prefix(v)^-1 g) in <st(v)> for every v; each
    // letter outside st(v) in that residue must still be cancelled, which
    // costs at least one more letter of g. Walk normal-form prefixes with
    // that lower bound as the prune.
    std::vector<Word> invPrefixes(g.n());
    for (int v = 0; v < g.n(); ++v) invPrefixes[v] = word_inverse(peels[v].prefix);

    auto residue_cost = [&](const Word& h, int v) {
        Word r = normal_form(g, word_concat(invPrefixes[v], h));
        int cost = 0;
        for (Lit x : r.ls)
            if (!((g.star_mask(v) >> lit_vertex(x)) & 1)) ++cost;
        return cost;
    };
    auto feasible = [&](const Word& h, int& maxCost) {
        maxCost = 0;
        for (int v = 0; v < g.n(); ++v) maxCost = std::max(maxCost, residue_cost(h, v));
        return h.size() + maxCost <= bound;
    };
    auto is_witness = [&](const Word& cand) {
        Word inv = word_inverse(cand);
        for (int v = 0; v < g.n(); ++v) {
            Word conj = normal_form(g, word_concat(word_concat(inv, e.images[v]), cand));
            if (conj.ls != std::vector<Lit>{make_lit(v, true)}) return false;
        }
        return true;
    };

    long long tried = 0;
    std::set<Word> level{Word{}};
    for (int len = 0; len <= bound && !level.empty(); ++len) {
        std::set<Word> next;
        for (const Word& h : level) {
            if (++tried > kInnerCandidateBudget)
                throw UndecidedError("undecided at bound: conjugator search budget exhausted");
            int maxCost = 0;
            if (!feasible(h, maxCost)) continue;
            if (maxCost == 0 && is_witness(h)) {
                res.status = OuterEqualResult::Status::Equal;
                res.witness = h;
                return res;
            }
            if (len == bound) continue;
            for (Lit x = 0; x < 2 * g.n(); ++x) {
                Word h2 = normal_form(g, word_concat(h, Word{{x}}));
                if (h2.size() != len + 1) continue;
                // A letter that neither cancels into the residue of v nor
                // lies in st(v) can never be removed by later letters, so
                // it rules the whole branch out.
                bool junk = false;
                for (int v = 0; v < g.n() && !junk; ++v)
                    if (residue_cost(h2, v) > residue_cost(h, v)) junk = true;
                if (!junk) next.insert(std::move(h2));
            }
        }
        level = std::move(next);
    }
    return res; // NotEqual: no witness within the length bound
}

OuterEqualResult outer_equal(const DefiningGraph& g, const RaagAutomorphism& a,
                             const RaagAutomorphism& b) {
    return is_inner(g, compose(g, a, invert(g, b)));
}

// Image-map order for Omega canonicalization: lengths first, then letters
// by (vertex, positive before inverse).
static int canon_lit_key(Lit x) { return 2 * lit_vertex(x) + (lit_positive(x) ? 0 : 1); }

static bool canon_images_less(const std::vector<Word>& a, const std::vector<Word>& b) {
    for (size_t v = 0; v < a.size(); ++v) {
        if (a[v].size() != b[v].size()) return a[v].size() < b[v].size();
        for (int i = 0; i < a[v].size(); ++i)
            if (a[v].ls[i] != b[v].ls[i]) return canon_lit_key(a[v].ls[i]) < canon_lit_key(b[v].ls[i]);
    }
    return false;
}

RaagAutomorphism canon_mod_omega(const DefiningGraph& g, const RaagAutomorphism& a) {
    RaagAutomorphism best = a;
    bool haveBest = false;
    const SignedSymmetry* bestSym = nullptr;
    auto syms = signed_symmetries(g);
    for (const auto& s : syms) {
        std::vector<Word> images;
        images.reserve(g.n());
        for (int v = 0; v < g.n(); ++v) images.push_back(apply_signed_symmetry(g, s, a.images[v]));
        if (!haveBest || canon_images_less(images, best.images)) {
            best.images = std::move(images);
            bestSym = &s;
            haveBest = true;
        }
    }
    best.moves = a.moves;
    if (bestSym) {
        RaagAutomorphism w = signed_symmetry_auto(g, *bestSym);
        best.moves.insert(best.moves.end(), w.moves.begin(), w.moves.end());
    }
    return best;
}

bool omega_outer_equal(const DefiningGraph& g, const std::vector<SignedSymmetry>& syms,
                       const RaagAutomorphism& a, const RaagAutomorphism& b) {
    // Core maps are inner invariants; prefilter before the witness search.
    auto core_map = [&](const RaagAutomorphism& x) {
        std::vector<Lit> cores(g.n(), -1);
        for (int v = 0; v < g.n(); ++v) {
            Word c = cyclic_reduce(g, x.images[v]);
            cores[v] = c.size() == 1 ? c.ls[0] : -1;
        }
        return cores;
    };
    auto coreA = core_map(a);
    auto coreB = core_map(b);
    for (const auto& s : syms) {
        // (b o omega)(v) = b(omega(v)); the core transforms accordingly.
        bool plausible = true;
        for (int v = 0; v < g.n() && plausible; ++v) {
            int w = s.perm[v];
            bool flip = (s.inverted >> w) & 1;
            Lit expected = coreB[w] < 0 ? Lit(-1) : (flip ? lit_inverse(coreB[w]) : coreB[w]);
            if (coreA[v] != expected) plausible = false;
        }
        if (!plausible) continue;
        RaagAutomorphism bo = compose(g, b, signed_symmetry_auto(g, s));
        if (outer_equal(g, a, bo).status == OuterEqualResult::Status::Equal) return true;
    }
    return false;
}

bool omega_outer_equal(const DefiningGraph& g, const RaagAutomorphism& a,
                       const RaagAutomorphism& b) {
    return omega_outer_equal(g, signed_symmetries(g), a, b);
}

bool outer_markings_equal(const DefiningGraph& g, const OuterMarking& a, const OuterMarking& b) {
    if (a.modOmega != b.modOmega) throw DomainError("mixed modOmega comparison");
    if (a.modOmega) return omega_outer_equal(g, a.rep, b.rep);
    return outer_equal(g, a.rep, b.rep).status == OuterEqualResult::Status::Equal;
}

std::string move_text(const DefiningGraph& g, const ElementaryMove& m) {
    switch (m.kind) {
    case ElementaryMove::Kind::Inversion:
        return "inv " + g.names[m.vertex];
    case ElementaryMove::Kind::GraphSymmetry: {
        std::string out = "sym";
        for (int v = 0; v < g.n(); ++v) out += " " + g.names[v] + ":" + g.names[m.perm[v]];
        return out;
    }
    case ElementaryMove::Kind::Whitehead:
        return "wh " + partition_text(g, m.pair.partition) + " @ " + lit_text(g, m.pair.multiplier);
    }
    return "";
}

std::string automorphism_text(const DefiningGraph& g, const RaagAutomorphism& a) {
    std::string out;
    for (int v = 0; v < g.n(); ++v)
        out += g.names[v] + " -> " + word_text(g, a.images[v]) + "\n";
    for (const auto& m : a.moves) out += "move: " + move_text(g, m) + "\n";
    return out;
}

static ElementaryMove parse_move(const DefiningGraph& g, const std::string& body, int line) {
    std::istringstream in(body);
    std::string kind;
    in >> kind;
    ElementaryMove m;
    if (kind == "inv") {
        std::string name;
        in >> name;
        if (!g.has_vertex(name)) throw ParseError("unknown vertex in move", line);
        m.kind = ElementaryMove::Kind::Inversion;
        m.vertex = g.index.at(name);
    } else if (kind == "sym") {
        m.kind = ElementaryMove::Kind::GraphSymmetry;
        m.perm.assign(g.n(), -1);
        std::string tok;
        while (in >> tok) {
            auto colon = tok.find(':');
            if (colon == std::string::npos) throw ParseError("bad sym entry '" + tok + "'", line);
            std::string from = tok.substr(0, colon), to = tok.substr(colon + 1);
            if (!g.has_vertex(from) || !g.has_vertex(to))
                throw ParseError("unknown vertex in sym move", line);
            m.perm[g.index.at(from)] = g.index.at(to);
        }
        for (int v : m.perm)
            if (v < 0) throw ParseError("sym move must list every vertex", line);
    } else if (kind == "wh") {
        std::string rest;
        std::getline(in, rest);
        auto at = rest.rfind('@');
        if (at == std::string::npos) throw ParseError("wh move needs '@ <multiplier>'", line);
        m.kind = ElementaryMove::Kind::Whitehead;
        try {
            m.pair.partition = parse_partition(g, rest.substr(0, at));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line);
        }
        Word mult = parse_word(g, rest.substr(at + 1), line);
        if (mult.size() != 1) throw ParseError("multiplier must be a single literal", line);
        m.pair.multiplier = mult.ls[0];
        if (!m.pair.partition.splits_vertex(lit_vertex(m.pair.multiplier)))
            throw ParseError("multiplier vertex is not split by the partition", line);
    } else {
        throw ParseError("unknown move kind '" + kind + "'", line);
    }
    return m;
}

RaagAutomorphism parse_automorphism(const DefiningGraph& g, const std::string& text) {
    std::vector<std::optional<Word>> images(g.n());
    std::vector<ElementaryMove> moves;
    std::istringstream in(text);
    std::string raw;
    int lineNo = 0;
    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = raw;
        size_t b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r\n");
        line = line.substr(b, e - b + 1);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("move:", 0) == 0) {
            moves.push_back(parse_move(g, line.substr(5), lineNo));
            continue;
        }
        auto arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError("expected '<vertex> -> <word>'", lineNo);
        std::istringstream lhs(line.substr(0, arrow));
        std::string name;
        lhs >> name;
        std::string extra;
        if (lhs >> extra) throw ParseError("bad image line", lineNo);
        if (!g.has_vertex(name)) throw ParseError("unknown vertex '" + name + "'", lineNo);
        int v = g.index.at(name);
        if (images[v]) throw ParseError("duplicate image for '" + name + "'", lineNo);
        images[v] = normal_form(g, parse_word(g, line.substr(arrow + 2), lineNo));
    }
    RaagAutomorphism a;
    for (int v = 0; v < g.n(); ++v) {
        if (!images[v]) throw ParseError("missing image for '" + g.names[v] + "'");
        a.images.push_back(*images[v]);
    }
    a.moves = moves;

    if (!check_homomorphism(g, a))
        throw DomainError("images do not define a homomorphism");
    RaagAutomorphism fromMoves = identity_auto(g);
    for (const auto& m : a.moves) fromMoves = compose(g, move_auto(g, m), fromMoves);
    if (a.moves.empty()) {
        if (!a.is_identity_map(g))
            throw DomainError(
                "invertibility check fails: non-identity automorphism needs 'move:' lines");
    } else if (fromMoves.images != a.images) {
        throw DomainError("moves do not compose to the stated images");
    }
    return a;
}

} // namespace raag
