#include "raag/partitions.hpp"

#include "raag/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace raag {

static int popcount(LitMask m) { return __builtin_popcount(m); }

WhiteheadPartition make_partition(const DefiningGraph& g, int base, LitMask sideWithBase) {
    if (base < 0 || base >= g.n()) throw DomainError("unknown vertex index");
    LitMask basePos = lit_bit(make_lit(base, true));
    LitMask baseNeg = lit_bit(make_lit(base, false));
    LitMask lk = g.link_lits(base);
    LitMask side = sideWithBase;
    if ((side & (basePos | baseNeg)) == 0 || (side & (basePos | baseNeg)) == (basePos | baseNeg))
        throw DomainError("side must contain exactly one literal of the base");
    if (side & lk) throw DomainError("side meets the base link");
    LitMask other = g.all_lits() & ~side & ~lk;

    for (LitMask comp : components_outside_star(g, base)) {
        if ((comp & side) != 0 && (comp & side) != comp)
            throw DomainError("side cuts a component outside the base star");
    }
    bool degP = popcount(side) == 1;
    bool degQ = popcount(other) == 1;
    if (degP && degQ) throw DomainError("both sides are singletons");

    WhiteheadPartition p;
    p.sideP = side;
    p.sideQ = other;
    p.linkSet = lk;
    p.degenerate = degP || degQ;

    for (int v = 0; v < g.n(); ++v) {
        bool pv = (p.sideP >> make_lit(v, true)) & 1;
        bool pvInv = (p.sideP >> make_lit(v, false)) & 1;
        if (pv != pvInv) p.splits |= vert_bit(v);
    }
    for (int v = 0; v < g.n(); ++v)
        if (p.splits_vertex(v) && g.link_mask(v) == g.link_mask(base)) p.bases |= vert_bit(v);
    p.base = __builtin_ctz(p.bases);

    // mx: split vertices not strictly dominated within the split set.
    for (int v = 0; v < g.n(); ++v) {
        if (!p.splits_vertex(v)) continue;
        bool maximal = true;
        for (int w = 0; w < g.n() && maximal; ++w) {
            if (w == v || !p.splits_vertex(w)) continue;
            bool vw = (g.link_mask(v) & ~g.star_mask(w)) == 0;
            bool wv = (g.link_mask(w) & ~g.star_mask(v)) == 0;
            if (vw && !wv) maximal = false;
        }
        if (maximal) p.mx |= vert_bit(v);
    }
    p.symmetric = __builtin_popcount(p.splits) == 1;

    // Canonical orientation: positive literal of the least base in sideP.
    if (!((p.sideP >> make_lit(p.base, true)) & 1)) std::swap(p.sideP, p.sideQ);
    return p;
}

std::vector<WhiteheadPartition> enumerate_partitions(const DefiningGraph& g, int base,
                                                     const EnumOptions& opts) {
    if (base < 0 || base >= g.n()) throw DomainError("unknown vertex index");
    auto comps = components_outside_star(g, base);
    int k = static_cast<int>(comps.size());
    std::vector<WhiteheadPartition> out;
    for (LitMask assign = 0; assign < (LitMask(1) << k); ++assign) {
        LitMask side = lit_bit(make_lit(base, true));
        for (int i = 0; i < k; ++i)
            if ((assign >> i) & 1) side |= comps[i];
        LitMask other = g.all_lits() & ~side & ~g.link_lits(base);
        bool degP = popcount(side) == 1;
        bool degQ = popcount(other) == 1;
        if (degP && degQ) continue;
        if ((degP || degQ) && !opts.allowDegenerate) continue;
        WhiteheadPartition p = make_partition(g, base, side);
        if (opts.symmetricOnly && !p.symmetric) continue;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WhiteheadPartition> all_partitions(const DefiningGraph& g, bool symmetricOnly) {
    std::set<WhiteheadPartition> seen;
    EnumOptions opts;
    opts.symmetricOnly = symmetricOnly;
    for (int v = 0; v < g.n(); ++v)
        for (auto& p : enumerate_partitions(g, v, opts)) seen.insert(p);
    return std::vector<WhiteheadPartition>(seen.begin(), seen.end());
}

bool is_symmetric(const WhiteheadPartition& p) { return p.symmetric; }

bool adjacent(const DefiningGraph& g, const WhiteheadPartition& p, const WhiteheadPartition& q) {
    VertMask bs = p.bases;
    while (bs) {
        int m = __builtin_ctz(bs);
        bs &= bs - 1;
        if (g.link_mask(m) & q.bases) return true;
    }
    return false;
}

bool compatible(const DefiningGraph& g, const WhiteheadPartition& p, const WhiteheadPartition& q) {
    if (adjacent(g, p, q)) return true;
    return (p.sideP & q.sideP) == 0 || (p.sideP & q.sideQ) == 0 || (p.sideQ & q.sideP) == 0 ||
           (p.sideQ & q.sideQ) == 0;
}

QuadrantReport quadrants(const WhiteheadPartition& p, const WhiteheadPartition& q) {
    QuadrantReport r;
    r.pq = p.sideP & q.sideP;
    r.pQ = p.sideP & q.sideQ;
    r.Pq = p.sideQ & q.sideP;
    r.PQ = p.sideQ & q.sideQ;
    return r;
}

// All (possibly degenerate) partitions having `side` as one side.
static std::vector<WhiteheadPartition> partitions_with_side(const DefiningGraph& g, LitMask side) {
    std::set<WhiteheadPartition> out;
    if (side == 0) return {};
    for (int m = 0; m < g.n(); ++m) {
        LitMask mp = lit_bit(make_lit(m, true)), mn = lit_bit(make_lit(m, false));
        bool hasPos = (side & mp) != 0, hasNeg = (side & mn) != 0;
        if (hasPos == hasNeg) continue;
        if (side & g.link_lits(m)) continue;
        LitMask other = g.all_lits() & ~side & ~g.link_lits(m);
        if (other == 0) continue;
        if (popcount(side) == 1 && popcount(other) == 1) continue;
        bool cut = false;
        for (LitMask comp : components_outside_star(g, m))
            if ((comp & side) != 0 && (comp & side) != comp) cut = true;
        if (cut) continue;
        out.insert(make_partition(g, m, side));
    }
    return std::vector<WhiteheadPartition>(out.begin(), out.end());
}

std::optional<std::pair<WhiteheadPartition, WhiteheadPartition>>
opposite_quadrant_partitions(const DefiningGraph& g, const WhiteheadPartition& p,
                             const WhiteheadPartition& q) {
    if (compatible(g, p, q)) throw DomainError("partitions are compatible");
    QuadrantReport r = quadrants(p, q);
    std::pair<LitMask, LitMask> oppositePairs[2] = {{r.pq, r.PQ}, {r.pQ, r.Pq}};
    for (const auto& [A, B] : oppositePairs) {
        auto xs = partitions_with_side(g, A);
        auto ys = partitions_with_side(g, B);
        for (const auto& x : xs)
            for (const auto& y : ys) {
                // Some maximal element of each lies in {v, w} for a choice
                // of maximal elements v of p and w of q.
                VertMask vs = p.mx;
                while (vs) {
                    int v = __builtin_ctz(vs);
                    vs &= vs - 1;
                    VertMask ws = q.mx;
                    while (ws) {
                        int w = __builtin_ctz(ws);
                        ws &= ws - 1;
                        VertMask allowed = vert_bit(v) | vert_bit(w);
                        if ((x.mx & allowed) != 0 && (y.mx & allowed) != 0)
                            return std::make_pair(x, y);
                    }
                }
            }
    }
    return std::nullopt;
}

std::string partition_text(const DefiningGraph& g, const WhiteheadPartition& p) {
    return "( " + lit_mask_text(g, p.sideP) + " | " + lit_mask_text(g, p.sideQ) + " | " +
           lit_mask_text(g, p.linkSet) + " )";
}

WhiteheadPartition parse_partition(const DefiningGraph& g, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> toks;
    std::string tok;
    while (in >> tok) toks.push_back(tok);
    if (toks.size() < 2 || toks.front() != "(" || toks.back() != ")")
        throw ParseError("partition must look like '( ... | ... | ... )'");
    std::vector<LitMask> groups(1, 0);
    for (size_t i = 1; i + 1 < toks.size(); ++i) {
        if (toks[i] == "|") {
            groups.push_back(0);
            continue;
        }
        Word w = parse_word(g, toks[i]);
        groups.back() |= lit_bit(w.ls.at(0));
    }
    if (groups.size() != 3) throw ParseError("partition needs exactly three groups");
    for (int m = 0; m < g.n(); ++m) {
        bool hasPos = (groups[0] >> make_lit(m, true)) & 1;
        bool hasNeg = (groups[0] >> make_lit(m, false)) & 1;
        if (hasPos == hasNeg) continue;
        if (g.link_lits(m) != groups[2]) continue;
        WhiteheadPartition p = make_partition(g, m, groups[0]);
        LitMask a = groups[0], b = groups[1];
        if ((p.sideP == a && p.sideQ == b) || (p.sideP == b && p.sideQ == a)) return p;
    }
    throw ParseError("text does not describe a valid partition");
}

} // namespace raag
