#include "raag/norms.hpp"

#include <algorithm>
#include <set>

namespace raag {

MarkedSalvetti make_marked_salvetti(const DefiningGraph& g, const RaagAutomorphism& marking) {
    if (!check_homomorphism(g, marking))
        throw DomainError("marking images do not define a homomorphism");
    MarkedSalvetti s;
    s.marking = marking;
    s.inverse = invert(g, marking);
    RaagAutomorphism check = compose(g, s.marking, s.inverse);
    RaagAutomorphism check2 = compose(g, s.inverse, s.marking);
    if (!check.is_identity_map(g) || !check2.is_identity_map(g))
        throw DomainError("move word does not invert the marking");
    return s;
}

MarkedSalvetti identity_salvetti(const DefiningGraph& g) {
    return make_marked_salvetti(g, identity_auto(g));
}

int count_partition(const DefiningGraph& g, const WhiteheadPartition& p, const Word& w) {
    if (!is_cyclically_reduced(g, w))
        throw DomainError("count_partition needs a cyclically reduced word");
    std::vector<Lit> core;
    for (Lit x : w.ls)
        if (!(p.linkSet & lit_bit(x))) core.push_back(x);
    if (core.empty()) return 0;
    int crossings = 0;
    int k = static_cast<int>(core.size());
    for (int i = 0; i < k; ++i) {
        Lit out = core[i];
        Lit in = lit_inverse(core[(i + 1) % k]);
        bool outP = (p.sideP & lit_bit(out)) != 0;
        bool inP = (p.sideP & lit_bit(in)) != 0;
        if (outP != inP) ++crossings;
    }
    return crossings;
}

int count_vertex(int v, const Word& w) {
    int c = 0;
    for (Lit x : w.ls)
        if (lit_vertex(x) == v) ++c;
    return c;
}

int ell(const DefiningGraph& g, const MarkedSalvetti& sigma, const CyclicClass& cls) {
    return conj_length(g, apply(g, sigma.inverse, cls.rep));
}

NormPrefix norm_prefix(const DefiningGraph& g, const MarkedSalvetti& sigma,
                       const std::vector<CyclicClass>& W, int tailBound) {
    NormPrefix p;
    for (const auto& cls : W) p.wEntry += ell(g, sigma, cls);
    for (const auto& cls : enumerate_classes(g, 2)) p.zeroEntry += ell(g, sigma, cls);
    for (const auto& cls : enumerate_classes(g, tailBound)) p.tail.push_back(ell(g, sigma, cls));
    return p;
}

int predicted_length(const DefiningGraph& g, const MarkedSalvetti& sigma,
                     const WhiteheadPair& pair, const CyclicClass& cls) {
    Word w = conj_canon(g, apply(g, sigma.inverse, cls.rep)).rep;
    return static_cast<int>(w.size()) + count_partition(g, pair.partition, w) -
           count_vertex(lit_vertex(pair.multiplier), w);
}

MarkedSalvetti whitehead_move(const DefiningGraph& g, const MarkedSalvetti& sigma,
                              const WhiteheadPair& pair) {
    RaagAutomorphism phi = whitehead_auto(g, pair);
    RaagAutomorphism phiInv = move_auto(g, inverse_move(g, phi.moves.front()));
    MarkedSalvetti out;
    out.marking = compose(g, sigma.marking, phi);
    out.inverse = compose(g, phiInv, sigma.inverse);
    return out;
}

// Delta of the norm prefix produced by (P, m): per class |P|_w - |m|_w.
namespace {
struct ClassData {
    Word rep;          // canonical cyclically reduced representative of the pullback
    int wCount = 0;    // multiplicity in W
    int zeroCount = 0; // multiplicity in the length<=2 entry
    int tailIndex = -1;
};
} // namespace

static std::vector<ClassData> pullback_data(const DefiningGraph& g, const MarkedSalvetti& sigma,
                                            const std::vector<CyclicClass>& W, int tailBound,
                                            int& tailSize) {
    std::vector<CyclicClass> keys;
    std::vector<ClassData> data;
    auto find_or_add = [&](const CyclicClass& cls) -> ClassData& {
        for (size_t i = 0; i < keys.size(); ++i)
            if (keys[i] == cls) return data[i];
        keys.push_back(cls);
        data.emplace_back();
        data.back().rep = conj_canon(g, apply(g, sigma.inverse, cls.rep)).rep;
        return data.back();
    };
    for (const auto& cls : W) find_or_add(cls).wCount += 1;
    for (const auto& cls : enumerate_classes(g, 2)) find_or_add(cls).zeroCount += 1;
    auto tail = enumerate_classes(g, tailBound);
    tailSize = static_cast<int>(tail.size());
    for (int i = 0; i < tailSize; ++i) find_or_add(tail[i]).tailIndex = i;
    return data;
}

std::optional<WhiteheadPair> find_reductive(const DefiningGraph& g, const MarkedSalvetti& sigma,
                                            const std::vector<CyclicClass>& W, int tailBound) {
    int tailSize = 0;
    auto data = pullback_data(g, sigma, W, tailBound, tailSize);

    auto candidates = all_partitions(g, false);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const WhiteheadPartition& a, const WhiteheadPartition& b) {
                         if (a.base != b.base) return a.base < b.base;
                         return a < b;
                     });

    // Per-partition |P|_w is multiplier independent; cache per candidate.
    std::vector<std::vector<int>> pCounts(candidates.size());
    for (size_t c = 0; c < candidates.size(); ++c) {
        pCounts[c].resize(data.size());
        for (size_t i = 0; i < data.size(); ++i)
            pCounts[c][i] = count_partition(g, candidates[c], data[i].rep);
    }

    // Pass 1: pairs that strictly lower the W entry. Pass 2: pairs tying on
    // the W entry that lower the remaining prefix.
    bool sawFullTie = false;
    for (int pass = 1; pass <= 2; ++pass) {
        for (size_t c = 0; c < candidates.size(); ++c) {
            const auto& p = candidates[c];
            VertMask mxs = p.mx;
            while (mxs) {
                int m = __builtin_ctz(mxs);
                mxs &= mxs - 1;
                long long dW = 0;
                for (size_t i = 0; i < data.size(); ++i)
                    dW += static_cast<long long>(pCounts[c][i] - count_vertex(m, data[i].rep)) *
                          data[i].wCount;
                if (pass == 1) {
                    if (dW < 0) return WhiteheadPair{p, make_lit(m, true)};
                    continue;
                }
                if (dW != 0) continue;
                long long dZero = 0;
                std::vector<int> dTail(tailSize, 0);
                for (size_t i = 0; i < data.size(); ++i) {
                    int delta = pCounts[c][i] - count_vertex(m, data[i].rep);
                    dZero += static_cast<long long>(delta) * data[i].zeroCount;
                    if (data[i].tailIndex >= 0) dTail[data[i].tailIndex] = delta;
                }
                int cmp = 0;
                if (dZero != 0) cmp = dZero < 0 ? -1 : 1;
                else {
                    for (int t : dTail)
                        if (t != 0) {
                            cmp = t < 0 ? -1 : 1;
                            break;
                        }
                }
                if (cmp < 0) return WhiteheadPair{p, make_lit(m, true)};
                if (cmp == 0) sawFullTie = true;
            }
        }
    }
    if (sawFullTie)
        throw UndecidedError("tie at bound: a candidate pair ties through the whole norm prefix");
    return std::nullopt;
}

MinimizeResult minimize(const DefiningGraph& g, const MarkedSalvetti& sigma,
                        const std::vector<CyclicClass>& W, int tailBound) {
    MinimizeResult res;
    res.sigma = sigma;
    NormPrefix prev = norm_prefix(g, res.sigma, W, tailBound);
    constexpr int kMaxSteps = 100000;
    for (int step = 0; step < kMaxSteps; ++step) {
        auto pair = find_reductive(g, res.sigma, W, tailBound);
        if (!pair) return res;
        MarkedSalvetti next = whitehead_move(g, res.sigma, *pair);
        NormPrefix cur = norm_prefix(g, next, W, tailBound);
        if (!(cur < prev)) throw DomainError("descent step failed to reduce the norm prefix");
        res.steps.push_back(MinimizeStep{*pair, cur.wEntry - prev.wEntry, cur});
        res.sigma = std::move(next);
        prev = std::move(cur);
    }
    throw BudgetError("minimize exceeded its step budget");
}

std::vector<CyclicClass> length_one_classes(const DefiningGraph& g) {
    return enumerate_classes(g, 1);
}

std::vector<CyclicClass> canonical_class_set(const DefiningGraph& g,
                                             const std::vector<Word>& words) {
    std::set<CyclicClass> seen;
    for (const auto& w : words) {
        CyclicClass c = conj_canon(g, w);
        if (c.length > 0) seen.insert(std::move(c));
    }
    return std::vector<CyclicClass>(seen.begin(), seen.end());
}

} // namespace raag
