#include "raag/spine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace raag {

namespace {

struct CliqueSearch {
    const std::vector<std::vector<bool>>& adj;
    long long budget;
    long long nodes = 0;
    std::vector<int> best;
    std::vector<int> cur;

    explicit CliqueSearch(const std::vector<std::vector<bool>>& a, long long b)
        : adj(a), budget(b) {}

    // Greedy colouring upper bound; candidates come back colour-sorted.
    std::vector<std::pair<int, int>> colour(const std::vector<int>& cand) const {
        std::vector<std::pair<int, int>> out; // (vertex, colour)
        std::vector<std::vector<int>> classes;
        for (int v : cand) {
            bool placed = false;
            for (size_t ci = 0; ci < classes.size() && !placed; ++ci) {
                bool fits = true;
                for (int u : classes[ci])
                    if (adj[u][v]) fits = false;
                if (fits) {
                    classes[ci].push_back(v);
                    placed = true;
                }
            }
            if (!placed) classes.push_back({v});
        }
        for (size_t ci = 0; ci < classes.size(); ++ci)
            for (int v : classes[ci]) out.emplace_back(v, static_cast<int>(ci) + 1);
        return out;
    }

    void expand(std::vector<int>& cand) {
        if (++nodes > budget) throw BudgetError("clique search budget exceeded");
        if (cand.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        auto coloured = colour(cand);
        for (int i = static_cast<int>(coloured.size()) - 1; i >= 0; --i) {
            auto [v, c] = coloured[i];
            if (cur.size() + c <= best.size()) return;
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (adj[coloured[j].first][v]) next.push_back(coloured[j].first);
            cur.push_back(v);
            expand(next);
            cur.pop_back();
        }
    }
};

} // namespace

std::pair<int, std::vector<int>> max_clique(const std::vector<std::vector<bool>>& adj,
                                            long long budget) {
    int n = static_cast<int>(adj.size());
    // Degeneracy order: peel minimum-degree vertices; every clique is found
    // from its earliest member, whose later neighbourhood is small.
    std::vector<int> deg(n, 0), order;
    order.reserve(n);
    std::vector<bool> removed(n, false);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (adj[i][j]) ++deg[i];
    for (int k = 0; k < n; ++k) {
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (!removed[i] && (v < 0 || deg[i] < deg[v])) v = i;
        removed[v] = true;
        order.push_back(v);
        for (int j = 0; j < n; ++j)
            if (adj[v][j] && !removed[j]) --deg[j];
    }

    CliqueSearch search(adj, budget);
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        std::vector<int> cand;
        for (int j = i + 1; j < n; ++j)
            if (adj[v][order[j]]) cand.push_back(order[j]);
        if (1 + cand.size() <= search.best.size()) continue;
        search.cur = {v};
        search.expand(cand);
        search.cur.clear();
    }
    std::sort(search.best.begin(), search.best.end());
    return {static_cast<int>(search.best.size()), search.best};
}

static std::pair<int, CompatibleSet> rank_of(const DefiningGraph& g,
                                             const std::vector<WhiteheadPartition>& universe,
                                             long long budget) {
    int n = static_cast<int>(universe.size());
    std::vector<std::vector<bool>> adjM(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            adjM[i][j] = adjM[j][i] = compatible(g, universe[i], universe[j]);
    auto [size, witness] = max_clique(adjM, budget);
    CompatibleSet set;
    for (int i : witness) set.partitions.push_back(universe[i]);
    return {size, set};
}

RankReport rank_report(const DefiningGraph& g, long long budget) {
    OrderReport ord = order_report(g);
    auto universeAll = all_partitions(g, false);
    auto universeSym = all_partitions(g, true);
    auto principalFilter = [&](const std::vector<WhiteheadPartition>& in) {
        std::vector<WhiteheadPartition> out;
        for (const auto& p : in)
            if (p.bases & ord.principal) out.push_back(p);
        return out;
    };
    RankReport r;
    std::tie(r.mAll, r.witnessAll) = rank_of(g, universeAll, budget);
    std::tie(r.mPrincipal, r.witnessPrincipal) = rank_of(g, principalFilter(universeAll), budget);
    std::tie(r.mSymAll, r.witnessSymAll) = rank_of(g, universeSym, budget);
    std::tie(r.mSymPrincipal, r.witnessSymPrincipal) =
        rank_of(g, principalFilter(universeSym), budget);
    return r;
}

int vcd_symout(const DefiningGraph& g, long long budget) {
    return rank_report(g, budget).mSymAll;
}

std::vector<WhiteheadPair> abelian_generators(const DefiningGraph& g, long long budget) {
    OrderReport ord = order_report(g);
    std::vector<WhiteheadPartition> universe;
    for (const auto& p : all_partitions(g, true))
        if (p.bases & ord.principal) universe.push_back(p);
    if (universe.empty()) return {};

    auto [target, anyWitness] = rank_of(g, universe, budget);

    // Prefer cliques basing each nonabelian class at one representative.
    std::vector<std::vector<int>> nonabelian;
    for (const auto& cls : ord.classes) {
        if (!ord.is_principal(cls.front())) continue;
        bool abelianClass = true;
        for (int v : cls) {
            int linkTwins = 0;
            for (int w = 0; w < g.n(); ++w)
                if (g.link_mask(w) == g.link_mask(v)) ++linkTwins;
            if (linkTwins > 1) abelianClass = false;
        }
        if (!abelianClass && cls.size() > 1) nonabelian.push_back(cls);
    }
    CompatibleSet chosen = anyWitness;
    if (!nonabelian.empty()) {
        std::vector<size_t> pick(nonabelian.size(), 0);
        bool done = false;
        while (!done) {
            std::vector<WhiteheadPartition> restricted;
            for (const auto& p : universe) {
                bool ok = true;
                for (size_t i = 0; i < nonabelian.size(); ++i) {
                    bool inClass = false;
                    for (int v : nonabelian[i])
                        if (p.base == v) inClass = true;
                    if (inClass && p.base != nonabelian[i][pick[i]]) ok = false;
                }
                if (ok) restricted.push_back(p);
            }
            auto [size, witness] = rank_of(g, restricted, budget);
            if (size == target) {
                chosen = witness;
                break;
            }
            int i = static_cast<int>(pick.size()) - 1;
            while (i >= 0 && ++pick[i] == nonabelian[i].size()) pick[i--] = 0;
            done = i < 0;
        }
    }

    std::vector<WhiteheadPair> out;
    for (const auto& p : chosen.partitions) out.push_back(WhiteheadPair{p, make_lit(p.base, true)});

    // Certification route (a): the combinatorial criterion. Same-base pairs
    // commute through their nested sides; distinct non-commuting bases fall
    // under the compatible-and-splits-neither test, which symmetric
    // partitions satisfy automatically.
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j) {
            const auto& P = out[i].partition;
            const auto& Q = out[j].partition;
            bool okA = P.base == Q.base || adjacent(g, P, Q) ||
                       (compatible(g, P, Q) && !P.splits_vertex(Q.base) && !Q.splits_vertex(P.base));
            if (!okA) throw DomainError("no certified assignment found: combinatorial criterion");
        }
    // Certification route (b): direct outer-level commutation.
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j) {
            RaagAutomorphism x = whitehead_auto(g, out[i]);
            RaagAutomorphism y = whitehead_auto(g, out[j]);
            auto r = outer_equal(g, compose(g, x, y), compose(g, y, x));
            if (r.status != OuterEqualResult::Status::Equal)
                throw DomainError("no certified assignment found: outer commutation");
        }
    return out;
}

bool in_kmin_length_one(const DefiningGraph& g, const MarkedSalvetti& sigma) {
    long long wEntry = 0;
    for (const auto& cls : length_one_classes(g)) wEntry += ell(g, sigma, cls);
    return wEntry == 2LL * g.n();
}

MoveGraph local_explore(const DefiningGraph& g, const MarkedSalvetti& root, int depth,
                        const ExploreOptions& opts) {
    auto syms = signed_symmetries(g);
    auto universe = all_partitions(g, opts.symmetricOnly);

    std::vector<WhiteheadPair> pairs;
    for (const auto& p : universe) {
        VertMask mxs = p.mx;
        while (mxs) {
            int m = __builtin_ctz(mxs);
            mxs &= mxs - 1;
            pairs.push_back(WhiteheadPair{p, make_lit(m, false)});
            pairs.push_back(WhiteheadPair{p, make_lit(m, true)});
        }
    }

    MoveGraph mg;
    mg.nodes.push_back(root);
    std::vector<int> frontier{0};
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<int> next;
        for (int src : frontier) {
            MarkedSalvetti cur = mg.nodes[src];
            for (const auto& pair : pairs) {
                MarkedSalvetti tgt = whitehead_move(g, cur, pair);
                int found = -1;
                for (int i = 0; i < static_cast<int>(mg.nodes.size()) && found < 0; ++i)
                    if (omega_outer_equal(g, syms, tgt.marking, mg.nodes[i].marking)) found = i;
                if (found < 0) {
                    if (static_cast<long long>(mg.nodes.size()) >= opts.nodeBudget)
                        throw BudgetError("move-graph node budget exceeded");
                    mg.nodes.push_back(tgt);
                    found = static_cast<int>(mg.nodes.size()) - 1;
                    next.push_back(found);
                }
                bool dup = false;
                for (const auto& e : mg.edges)
                    if (e.from == src && e.to == found &&
                        e.pair.partition == pair.partition && e.pair.multiplier == pair.multiplier)
                        dup = true;
                if (!dup && found != src) mg.edges.push_back(MoveGraphEdge{src, found, pair});
            }
        }
        frontier = std::move(next);
    }
    for (const auto& node : mg.nodes) {
        RaagAutomorphism canon = canon_mod_omega(g, node.marking);
        std::string label;
        for (int v = 0; v < g.n(); ++v) {
            if (v) label += "; ";
            label += g.names[v] + "->" + word_text(g, canon.images[v]);
        }
        mg.labels.push_back(label);
    }
    return mg;
}

std::string move_graph_dot(const DefiningGraph& g, const MoveGraph& mg) {
    std::ostringstream out;
    out << "digraph whitehead_moves {\n";
    for (size_t i = 0; i < mg.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << mg.labels[i] << "\"];\n";
    std::vector<std::string> lines;
    for (const auto& e : mg.edges) {
        std::ostringstream l;
        l << "  n" << e.from << " -> n" << e.to << " [label=\""
          << partition_text(g, e.pair.partition) << " @ " << lit_text(g, e.pair.multiplier)
          << "\"];\n";
        lines.push_back(l.str());
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) out << l;
    out << "}\n";
    return out.str();
}

} // namespace raag
