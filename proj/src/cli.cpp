#include "raag/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "raag/spine.hpp"

namespace raag {

namespace {

struct CliConfig {
    std::string graphPath;
    int tailBound = 3;
    long long searchBudget = kDefaultSearchBudget;
    unsigned seed = 0;
    std::string outputPath;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> class_file_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        size_t b = raw.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        size_t e = raw.find_last_not_of(" \t\r\n");
        std::string line = raw.substr(b, e - b + 1);
        if (!line.empty() && line[0] != '#') out.push_back(line);
    }
    return out;
}

void print_vertex_set(std::ostream& out, const DefiningGraph& g, VertMask m) {
    bool first = true;
    for (int v = 0; v < g.n(); ++v)
        if ((m >> v) & 1) {
            if (!first) out << ' ';
            out << g.names[v];
            first = false;
        }
}

void print_classes(std::ostream& out, const DefiningGraph& g,
                   const std::vector<std::vector<int>>& classes) {
    for (size_t i = 0; i < classes.size(); ++i) {
        out << (i ? " {" : "{");
        for (size_t j = 0; j < classes[i].size(); ++j)
            out << (j ? " " : "") << g.names[classes[i][j]];
        out << "}";
    }
    out << "\n";
}

void cmd_graph_info(std::ostream& out, const DefiningGraph& g) {
    out << "vertices (" << g.n() << "):";
    for (const auto& name : g.names) out << ' ' << name;
    out << "\n";
    out << "edges (" << g.edges.size() << "):";
    for (const auto& [u, v] : g.edges) out << ' ' << g.names[u] << '-' << g.names[v];
    out << "\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "link " << g.names[v] << ":";
        for (int w : link(g, v)) out << ' ' << g.names[w];
        out << "\n";
    }
    OrderReport ord = order_report(g);
    out << "classes: ";
    print_classes(out, g, ord.classes);
    out << "link-classes: ";
    print_classes(out, g, ord.linkClasses);
    out << "star-classes: ";
    print_classes(out, g, ord.starClasses);
    out << "principal: ";
    print_vertex_set(out, g, ord.principal);
    out << "\nmaximal: ";
    print_vertex_set(out, g, ord.maximal);
    out << "\n";
}

void cmd_partitions(std::ostream& out, const DefiningGraph& g, const std::string& baseName,
                    bool symmetricOnly) {
    int base = g.vertex(baseName);
    EnumOptions opts;
    opts.symmetricOnly = symmetricOnly;
    auto parts = enumerate_partitions(g, base, opts);
    for (const auto& p : parts) out << partition_text(g, p) << "\n";
    out << "count: " << parts.size() << "\n";
}

void print_witness(std::ostream& out, const DefiningGraph& g, const char* name,
                   const CompatibleSet& set) {
    out << "witness " << name << ":";
    if (set.partitions.empty()) {
        out << " (empty)\n";
        return;
    }
    for (size_t i = 0; i < set.partitions.size(); ++i)
        out << (i ? " ; " : " ") << partition_text(g, set.partitions[i]);
    out << "\n";
}

void cmd_ranks(std::ostream& out, const DefiningGraph& g, long long budget) {
    RankReport r = rank_report(g, budget);
    out << "M(V)=" << r.mAll << "\n";
    out << "M(L)=" << r.mPrincipal << "\n";
    out << "MSigma(V)=" << r.mSymAll << "\n";
    out << "MSigma(L)=" << r.mSymPrincipal << "\n";
    out << "vcd=" << r.mSymAll << "\n";
    print_witness(out, g, "M(V)", r.witnessAll);
    print_witness(out, g, "M(L)", r.witnessPrincipal);
    print_witness(out, g, "MSigma(V)", r.witnessSymAll);
    print_witness(out, g, "MSigma(L)", r.witnessSymPrincipal);
}

void print_prefix(std::ostream& out, const NormPrefix& p) {
    out << "(" << p.wEntry << " " << p.zeroEntry << " :";
    for (int t : p.tail) out << ' ' << t;
    out << ")";
}

void cmd_minimize(std::ostream& out, const DefiningGraph& g, const std::string& autoPath,
                  const std::string& classesPath, int tailBound) {
    RaagAutomorphism a = parse_automorphism(g, read_file(autoPath));
    MarkedSalvetti sigma = make_marked_salvetti(g, a);
    std::vector<Word> words;
    int lineNo = 0;
    for (const auto& line : class_file_lines(read_file(classesPath)))
        words.push_back(parse_word(g, line, ++lineNo));
    auto W = canonical_class_set(g, words);

    MinimizeResult res = minimize(g, sigma, W, tailBound);
    for (size_t i = 0; i < res.steps.size(); ++i) {
        const auto& s = res.steps[i];
        out << "step " << (i + 1) << ": " << partition_text(g, s.pair.partition) << " @ "
            << lit_text(g, s.pair.multiplier) << " dW=" << s.deltaW << " prefix=";
        print_prefix(out, s.prefixAfter);
        out << "\n";
    }
    NormPrefix fin = norm_prefix(g, res.sigma, W, tailBound);
    out << "steps: " << res.steps.size() << "\n";
    out << "final wEntry=" << fin.wEntry << "\n";
    out << "final marking:\n";
    for (int v = 0; v < g.n(); ++v)
        out << g.names[v] << " -> " << word_text(g, res.sigma.marking.images[v]) << "\n";
}

void cmd_explore(std::ostream& out, const DefiningGraph& g, int depth, bool symmetricOnly,
                 const std::string& dotPath, long long budget) {
    ExploreOptions opts;
    opts.symmetricOnly = symmetricOnly;
    opts.nodeBudget = budget;
    MoveGraph mg = local_explore(g, identity_salvetti(g), depth, opts);
    out << "nodes: " << mg.nodes.size() << "\n";
    out << "edges: " << mg.edges.size() << "\n";
    if (!dotPath.empty()) {
        std::ofstream dot(dotPath, std::ios::binary);
        if (!dot) throw ParseError("cannot open '" + dotPath + "' for writing");
        dot << move_graph_dot(g, mg);
    }
}

void cmd_selftest(std::ostream& out, const DefiningGraph& g, unsigned seed) {
    std::mt19937_64 rng(seed);
    auto random_word = [&](int maxLen) {
        std::uniform_int_distribution<int> lenDist(0, maxLen);
        std::uniform_int_distribution<int> litDist(0, 2 * g.n() - 1);
        Word w;
        int len = lenDist(rng);
        for (int i = 0; i < len; ++i) w.ls.push_back(litDist(rng));
        return w;
    };

    for (int trial = 0; trial < 200; ++trial) {
        Word w = random_word(8);
        Word nf = normal_form(g, w);
        if (normal_form(g, nf) != nf) throw DomainError("selftest: normal_form not idempotent");
        Word cr = cyclic_reduce(g, w);
        if (cyclic_reduce(g, cr) != cr) throw DomainError("selftest: cyclic_reduce not idempotent");
        std::uniform_int_distribution<int> litDist(0, 2 * g.n() - 1);
        Lit x = litDist(rng);
        Word conj = word_concat(word_concat(Word{{x}}, w), Word{{lit_inverse(x)}});
        if (!(conj_canon(g, conj) == conj_canon(g, w)))
            throw DomainError("selftest: conj_canon not conjugation invariant");
    }
    out << "ok: words invariants (200 trials)\n";

    auto parts = all_partitions(g, false);
    for (const auto& p : parts) {
        if (!compatible(g, p, p)) throw DomainError("selftest: compatible(p,p) must hold");
        for (const auto& q : parts)
            if (compatible(g, p, q) != compatible(g, q, p))
                throw DomainError("selftest: compatible not symmetric");
    }
    out << "ok: partition compatibility (" << parts.size() << " partitions)\n";

    int checked = 0;
    for (int trial = 0; trial < 50 && !parts.empty(); ++trial) {
        std::uniform_int_distribution<size_t> pDist(0, parts.size() - 1);
        const auto& p = parts[pDist(rng)];
        VertMask mxs = p.mx;
        std::vector<int> mxList;
        while (mxs) {
            mxList.push_back(__builtin_ctz(mxs));
            mxs &= mxs - 1;
        }
        std::uniform_int_distribution<size_t> mDist(0, mxList.size() - 1);
        WhiteheadPair pair{p, make_lit(mxList[mDist(rng)], true)};
        Word w = cyclic_reduce(g, random_word(6));
        if (w.empty()) continue;
        MarkedSalvetti sigma = identity_salvetti(g);
        CyclicClass cls = conj_canon(g, w);
        int predicted = predicted_length(g, sigma, pair, cls);
        int actual = ell(g, whitehead_move(g, sigma, pair), cls);
        if (predicted != actual) throw DomainError("selftest: length-change formula mismatch");
        ++checked;
    }
    out << "ok: length-change formula (" << checked << " trials)\n";
    out << "selftest passed\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Whitehead-partition toolkit for right-angled Artin groups"};
    app.require_subcommand(1);

    CliConfig cfg;
    app.add_option("--graph", cfg.graphPath, "graph file")->required();
    app.add_option("--tail-bound", cfg.tailBound, "norm prefix tail bound")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--budget", cfg.searchBudget, "search budget")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized commands");
    app.add_option("--out", cfg.outputPath, "write output to this file instead of stdout");

    auto* cmdInfo = app.add_subcommand("graph-info", "vertices, edges, links, order theory");

    auto* cmdParts = app.add_subcommand("partitions", "list partitions based at a vertex");
    std::string baseName;
    bool symmetricFlag = false;
    cmdParts->add_option("base", baseName, "base vertex")->required();
    cmdParts->add_flag("--symmetric", symmetricFlag, "symmetric partitions only");

    auto* cmdRanks = app.add_subcommand("ranks", "maximum compatible-set sizes and vcd");
    auto* cmdVcd = app.add_subcommand("vcd", "vcd of the symmetric outer automorphism group");

    auto* cmdMin = app.add_subcommand("minimize", "norm descent of a marking");
    std::string autoPath, classesPath;
    cmdMin->add_option("automorphism", autoPath, "automorphism file")->required();
    cmdMin->add_option("classes", classesPath, "class-set file (one word per line)")->required();

    auto* cmdExplore = app.add_subcommand("explore", "breadth-first Whitehead move graph");
    int depth = 1;
    bool exploreSymmetric = false;
    std::string dotPath;
    cmdExplore->add_option("depth", depth, "exploration depth")->required();
    cmdExplore->add_flag("--symmetric", exploreSymmetric, "symmetric moves only");
    cmdExplore->add_option("--dot", dotPath, "write the move graph as DOT");

    auto* cmdSelftest = app.add_subcommand("selftest", "run the invariant suites");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        DefiningGraph g = load_graph(read_file(cfg.graphPath));
        std::ostringstream buf;
        std::ostream& o = buf;
        if (cmdInfo->parsed()) cmd_graph_info(o, g);
        else if (cmdParts->parsed()) cmd_partitions(o, g, baseName, symmetricFlag);
        else if (cmdRanks->parsed()) cmd_ranks(o, g, cfg.searchBudget);
        else if (cmdVcd->parsed()) o << "vcd=" << vcd_symout(g, cfg.searchBudget) << "\n";
        else if (cmdMin->parsed()) cmd_minimize(o, g, autoPath, classesPath, cfg.tailBound);
        else if (cmdExplore->parsed())
            cmd_explore(o, g, depth, exploreSymmetric, dotPath, cfg.searchBudget);
        else if (cmdSelftest->parsed()) cmd_selftest(o, g, cfg.seed);

        if (!cfg.outputPath.empty()) {
            std::ofstream f(cfg.outputPath, std::ios::binary);
            if (!f) {
                err << "error: cannot open '" << cfg.outputPath << "' for writing\n";
                return 1;
            }
            f << buf.str();
        } else {
            out << buf.str();
        }
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const UndecidedError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace raag
