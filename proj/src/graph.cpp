#include "raag/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace raag {

LitMask DefiningGraph::link_lits(int v) const {
    LitMask m = 0;
    VertMask lk = adj[v];
    while (lk) {
        int w = __builtin_ctz(lk);
        lk &= lk - 1;
        m |= lit_bit(make_lit(w, false)) | lit_bit(make_lit(w, true));
    }
    return m;
}

LitMask DefiningGraph::star_lits(int v) const {
    return link_lits(v) | lit_bit(make_lit(v, false)) | lit_bit(make_lit(v, true));
}

static void validate_name(const std::string& name, int line) {
    if (name.empty()) throw ParseError("empty vertex name", line);
    for (char c : name) {
        if (c == '^' || c == '-' || std::isspace(static_cast<unsigned char>(c)))
            throw ParseError("vertex name '" + name + "' contains a forbidden character", line);
    }
}

DefiningGraph make_graph(const std::vector<std::string>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
    std::ostringstream text;
    text << "vertices:";
    for (const auto& v : vertices) text << ' ' << v;
    text << '\n';
    for (const auto& e : edges) text << "edge: " << e.first << ' ' << e.second << '\n';
    return load_graph(text.str());
}

static std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

static std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

DefiningGraph load_graph(const std::string& text) {
    DefiningGraph g;
    bool sawVertices = false;
    std::vector<std::tuple<int, std::string, std::string>> pendingEdges;

    std::istringstream in(text);
    std::string raw;
    int lineNo = 0;
    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = trimmed(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("vertices:", 0) == 0) {
            if (sawVertices) throw ParseError("duplicate 'vertices:' line", lineNo);
            sawVertices = true;
            for (const auto& name : split_ws(line.substr(9))) {
                validate_name(name, lineNo);
                if (g.index.count(name)) throw ParseError("duplicate vertex name '" + name + "'", lineNo);
                g.index[name] = g.n();
                g.names.push_back(name);
            }
            if (g.names.empty()) throw ParseError("graph has no vertices", lineNo);
            if (g.n() > kMaxVertices) throw ParseError("too many vertices (limit is 12)", lineNo);
        } else if (line.rfind("edge:", 0) == 0) {
            auto toks = split_ws(line.substr(5));
            if (toks.size() != 2) throw ParseError("edge line needs exactly two endpoints", lineNo);
            pendingEdges.emplace_back(lineNo, toks[0], toks[1]);
        } else {
            throw ParseError("unrecognized line '" + line + "'", lineNo);
        }
    }
    if (!sawVertices) throw ParseError("missing 'vertices:' line");

    g.adj.assign(g.n(), 0);
    for (const auto& [ln, a, b] : pendingEdges) {
        if (!g.has_vertex(a)) throw ParseError("edge endpoint '" + a + "' is not a declared vertex", ln);
        if (!g.has_vertex(b)) throw ParseError("edge endpoint '" + b + "' is not a declared vertex", ln);
        int u = g.index.at(a), v = g.index.at(b);
        if (u == v) throw ParseError("loop edge at '" + a + "'", ln);
        g.adj[u] |= vert_bit(v);
        g.adj[v] |= vert_bit(u);
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) g.edges.emplace_back(u, v);
    return g;
}

static std::vector<int> mask_to_vertices(VertMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(__builtin_ctz(m));
        m &= m - 1;
    }
    return out;
}

std::vector<int> link(const DefiningGraph& g, int v) {
    if (v < 0 || v >= g.n()) throw DomainError("unknown vertex index");
    return mask_to_vertices(g.link_mask(v));
}

std::vector<int> star(const DefiningGraph& g, int v) {
    if (v < 0 || v >= g.n()) throw DomainError("unknown vertex index");
    return mask_to_vertices(g.star_mask(v));
}

OrderReport order_report(const DefiningGraph& g) {
    int n = g.n();
    OrderReport r;
    r.leq.assign(n, 0);
    r.strictLink.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
            VertMask lkv = g.link_mask(v);
            if ((lkv & ~g.star_mask(w)) == 0) r.leq[v] |= vert_bit(w);
            VertMask lkw = g.link_mask(w);
            if ((lkv & ~lkw) == 0 && lkv != lkw) r.strictLink[v] |= vert_bit(w);
        }
    }
    for (int v = 0; v < n; ++v)
        if (r.strictLink[v] == 0) r.principal |= vert_bit(v);

    auto group_by = [n](auto sameFn) {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(n, false);
        for (int v = 0; v < n; ++v) {
            if (seen[v]) continue;
            std::vector<int> cls{v};
            seen[v] = true;
            for (int w = v + 1; w < n; ++w)
                if (!seen[w] && sameFn(v, w)) {
                    cls.push_back(w);
                    seen[w] = true;
                }
            out.push_back(std::move(cls));
        }
        return out;
    };
    r.classes = group_by([&](int v, int w) {
        return ((r.leq[v] >> w) & 1) && ((r.leq[w] >> v) & 1);
    });
    r.linkClasses = group_by([&](int v, int w) { return g.link_mask(v) == g.link_mask(w); });
    r.starClasses = group_by([&](int v, int w) { return g.star_mask(v) == g.star_mask(w); });

    // [v] is maximal when no member is dominated by a vertex outside [v].
    for (const auto& cls : r.classes) {
        VertMask clsMask = 0;
        for (int v : cls) clsMask |= vert_bit(v);
        bool maximal = true;
        for (int v : cls)
            if (r.leq[v] & ~clsMask) maximal = false;
        if (maximal)
            for (int v : cls) r.maximal |= vert_bit(v);
    }
    return r;
}

std::vector<LitMask> components_outside_star(const DefiningGraph& g, int m) {
    if (m < 0 || m >= g.n()) throw DomainError("unknown vertex index");
    VertMask outside = ~g.star_mask(m) & ((VertMask(1) << g.n()) - 1);
    std::vector<Lit> lits;
    for (int v = 0; v < g.n(); ++v)
        if ((outside >> v) & 1) {
            lits.push_back(make_lit(v, false));
            lits.push_back(make_lit(v, true));
        }
    std::vector<LitMask> comps;
    LitMask seen = 0;
    for (Lit start : lits) {
        if (seen & lit_bit(start)) continue;
        LitMask comp = lit_bit(start);
        std::vector<Lit> stack{start};
        while (!stack.empty()) {
            Lit x = stack.back();
            stack.pop_back();
            for (Lit y : lits)
                if (!(comp & lit_bit(y)) && g.lits_adjacent(x, y)) {
                    comp |= lit_bit(y);
                    stack.push_back(y);
                }
        }
        seen |= comp;
        comps.push_back(comp);
    }
    std::sort(comps.begin(), comps.end(), [](LitMask a, LitMask b) {
        return __builtin_ctz(a) < __builtin_ctz(b);
    });
    return comps;
}

std::vector<VertMask> vertex_components_outside_star(const DefiningGraph& g, int m) {
    if (m < 0 || m >= g.n()) throw DomainError("unknown vertex index");
    VertMask outside = ~g.star_mask(m) & ((VertMask(1) << g.n()) - 1);
    std::vector<VertMask> comps;
    VertMask seen = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (!((outside >> v) & 1) || ((seen >> v) & 1)) continue;
        VertMask comp = vert_bit(v);
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            VertMask nbrs = g.link_mask(x) & outside & ~comp;
            while (nbrs) {
                int y = __builtin_ctz(nbrs);
                nbrs &= nbrs - 1;
                comp |= vert_bit(y);
                stack.push_back(y);
            }
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

std::string lit_text(const DefiningGraph& g, Lit x) {
    std::string s = g.names[lit_vertex(x)];
    if (!lit_positive(x)) s += "^-1";
    return s;
}

std::string lit_mask_text(const DefiningGraph& g, LitMask mask) {
    // Literals listed in string-lexicographic order of their rendered form.
    std::vector<std::string> parts;
    for (Lit x = 0; x < 2 * g.n(); ++x)
        if (mask & lit_bit(x)) parts.push_back(lit_text(g, x));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ' ';
        out += parts[i];
    }
    return out;
}

} // namespace raag
