#include "toepl/debruijn.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "toepl/errors.hpp"

namespace toepl {

std::vector<std::int32_t> DeBruijnGraph::out_degree() const {
    std::vector<std::int32_t> d(vertices.size(), 0);
    for (const Edge& e : edges) d[static_cast<std::size_t>(e.from)]++;
    return d;
}

std::vector<std::int32_t> DeBruijnGraph::in_degree() const {
    std::vector<std::int32_t> d(vertices.size(), 0);
    for (const Edge& e : edges) d[static_cast<std::size_t>(e.to)]++;
    return d;
}

std::int32_t DeBruijnGraph::vertex_id(const Word& w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || *it != w) return -1;
    return static_cast<std::int32_t>(it - vertices.begin());
}

DeBruijnGraph build_graph(const LanguageIndex& index, std::size_t L) {
    if (L == 0) throw ArgError("build_graph: L must be >= 1");
    DeBruijnGraph g;
    g.L = L;
    g.alphabet = index.alphabet();
    g.vertices = index.words_of(L);
    for (const Word& w : index.words_of(L + 1)) {
        Word u(w.begin(), w.end() - 1);
        Word v(w.begin() + 1, w.end());
        std::int32_t ui = g.vertex_id(u);
        std::int32_t vi = g.vertex_id(v);
        if (ui < 0 || vi < 0) throw VerifyError("build_graph: inconsistent word sets");
        g.edges.push_back({ui, vi, w.back()});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const DeBruijnGraph::Edge& a,
                                                 const DeBruijnGraph::Edge& b) {
        return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
    });
    return g;
}

namespace {

bool check_strong_connectivity(const DeBruijnGraph& g) {
    std::size_t n = g.vertices.size();
    if (n == 0) return false;
    auto reachable = [&](bool forward) {
        std::vector<std::vector<std::int32_t>> adj(n);
        for (const auto& e : g.edges)
            adj[static_cast<std::size_t>(forward ? e.from : e.to)].push_back(forward ? e.to : e.from);
        std::vector<char> vis(n, 0);
        std::vector<std::int32_t> stack{0};
        vis[0] = 1;
        while (!stack.empty()) {
            std::int32_t v = stack.back();
            stack.pop_back();
            for (std::int32_t w : adj[static_cast<std::size_t>(v)])
                if (!vis[static_cast<std::size_t>(w)]) {
                    vis[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        return std::count(vis.begin(), vis.end(), 1) == static_cast<std::ptrdiff_t>(n);
    };
    return reachable(true) && reachable(false);
}

}  // namespace

GraphStats graph_stats(const DeBruijnGraph& g) {
    GraphStats st;
    auto outd = g.out_degree();
    auto ind = g.in_degree();
    std::size_t n = g.vertices.size();

    std::vector<char> special(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (outd[v] >= 2) st.branch_vertices.push_back(static_cast<std::int32_t>(v));
        if (ind[v] >= 2) st.merge_vertices.push_back(static_cast<std::int32_t>(v));
        special[v] = outd[v] >= 2 || ind[v] >= 2;
    }

    std::vector<std::vector<std::int32_t>> adj(n);
    for (const auto& e : g.edges) adj[static_cast<std::size_t>(e.from)].push_back(e.to);

    // Arc decomposition: walk from every special vertex through (1,1)-interior
    // vertices. A graph without special vertices is a single cycle.
    if (std::count(special.begin(), special.end(), 1) == 0) {
        Arc arc;
        arc.from = arc.to = 0;
        arc.path.push_back(0);
        std::int32_t cur = adj[0].empty() ? -1 : adj[0][0];
        arc.edge_count = cur < 0 ? 0 : 1;
        while (cur >= 0 && cur != 0) {
            arc.path.push_back(cur);
            cur = adj[static_cast<std::size_t>(cur)][0];
            arc.edge_count++;
        }
        arc.path.push_back(0);
        st.arcs.push_back(std::move(arc));
    } else {
        for (std::size_t v = 0; v < n; ++v) {
            if (!special[v]) continue;
            for (std::int32_t next : adj[v]) {
                Arc arc;
                arc.from = static_cast<std::int32_t>(v);
                arc.path.push_back(arc.from);
                std::int32_t cur = next;
                arc.edge_count = 1;
                while (!special[static_cast<std::size_t>(cur)]) {
                    arc.path.push_back(cur);
                    cur = adj[static_cast<std::size_t>(cur)][0];
                    arc.edge_count++;
                }
                arc.to = cur;
                arc.path.push_back(cur);
                st.arcs.push_back(std::move(arc));
            }
        }
    }
    for (const Arc& a : st.arcs)
        if (a.from == a.to) st.loops++;

    // Reversal: u -> reverse(u) must map vertices onto vertices and edges onto
    // reversed edges.
    std::vector<std::int32_t> rev_map(n, -1);
    bool iso = true;
    for (std::size_t v = 0; v < n && iso; ++v) {
        rev_map[v] = g.vertex_id(reversed(g.vertices[v]));
        if (rev_map[v] < 0) iso = false;
    }
    if (iso) {
        std::set<std::pair<std::int32_t, std::int32_t>> edge_set;
        for (const auto& e : g.edges) edge_set.insert({e.from, e.to});
        for (const auto& e : g.edges)
            if (!edge_set.count({rev_map[static_cast<std::size_t>(e.to)],
                                 rev_map[static_cast<std::size_t>(e.from)]})) {
                iso = false;
                break;
            }
    }
    st.reversal_is_isomorphism = iso;
    st.strongly_connected = check_strong_connectivity(g);

    // Palindrome bookkeeping; meaningful only when the reversal is a graph
    // isomorphism.
    if (iso) {
        std::int64_t count = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (special[v] && rev_map[v] == static_cast<std::int32_t>(v)) count++;
        for (const Arc& a : st.arcs) {
            if (a.edge_count % 2 != 0) continue;
            // Self-paired arc: reversal maps its vertex path onto itself read
            // backwards.
            bool self = true;
            std::size_t len = a.path.size();
            for (std::size_t i = 0; i < len && self; ++i)
                self = rev_map[static_cast<std::size_t>(a.path[i])] == a.path[len - 1 - i];
            if (self) count++;
        }
        st.palindromes_from_arcs = count;
    }
    return st;
}

void export_dot(const DeBruijnGraph& g, std::ostream& os) {
    os << "digraph debruijn_" << g.L << " {\n";
    os << "  rankdir=LR;\n";
    for (const Word& w : g.vertices) os << "  \"" << g.alphabet.render(w) << "\";\n";
    for (const auto& e : g.edges)
        os << "  \"" << g.alphabet.render(g.vertices[static_cast<std::size_t>(e.from)]) << "\" -> \""
           << g.alphabet.render(g.vertices[static_cast<std::size_t>(e.to)]) << "\" [label=\""
           << g.alphabet.name(e.label) << "\"];\n";
    os << "}\n";
}

void export_dot_file(const DeBruijnGraph& g, const std::string& path) {
    std::ostringstream buf;
    export_dot(g, buf);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("export_dot: cannot open '" + path + "'");
    f << buf.str();
    if (!f) throw IoError("export_dot: write to '" + path + "' failed");
}

std::string export_json(const DeBruijnGraph& g) {
    nlohmann::json j;
    j["L"] = g.L;
    j["alphabet"] = g.alphabet.names;
    nlohmann::json verts = nlohmann::json::array();
    for (const Word& w : g.vertices) verts.push_back(g.alphabet.render(w));
    j["vertices"] = verts;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges)
        edges.push_back({e.from, e.to, g.alphabet.name(e.label)});
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

DeBruijnGraph import_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DeBruijnGraph g;
    g.L = j.at("L").get<std::size_t>();
    g.alphabet.names = j.at("alphabet").get<std::vector<std::string>>();
    g.alphabet.validate();
    for (const auto& v : j.at("vertices")) g.vertices.push_back(g.alphabet.parse(v.get<std::string>()));
    for (const auto& e : j.at("edges"))
        g.edges.push_back({e.at(0).get<std::int32_t>(), e.at(1).get<std::int32_t>(),
                           g.alphabet.id(e.at(2).get<std::string>())});
    return g;
}

}  // namespace toepl
